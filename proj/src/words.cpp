#include "twobridge/words.hpp"

#include "twobridge/checked.hpp"
#include "twobridge/error.hpp"

namespace twobridge {

using checked::Int;

char to_char(Letter l) {
  static constexpr char kChars[] = {'a', 'A', 'b', 'B'};
  return kChars[l.rank()];
}

std::string to_string(std::span<const Letter> w) {
  if (w.empty()) return "1";
  std::string out;
  out.reserve(w.size());
  for (Letter l : w) out += to_char(l);
  return out;
}

Word parse_word(std::string_view text) {
  Word w;
  if (text == "1") return w;
  w.reserve(text.size());
  for (char c : text) {
    switch (c) {
      case 'a':
        w.push_back(Letter::a());
        break;
      case 'A':
        w.push_back(Letter::A());
        break;
      case 'b':
        w.push_back(Letter::b());
        break;
      case 'B':
        w.push_back(Letter::B());
        break;
      default:
        throw ParseError("unexpected character '" + std::string(1, c) + "' in word '" +
                         std::string(text) + "'");
    }
  }
  return w;
}

Word inverse(std::span<const Letter> w) {
  Word out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(it->inverse());
  return out;
}

Word rotate(std::span<const Letter> w, std::size_t start) {
  Word out;
  out.reserve(w.size());
  if (w.empty()) return out;
  start %= w.size();
  out.insert(out.end(), w.begin() + static_cast<std::ptrdiff_t>(start), w.end());
  out.insert(out.end(), w.begin(), w.begin() + static_cast<std::ptrdiff_t>(start));
  return out;
}

bool is_reduced(std::span<const Letter> w) {
  for (std::size_t i = 1; i < w.size(); ++i) {
    if (w[i] == w[i - 1].inverse()) return false;
  }
  return true;
}

bool is_cyclically_reduced(std::span<const Letter> w) {
  if (!is_reduced(w)) return false;
  return w.size() < 2 || w.front() != w.back().inverse();
}

bool is_alternating(std::span<const Letter> w) {
  for (std::size_t i = 1; i < w.size(); ++i) {
    if (w[i].gen == w[i - 1].gen) return false;
  }
  return true;
}

bool is_cyclically_alternating(std::span<const Letter> w) {
  return is_alternating(w) && w.size() % 2 == 0 && (w.empty() || w.front().gen != w.back().gen);
}

Word free_reduce(std::span<const Letter> w) {
  Word out;
  out.reserve(w.size());
  for (Letter l : w) {
    if (!out.empty() && out.back() == l.inverse()) {
      out.pop_back();
    } else {
      out.push_back(l);
    }
  }
  return out;
}

CyclicWord::CyclicWord(std::span<const Letter> w) {
  if (!is_cyclically_reduced(w)) {
    throw DomainError("cyclic word needs a cyclically reduced representative: " +
                      twobridge::to_string(w));
  }
  rep_ = rotate(w, least_rotation(w));
}

CyclicWord CyclicWord::inverse() const { return CyclicWord(twobridge::inverse(rep_)); }

std::string CyclicWord::to_string() const { return "(" + twobridge::to_string(rep_) + ")"; }

CyclicWord cyclic_reduce(std::span<const Letter> w) {
  Word r = free_reduce(w);
  std::size_t lo = 0;
  std::size_t hi = r.size();
  while (hi - lo >= 2 && r[lo] == r[hi - 1].inverse()) {
    ++lo;
    --hi;
  }
  return CyclicWord(std::span<const Letter>(r).subspan(lo, hi - lo));
}

bool cyclic_equal(std::span<const Letter> w1, std::span<const Letter> w2, bool allow_inverse) {
  const CyclicWord c1(w1);
  const CyclicWord c2(w2);
  if (c1 == c2) return true;
  return allow_inverse && c1.inverse() == c2;
}

namespace {

void require_unit_interval(const Slope& r, const char* what) {
  if (r.is_infinite() || r.num() <= 0 || r.num() > r.den()) {
    throw DomainError(std::string(what) + " needs 0 < r <= 1, got " + r.to_string());
  }
}

Letter letter_at(std::size_t index, bool positive) {
  // u_r alternates a, b, a, b, ... starting from index 0.
  const Generator g = (index % 2 == 0) ? Generator::A : Generator::B;
  return Letter{g, static_cast<std::int8_t>(positive ? 1 : -1)};
}

Word riley_word(const Slope& r) {
  const Int q = r.num();
  const Int p = r.den();
  const Word hat = u_hat(r);
  const Word hat_inv = inverse(hat);
  Word u;
  u.reserve(static_cast<std::size_t>(2 * p));
  u.push_back(Letter::a());
  u.insert(u.end(), hat.begin(), hat.end());
  if (p % 2 == 1) {
    u.push_back(q % 2 == 0 ? Letter::b() : Letter::B());
  } else {
    u.push_back(Letter::A());
  }
  u.insert(u.end(), hat_inv.begin(), hat_inv.end());
  return u;
}

Word ceil_word(const Slope& r) {
  const Int q = r.num();
  const Int p = r.den();
  Word u;
  u.reserve(static_cast<std::size_t>(2 * p));
  for (Int i = 1; i <= 2 * p; ++i) {
    const Int e = ceil_star(Slope(checked::mul(i - 1, q), p)) - 1;
    u.push_back(letter_at(static_cast<std::size_t>(i - 1), checked::mod(e, 2) == 0));
  }
  return u;
}

Word lattice_scan_word(const Slope& r) {
  // Crossing with x = i sits at height y_i = i q/p + η with η = 1/(4p):
  // strictly between consecutive multiples of 1/p, so no crossing hits a
  // lattice point. The vertical edge it crosses points up when floor(y_i)
  // is even; even x carries generator a, odd x carries b.
  const Int q = r.num();
  const Int p = r.den();
  const Int scale = checked::mul(4, p);
  Word u;
  u.reserve(static_cast<std::size_t>(2 * p));
  for (Int i = 0; i < 2 * p; ++i) {
    const Int height_num = checked::add(checked::mul(checked::mul(4, i), q), 1);
    const Int level = checked::floor_div(height_num, scale);
    u.push_back(letter_at(static_cast<std::size_t>(i), checked::mod(level, 2) == 0));
  }
  return u;
}

}  // namespace

Word u_hat(const Slope& r) {
  require_unit_interval(r, "u_hat");
  const Int q = r.num();
  const Int p = r.den();
  Word w;
  w.reserve(static_cast<std::size_t>(p > 0 ? p - 1 : 0));
  for (Int i = 1; i <= p - 1; ++i) {
    const Int f = checked::mul(i, q) / p;
    const Generator g = (i % 2 == 1) ? Generator::B : Generator::A;
    w.push_back(Letter{g, static_cast<std::int8_t>(f % 2 == 0 ? 1 : -1)});
  }
  return w;
}

Word u_word(const Slope& r, RelatorMethod method) {
  if (r.is_infinite()) return {};
  if (r.is_zero()) return {Letter::a(), Letter::b()};
  require_unit_interval(r, "u_word");
  switch (method) {
    case RelatorMethod::Riley:
      return riley_word(r);
    case RelatorMethod::Ceil:
      return ceil_word(r);
    case RelatorMethod::LatticeScan:
      return lattice_scan_word(r);
  }
  throw InternalError("unknown relator method");
}

Word u_word_positive(const Slope& r) {
  if (r.is_infinite() || r.num() < 0) {
    throw DomainError("u_word_positive needs r >= 0, got " + r.to_string());
  }
  return ceil_word(r);
}

Word apply_automorphism(std::span<const Letter> w, Letter image_of_a, Letter image_of_b) {
  if (image_of_a.gen == image_of_b.gen) {
    throw DomainError("generator images must use distinct generators: a -> " +
                      std::string(1, to_char(image_of_a)) + ", b -> " +
                      std::string(1, to_char(image_of_b)));
  }
  Word out;
  out.reserve(w.size());
  for (Letter l : w) {
    const Letter image = (l.gen == Generator::A) ? image_of_a : image_of_b;
    out.push_back(l.positive() ? image : image.inverse());
  }
  return free_reduce(out);
}

}  // namespace twobridge
