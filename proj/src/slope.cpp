#include "twobridge/slope.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

#include "twobridge/checked.hpp"
#include "twobridge/error.hpp"

namespace twobridge {

using checked::Int;

Slope::Slope(Int num, Int den) {
  if (num == 0 && den == 0) throw DomainError("0/0 is not a slope");
  if (den == 0) {
    num_ = 1;
    den_ = 0;
    return;
  }
  if (den < 0) {
    num = checked::neg(num);
    den = checked::neg(den);
  }
  const Int g = std::gcd(num, den);
  num_ = num / g;
  den_ = den / g;
}

namespace {

std::string_view strip_sign(std::string_view text, bool& negative) {
  negative = false;
  if (text.starts_with('-')) {
    negative = true;
    text.remove_prefix(1);
  } else if (text.starts_with("\xE2\x88\x92")) {  // U+2212 MINUS SIGN
    negative = true;
    text.remove_prefix(3);
  }
  return text;
}

Int parse_int(std::string_view digits, std::string_view whole) {
  if (digits.empty() || digits.front() == '+' || digits.front() == '-') {
    throw ParseError("malformed integer in '" + std::string(whole) + "'");
  }
  Int value = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
  if (ec == std::errc::result_out_of_range) {
    throw ParseError("integer out of range in '" + std::string(whole) + "'");
  }
  if (ec != std::errc() || ptr != digits.data() + digits.size()) {
    throw ParseError("malformed integer in '" + std::string(whole) + "'");
  }
  return value;
}

}  // namespace

Slope Slope::parse(std::string_view text) {
  const std::string_view whole = text;
  bool negative = false;
  text = strip_sign(text, negative);
  if (text == "inf" || text == "\xE2\x88\x9E") return infinity();
  const auto slash = text.find('/');
  const Int num = parse_int(text.substr(0, slash), whole);
  Int den = 1;
  if (slash != std::string_view::npos) den = parse_int(text.substr(slash + 1), whole);
  if (num == 0 && den == 0) throw ParseError("0/0 is not a slope");
  if (den == 0) {
    if (num != 1) throw ParseError("∞ must be written 'inf' or '1/0': '" + std::string(whole) + "'");
    return infinity();
  }
  if (std::gcd(num, den) != 1) {
    throw ParseError("slope not in lowest terms: '" + std::string(whole) + "'");
  }
  return Slope(negative ? -num : num, den);
}

std::string Slope::to_string() const {
  if (is_infinite()) return "inf";
  return std::to_string(num_) + "/" + std::to_string(den_);
}

std::strong_ordering operator<=>(const Slope& a, const Slope& b) {
  if (a.is_infinite() || b.is_infinite()) {
    return static_cast<int>(a.is_infinite()) <=> static_cast<int>(b.is_infinite());
  }
  const __int128 lhs = static_cast<__int128>(a.num_) * b.den_;
  const __int128 rhs = static_cast<__int128>(b.num_) * a.den_;
  return lhs <=> rhs;
}

Slope operator+(const Slope& s, Int n) {
  if (s.is_infinite()) return s;
  return Slope(checked::add(s.num_, checked::mul(n, s.den_)), s.den_);
}

Slope operator-(const Slope& s, Int n) { return s + checked::neg(n); }

Slope operator-(const Slope& s) {
  if (s.is_infinite()) return s;
  return Slope(checked::neg(s.num_), s.den_);
}

Slope mediant(const Slope& a, const Slope& b) {
  return Slope(checked::add(a.num(), b.num()), checked::add(a.den(), b.den()));
}

bool farey_neighbors(const Slope& a, const Slope& b) {
  const Int det = checked::sub(checked::mul(a.num(), b.den()), checked::mul(b.num(), a.den()));
  return det == 1 || det == -1;
}

ContinuedFraction ContinuedFraction::parse(std::string_view text) {
  const std::string_view whole = text;
  if (text.size() < 2 || text.front() != '[' || text.back() != ']') {
    throw ParseError("continued fraction must look like [m1,...,mk]: '" + std::string(whole) + "'");
  }
  text = text.substr(1, text.size() - 2);
  std::vector<Int> terms;
  while (!text.empty()) {
    const auto comma = text.find(',');
    terms.push_back(parse_int(text.substr(0, comma), whole));
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
    if (text.empty()) throw ParseError("trailing comma in '" + std::string(whole) + "'");
  }
  return ContinuedFraction(std::move(terms));
}

std::string ContinuedFraction::to_string() const {
  std::string out = "[";
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(terms_[i]);
  }
  out += ']';
  return out;
}

ContinuedFraction cf_expand(const Slope& r) {
  if (r.is_infinite() || r.num() <= 0) {
    throw DomainError("continued fraction expansion needs a positive rational, got " + r.to_string());
  }
  // r = q/p, so the first quotient comes from p/q.
  Int a = r.den();
  Int b = r.num();
  std::vector<Int> terms;
  while (true) {
    const Int m = a / b;
    const Int rem = a - m * b;
    terms.push_back(m);
    if (rem == 0) break;
    a = b;
    b = rem;
  }
  return ContinuedFraction(std::move(terms));
}

Slope cf_value(std::span<const Int> terms) {
  // Evaluate from the innermost term outward; (n, d) is the tail value.
  Int n = 0;
  Int d = 1;
  for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
    const Int denom = checked::add(checked::mul(*it, d), n);
    n = d;
    d = denom;
  }
  if (n == 0 && d == 0) throw DomainError("continued fraction evaluates to 0/0");
  return Slope(n, d);
}

bool schubert_equivalent(const Slope& r, const Slope& r2) {
  if (r.is_infinite() || r2.is_infinite()) return r.is_infinite() && r2.is_infinite();
  if (r.den() != r2.den()) return false;
  const Int p = r.den();
  const Int q = checked::mod(r.num(), p);
  const Int q2 = checked::mod(r2.num(), p);
  const auto congruent = [p](__int128 x, __int128 y) { return (x - y) % p == 0; };
  const __int128 prod = static_cast<__int128>(q) * q2;
  return congruent(q, q2) || congruent(q, -static_cast<__int128>(q2)) || congruent(prod, 1) ||
         congruent(prod, -1);
}

Endpoints fundamental_endpoints(const Slope& r) {
  if (r.is_infinite() || r.num() <= 0 || r.num() >= r.den()) {
    throw DomainError("fundamental endpoints need 0 < r < 1, got " + r.to_string());
  }
  const auto cf = cf_expand(r);
  const auto& m = cf.terms();
  const std::size_t k = m.size();
  std::vector<Int> shorter(m.begin(), m.end() - 1);
  std::vector<Int> lowered(m.begin(), m.end());
  lowered.back() -= 1;
  Slope a = cf_value(shorter);
  Slope b = cf_value(lowered);
  Endpoints e = (k % 2 == 1) ? Endpoints{a, b} : Endpoints{b, a};
  if (!(e.r1 < r && r < e.r2) || mediant(e.r1, e.r2) != r ||
      e.r1.den() + e.r2.den() != r.den()) {
    throw InternalError("fundamental endpoints of " + r.to_string() + " fail the mediant identity");
  }
  return e;
}

bool in_fundamental_intervals(const Slope& s, const Slope& r) {
  const auto [r1, r2] = fundamental_endpoints(r);
  if (s.is_infinite()) return false;
  return (Slope(0, 1) <= s && s <= r1) || (r2 <= s && s <= Slope(1, 1));
}

ParityClass slope_parity_class(const Slope& s) {
  const bool p_odd = (s.den() % 2) != 0;
  const bool q_odd = (s.num() % 2) != 0;
  if (!p_odd) return ParityClass::Infinity;
  return q_odd ? ParityClass::One : ParityClass::Zero;
}

std::string_view to_string(ParityClass c) {
  switch (c) {
    case ParityClass::Zero:
      return "ZERO";
    case ParityClass::One:
      return "ONE";
    case ParityClass::Infinity:
      return "INFINITY";
  }
  return "?";
}

Slope parity_vertex(ParityClass c) {
  switch (c) {
    case ParityClass::Zero:
      return Slope(0, 1);
    case ParityClass::One:
      return Slope(1, 1);
    case ParityClass::Infinity:
      break;
  }
  return Slope::infinity();
}

Int floor(const Slope& x) {
  if (x.is_infinite()) throw DomainError("floor of ∞");
  return checked::floor_div(x.num(), x.den());
}

Int floor_star(const Slope& x) {
  const Int f = floor(x);
  return x.is_integer() ? f - 1 : f;
}

Int ceil_star(const Slope& x) { return floor(x) + 1; }

std::vector<Slope> slopes_between(const Slope& lo, const Slope& hi, Int max_den) {
  if (lo.is_infinite() || hi.is_infinite()) throw DomainError("slopes_between needs finite bounds");
  std::vector<Slope> out;
  for (Int p = 1; p <= max_den; ++p) {
    // ceil(lo * p) .. floor(hi * p)
    const Int first = -checked::floor_div(checked::neg(checked::mul(lo.num(), p)), lo.den());
    const Int last = checked::floor_div(checked::mul(hi.num(), p), hi.den());
    for (Int q = first; q <= last; ++q) {
      if (std::gcd(q, p) == 1) out.emplace_back(q, p);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace twobridge
