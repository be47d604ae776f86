#include "twobridge/cancellation.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "twobridge/error.hpp"

namespace twobridge {

namespace {

void require_open_unit(const Slope& r, const char* what) {
  if (r.is_infinite() || r.num() <= 0 || r.num() >= r.den()) {
    throw DomainError(std::string(what) + " needs 0 < r < 1, got " + r.to_string());
  }
}

std::size_t common_prefix(std::span<const Letter> x, std::span<const Letter> y) {
  const std::size_t n = std::min(x.size(), y.size());
  std::size_t i = 0;
  while (i < n && x[i] == y[i]) ++i;
  return i;
}

// The cyclic word read from `start` for `length` letters (wrapping).
Word cyclic_window(const Word& w, std::size_t start, std::size_t length) {
  Word out;
  out.reserve(length);
  for (std::size_t i = 0; i < length; ++i) out.push_back(w[(start + i) % w.size()]);
  return out;
}

}  // namespace

SymmetrizedSet symmetrize(const Slope& r) {
  require_open_unit(r, "symmetrize");
  SymmetrizedSet R;
  R.r_ = r;
  R.relator_ = CyclicWord(u_word(r));
  const Word& u = R.relator_.representative();
  const Word v = inverse(u);
  for (std::size_t i = 0; i < u.size(); ++i) R.elements_.push_back(rotate(u, i));
  for (std::size_t i = 0; i < v.size(); ++i) R.elements_.push_back(rotate(v, i));
  std::vector<Word> sorted = R.elements_;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw InternalError("symmetrized set of " + r.to_string() + " has repeated rotations");
  }
  return R;
}

bool is_piece(std::span<const Letter> w, const SymmetrizedSet& R) {
  if (w.empty()) return false;
  int hits = 0;
  for (const auto& e : R.elements()) {
    if (e.size() >= w.size() && std::equal(w.begin(), w.end(), e.begin())) {
      if (++hits == 2) return true;
    }
  }
  return false;
}

std::size_t longest_piece_prefix(std::span<const Letter> text, const SymmetrizedSet& R) {
  // A prefix is shared by two elements exactly up to the second largest
  // common-prefix length.
  std::size_t best = 0;
  std::size_t second = 0;
  for (const auto& e : R.elements()) {
    const std::size_t l = common_prefix(text, e);
    if (l > best) {
      second = best;
      best = l;
    } else if (l > second) {
      second = l;
    }
  }
  return second;
}

std::size_t min_piece_factorization(const CyclicWord& cw, const SymmetrizedSet& R) {
  const Word& w = cw.representative();
  const std::size_t n = w.size();
  if (n == 0) throw DomainError("the empty cyclic word has no piece factorization");
  std::size_t best = 0;
  for (std::size_t start = 0; start < n; ++start) {
    const Word text = rotate(w, start);
    std::size_t pos = 0;
    std::size_t count = 0;
    while (pos < n) {
      const std::size_t l = longest_piece_prefix(std::span(text).subspan(pos), R);
      if (l == 0) {
        throw DomainError("letter " + std::string(1, to_char(text[pos])) + " of " + cw.to_string() +
                          " is not a piece");
      }
      pos += l;
      ++count;
    }
    if (best == 0 || count < best) best = count;
  }
  return best;
}

std::vector<Span> maximal_n_pieces(const SymmetrizedSet& R, int n) {
  if (n < 1 || n > 3) throw DomainError("maximal n-pieces are listed for n = 1, 2, 3");
  const Word& u = R.relator().representative();
  const std::size_t len = u.size();
  // Longest piece starting at each position of the cyclic word.
  std::vector<std::size_t> reach(len);
  for (std::size_t i = 0; i < len; ++i) {
    reach[i] = longest_piece_prefix(cyclic_window(u, i, len), R);
  }
  std::vector<Span> out;
  for (std::size_t start = 0; start < len; ++start) {
    // ends[j]: the first j letters from `start` split into exactly `step`
    // pieces. Each piece start j reaches the interval j+1 .. j+reach.
    std::vector<char> ends(len + 1, 0);
    ends[0] = 1;
    for (int step = 0; step < n; ++step) {
      std::vector<int> delta(len + 2, 0);
      for (std::size_t j = 0; j < len; ++j) {
        if (!ends[j]) continue;
        const std::size_t hi = std::min(len, j + reach[(start + j) % len]);
        if (hi <= j) continue;
        ++delta[j + 1];
        --delta[hi + 1];
      }
      int running = 0;
      for (std::size_t j = 0; j <= len; ++j) {
        running += delta[j];
        ends[j] = running > 0;
      }
    }
    std::size_t longest = 0;
    for (std::size_t j = 1; j <= len; ++j) {
      if (ends[j]) longest = j;
    }
    if (longest > 0) out.push_back({start, longest});
  }
  return out;
}

std::vector<Span> maximal_n_pieces_closed_form(const Slope& r, int n) {
  require_open_unit(r, "closed-form piece catalog");
  if (n < 1 || n > 3) throw DomainError("maximal n-pieces are listed for n = 1, 2, 3");
  const Decomposition d = decompose(r);
  const auto total = [](const Seq& s) {
    return static_cast<std::size_t>(std::accumulate(s.begin(), s.end(), std::int64_t{0}));
  };
  const std::size_t A = total(d.s1);
  const std::size_t B = total(d.s2);
  const Word u = u_word(r);
  const std::size_t len = u.size();
  const std::size_t shift = least_rotation(std::span<const Letter>(u));

  // Blocks v1..v4 of u_r; for k = 1 only v2, v4 survive.
  std::vector<std::size_t> blocks;
  if (A == 0) {
    blocks = {B, B};
  } else {
    blocks = {A, B, A, B};
  }
  const std::size_t nb = blocks.size();
  const auto ahead = [&](std::size_t i, std::size_t count) {
    std::size_t sum = 0;
    for (std::size_t j = 1; j <= count; ++j) sum += blocks[(i + j) % nb];
    return sum;
  };

  std::vector<Span> out;
  std::size_t pos = 0;
  for (std::size_t i = 0; i < nb; ++i) {
    const std::size_t li = blocks[i];
    for (std::size_t o = 0; o < li; ++o) {
      const std::size_t tail = li - o;
      std::size_t length = 0;
      if (A == 0) {
        switch (n) {
          case 1: length = (o == 0) ? li - 1 : tail; break;
          case 2: length = (o == 0) ? li : tail + ahead(i, 1) - 1; break;
          default: length = (o == 0) ? li + ahead(i, 1) - 1 : tail + ahead(i, 1); break;
        }
      } else if (i % 2 == 0) {
        switch (n) {
          case 1: length = (o == 0) ? li - 1 : tail + ahead(i, 1); break;
          case 2: length = (o == 0) ? li + ahead(i, 1) : tail + ahead(i, 2) - 1; break;
          default: length = (o == 0) ? li + ahead(i, 2) - 1 : tail + ahead(i, 3); break;
        }
      } else {
        length = tail + ahead(i, static_cast<std::size_t>(n)) - (n == 2 ? 0 : 1);
      }
      if (length > 0) out.push_back({(pos + o + len - shift) % len, length});
    }
    pos += li;
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool t4_structural(const SymmetrizedSet& R) {
  return is_cyclically_alternating(R.relator().representative());
}

bool t4_brute_force(const SymmetrizedSet& R) {
  const auto& E = R.elements();
  const std::size_t n = E.size();
  std::map<Word, std::size_t> index;
  for (std::size_t i = 0; i < n; ++i) index.emplace(E[i], i);
  std::vector<std::size_t> inv(n);
  for (std::size_t i = 0; i < n; ++i) inv[i] = index.at(inverse(E[i]));
  const auto reducible = [&E](std::size_t i, std::size_t j) {
    return E[i].back() == E[j].front().inverse();
  };
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (j == inv[i] || !reducible(i, j)) continue;
      for (std::size_t k = 0; k < n; ++k) {
        if (k == inv[j] || i == inv[k]) continue;
        if (reducible(j, k) && reducible(k, i)) return false;
      }
    }
  }
  return true;
}

PieceReport check_c4_t4(const Slope& r, std::int64_t t4_brute_limit) {
  const SymmetrizedSet R = symmetrize(r);
  PieceReport rep;
  rep.relator_slope = r;
  rep.min_cyclic_pieces = std::min(min_piece_factorization(R.relator(), R),
                                   min_piece_factorization(R.relator().inverse(), R));
  rep.c4 = rep.min_cyclic_pieces >= 4;
  rep.t4 = t4_structural(R);
  if (r.den() <= t4_brute_limit) rep.t4_brute = t4_brute_force(R);
  rep.catalog_matches_closed_form = true;
  for (int n = 1; n <= 3; ++n) {
    auto& list = rep.catalog[static_cast<std::size_t>(n - 1)];
    list = maximal_n_pieces(R, n);
    if (list != maximal_n_pieces_closed_form(r, n)) rep.catalog_matches_closed_form = false;
  }
  return rep;
}

bool initial_letter_spread(const Slope& r) {
  const SymmetrizedSet R = symmetrize(r);
  std::vector<Seq> seqs;
  seqs.reserve(R.size());
  for (const auto& e : R.elements()) seqs.push_back(s_seq_of_word(e));
  const std::size_t half = R.size() / 2;
  for (std::size_t i = 0; i < half; ++i) {
    std::array<bool, 4> seen{};
    for (std::size_t j = 0; j < R.size(); ++j) {
      if (seqs[j] == seqs[i]) seen[static_cast<std::size_t>(R.elements()[j].front().rank())] = true;
    }
    if (!std::all_of(seen.begin(), seen.end(), [](bool x) { return x; })) return false;
  }
  return true;
}

bool satisfies_necessary_condition(const Slope& s, const Slope& r) {
  if (s.is_infinite() || s.num() <= 0 || s > Slope(1, 1)) {
    throw DomainError("necessary condition needs 0 < s <= 1, got " + s.to_string());
  }
  const Decomposition d = decompose(r);
  const CyclicSeq cs = cs_seq_of_slope(s);
  Seq forward = d.s1;
  forward.insert(forward.end(), d.s2.begin(), d.s2.end());
  Seq backward = d.s2;
  backward.insert(backward.end(), d.s1.begin(), d.s1.end());
  return contains_cyclic_factor(cs, forward) || contains_cyclic_factor(cs, backward);
}

}  // namespace twobridge
