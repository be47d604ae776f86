#include "twobridge/sequences.hpp"

#include <algorithm>

#include "twobridge/checked.hpp"
#include "twobridge/error.hpp"

namespace twobridge {

using checked::Int;

std::string to_string(std::span<const std::int64_t> s) {
  std::string out = "(";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(s[i]);
  }
  out += ')';
  return out;
}

Seq reversed(std::span<const std::int64_t> s) { return Seq(s.rbegin(), s.rend()); }

bool is_palindrome(std::span<const std::int64_t> s) {
  return std::equal(s.begin(), s.begin() + static_cast<std::ptrdiff_t>(s.size() / 2), s.rbegin());
}

CyclicSeq::CyclicSeq(std::span<const std::int64_t> s) {
  const std::size_t start = least_rotation(s);
  rep_.reserve(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) rep_.push_back(s[(start + i) % s.size()]);
}

CyclicSeq CyclicSeq::reversed() const {
  const Seq r = twobridge::reversed(rep_);
  return CyclicSeq(r);
}

std::string CyclicSeq::to_string() const { return "(" + twobridge::to_string(rep_) + ")"; }

Seq s_seq_of_word(std::span<const Letter> v) {
  if (!is_reduced(v)) throw DomainError("S-sequence needs a reduced word: " + to_string(v));
  Seq out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i == 0 || v[i].positive() != v[i - 1].positive()) {
      out.push_back(1);
    } else {
      ++out.back();
    }
  }
  return out;
}

CyclicSeq cs_seq_of_word(const CyclicWord& v) {
  const Word& w = v.representative();
  const std::size_t n = w.size();
  if (n < 2) throw DomainError("cyclic S-sequence needs a cyclic word of length >= 2");
  std::size_t start = n;
  for (std::size_t i = 0; i < n; ++i) {
    if (w[i].positive() != w[(i + n - 1) % n].positive()) {
      start = i;
      break;
    }
  }
  if (start == n) {
    const Seq single{static_cast<std::int64_t>(n)};
    return CyclicSeq(single);
  }
  const Word rotated = rotate(w, start);
  const Seq runs = s_seq_of_word(rotated);
  return CyclicSeq(runs);
}

namespace {

// floor*(n/d) for d > 0.
Int floor_star_frac(Int n, Int d) {
  const Int f = checked::floor_div(n, d);
  return (checked::mod(n, d) == 0) ? f - 1 : f;
}

void require_positive(const Slope& r, const char* what) {
  if (r.is_infinite() || r.num() <= 0) {
    throw DomainError(std::string(what) + " needs a positive rational, got " + r.to_string());
  }
}

Seq floor_difference(Int q, Int p) {
  Seq out;
  out.reserve(static_cast<std::size_t>(2 * q));
  Int prev = floor_star_frac(0, q);
  for (Int j = 1; j <= 2 * q; ++j) {
    const Int cur = floor_star_frac(checked::mul(j, p), q);
    out.push_back(cur - prev);
    prev = cur;
  }
  return out;
}

Seq ceil_count(Int q, Int p) {
  Seq out(static_cast<std::size_t>(2 * q), 0);
  for (Int i = 0; i < 2 * p; ++i) {
    const Int j = ceil_star(Slope(checked::mul(i, q), p));
    if (j < 1 || j > 2 * q) throw InternalError("ceil* count out of range");
    ++out[static_cast<std::size_t>(j - 1)];
  }
  return out;
}

Seq strip_count(Int q, Int p) {
  // Crossing i sits at height (4iq + 1)/(4p); it lies in strip (j-1, j)
  // exactly when its floor is j-1.
  Seq out(static_cast<std::size_t>(2 * q), 0);
  const Int scale = checked::mul(4, p);
  for (Int i = 0; i < 2 * p; ++i) {
    const Int level =
        checked::floor_div(checked::add(checked::mul(checked::mul(4, i), q), 1), scale);
    if (level < 0 || level >= 2 * q) throw InternalError("strip count out of range");
    ++out[static_cast<std::size_t>(level)];
  }
  return out;
}

}  // namespace

Seq s_seq_of_slope(const Slope& r, SeqMethod method) {
  require_positive(r, "S-sequence of a slope");
  const Int q = r.num();
  const Int p = r.den();
  switch (method) {
    case SeqMethod::FloorDifference: {
      Seq s = floor_difference(q, p);
#ifndef NDEBUG
      if (s != ceil_count(q, p) || s != strip_count(q, p)) {
        throw InternalError("S-sequence formulas disagree for " + r.to_string());
      }
#endif
      return s;
    }
    case SeqMethod::CeilCount:
      return ceil_count(q, p);
    case SeqMethod::StripCount:
      return strip_count(q, p);
  }
  throw InternalError("unknown S-sequence method");
}

CyclicSeq cs_seq_of_slope(const Slope& r) {
  const Seq s = s_seq_of_slope(r);
  return CyclicSeq(s);
}

Slope derived_slope(const Slope& r) {
  const auto cf = cf_expand(r);
  const auto& m = cf.terms();
  if (m.size() < 2) throw DomainError("derived slope needs k >= 2, got " + cf.to_string());
  if (m[1] == 1) return cf_value(std::span(m).subspan(2));
  std::vector<Int> terms(m.begin() + 1, m.end());
  terms.front() -= 1;
  return cf_value(terms);
}

Seq t_seq(const Slope& r) {
  const auto cf = cf_expand(r);
  const auto& m = cf.terms();
  if (m.size() < 2) throw DomainError("T-sequence needs k >= 2, got " + cf.to_string());
  const Int low = m[0];
  const Int high = low + 1;
  const Int majority = (m[1] == 1) ? high : low;
  const Seq s = s_seq_of_slope(r);
  if (s.front() != high || s.back() != low) {
    throw InternalError("S-sequence of " + r.to_string() + " has the wrong end terms");
  }
  Seq runs;
  std::size_t minorities = 0;
  bool previous_minor = false;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] != low && s[i] != high) {
      throw InternalError("S-sequence of " + r.to_string() + " has a term outside {m, m+1}");
    }
    if (s[i] == majority) {
      if (i == 0 || s[i - 1] != majority) runs.push_back(0);
      ++runs.back();
      previous_minor = false;
    } else {
      if (previous_minor) {
        throw InternalError("S-sequence of " + r.to_string() + " has adjacent minority terms");
      }
      previous_minor = true;
      ++minorities;
    }
  }
  if (runs.size() != minorities) {
    throw InternalError("T-sequence of " + r.to_string() + " is not well formed");
  }
  return runs;
}

namespace {

void append_run(Seq& out, std::int64_t count, std::int64_t value) {
  out.insert(out.end(), static_cast<std::size_t>(count), value);
}

Decomposition build_decomposition(const ContinuedFraction& cf) {
  const auto& m = cf.terms();
  const std::size_t k = m.size();
  const Int low = m[0];
  const Int high = low + 1;
  Decomposition d;
  if (k == 1) {
    d.s2 = {low};
    return d;
  }
  if (m[1] == 1 && k == 3) {
    append_run(d.s1, m[2], high);
    d.s2 = {low};
    return d;
  }
  if (m[1] >= 2 && k == 2) {
    d.s1 = {high};
    append_run(d.s2, m[1] - 1, low);
    return d;
  }
  std::vector<Int> inner;
  if (m[1] == 1) {
    inner.assign(m.begin() + 2, m.end());
  } else {
    inner.assign(m.begin() + 1, m.end());
    inner.front() -= 1;
  }
  const Decomposition t = build_decomposition(ContinuedFraction(inner));
  if (m[1] == 1) {
    // Runs of m+1 separated by single m's.
    for (std::size_t i = 0; i < t.s1.size(); ++i) {
      if (i) d.s1.push_back(low);
      append_run(d.s1, t.s1[i], high);
    }
    d.s2.push_back(low);
    for (std::int64_t count : t.s2) {
      append_run(d.s2, count, high);
      d.s2.push_back(low);
    }
  } else {
    // Runs of m separated by single (m+1)'s.
    d.s1.push_back(high);
    for (std::int64_t count : t.s2) {
      append_run(d.s1, count, low);
      d.s1.push_back(high);
    }
    for (std::size_t i = 0; i < t.s1.size(); ++i) {
      if (i) d.s2.push_back(high);
      append_run(d.s2, t.s1[i], low);
    }
  }
  return d;
}

}  // namespace

Decomposition decompose_positive(const Slope& r) {
  require_positive(r, "decomposition");
  const auto cf = cf_expand(r);
  Decomposition d = build_decomposition(cf);
  const Seq s = s_seq_of_slope(r);
  const Int low = cf.term(1);
  const auto fail = [&r](const std::string& what) {
    throw InternalError("decomposition of " + r.to_string() + ": " + what);
  };
  Seq joined;
  for (const Seq* part : {&d.s1, &d.s2, &d.s1, &d.s2}) joined.insert(joined.end(), part->begin(), part->end());
  if (joined != s) fail("(S1,S2,S1,S2) differs from S(r)");
  if (!is_palindrome(d.s1) || !is_palindrome(d.s2)) fail("a factor is not palindromic");
  if (cf.size() == 1) {
    if (!d.s1.empty()) fail("S1 must be empty when k = 1");
  } else if (d.s1.empty() || d.s1.front() != low + 1 || d.s1.back() != low + 1) {
    fail("S1 must begin and end with m+1");
  }
  if (d.s2.empty() || d.s2.front() != low || d.s2.back() != low) fail("S2 must begin and end with m");
  if (!d.s1.empty() && count_cyclic_occurrences(s, d.s1) != 2) fail("S1 does not occur exactly twice");
  if (count_cyclic_occurrences(s, d.s2) != 2) fail("S2 does not occur exactly twice");
  return d;
}

Decomposition decompose(const Slope& r) {
  if (r.is_infinite() || r.num() <= 0 || r.num() >= r.den()) {
    throw DomainError("decomposition needs 0 < r < 1, got " + r.to_string());
  }
  return decompose_positive(r);
}

std::size_t count_cyclic_occurrences(std::span<const std::int64_t> haystack,
                                     std::span<const std::int64_t> needle) {
  const std::size_t n = haystack.size();
  const std::size_t m = needle.size();
  if (m > n) return 0;
  if (m == 0) return n;
  // Knuth-Morris-Pratt over the haystack read cyclically for n + m - 1 terms.
  std::vector<std::size_t> fail(m, 0);
  for (std::size_t i = 1, k = 0; i < m; ++i) {
    while (k > 0 && needle[i] != needle[k]) k = fail[k - 1];
    if (needle[i] == needle[k]) ++k;
    fail[i] = k;
  }
  std::size_t count = 0;
  for (std::size_t i = 0, k = 0; i < n + m - 1; ++i) {
    const std::int64_t x = haystack[i % n];
    while (k > 0 && x != needle[k]) k = fail[k - 1];
    if (x == needle[k]) ++k;
    if (k == m) {
      ++count;
      k = fail[k - 1];
    }
  }
  return count;
}

bool contains_cyclic_factor(const CyclicSeq& haystack, std::span<const std::int64_t> needle) {
  if (needle.empty()) return true;
  return count_cyclic_occurrences(haystack.representative(), needle) > 0;
}

}  // namespace twobridge
