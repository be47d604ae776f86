#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace twobridge {

/// An element of Q ∪ {∞}, stored as a reduced fraction num/den with den >= 0.
///
/// ∞ is the single value 1/0; -1/0 normalises to it. All arithmetic is
/// exact and raises OverflowError instead of wrapping.
class Slope {
 public:
  using Int = std::int64_t;

  /// 0/1.
  constexpr Slope() = default;

  /// Reduces num/den to lowest terms. Throws DomainError for 0/0.
  Slope(Int num, Int den);

  static Slope infinity() { return Slope(1, 0); }
  static Slope integer(Int n) { return Slope(n, 1); }

  /// Parses "q/p", "n", "inf" or "1/0", with an optional leading '-' (ASCII
  /// or U+2212). The fraction must already be in lowest terms.
  static Slope parse(std::string_view text);

  Int num() const { return num_; }
  Int den() const { return den_; }

  bool is_infinite() const { return den_ == 0; }
  bool is_integer() const { return den_ == 1; }
  bool is_zero() const { return num_ == 0; }

  /// "q/p", or "inf" for ∞.
  std::string to_string() const;

  friend bool operator==(const Slope&, const Slope&) = default;

  /// Numeric order on Q with ∞ placed above every rational.
  friend std::strong_ordering operator<=>(const Slope& a, const Slope& b);

  /// s + n; ∞ + n = ∞.
  friend Slope operator+(const Slope& s, Int n);
  friend Slope operator-(const Slope& s, Int n);
  /// -s; -∞ = ∞.
  friend Slope operator-(const Slope& s);

 private:
  Int num_ = 0;
  Int den_ = 1;
};

/// The mediant (q1+q2)/(p1+p2).
Slope mediant(const Slope& a, const Slope& b);

/// True when a and b are Farey neighbours, |q p' - q' p| = 1.
bool farey_neighbors(const Slope& a, const Slope& b);

/// Canonical continued fraction [m1, ..., mk] of a positive rational,
/// r = 1/(m1 + 1/(m2 + ... + 1/mk)).
///
/// For r in (0,1] all terms are positive; for r > 1 the leading term is 0.
/// The last term is at least 2 unless k = 1.
class ContinuedFraction {
 public:
  using Int = std::int64_t;

  ContinuedFraction() = default;
  explicit ContinuedFraction(std::vector<Int> terms) : terms_(std::move(terms)) {}

  /// Parses "[m1,m2,...,mk]"; "[]" is the empty expansion.
  static ContinuedFraction parse(std::string_view text);

  const std::vector<Int>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }
  /// 1-based access matching the usual m_i notation.
  Int term(std::size_t i) const { return terms_.at(i - 1); }

  /// "[3,2,2]".
  std::string to_string() const;

  friend bool operator==(const ContinuedFraction&, const ContinuedFraction&) = default;

 private:
  std::vector<Int> terms_;
};

/// Canonical expansion of r > 0. Throws DomainError for r <= 0 or ∞.
ContinuedFraction cf_expand(const Slope& r);

/// Exact value of [m1, ..., mk]. The empty expansion evaluates to 0/1.
Slope cf_value(std::span<const ContinuedFraction::Int> terms);
inline Slope cf_value(const ContinuedFraction& cf) { return cf_value(cf.terms()); }

/// Schubert's classification: K(q/p) ≅ K(q'/p') iff p = p' and either
/// q ≡ ±q' or q q' ≡ ±1 (mod p). ∞ is equivalent only to itself.
bool schubert_equivalent(const Slope& r, const Slope& r2);

/// Endpoints r1 < r < r2 of the open interval (0,1) - (I1 ∪ I2) for
/// 0 < r < 1. They are Farey neighbours of each other and of r, and
/// r is their mediant.
struct Endpoints {
  Slope r1;
  Slope r2;
};
Endpoints fundamental_endpoints(const Slope& r);

/// s ∈ [0, r1] ∪ [r2, 1] for 0 < r < 1.
bool in_fundamental_intervals(const Slope& s, const Slope& r);

/// Orbit class of s under the group generated by reflections in all Farey
/// edges; every slope is equivalent to exactly one vertex of the triangle
/// (0, 1, ∞), detected by the parities of numerator and denominator.
enum class ParityClass { Zero, One, Infinity };
ParityClass slope_parity_class(const Slope& s);
std::string_view to_string(ParityClass c);
/// The triangle vertex 0/1, 1/1 or ∞ representing a class.
Slope parity_vertex(ParityClass c);

/// Greatest integer strictly below x (x finite).
Slope::Int floor_star(const Slope& x);
/// Least integer strictly above x (x finite).
Slope::Int ceil_star(const Slope& x);
/// Greatest integer not exceeding x (x finite).
Slope::Int floor(const Slope& x);

/// All q/p with 1 <= p <= max_den, gcd(q,p) = 1 and lo <= q/p <= hi, in
/// increasing order. lo and hi must be finite.
std::vector<Slope> slopes_between(const Slope& lo, const Slope& hi, Slope::Int max_den);

}  // namespace twobridge

template <>
struct std::hash<twobridge::Slope> {
  std::size_t operator()(const twobridge::Slope& s) const noexcept {
    auto h = static_cast<std::uint64_t>(s.num()) * 0x9E3779B97F4A7C15ULL;
    h ^= static_cast<std::uint64_t>(s.den()) + 0x7F4A7C15ULL + (h << 6) + (h >> 2);
    return static_cast<std::size_t>(h);
  }
};
