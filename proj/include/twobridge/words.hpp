#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "twobridge/slope.hpp"

namespace twobridge {

enum class Generator : std::uint8_t { A = 0, B = 1 };

/// a, a⁻¹, b or b⁻¹.
///
/// Letters order as a < a⁻¹ < b < b⁻¹; that order fixes canonical rotations.
struct Letter {
  Generator gen = Generator::A;
  std::int8_t exp = 1;

  static constexpr Letter a() { return {Generator::A, 1}; }
  static constexpr Letter A() { return {Generator::A, -1}; }
  static constexpr Letter b() { return {Generator::B, 1}; }
  static constexpr Letter B() { return {Generator::B, -1}; }

  constexpr Letter inverse() const { return {gen, static_cast<std::int8_t>(-exp)}; }
  constexpr int rank() const { return 2 * static_cast<int>(gen) + (exp < 0 ? 1 : 0); }
  constexpr bool positive() const { return exp > 0; }

  friend constexpr bool operator==(Letter x, Letter y) { return x.gen == y.gen && x.exp == y.exp; }
  friend constexpr std::strong_ordering operator<=>(Letter x, Letter y) {
    return x.rank() <=> y.rank();
  }
};

/// 'a', 'A', 'b' or 'B' (uppercase is the inverse).
char to_char(Letter l);

using Word = std::vector<Letter>;

/// Concatenation of a/A/b/B; the empty word prints as "1".
std::string to_string(std::span<const Letter> w);
/// Inverse of to_string. Accepts "1" and "" for the empty word.
Word parse_word(std::string_view text);

Word inverse(std::span<const Letter> w);
/// Rotation of w starting at index `start`.
Word rotate(std::span<const Letter> w, std::size_t start);

bool is_reduced(std::span<const Letter> w);
bool is_cyclically_reduced(std::span<const Letter> w);
/// No a^{±2} or b^{±2} (reading linearly).
bool is_alternating(std::span<const Letter> w);
/// Alternating, including across the wrap-around (so of even length).
bool is_cyclically_alternating(std::span<const Letter> w);

/// Free reduction.
Word free_reduce(std::span<const Letter> w);

/// Index of the lexicographically least rotation (first one on ties).
template <typename T>
std::size_t least_rotation(std::span<const T> s) {
  // Two-candidate scan; O(n) comparisons.
  const std::size_t n = s.size();
  if (n == 0) return 0;
  std::size_t i = 0, j = 1, k = 0;
  while (i < n && j < n && k < n) {
    const T& x = s[(i + k) % n];
    const T& y = s[(j + k) % n];
    if (x == y) {
      ++k;
      continue;
    }
    if (y < x) {
      i += k + 1;
    } else {
      j += k + 1;
    }
    if (i == j) ++j;
    k = 0;
  }
  return std::min(i, j);
}

/// A cyclically reduced word up to rotation, stored as its least rotation.
class CyclicWord {
 public:
  CyclicWord() = default;
  /// w must be cyclically reduced; throws DomainError otherwise.
  explicit CyclicWord(std::span<const Letter> w);

  const Word& representative() const { return rep_; }
  std::size_t size() const { return rep_.size(); }
  CyclicWord inverse() const;
  std::string to_string() const;

  friend bool operator==(const CyclicWord&, const CyclicWord&) = default;

 private:
  Word rep_;
};

/// Free reduction followed by stripping inverse pairs across the ends.
CyclicWord cyclic_reduce(std::span<const Letter> w);

/// w2 is a rotation of w1 (or of w1⁻¹ when allowed). Both must be
/// cyclically reduced.
bool cyclic_equal(std::span<const Letter> w1, std::span<const Letter> w2, bool allow_inverse);

/// û_r for 0 < r <= 1: the alternating word b^{e1} a^{e2} ... of length
/// p - 1 with e_i = (-1)^floor(iq/p).
Word u_hat(const Slope& r);

enum class RelatorMethod {
  /// a û b^{(-1)^q} û⁻¹ (p odd) or a û a⁻¹ û⁻¹ (p even).
  Riley,
  /// a^{e1} b^{e2} ... b^{e2p} with e_i = (-1)^(ceil*((i-1)q/p) - 1).
  Ceil,
  /// Read off the crossings of the slightly raised line y = (q/p) x + η
  /// with the vertical lattice lines x = 0, ..., 2p-1.
  LatticeScan,
};

/// The relator u_r of the upper presentation ⟨a, b | u_r⟩ of G(K(r)).
///
/// Defined for r in (0,1] and for r ∈ {0, ∞} (u_0 = ab, u_∞ = empty). All
/// three methods agree on (0,1]; slopes outside that range are handled by
/// transporting with apply_automorphism.
Word u_word(const Slope& r, RelatorMethod method = RelatorMethod::Riley);

/// The exponent formula of RelatorMethod::Ceil evaluated for any positive
/// rational (it is valid beyond (0,1]). Used to cross-check the shift
/// automorphism u_s -> u_{s+1}.
Word u_word_positive(const Slope& r);

/// Letterwise substitution a -> image_of_a, b -> image_of_b followed by
/// free reduction. The images must use different generators (these are the
/// eight automorphisms permuting {a^{±1}, b^{±1}}); otherwise DomainError.
Word apply_automorphism(std::span<const Letter> w, Letter image_of_a, Letter image_of_b);

}  // namespace twobridge
