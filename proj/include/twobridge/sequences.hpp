#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "twobridge/slope.hpp"
#include "twobridge/words.hpp"

namespace twobridge {

/// A finite run-length sequence such as S(r) or T(r).
using Seq = std::vector<std::int64_t>;

/// "(4,4,3)".
std::string to_string(std::span<const std::int64_t> s);
Seq reversed(std::span<const std::int64_t> s);
bool is_palindrome(std::span<const std::int64_t> s);

/// A sequence up to rotation, stored as its least rotation.
class CyclicSeq {
 public:
  CyclicSeq() = default;
  explicit CyclicSeq(std::span<const std::int64_t> s);

  const Seq& representative() const { return rep_; }
  std::size_t size() const { return rep_.size(); }
  /// The cyclic sequence read in the opposite direction.
  CyclicSeq reversed() const;
  /// "((4,4,3))".
  std::string to_string() const;

  friend bool operator==(const CyclicSeq&, const CyclicSeq&) = default;

 private:
  Seq rep_;
};

/// Lengths of the maximal runs of constant exponent sign in a reduced word.
/// Throws DomainError for unreduced input.
Seq s_seq_of_word(std::span<const Letter> v);

/// Cyclic run lengths of a cyclic word of length >= 2. A word whose letters
/// all share one sign gives the single run ((n)).
CyclicSeq cs_seq_of_word(const CyclicWord& v);

enum class SeqMethod {
  /// s_j = floor*(jp/q) - floor*((j-1)p/q).
  FloorDifference,
  /// s_j = #{i in [0, 2p) : ceil*(iq/p) = j}.
  CeilCount,
  /// s_j = number of crossings of the raised line inside the strip (j-1, j).
  StripCount,
};

/// S(r) for r = q/p > 0: a sequence of length 2q. Equals S(u_r) on (0,1]
/// and may contain zeros for r > 1. Debug builds cross-check all three
/// methods.
Seq s_seq_of_slope(const Slope& r, SeqMethod method = SeqMethod::FloorDifference);

/// CS(r), the cyclic class of S(r).
CyclicSeq cs_seq_of_slope(const Slope& r);

/// The slope r' whose S-sequence gives T(r):
/// [m3,...,mk] when m2 = 1 and [m2-1, m3,...,mk] when m2 >= 2. Needs k >= 2.
Slope derived_slope(const Slope& r);

/// T(r) for r > 0 with k >= 2: run counts of the majority term of S(r)
/// between isolated minority terms. Throws DomainError when k = 1.
Seq t_seq(const Slope& r);

/// S(r) = (S1, S2, S1, S2) with S1, S2 palindromic, S1 starting and ending
/// with m1+1 (empty when k = 1), S2 starting and ending with m1, and each
/// occurring exactly twice as a cyclic factor of CS(r).
struct Decomposition {
  Seq s1;
  Seq s2;
};

/// Builds the decomposition by recursing through derived_slope and verifies
/// every invariant by direct search (InternalError on mismatch).
/// Requires 0 < r < 1.
Decomposition decompose(const Slope& r);

/// As decompose but for any r > 0, without the range check.
Decomposition decompose_positive(const Slope& r);

/// Some rotation of the cyclic sequence begins with `needle`. A needle longer
/// than the haystack never matches; the empty needle always does.
bool contains_cyclic_factor(const CyclicSeq& haystack, std::span<const std::int64_t> needle);

/// Number of start positions in [0, n) at which `needle` occurs cyclically
/// in `haystack` (read as a cyclic sequence of length n). The empty needle
/// occurs at every start.
std::size_t count_cyclic_occurrences(std::span<const std::int64_t> haystack,
                                     std::span<const std::int64_t> needle);

}  // namespace twobridge
