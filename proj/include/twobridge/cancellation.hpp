#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <vector>

#include "twobridge/sequences.hpp"
#include "twobridge/slope.hpp"
#include "twobridge/words.hpp"

namespace twobridge {

/// R: every rotation of u_r and of u_r⁻¹ for 0 < r < 1.
class SymmetrizedSet {
 public:
  const Slope& slope() const { return r_; }
  /// (u_r) in canonical rotation; spans below index into this word.
  const CyclicWord& relator() const { return relator_; }
  /// The 2p rotations of the canonical u_r followed by the 2p rotations of
  /// its inverse.
  const std::vector<Word>& elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }

  friend SymmetrizedSet symmetrize(const Slope& r);

 private:
  Slope r_;
  CyclicWord relator_;
  std::vector<Word> elements_;
};

/// Throws DomainError outside (0,1) and InternalError if two of the 4p
/// rotations coincide.
SymmetrizedSet symmetrize(const Slope& r);

/// w is a common prefix of two distinct elements of R. The empty word is
/// not a piece.
bool is_piece(std::span<const Letter> w, const SymmetrizedSet& R);

/// Length of the longest piece that is a prefix of `text` (at most
/// text.size()).
std::size_t longest_piece_prefix(std::span<const Letter> text, const SymmetrizedSet& R);

/// Least n such that some rotation of cw is a product of n pieces.
std::size_t min_piece_factorization(const CyclicWord& cw, const SymmetrizedSet& R);

/// A subword of the cyclic word (u_r): start index into the canonical
/// rotation and length.
struct Span {
  std::size_t start = 0;
  std::size_t length = 0;
  friend auto operator<=>(const Span&, const Span&) = default;
};

/// Maximal n-pieces of (u_r), n = 1, 2, 3, found by exhaustive search: for
/// each start the longest subword that is a product of n pieces. Sorted by
/// start.
std::vector<Span> maximal_n_pieces(const SymmetrizedSet& R, int n);

/// The same lists from the v1 v2 v3 v4 split of u_r with |v1| = |v3| =
/// sum(S1) and |v2| = |v4| = sum(S2).
std::vector<Span> maximal_n_pieces_closed_form(const Slope& r, int n);

/// Cyclically alternating relators force T(4).
bool t4_structural(const SymmetrizedSet& R);

/// Direct T(4) check: no triple w1, w2, w3 ∈ R without successive inverse
/// pairs has all of w1w2, w2w3, w3w1 reducible. Cubic in |R|.
bool t4_brute_force(const SymmetrizedSet& R);

struct PieceReport {
  Slope relator_slope;
  bool c4 = false;
  bool t4 = false;
  /// Present when the direct triple search ran (p <= t4_brute_limit).
  std::optional<bool> t4_brute;
  std::size_t min_cyclic_pieces = 0;
  /// Brute-force maximal 1-, 2- and 3-pieces.
  std::array<std::vector<Span>, 3> catalog;
  bool catalog_matches_closed_form = false;
};

PieceReport check_c4_t4(const Slope& r, std::int64_t t4_brute_limit = 12);

/// For every rotation w of u_r, the initial letters of the elements w' of R
/// with S(w') = S(w) are all four of a, a⁻¹, b, b⁻¹.
bool initial_letter_spread(const Slope& r);

/// CS(s) contains (S1,S2) or (S2,S1) as a cyclic factor, where (S1,S2)
/// comes from decompose(r). Needs 0 < s <= 1 and 0 < r < 1.
bool satisfies_necessary_condition(const Slope& s, const Slope& r);

}  // namespace twobridge
