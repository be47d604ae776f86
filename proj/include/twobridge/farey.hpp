#pragma once

#include <array>
#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "twobridge/slope.hpp"

namespace twobridge {

/// x ↦ (a x + b)/(c x + d) with determinant -1, acting projectively on
/// Q ∪ {∞}. Normalised so the first nonzero of (a, c) is positive.
struct Reflection {
  using Int = std::int64_t;
  Int a = 1, b = 0, c = 0, d = -1;

  /// Normalises the sign; throws DomainError unless ad - bc = -1.
  static Reflection from_entries(Int a, Int b, Int c, Int d);

  Int determinant() const;
  std::array<Int, 4> entries() const { return {a, b, c, d}; }
  std::string to_string() const;

  friend bool operator==(const Reflection&, const Reflection&) = default;
};

/// The reflection in the Farey edge joining alpha and beta:
/// (qp'+q'p, -2qq'; 2pp', -(qp'+q'p)) for alpha = q/p, beta = q'/p'.
/// Throws DomainError unless |qp' - q'p| = 1.
Reflection reflection_in_edge(const Slope& alpha, const Slope& beta);

/// Exact projective action; c s + d = 0 goes to ∞ and ∞ goes to a/c.
Slope apply(const Reflection& m, const Slope& s);

/// A slope together with the reflections (in the order applied) that carried
/// it there.
struct Fold {
  Slope image;
  std::vector<Reflection> reflections;
};

/// Folds s into [0,1] with the reflections x ↦ -x and x ↦ 2k - x.
/// ∞ is returned unchanged with no reflections.
Fold gamma_inf_fold(const Slope& s);

/// For 0 < r < 1 and s in the open interval (r1, r2) with s ≠ r: an element
/// of the dihedral group generated by reflections in the Farey edges at r
/// that moves s out of (r1, r2). Throws DomainError otherwise.
Fold gamma_r_fold(const Slope& s, const Slope& r);

struct ReductionStep {
  Reflection matrix;
  Slope image;
};

struct ReductionTrace {
  Slope start;
  std::vector<ReductionStep> steps;
  Slope result;
};

/// The unique s0 ∈ I1 ∪ I2 ∪ {∞, r} in the orbit of s, for 0 < r < 1, with
/// the reflections that lead there. Throws InternalError if the folding does
/// not settle within 10000 rounds.
ReductionTrace reduce_to_fundamental(const Slope& s, const Slope& r);

/// Which of the three decision routes applies to a target slope.
enum class OrbitRoute { Generic, RInteger, RInfinity };
std::string_view to_string(OrbitRoute route);

/// Full result of the orbit membership test for s against Γ̂_r · {r, ∞}.
struct OrbitClassification {
  bool member = false;
  /// r folded into [0,1] (or ∞); the trace below works relative to it.
  Slope normalized_r;
  /// Fundamental-domain point for the generic route, triangle vertex 0, 1
  /// or ∞ for integer r, and the [0,1]-fold of s for r = ∞.
  Slope representative;
  ReductionTrace trace;
  OrbitRoute route = OrbitRoute::Generic;
};

OrbitClassification classify_orbit(const Slope& s, const Slope& r);

/// s ∈ Γ̂_r · {r, ∞}.
bool is_orbit_member(const Slope& s, const Slope& r);

/// Generators of Γ̂_r used by orbit_bfs: reflections in (∞,0) and (∞,1),
/// plus (r, r1) and (r, r2) for 0 < r < 1, or (0, 1) when r ∈ {0, 1}.
/// r = ∞ gives only the first two. Other r raise DomainError.
std::vector<Reflection> orbit_generators(const Slope& r);

/// Breadth-first closure of `seeds` under orbit_generators(r). Points with
/// max(|num|, den) above expansion * max_den are pruned; the result keeps
/// the visited points with den <= max_den (∞ included when reached).
std::set<Slope> orbit_bfs(const Slope& r, const std::vector<Slope>& seeds, std::int64_t max_den,
                          std::int64_t expansion = 64);

}  // namespace twobridge
