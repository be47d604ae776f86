#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "twobridge/farey.hpp"
#include "twobridge/slope.hpp"

namespace twobridge {

/// Answer to "is α_s null-homotopic in S³ - K(r)?" with its evidence.
struct Verdict {
  Slope s;
  Slope r;
  bool answer = false;
  /// See OrbitClassification::representative.
  Slope representative;
  ReductionTrace trace;
  OrbitRoute route = OrbitRoute::Generic;
};

Verdict is_null_homotopic(const Slope& s, const Slope& r);

/// An upper-meridian-pair-preserving epimorphism G(K(s)) → G(K(r)) exists
/// iff s or s+1 lies in Γ̂_r · {r, ∞}.
bool has_umpp_epimorphism(const Slope& s, const Slope& r);

/// The unique point of I1 ∪ I2 ∪ {∞, r} in the orbit of s, for 0 < r < 1.
Slope homotopy_representative(const Slope& s, const Slope& r);

/// For s = [l1,...,lt] in (0,1] and r = [m1,...,mk] in (0,1): t >= k,
/// l_i = m_i for i < k, and l_k >= m_k or (l_k = m_k - 1 and t > k).
bool connection_criterion(const Slope& s, const Slope& r);

enum class ScanMode { NullHomotopy, Epimorphism };
std::string_view to_string(ScanMode mode);

/// Slopes in [0,1] with denominator <= max_den, followed by ∞, that satisfy
/// the chosen predicate. Ascending, ∞ last.
std::vector<Slope> scan(const Slope& r, std::int64_t max_den, ScanMode mode);

}  // namespace twobridge
