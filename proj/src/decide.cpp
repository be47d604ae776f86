#include "twobridge/decide.hpp"

#include "twobridge/error.hpp"

namespace twobridge {

Verdict is_null_homotopic(const Slope& s, const Slope& r) {
  OrbitClassification c = classify_orbit(s, r);
  return Verdict{s, r, c.member, c.representative, std::move(c.trace), c.route};
}

bool has_umpp_epimorphism(const Slope& s, const Slope& r) {
  return is_orbit_member(s, r) || is_orbit_member(s + 1, r);
}

Slope homotopy_representative(const Slope& s, const Slope& r) {
  return reduce_to_fundamental(s, r).result;
}

bool connection_criterion(const Slope& s, const Slope& r) {
  if (s.is_infinite() || s.num() <= 0 || s > Slope(1, 1)) {
    throw DomainError("connection criterion needs 0 < s <= 1, got " + s.to_string());
  }
  if (r.is_infinite() || r.num() <= 0 || r.num() >= r.den()) {
    throw DomainError("connection criterion needs 0 < r < 1, got " + r.to_string());
  }
  const auto l = cf_expand(s).terms();
  const auto m = cf_expand(r).terms();
  const std::size_t t = l.size();
  const std::size_t k = m.size();
  if (t < k) return false;
  for (std::size_t i = 0; i + 1 < k; ++i) {
    if (l[i] != m[i]) return false;
  }
  const auto lk = l[k - 1];
  const auto mk = m[k - 1];
  return lk >= mk || (lk == mk - 1 && t > k);
}

std::string_view to_string(ScanMode mode) {
  return mode == ScanMode::NullHomotopy ? "null" : "epi";
}

std::vector<Slope> scan(const Slope& r, std::int64_t max_den, ScanMode mode) {
  if (max_den < 1) throw DomainError("scan needs max_den >= 1");
  std::vector<Slope> candidates = slopes_between(Slope(0, 1), Slope(1, 1), max_den);
  candidates.push_back(Slope::infinity());
  std::vector<Slope> out;
  for (const auto& s : candidates) {
    const bool hit =
        mode == ScanMode::NullHomotopy ? is_orbit_member(s, r) : has_umpp_epimorphism(s, r);
    if (hit) out.push_back(s);
  }
  return out;
}

}  // namespace twobridge
