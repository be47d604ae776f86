#include "twobridge/farey.hpp"

#include <deque>
#include <numeric>
#include <unordered_set>

#include "twobridge/checked.hpp"
#include "twobridge/error.hpp"

namespace twobridge {

using checked::Int;

namespace {

constexpr int kRoundCap = 10000;

Int abs_int(Int x) { return x < 0 ? checked::neg(x) : x; }

}  // namespace

Reflection Reflection::from_entries(Int a, Int b, Int c, Int d) {
  Reflection m{a, b, c, d};
  if (m.determinant() != -1) {
    throw DomainError("reflection must have determinant -1, got " + m.to_string());
  }
  if (a < 0 || (a == 0 && c < 0)) {
    m = {checked::neg(a), checked::neg(b), checked::neg(c), checked::neg(d)};
  }
  return m;
}

Int Reflection::determinant() const {
  return checked::sub(checked::mul(a, d), checked::mul(b, c));
}

std::string Reflection::to_string() const {
  return "(" + std::to_string(a) + "," + std::to_string(b) + ";" + std::to_string(c) + "," +
         std::to_string(d) + ")";
}

Reflection reflection_in_edge(const Slope& alpha, const Slope& beta) {
  const Int q = alpha.num(), p = alpha.den();
  const Int q2 = beta.num(), p2 = beta.den();
  const Int det = checked::sub(checked::mul(q, p2), checked::mul(q2, p));
  if (det != 1 && det != -1) {
    throw DomainError(alpha.to_string() + " and " + beta.to_string() + " are not Farey neighbours");
  }
  const Int trace = checked::dot(q, p2, q2, p);
  return Reflection::from_entries(trace, checked::mul(-2, checked::mul(q, q2)),
                                  checked::mul(2, checked::mul(p, p2)), checked::neg(trace));
}

Slope apply(const Reflection& m, const Slope& s) {
  const Int x = s.num();
  const Int y = s.den();
  return Slope(checked::dot(m.a, x, m.b, y), checked::dot(m.c, x, m.d, y));
}

Fold gamma_inf_fold(const Slope& s) {
  Fold f{s, {}};
  if (s.is_infinite()) return f;
  if (Slope(0, 1) <= s && s <= Slope(1, 1)) return f;
  const Int n = floor(s);
  const auto mirror = [](Int k) { return reflection_in_edge(Slope::infinity(), Slope::integer(k)); };
  if (checked::mod(n, 2) == 0) {
    f.reflections = {mirror(n / 2), mirror(0)};
  } else {
    f.reflections = {mirror(checked::floor_div(checked::add(n, 1), 2))};
  }
  for (const auto& m : f.reflections) f.image = apply(m, f.image);
  return f;
}

namespace {

// x ↦ M x with M = [[q, q1], [p, p1]] sending ∞, 0, -1 to r, r1, r2.
struct Chart {
  Int q, q1, p, p1;
  Int det;

  Slope forward(const Slope& x) const {
    return Slope(checked::dot(q, x.num(), q1, x.den()), checked::dot(p, x.num(), p1, x.den()));
  }
  Slope backward(const Slope& s) const {
    // M⁻¹ = det · [[p1, -q1], [-p, q]] since det = ±1.
    const Int num = checked::sub(checked::mul(p1, s.num()), checked::mul(q1, s.den()));
    const Int den = checked::sub(checked::mul(q, s.den()), checked::mul(p, s.num()));
    return Slope(checked::mul(det, num), checked::mul(det, den));
  }
};

Chart chart_for(const Slope& r, const Slope& r1) {
  Chart c{r.num(), r1.num(), r.den(), r1.den(), 0};
  c.det = checked::sub(checked::mul(c.q, c.p1), checked::mul(c.q1, c.p));
  if (c.det != 1 && c.det != -1) throw InternalError("chart for " + r.to_string() + " is not unimodular");
  return c;
}

void append_fold(ReductionTrace& t, const Fold& f) {
  Slope cur = t.result;
  for (const auto& m : f.reflections) {
    cur = apply(m, cur);
    t.steps.push_back({m, cur});
  }
  t.result = cur;
}

}  // namespace

Fold gamma_r_fold(const Slope& s, const Slope& r) {
  const auto [r1, r2] = fundamental_endpoints(r);
  if (s.is_infinite() || !(r1 < s && s < r2) || s == r) {
    throw DomainError("Γ_r fold needs s in (" + r1.to_string() + ", " + r2.to_string() +
                      ") minus r, got " + s.to_string());
  }
  const Chart chart = chart_for(r, r1);
  const Slope x = chart.backward(s);
  if (x.is_infinite()) throw InternalError("chart sends s ≠ r to ∞");
  // Walls are the vertical lines over the integers; fold x into the strip
  // [-1, 0], which x cannot already meet.
  constexpr Int target = -1;
  const Int n = floor(x);
  const Int d = checked::sub(n, target);
  if (d == 0 || (x == Slope(0, 1))) throw InternalError("chart image already in the strip");
  std::vector<Int> walls;
  if (checked::mod(d, 2) == 0) {
    walls = {checked::add(target, d / 2), target};
  } else {
    walls = {checked::floor_div(checked::add(checked::add(target, n), 1), 2)};
  }
  Fold f{s, {}};
  for (Int k : walls) {
    const Reflection m = reflection_in_edge(r, chart.forward(Slope::integer(k)));
    f.reflections.push_back(m);
    f.image = apply(m, f.image);
  }
  if (!f.image.is_infinite() && r1 < f.image && f.image < r2) {
    throw InternalError("Γ_r fold of " + s.to_string() + " stayed inside (r1, r2)");
  }
  return f;
}

ReductionTrace reduce_to_fundamental(const Slope& s, const Slope& r) {
  const auto [r1, r2] = fundamental_endpoints(r);
  ReductionTrace t{s, {}, s};
  const auto settled = [&](const Slope& x) {
    if (x.is_infinite() || x == r) return true;
    return (Slope(0, 1) <= x && x <= r1) || (r2 <= x && x <= Slope(1, 1));
  };
  for (int round = 0; round < kRoundCap; ++round) {
    if (settled(t.result)) return t;
    append_fold(t, gamma_inf_fold(t.result));
    if (settled(t.result)) return t;
    append_fold(t, gamma_r_fold(t.result, r));
  }
  throw InternalError("reduction of " + s.to_string() + " against " + r.to_string() +
                      " did not settle");
}

std::string_view to_string(OrbitRoute route) {
  switch (route) {
    case OrbitRoute::Generic:
      return "GENERIC";
    case OrbitRoute::RInteger:
      return "R_INTEGER";
    case OrbitRoute::RInfinity:
      return "R_INFINITY";
  }
  return "?";
}

namespace {

// Reduces s to a vertex of the triangle (0, 1, ∞) using reflections in its
// three sides. Each reflection in (0,1) strictly lowers the denominator.
void reduce_to_triangle_vertex(ReductionTrace& t) {
  const Reflection side = reflection_in_edge(Slope(0, 1), Slope(1, 1));
  for (int round = 0; round < kRoundCap; ++round) {
    append_fold(t, gamma_inf_fold(t.result));
    const Slope& x = t.result;
    if (x.is_infinite() || x == Slope(0, 1) || x == Slope(1, 1)) return;
    const Slope y = apply(side, x);
    t.steps.push_back({side, y});
    t.result = y;
  }
  throw InternalError("triangle reduction of " + t.start.to_string() + " did not settle");
}

}  // namespace

OrbitClassification classify_orbit(const Slope& s, const Slope& r) {
  OrbitClassification out;
  out.trace = {s, {}, s};
  const Fold rf = gamma_inf_fold(r);
  out.normalized_r = rf.image;
  // The folds of r lie in Γ∞ ⊂ Γ̂_r; moving s along with r changes nothing.
  append_fold(out.trace, Fold{s, rf.reflections});
  const Slope& r0 = out.normalized_r;

  if (r0.is_infinite()) {
    out.route = OrbitRoute::RInfinity;
    append_fold(out.trace, gamma_inf_fold(out.trace.result));
    out.representative = out.trace.result;
    out.member = out.representative.is_infinite();
    return out;
  }

  if (r0.is_integer()) {
    out.route = OrbitRoute::RInteger;
    const ParityClass cls = slope_parity_class(out.trace.result);
    reduce_to_triangle_vertex(out.trace);
    out.representative = out.trace.result;
    if (out.representative != parity_vertex(cls)) {
      throw InternalError("triangle reduction of " + s.to_string() + " disagrees with its parity class");
    }
    out.member = cls == ParityClass::Infinity || cls == slope_parity_class(r0);
    return out;
  }

  out.route = OrbitRoute::Generic;
  const ReductionTrace inner = reduce_to_fundamental(out.trace.result, r0);
  out.trace.steps.insert(out.trace.steps.end(), inner.steps.begin(), inner.steps.end());
  out.trace.result = inner.result;
  out.representative = inner.result;
  out.member = inner.result.is_infinite() || inner.result == r0;
  return out;
}

bool is_orbit_member(const Slope& s, const Slope& r) { return classify_orbit(s, r).member; }

std::vector<Reflection> orbit_generators(const Slope& r) {
  const Slope inf = Slope::infinity();
  std::vector<Reflection> gens = {reflection_in_edge(inf, Slope(0, 1)),
                                  reflection_in_edge(inf, Slope(1, 1))};
  if (r.is_infinite()) return gens;
  if (r == Slope(0, 1) || r == Slope(1, 1)) {
    gens.push_back(reflection_in_edge(Slope(0, 1), Slope(1, 1)));
    return gens;
  }
  if (!(Slope(0, 1) < r && r < Slope(1, 1))) {
    throw DomainError("orbit generators need r in [0,1] or ∞, got " + r.to_string());
  }
  const auto [r1, r2] = fundamental_endpoints(r);
  gens.push_back(reflection_in_edge(r, r1));
  gens.push_back(reflection_in_edge(r, r2));
  return gens;
}

std::set<Slope> orbit_bfs(const Slope& r, const std::vector<Slope>& seeds, Int max_den,
                          Int expansion) {
  if (max_den < 1 || expansion < 1) throw DomainError("orbit_bfs needs positive bounds");
  const auto gens = orbit_generators(r);
  const Int limit = checked::mul(expansion, max_den);
  const auto height = [](const Slope& x) {
    return x.is_infinite() ? Int{1} : std::max(abs_int(x.num()), x.den());
  };
  std::unordered_set<Slope> seen;
  std::deque<Slope> queue;
  for (const auto& s : seeds) {
    if (height(s) <= limit && seen.insert(s).second) queue.push_back(s);
  }
  while (!queue.empty()) {
    const Slope x = queue.front();
    queue.pop_front();
    for (const auto& g : gens) {
      const Slope y = apply(g, x);
      if (height(y) > limit) continue;
      if (seen.insert(y).second) queue.push_back(y);
    }
  }
  std::set<Slope> out;
  for (const auto& x : seen) {
    if (x.den() <= max_den) out.insert(x);
  }
  return out;
}

}  // namespace twobridge
