#include "twobridge/verify.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

#include "twobridge/cancellation.hpp"
#include "twobridge/decide.hpp"
#include "twobridge/error.hpp"
#include "twobridge/farey.hpp"
#include "twobridge/sequences.hpp"
#include "twobridge/slope.hpp"
#include "twobridge/words.hpp"

namespace twobridge {

using Int = std::int64_t;

VerifyBounds VerifyBounds::uniform(Int n) {
  VerifyBounds b;
  b.formula_p = b.sequence_p = b.cancellation_p = n;
  b.t4_brute_p = std::min<Int>(n, 12);
  b.decision_r_p = b.decision_s_den = n;
  b.uniqueness_den = std::min<Int>(n, 8);
  b.criterion_r_p = b.criterion_s_den = n;
  b.special_den = b.shift_den = n;
  return b;
}

namespace {

class Tally {
 public:
  explicit Tally(std::string name) { result_.name = std::move(name); }

  void expect(bool ok, const std::function<std::string()>& what) {
    ++result_.cases;
    if (!ok && result_.passed) {
      result_.passed = false;
      result_.detail = what();
    }
  }

  // Runs body, turning a library exception into a failed case.
  void guard(const std::function<void()>& body) {
    try {
      body();
    } catch (const Error& e) {
      expect(false, [&e] { return std::string("exception: ") + e.what(); });
    }
  }

  CheckResult done() { return std::move(result_); }

 private:
  CheckResult result_;
};

// q/p with 0 < q < p <= max_p (q = p = 1 added when include_one).
std::vector<Slope> open_unit_slopes(Int max_p, bool include_one = false) {
  std::vector<Slope> out;
  for (Int p = 2; p <= max_p; ++p) {
    for (Int q = 1; q < p; ++q) {
      if (std::gcd(q, p) == 1) out.emplace_back(q, p);
    }
  }
  if (include_one) out.emplace_back(1, 1);
  return out;
}

// Slopes in [lo, hi] with denominator <= max_den, plus ∞.
std::vector<Slope> test_grid(Int lo, Int hi, Int max_den) {
  auto out = slopes_between(Slope::integer(lo), Slope::integer(hi), max_den);
  out.push_back(Slope::infinity());
  return out;
}

std::string pair_text(const Slope& s, const Slope& r) {
  return "s=" + s.to_string() + " r=" + r.to_string();
}

Seq add_constant(Seq s, Int m) {
  for (auto& x : s) x += m;
  return s;
}

}  // namespace

CheckResult check_worked_examples() {
  Tally t("worked examples");
  t.guard([&] {
    const Slope r1(10, 37);
    const Seq s1 = {4, 4, 4, 3, 4, 4, 3, 4, 4, 3, 4, 4, 4, 3, 4, 4, 3, 4, 4, 3};
    t.expect(s_seq_of_slope(r1) == s1, [] { return std::string("S(10/37)"); });
    t.expect(t_seq(r1) == Seq{3, 2, 2, 3, 2, 2}, [] { return std::string("T(10/37)"); });
    const auto d1 = decompose(r1);
    t.expect(d1.s1 == Seq{4, 4, 4} && d1.s2 == Seq{3, 4, 4, 3, 4, 4, 3},
             [] { return std::string("S1, S2 of 10/37"); });
    t.expect(cf_expand(r1).to_string() == "[3,1,2,3]", [] { return std::string("10/37 = [3,1,2,3]"); });

    const Slope r2(8, 35);
    const Seq s2 = {5, 4, 5, 4, 4, 5, 4, 4, 5, 4, 5, 4, 4, 5, 4, 4};
    t.expect(s_seq_of_slope(r2) == s2, [] { return std::string("S(8/35)"); });
    t.expect(t_seq(r2) == Seq{1, 2, 2, 1, 2, 2}, [] { return std::string("T(8/35)"); });
    const auto d2 = decompose(r2);
    t.expect(d2.s1 == Seq{5, 4, 5} && d2.s2 == Seq{4, 4, 5, 4, 4},
             [] { return std::string("S1, S2 of 8/35"); });
    t.expect(cf_expand(r2).to_string() == "[4,2,1,2]", [] { return std::string("8/35 = [4,2,1,2]"); });

    const Slope r3(4, 7);
    t.expect(to_string(u_hat(r3)) == "bABabA", [] { return std::string("û(4/7)"); });
    t.expect(to_string(u_word(r3)) == "abABabAbaBAbaB", [] { return std::string("u(4/7)"); });
    t.expect(CyclicWord(u_word(r3)) == CyclicWord(parse_word("abABabAbaBAbaB")),
             [] { return std::string("(u(4/7))"); });

    t.expect(cf_expand(Slope(5, 17)).to_string() == "[3,2,2]", [] { return std::string("5/17 = [3,2,2]"); });
  });
  return t.done();
}

CheckResult check_formula_agreement(const VerifyBounds& b) {
  Tally t("formula agreement");
  for (const auto& r : open_unit_slopes(b.formula_p, true)) {
    t.guard([&] {
      const Word riley = u_word(r, RelatorMethod::Riley);
      const Word ceil = u_word(r, RelatorMethod::Ceil);
      const Word scan = u_word(r, RelatorMethod::LatticeScan);
      t.expect(riley == ceil && ceil == scan, [&] { return "relator methods differ at " + r.to_string(); });
      t.expect(riley.size() == static_cast<std::size_t>(2 * r.den()) && is_cyclically_reduced(riley) &&
                   is_cyclically_alternating(riley),
               [&] { return "u(" + r.to_string() + ") is not cyclically alternating of length 2p"; });
      const Seq a = s_seq_of_slope(r, SeqMethod::FloorDifference);
      const Seq c = s_seq_of_slope(r, SeqMethod::CeilCount);
      const Seq d = s_seq_of_slope(r, SeqMethod::StripCount);
      t.expect(a == c && c == d, [&] { return "S-sequence formulas differ at " + r.to_string(); });
      t.expect(a == s_seq_of_word(riley), [&] { return "S(r) != S(u_r) at " + r.to_string(); });
    });
  }
  return t.done();
}

CheckResult check_sequence_theorems(const VerifyBounds& b) {
  Tally t("sequence theorems");
  for (const auto& r : open_unit_slopes(b.sequence_p)) {
    t.guard([&] {
      const Int q = r.num();
      const Int p = r.den();
      const auto cf = cf_expand(r);
      const auto& m = cf.terms();
      const Int m1 = m[0];
      const Seq s = s_seq_of_slope(r);
      const std::string at = r.to_string();
      const auto n = static_cast<std::size_t>(q);

      t.expect(s.size() == 2 * n && std::equal(s.begin(), s.begin() + q, s.begin() + q),
               [&] { return "length or half period fails at " + at; });

      const CyclicSeq cs(s);
      t.expect(cs.reversed() == cs, [&] { return "CS not symmetric at " + at; });
      t.expect(is_palindrome(s_seq_of_word(u_hat(r))), [&] { return "S(û) not palindromic at " + at; });

      if (m.size() >= 2) {
        const Int forbidden = (m[1] == 1) ? m1 : m1 + 1;
        bool terms_ok = s.front() == m1 + 1 && s.back() == m1;
        for (std::size_t i = 0; i < s.size(); ++i) {
          const Int x = s[i];
          const Int y = s[(i + 1) % s.size()];
          terms_ok = terms_ok && (x == m1 || x == m1 + 1) && !(x == forbidden && y == forbidden);
        }
        t.expect(terms_ok, [&] { return "m/m+1 structure fails at " + at; });

        const Slope rd = derived_slope(r);
        const Seq tr = t_seq(r);
        const Seq sd = s_seq_of_slope(rd);
        t.expect(tr == (m[1] == 1 ? sd : reversed(sd)), [&] { return "T(r) vs S(r') fails at " + at; });
        t.expect(CyclicSeq(tr) == cs_seq_of_slope(rd), [&] { return "CT(r) != CS(r') at " + at; });
      }

      const Decomposition d = decompose(r);
      Seq joined;
      for (const Seq* part : {&d.s1, &d.s2, &d.s1, &d.s2}) joined.insert(joined.end(), part->begin(), part->end());
      const bool twice = (d.s1.empty() || count_cyclic_occurrences(s, d.s1) == 2) &&
                         count_cyclic_occurrences(s, d.s2) == 2;
      t.expect(joined == s && is_palindrome(d.s1) && is_palindrome(d.s2) && twice,
               [&] { return "decomposition fails at " + at; });

      const Int c = p - m1 * q;
      if (c >= 1 && q >= 2) {
        const Slope qc(q, c);
        const Seq sqc = s_seq_of_slope(qc);
        t.expect(s == add_constant(sqc, m1), [&] { return "shift by m fails at " + at; });
        t.expect(sqc.front() == 1 && sqc.back() == 0, [&] { return "0/1 ends fail at " + at; });
        if (m.size() >= 2 && m[1] == 1) {
          t.expect(t_seq(qc) == s_seq_of_slope(Slope(q - c, c)),
                   [&] { return "T(q/c) != S((q-c)/c) at " + at; });
        }
        const Seq sx = s_seq_of_slope(Slope(q, q - c));
        bool exchange = sx.size() == sqc.size();
        for (std::size_t i = 0; exchange && i < sx.size(); ++i) {
          exchange = sx[i] + sqc[sx.size() - 1 - i] == 1;
        }
        t.expect(exchange, [&] { return "0/1 exchange fails at " + at; });
      }
    });
  }
  return t.done();
}

CheckResult check_small_cancellation(const VerifyBounds& b) {
  Tally t("small cancellation");
  for (const auto& r : open_unit_slopes(b.cancellation_p)) {
    t.guard([&] {
      const std::string at = r.to_string();
      const PieceReport rep = check_c4_t4(r, b.t4_brute_p);
      t.expect(rep.c4 && rep.min_cyclic_pieces >= 4, [&] { return "C(4) fails at " + at; });
      t.expect(rep.t4, [&] { return "structural T(4) fails at " + at; });
      if (rep.t4_brute) t.expect(*rep.t4_brute, [&] { return "triple search finds a T(4) violation at " + at; });
      t.expect(rep.catalog_matches_closed_form, [&] { return "maximal piece catalog mismatch at " + at; });
      t.expect(initial_letter_spread(r), [&] { return "initial letter spread fails at " + at; });
    });
  }
  return t.done();
}

CheckResult check_decision_oracle(const VerifyBounds& b) {
  Tally t("decision oracle");
  const auto grid = test_grid(-2, 2, b.decision_s_den);
  for (const auto& r : open_unit_slopes(b.decision_r_p)) {
    t.guard([&] {
      const auto [r1, r2] = fundamental_endpoints(r);
      const auto fundamental = [&](const Slope& x) {
        return x.is_infinite() || x == r || (Slope(0, 1) <= x && x <= r1) || (r2 <= x && x <= Slope(1, 1));
      };
      const auto orbit = orbit_bfs(r, {r, Slope::infinity()}, b.decision_s_den, b.bfs_expansion);
      for (const auto& s : grid) {
        const Verdict v = is_null_homotopic(s, r);
        t.expect(v.answer == (orbit.count(s) > 0), [&] { return "orbit membership differs: " + pair_text(s, r); });
        const Slope rep = homotopy_representative(s, r);
        t.expect(fundamental(rep) && homotopy_representative(rep, r) == rep,
                 [&] { return "representative not a fixed fundamental point: " + pair_text(s, r); });
        Slope cur = v.trace.start;
        for (const auto& step : v.trace.steps) cur = apply(step.matrix, cur);
        t.expect(cur == v.trace.result && v.trace.result == v.representative,
                 [&] { return "trace does not compose: " + pair_text(s, r); });
      }

      std::vector<Slope> expected;
      for (const auto& x : orbit) {
        if (x.is_infinite() || (Slope(0, 1) <= x && x <= Slope(1, 1))) expected.push_back(x);
      }
      t.expect(scan(r, b.decision_s_den, ScanMode::NullHomotopy) == expected,
               [&] { return "scan differs from orbit search at r=" + r.to_string(); });

      // Distinct fundamental points lie in distinct orbits, and every orbit
      // point reduces to its own fundamental point.
      auto seeds = slopes_between(Slope(0, 1), Slope(1, 1), b.uniqueness_den);
      seeds.push_back(Slope::infinity());
      for (const auto& f : seeds) {
        if (!fundamental(f)) continue;
        for (const auto& x : orbit_bfs(r, {f}, b.decision_s_den, b.bfs_expansion)) {
          if (fundamental(x)) t.expect(x == f, [&] { return f.to_string() + " and " + x.to_string() + " share an orbit"; });
          if (x.is_infinite() || (Slope::integer(-2) <= x && x <= Slope::integer(2))) {
            t.expect(homotopy_representative(x, r) == f,
                     [&] { return x.to_string() + " does not reduce to " + f.to_string(); });
          }
        }
      }
    });
  }
  return t.done();
}

CheckResult check_criterion_equivalences(const VerifyBounds& b) {
  // The criterion is equivalent to r1 < s < r2 for every r. The cyclic-factor
  // condition joins the equivalence, and follows from null-homotopy, only
  // when r != 1/p: for r = 1/2 both break (s = 1/12 and s = 1/20), so there
  // just the forward implication is checked.
  Tally t("criterion chain");
  const auto grid = slopes_between(Slope(1, b.criterion_s_den), Slope(1, 1), b.criterion_s_den);
  for (const auto& r : open_unit_slopes(b.criterion_r_p)) {
    t.guard([&] {
      const auto [r1, r2] = fundamental_endpoints(r);
      const bool one_term = cf_expand(r).size() == 1;
      for (const auto& s : grid) {
        const bool necessary = satisfies_necessary_condition(s, r);
        const bool connection = connection_criterion(s, r);
        const bool inside = r1 < s && s < r2;
        t.expect(connection == inside, [&] { return "criterion and interval disagree: " + pair_text(s, r); });
        t.expect(!necessary || connection,
                 [&] { return "cyclic factor without the criterion: " + pair_text(s, r); });
        if (!one_term) {
          t.expect(necessary == connection,
                   [&] { return "criterion without the cyclic factor: " + pair_text(s, r); });
        }
        if (!one_term && is_orbit_member(s, r)) {
          t.expect(necessary, [&] { return "null-homotopic without the necessary condition: " + pair_text(s, r); });
        }
      }
    });
  }
  return t.done();
}

CheckResult check_special_cases(const VerifyBounds& b) {
  Tally t("special cases");
  const Slope inf = Slope::infinity();
  const auto grid = test_grid(-2, 2, b.special_den);
  t.guard([&] {
    const auto orbit = orbit_bfs(inf, {inf}, b.special_den, b.bfs_expansion);
    t.expect(orbit == std::set<Slope>{inf}, [] { return std::string("orbit of ∞ under Γ∞ is not {∞}"); });
    for (const auto& s : grid) {
      t.expect(is_null_homotopic(s, inf).answer == s.is_infinite(),
               [&] { return "r = ∞ misclassifies " + s.to_string(); });
    }

    const Slope zero(0, 1), one(1, 1);
    std::array<std::set<Slope>, 3> classes = {
        orbit_bfs(zero, {zero}, b.special_den, b.bfs_expansion),
        orbit_bfs(zero, {one}, b.special_den, b.bfs_expansion),
        orbit_bfs(zero, {inf}, b.special_den, b.bfs_expansion)};
    for (const auto& s : grid) {
      const auto cls = static_cast<std::size_t>(slope_parity_class(s));
      for (std::size_t i = 0; i < classes.size(); ++i) {
        t.expect((classes[i].count(s) > 0) == (i == cls),
                 [&] { return "parity class of " + s.to_string() + " differs from orbit search"; });
      }
      for (Int n : {-1, 0, 1, 2}) {
        const Slope r = Slope::integer(n);
        const auto& own = classes[static_cast<std::size_t>(slope_parity_class(r))];
        const bool expected = own.count(s) > 0 || classes[2].count(s) > 0;
        t.expect(is_null_homotopic(s, r).answer == expected,
                 [&] { return "integer route misclassifies " + pair_text(s, r); });
      }
    }

    t.expect(to_string(u_word(zero)) == "ab", [] { return std::string("u(0/1) != ab"); });
    // In G(K(0)) = ⟨a, b | ab⟩ ≅ Z (b = a⁻¹) the word u_1 becomes a^e.
    Int exponent = 0;
    for (Letter l : u_word(one)) exponent += (l.gen == Generator::A ? 1 : -1) * l.exp;
    t.expect(exponent == 2 || exponent == -2, [] { return std::string("u_1 is not a^±2 in G(K(0))"); });
    t.expect(!is_null_homotopic(one, zero).answer, [] { return std::string("1/1 null-homotopic for r = 0"); });
  });
  return t.done();
}

CheckResult check_automorphism_shift(const VerifyBounds& b) {
  Tally t("automorphism shift");
  for (const auto& s : slopes_between(Slope(0, 1), Slope(2, 1), b.shift_den)) {
    t.guard([&] {
      const Word us = (s <= Slope(1, 1)) ? u_word(s) : u_word_positive(s);
      const Word image = apply_automorphism(us, Letter::a(), Letter::B());
      const Word target = u_word_positive(s + 1);
      t.expect(cyclic_equal(image, target, true), [&] { return "shift fails at s=" + s.to_string(); });
    });
  }
  return t.done();
}

std::vector<CheckResult> run_verification(const VerifyBounds& b) {
  return {check_worked_examples(),        check_formula_agreement(b), check_sequence_theorems(b),
          check_small_cancellation(b),    check_decision_oracle(b),   check_criterion_equivalences(b),
          check_special_cases(b),         check_automorphism_shift(b)};
}

}  // namespace twobridge
