// One line per acceptance criterion; exit status is nonzero if any fails.
// Usage: acceptance <path to twobridge-cli>

#include <array>
#include <cstdio>
#include <iostream>
#include <numeric>
#include <string>
#include <sys/wait.h>

#include "twobridge/cancellation.hpp"
#include "twobridge/decide.hpp"
#include "twobridge/farey.hpp"
#include "twobridge/verify.hpp"

using namespace twobridge;

namespace {

struct Line {
  int id;
  std::string name;
  bool passed;
  std::string detail;
};

Line from_check(int id, const CheckResult& r) {
  return {id, r.name, r.passed, std::to_string(r.cases) + " cases" + (r.passed ? "" : "; " + r.detail)};
}

// Criterion 6 taken literally: the three conditions are pairwise equivalent
// and null-homotopy implies the cyclic-factor condition.
Line criterion_six(const VerifyBounds& b) {
  std::uint64_t cases = 0, converse_fail = 0, sound_fail = 0, interval_fail = 0;
  std::string first_converse, first_sound;
  const auto grid = slopes_between(Slope(1, b.criterion_s_den), Slope(1, 1), b.criterion_s_den);
  for (std::int64_t p = 2; p <= b.criterion_r_p; ++p) {
    for (std::int64_t q = 1; q < p; ++q) {
      if (std::gcd(q, p) != 1) continue;
      const Slope r(q, p);
      const auto [r1, r2] = fundamental_endpoints(r);
      for (const auto& s : grid) {
        ++cases;
        const bool nec = satisfies_necessary_condition(s, r);
        const bool conn = connection_criterion(s, r);
        const bool inside = r1 < s && s < r2;
        if (conn != inside) ++interval_fail;
        if (nec != conn) {
          if (converse_fail++ == 0) first_converse = s.to_string() + " for r=" + r.to_string();
        }
        if (is_null_homotopic(s, r).answer && !nec) {
          if (sound_fail++ == 0) first_sound = s.to_string() + " for r=" + r.to_string();
        }
      }
    }
  }
  std::string detail = std::to_string(cases) + " cases";
  if (interval_fail) detail += "; criterion vs interval mismatches " + std::to_string(interval_fail);
  if (converse_fail) {
    detail += "; condition differs from criterion " + std::to_string(converse_fail) + " times (first s=" +
              first_converse + ")";
  }
  if (sound_fail) {
    detail += "; null-homotopic without the condition " + std::to_string(sound_fail) + " times (first s=" +
              first_sound + ")";
  }
  return {6, "criterion equivalences", interval_fail == 0 && converse_fail == 0 && sound_fail == 0, detail};
}

struct RunOutput {
  int status = -1;
  std::string text;
};

RunOutput run_command(const std::string& cmd) {
  RunOutput r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.text.append(buf.data(), n);
  const int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

Line criterion_nine(const std::string& cli) {
  const std::string cmd = "'" + cli + "' verify --max-den 20";
  const RunOutput a = run_command(cmd);
  const RunOutput b = run_command(cmd);
  const bool same = a.text == b.text && a.status == b.status;
  std::string detail = "exit " + std::to_string(a.status) + ", " + std::to_string(a.text.size()) + " bytes";
  if (!same) detail += "; second run differs";
  return {9, "cli determinism", a.status == 0 && same && !a.text.empty(), detail};
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: acceptance <twobridge-cli>\n";
    return 2;
  }
  const VerifyBounds b = VerifyBounds::acceptance();
  std::vector<Line> lines;
  lines.push_back(from_check(1, check_worked_examples()));
  lines.push_back(from_check(2, check_formula_agreement(b)));
  lines.push_back(from_check(3, check_sequence_theorems(b)));
  lines.push_back(from_check(4, check_small_cancellation(b)));
  lines.push_back(from_check(5, check_decision_oracle(b)));
  lines.push_back(criterion_six(b));
  lines.push_back(from_check(7, check_special_cases(b)));
  lines.push_back(from_check(8, check_automorphism_shift(b)));
  lines.push_back(criterion_nine(argv[1]));

  bool all = true;
  for (const auto& l : lines) {
    std::cout << (l.passed ? "PASS" : "FAIL") << "  " << l.id << "  " << l.name << "  (" << l.detail << ")\n";
    all = all && l.passed;
  }
  return all ? 0 : 1;
}
