#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <iomanip>
#include <optional>

#include "twobridge/decide.hpp"
#include "twobridge/error.hpp"
#include "twobridge/farey.hpp"
#include "twobridge/sequences.hpp"
#include "twobridge/serialize.hpp"
#include "twobridge/slope.hpp"
#include "twobridge/verify.hpp"
#include "twobridge/words.hpp"

namespace twobridge::cli {

namespace {

using nlohmann::json;

struct Options {
  bool json = false;
  bool trace = false;
  std::int64_t max_den = 20;
  std::string mode = "null";
  std::vector<std::string> slopes;
};

bool in_open_unit(const Slope& r) { return !r.is_infinite() && r.num() > 0 && r.num() < r.den(); }

void print_trace(std::ostream& out, const ReductionTrace& t) {
  out << "trace:\n  start " << t.start.to_string() << '\n';
  for (const auto& step : t.steps) {
    out << "  " << step.matrix.to_string() << " -> " << step.image.to_string() << '\n';
  }
  out << "  result " << t.result.to_string() << '\n';
}

int cmd_word(const Options& o, std::ostream& out) {
  const Slope r = Slope::parse(o.slopes.at(0));
  const Word u = u_word(r);
  std::optional<Word> hat;
  if (!r.is_infinite() && r.num() > 0) hat = u_hat(r);
  if (o.json) {
    json doc = {{"r", r.to_string()}, {"u", to_string(u)}, {"u_hat", nullptr}};
    if (hat) doc["u_hat"] = to_string(*hat);
    out << doc.dump(2) << '\n';
  } else {
    out << "u = " << to_string(u) << '\n';
    if (hat) out << "u_hat = " << to_string(*hat) << '\n';
  }
  return kOk;
}

int cmd_seq(const Options& o, std::ostream& out) {
  const Slope r = Slope::parse(o.slopes.at(0));
  const auto cf = cf_expand(r);
  const Seq s = s_seq_of_slope(r);
  const CyclicSeq cs(s);
  std::optional<Seq> t;
  if (cf.size() >= 2) t = t_seq(r);
  const Decomposition d = decompose_positive(r);
  std::optional<Endpoints> ends;
  if (in_open_unit(r)) ends = fundamental_endpoints(r);

  if (o.json) {
    json doc = {{"r", r.to_string()}, {"cf", cf.terms()}, {"S", s},
                {"CS", cs.representative()}, {"T", nullptr}, {"S1", d.s1},
                {"S2", d.s2}, {"r1", nullptr}, {"r2", nullptr}};
    if (t) doc["T"] = *t;
    if (ends) {
      doc["r1"] = ends->r1.to_string();
      doc["r2"] = ends->r2.to_string();
    }
    out << doc.dump(2) << '\n';
    return kOk;
  }
  out << "cf = " << cf.to_string() << '\n';
  out << "S = " << to_string(s) << '\n';
  out << "CS = " << cs.to_string() << '\n';
  if (t) out << "T = " << to_string(*t) << '\n';
  out << "S1 = " << to_string(d.s1) << '\n';
  out << "S2 = " << to_string(d.s2) << '\n';
  if (ends) {
    out << "r1 = " << ends->r1.to_string() << '\n';
    out << "r2 = " << ends->r2.to_string() << '\n';
  }
  return kOk;
}

int cmd_reduce(const Options& o, std::ostream& out) {
  const Slope s = Slope::parse(o.slopes.at(0));
  const Slope r = Slope::parse(o.slopes.at(1));
  const ReductionTrace t = reduce_to_fundamental(s, r);
  if (o.json) {
    out << to_json(t).dump(2) << '\n';
  } else {
    out << "representative = " << t.result.to_string() << '\n';
    print_trace(out, t);
  }
  return kOk;
}

int cmd_null(const Options& o, std::ostream& out) {
  const Slope s = Slope::parse(o.slopes.at(0));
  const Slope r = Slope::parse(o.slopes.at(1));
  const Verdict v = is_null_homotopic(s, r);
  if (o.json) {
    out << to_json(v).dump(2) << '\n';
    return kOk;
  }
  out << "s = " << s.to_string() << '\n';
  out << "r = " << r.to_string() << '\n';
  out << "answer = " << (v.answer ? "true" : "false") << '\n';
  out << "representative = " << v.representative.to_string() << '\n';
  out << "route = " << to_string(v.route) << '\n';
  if (o.trace) print_trace(out, v.trace);
  return kOk;
}

int cmd_epi(const Options& o, std::ostream& out) {
  const Slope s = Slope::parse(o.slopes.at(0));
  const Slope r = Slope::parse(o.slopes.at(1));
  const bool answer = has_umpp_epimorphism(s, r);
  if (o.json) {
    out << json{{"s", s.to_string()}, {"r", r.to_string()}, {"answer", answer}}.dump(2) << '\n';
  } else {
    out << "s = " << s.to_string() << '\n';
    out << "r = " << r.to_string() << '\n';
    out << "answer = " << (answer ? "true" : "false") << '\n';
  }
  return kOk;
}

int cmd_scan(const Options& o, std::ostream& out) {
  const Slope r = Slope::parse(o.slopes.at(0));
  const ScanMode mode = (o.mode == "epi") ? ScanMode::Epimorphism : ScanMode::NullHomotopy;
  const auto hits = scan(r, o.max_den, mode);
  if (o.json) {
    json list = json::array();
    for (const auto& s : hits) list.push_back(s.to_string());
    out << json{{"r", r.to_string()}, {"max_den", o.max_den}, {"mode", std::string(to_string(mode))},
                {"slopes", std::move(list)}}
               .dump(2)
        << '\n';
  } else {
    for (const auto& s : hits) out << s.to_string() << '\n';
  }
  return kOk;
}

int cmd_equiv(const Options& o, std::ostream& out) {
  const Slope r = Slope::parse(o.slopes.at(0));
  const Slope r2 = Slope::parse(o.slopes.at(1));
  const bool answer = schubert_equivalent(r, r2);
  if (o.json) {
    out << json{{"r", r.to_string()}, {"r2", r2.to_string()}, {"equivalent", answer}}.dump(2) << '\n';
  } else {
    out << "equivalent = " << (answer ? "true" : "false") << '\n';
  }
  return kOk;
}

int cmd_verify(const Options& o, std::ostream& out) {
  if (o.max_den < 2) throw DomainError("verify needs --max-den >= 2");
  const auto results = run_verification(VerifyBounds::uniform(o.max_den));
  const bool all = std::all_of(results.begin(), results.end(), [](const auto& r) { return r.passed; });
  if (o.json) {
    json suites = json::array();
    for (const auto& r : results) {
      suites.push_back({{"name", r.name}, {"passed", r.passed}, {"cases", r.cases}, {"detail", r.detail}});
    }
    out << json{{"max_den", o.max_den}, {"passed", all}, {"suites", std::move(suites)}}.dump(2) << '\n';
  } else {
    out << std::left << std::setw(26) << "suite" << std::right << std::setw(10) << "cases" << "  result\n";
    for (const auto& r : results) {
      out << std::left << std::setw(26) << r.name << std::right << std::setw(10) << r.cases << "  "
          << (r.passed ? "PASS" : "FAIL");
      if (!r.passed) out << "  " << r.detail;
      out << '\n';
    }
  }
  return all ? kOk : kVerifyFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Null-homotopy and epimorphism decisions for 2-bridge links", "twobridge-cli"};
  app.require_subcommand(1);
  app.add_flag("--json", o.json, "Print JSON instead of text");
  app.add_flag("--trace", o.trace, "Include the reduction trace (null)");
  app.fallthrough();

  const auto slope_args = [&o](CLI::App* sub, const std::string& names, std::size_t count) {
    sub->add_option("slopes", o.slopes, names)->required()->expected(static_cast<int>(count));
  };
  auto* word = app.add_subcommand("word", "Relator u_r and û_r");
  slope_args(word, "r", 1);
  auto* seq = app.add_subcommand("seq", "S, CS, T, S1, S2, r1, r2 of a slope");
  slope_args(seq, "r", 1);
  auto* reduce = app.add_subcommand("reduce", "Fundamental-domain representative of s for r");
  slope_args(reduce, "s r", 2);
  auto* null = app.add_subcommand("null", "Is α_s null-homotopic in S³ - K(r)?");
  slope_args(null, "s r", 2);
  auto* epi = app.add_subcommand("epi", "Upper-meridian-pair-preserving epimorphism G(K(s)) -> G(K(r))?");
  slope_args(epi, "s r", 2);
  auto* scan_cmd = app.add_subcommand("scan", "All s in [0,1] (and ∞) up to a denominator bound");
  slope_args(scan_cmd, "r", 1);
  scan_cmd->add_option("--max-den", o.max_den, "Largest denominator")->check(CLI::PositiveNumber);
  scan_cmd->add_option("--mode", o.mode, "null or epi")->check(CLI::IsMember({"null", "epi"}));
  auto* equiv = app.add_subcommand("equiv", "Schubert equivalence of two 2-bridge links");
  slope_args(equiv, "r r2", 2);
  auto* verify = app.add_subcommand("verify", "Run the invariant suites up to a bound");
  verify->add_option("--max-den", o.max_den, "Bound used by every suite")->check(CLI::PositiveNumber);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kOk;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kBadInput;
  }

  try {
    if (*word) return cmd_word(o, out);
    if (*seq) return cmd_seq(o, out);
    if (*reduce) return cmd_reduce(o, out);
    if (*null) return cmd_null(o, out);
    if (*epi) return cmd_epi(o, out);
    if (*scan_cmd) return cmd_scan(o, out);
    if (*equiv) return cmd_equiv(o, out);
    if (*verify) return cmd_verify(o, out);
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kBadInput;
  } catch (const Error& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternal;
  }
  return kBadInput;
}

}  // namespace twobridge::cli
