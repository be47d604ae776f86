#include "twobridge/serialize.hpp"

#include "twobridge/error.hpp"

namespace twobridge {

using nlohmann::json;

json to_json(const ReductionTrace& t) {
  json steps = json::array();
  for (const auto& step : t.steps) {
    steps.push_back({{"matrix", step.matrix.entries()}, {"image", step.image.to_string()}});
  }
  return {{"start", t.start.to_string()}, {"steps", std::move(steps)}, {"result", t.result.to_string()}};
}

json to_json(const Verdict& v) {
  return {{"s", v.s.to_string()},
          {"r", v.r.to_string()},
          {"answer", v.answer},
          {"representative", v.representative.to_string()},
          {"route", std::string(to_string(v.route))},
          {"trace", to_json(v.trace)}};
}

json to_json(const PieceReport& rep) {
  json catalog = json::object();
  for (std::size_t n = 0; n < rep.catalog.size(); ++n) {
    json spans = json::array();
    for (const auto& sp : rep.catalog[n]) spans.push_back({sp.start, sp.length});
    catalog[std::to_string(n + 1)] = std::move(spans);
  }
  json out = {{"relator_slope", rep.relator_slope.to_string()},
              {"c4", rep.c4},
              {"t4", rep.t4},
              {"t4_brute", nullptr},
              {"min_cyclic_pieces", rep.min_cyclic_pieces},
              {"catalog_matches_closed_form", rep.catalog_matches_closed_form},
              {"maximal_pieces", std::move(catalog)}};
  if (rep.t4_brute) out["t4_brute"] = *rep.t4_brute;
  return out;
}

ReductionTrace trace_from_json(const json& j) {
  try {
    ReductionTrace t;
    t.start = Slope::parse(j.at("start").get<std::string>());
    t.result = Slope::parse(j.at("result").get<std::string>());
    for (const auto& step : j.at("steps")) {
      const auto m = step.at("matrix").get<std::array<std::int64_t, 4>>();
      t.steps.push_back({Reflection::from_entries(m[0], m[1], m[2], m[3]),
                         Slope::parse(step.at("image").get<std::string>())});
    }
    return t;
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed trace JSON: ") + e.what());
  } catch (const ParseError&) {
    throw;
  } catch (const DomainError& e) {
    throw ParseError(std::string("malformed trace JSON: ") + e.what());
  }
}

}  // namespace twobridge
