#pragma once

#include <nlohmann/json.hpp>

#include "twobridge/cancellation.hpp"
#include "twobridge/decide.hpp"
#include "twobridge/farey.hpp"

namespace twobridge {

/// {"start": "q/p", "steps": [{"matrix": [a,b,c,d], "image": "q/p"}, ...],
///  "result": "q/p"}
nlohmann::json to_json(const ReductionTrace& t);

/// {"s", "r", "answer", "representative", "route", "trace"}
nlohmann::json to_json(const Verdict& v);

/// Catalog spans become [start, length] pairs under "maximal_pieces":
/// {"1": [...], "2": [...], "3": [...]}.
nlohmann::json to_json(const PieceReport& rep);

/// Inverse of to_json for traces; throws ParseError on malformed input.
ReductionTrace trace_from_json(const nlohmann::json& j);

}  // namespace twobridge
