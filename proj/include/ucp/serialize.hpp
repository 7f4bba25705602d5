#pragma once

#include <string>

#include "json.hpp"
#include "ucp/decision.hpp"
#include "ucp/heuristics.hpp"
#include "ucp/reductions.hpp"
#include "ucp/solver.hpp"

// JSON forms for instances and results. Rationals always travel as strings
// ("num/den" or a bare integer) so values never pass through floating point,
// and parse(emit(x)) gives back exactly x.

namespace ucp {

using Json = nlohmann::json;

// Decision instances: {"schema":1, "payload":{...}, "utility":{...},
// "k": int or "any", "threshold": "num/den"}.
Json instance_to_json(const UcpDecisionInstance& inst);
UcpDecisionInstance instance_from_json(const Json& j);

// Source payloads fed to the reducers.
Json ufl_to_json(const UflInstance& u);
UflInstance ufl_from_json(const Json& j);
Json l0_to_json(const L0Instance& l);
L0Instance l0_from_json(const Json& j);
Json points_to_json(const EuclideanInstance& e);
EuclideanInstance points_from_json(const Json& j);
Json metric_to_json(const MetricInstance& m);
MetricInstance metric_from_json(const Json& j);

// Results.
Json solve_result_to_json(const SolveResult& r);
Json decision_to_json(const Decision& d, const Rational& threshold);
Json heuristic_run_to_json(const HeuristicRun& run);
Json mean_shift_to_json(const MeanShiftResult& ms);

// File plumbing. Readers throw ParseError on malformed input; the writer
// emits 2-space-indented JSON with a trailing newline.
Json read_json_file(const std::string& path);
void write_json_file(const std::string& path, const Json& j);
std::string pretty(const Json& j);

}  // namespace ucp
