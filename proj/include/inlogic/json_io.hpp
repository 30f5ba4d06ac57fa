#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "inlogic/inls.hpp"
#include "inlogic/interval.hpp"
#include "inlogic/pred.hpp"
#include "inlogic/prop.hpp"
#include "inlogic/sets.hpp"

namespace inlogic::io {

using json = nlohmann::json;

json load_json_file(const std::string& path);

// Core values. Intervals serialize as [lo, hi]; triples as
// {"t": [lo,hi], "i": [lo,hi], "f": [lo,hi]}.
json to_json(const Interval& a);
UnitInterval unit_interval_from_json(const json& j, const std::string& what);
json to_json(const NeutroTriple& v);
NeutroTriple triple_from_json(const json& j, const std::string& what = "triple");

// Sets: {"name": ..., "universe": ["x1", ...], "values": {"x1": triple}}.
json to_json(const InsSet& a);
InsSet set_from_json(const json& j);

// Relations: {"from": [...], "to": [...], "values": {"x1": {"y1": triple}}}.
json to_json(const InsRelation& r);
InsRelation relation_from_json(const json& j);

// Propositional interpretation: {"p": triple, ...}.
json to_json(const prop::Interpretation& m);
prop::Interpretation prop_interpretation_from_json(const json& j);

// First-order interpretation:
// {"domain": ["1","2"], "preds": {"p/1": {"(1)": triple}},
//  "consts": {"a": "1"}, "funcs": {"f/1": {"(1)": "2"}}}.
json to_json(const pred::Interpretation& m);
pred::Interpretation pred_interpretation_from_json(const json& j);

// Check reports.
json report_to_json(const prop::CheckReport& rep, const std::string& check_kind);
json report_to_json(const pred::FoCheckReport& rep, const std::string& check_kind);
json report_to_json(const pred::SatReport& rep);
std::string report_to_text(const prop::CheckReport& rep);
std::string report_to_text(const pred::FoCheckReport& rep);
std::string report_to_text(const pred::SatReport& rep);

/// System config; `grid_override` replaces n_points on every universe
/// (rejected when any membership function is given as explicit arrays).
inls::System system_from_json(const json& j, std::optional<std::size_t> grid_override = {});

/// Set-valued input channel: {"t": mfspec, "i": mfspec, "f": mfspec},
/// sampled on the channel's grid. mfspec is one of
/// {"trapezoid": [a,b,c,d], "height": [lo,hi]}, {"constant": [lo,hi]},
/// or {"points": {"lo": [...], "hi": [...]}}.
inls::SampledIns input_set_from_json(const json& j, const inls::UniverseGrid& grid);

std::string trace_to_csv(const inls::Trace& trace);

} // namespace inlogic::io
