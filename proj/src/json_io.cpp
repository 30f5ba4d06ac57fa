#include "inlogic/json_io.hpp"

#include <fstream>
#include <sstream>

#include "inlogic/errors.hpp"

namespace inlogic::io {

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open '" + path + "'");
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw ConfigError("invalid JSON in '" + path + "': " + e.what());
    }
    return j;
}

json to_json(const Interval& a) { return json::array({a.lo(), a.hi()}); }

UnitInterval unit_interval_from_json(const json& j, const std::string& what) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
        throw ConfigError(what + ": expected [lo, hi]");
    double lo = j[0].get<double>(), hi = j[1].get<double>();
    try {
        return UnitInterval(lo, hi);
    } catch (const std::invalid_argument& e) {
        throw ConfigError(what + ": " + e.what());
    }
}

json to_json(const NeutroTriple& v) {
    return json{{"t", to_json(v.t)}, {"i", to_json(v.i)}, {"f", to_json(v.f)}};
}

NeutroTriple triple_from_json(const json& j, const std::string& what) {
    if (!j.is_object() || !j.contains("t") || !j.contains("i") || !j.contains("f"))
        throw ConfigError(what + ": expected {\"t\": [..], \"i\": [..], \"f\": [..]}");
    return NeutroTriple(unit_interval_from_json(j["t"], what + ".t"),
                        unit_interval_from_json(j["i"], what + ".i"),
                        unit_interval_from_json(j["f"], what + ".f"));
}

json to_json(const InsSet& a) {
    json values = json::object();
    for (std::size_t k = 0; k < a.universe().size(); ++k)
        values[a.universe().points()[k]] = to_json(a.values()[k]);
    return json{{"name", a.universe().name()},
                {"universe", a.universe().points()},
                {"values", values}};
}

namespace {

std::vector<std::string> string_list(const json& j, const std::string& what) {
    if (!j.is_array()) throw ConfigError(what + ": expected an array of point labels");
    std::vector<std::string> out;
    for (const auto& p : j) {
        if (!p.is_string()) throw ConfigError(what + ": point labels must be strings");
        out.push_back(p.get<std::string>());
    }
    return out;
}

Universe universe_from_json(const json& j, const char* points_field, const char* name_field,
                            const char* fallback_name) {
    if (!j.contains(points_field))
        throw ConfigError(std::string("missing '") + points_field + "'");
    std::string name = j.value(name_field, fallback_name);
    try {
        return Universe(name, string_list(j[points_field], points_field));
    } catch (const std::invalid_argument& e) {
        throw ConfigError(e.what());
    }
}

} // namespace

InsSet set_from_json(const json& j) {
    Universe u = universe_from_json(j, "universe", "name", "X");
    if (!j.contains("values") || !j["values"].is_object())
        throw ConfigError("set needs a 'values' object");
    const json& values = j["values"];
    std::vector<NeutroTriple> triples;
    triples.reserve(u.size());
    for (const auto& point : u.points()) {
        if (!values.contains(point)) throw ConfigError("set is missing point '" + point + "'");
        triples.push_back(triple_from_json(values[point], "values." + point));
    }
    if (values.size() != u.size()) throw ConfigError("set has values for unknown points");
    return InsSet(std::move(u), std::move(triples));
}

json to_json(const InsRelation& r) {
    json values = json::object();
    for (std::size_t x = 0; x < r.from().size(); ++x) {
        json row = json::object();
        for (std::size_t y = 0; y < r.to().size(); ++y)
            row[r.to().points()[y]] = to_json(r.at(x, y));
        values[r.from().points()[x]] = row;
    }
    return json{{"from_name", r.from().name()}, {"from", r.from().points()},
                {"to_name", r.to().name()},     {"to", r.to().points()},
                {"values", values}};
}

InsRelation relation_from_json(const json& j) {
    Universe from = universe_from_json(j, "from", "from_name", "X");
    Universe to = universe_from_json(j, "to", "to_name", "Y");
    if (!j.contains("values") || !j["values"].is_object())
        throw ConfigError("relation needs a 'values' object");
    const json& values = j["values"];
    std::vector<NeutroTriple> triples;
    triples.reserve(from.size() * to.size());
    for (const auto& x : from.points()) {
        if (!values.contains(x)) throw ConfigError("relation is missing row '" + x + "'");
        const json& row = values[x];
        for (const auto& y : to.points()) {
            if (!row.contains(y))
                throw ConfigError("relation is missing value at ('" + x + "', '" + y + "')");
            triples.push_back(triple_from_json(row[y], "values." + x + "." + y));
        }
    }
    return InsRelation(std::move(from), std::move(to), std::move(triples));
}

json to_json(const prop::Interpretation& m) {
    json out = json::object();
    for (const auto& [name, v] : m) out[name] = to_json(v);
    return out;
}

prop::Interpretation prop_interpretation_from_json(const json& j) {
    if (!j.is_object()) throw ConfigError("interpretation: expected {\"var\": triple, ...}");
    prop::Interpretation m;
    for (const auto& [name, value] : j.items()) m[name] = triple_from_json(value, name);
    return m;
}

// ---------------------------------------------------------------------------
// First-order interpretations

namespace {

std::string tuple_key(const pred::Interpretation& m, std::size_t flat, std::size_t arity) {
    // Decode the mixed-radix flat index back into element labels.
    std::vector<std::size_t> elems(arity, 0);
    for (std::size_t k = arity; k-- > 0;) {
        elems[k] = flat % m.domain.size();
        flat /= m.domain.size();
    }
    std::string out = "(";
    for (std::size_t k = 0; k < arity; ++k) {
        if (k) out += ',';
        out += m.domain[elems[k]];
    }
    return out + ")";
}

std::vector<std::string> split_tuple_key(const std::string& key) {
    if (key.size() < 2 || key.front() != '(' || key.back() != ')')
        throw ConfigError("bad tuple key '" + key + "': expected \"(e1,...,en)\"");
    std::string body = key.substr(1, key.size() - 2);
    std::vector<std::string> out;
    if (body.empty()) return out;
    std::stringstream ss(body);
    std::string part;
    while (std::getline(ss, part, ',')) out.push_back(part);
    return out;
}

std::size_t parse_arity(const std::string& key) {
    auto slash = key.rfind('/');
    if (slash == std::string::npos)
        throw ConfigError("symbol key '" + key + "' must look like \"name/arity\"");
    try {
        return static_cast<std::size_t>(std::stoul(key.substr(slash + 1)));
    } catch (const std::exception&) {
        throw ConfigError("symbol key '" + key + "' has a bad arity");
    }
}

std::size_t element_index(const pred::Interpretation& m, const std::string& label,
                          const std::string& what) {
    for (std::size_t k = 0; k < m.domain.size(); ++k)
        if (m.domain[k] == label) return k;
    throw ConfigError(what + ": '" + label + "' is not a domain element");
}

std::size_t flat_index(const pred::Interpretation& m, const std::string& key,
                       std::size_t arity, const std::string& what) {
    auto labels = split_tuple_key(key);
    if (labels.size() != arity)
        throw ConfigError(what + ": key '" + key + "' does not match arity " +
                          std::to_string(arity));
    std::vector<std::size_t> elems;
    elems.reserve(labels.size());
    for (const auto& label : labels) elems.push_back(element_index(m, label, what));
    return m.table_index(elems);
}

std::size_t pow_size(std::size_t base, std::size_t exp) {
    std::size_t out = 1;
    for (std::size_t k = 0; k < exp; ++k) out *= base;
    return out;
}

} // namespace

json to_json(const pred::Interpretation& m) {
    json preds = json::object();
    for (const auto& [key, table] : m.predicates) {
        std::size_t arity = parse_arity(key);
        json entries = json::object();
        for (std::size_t flat = 0; flat < table.size(); ++flat)
            entries[tuple_key(m, flat, arity)] = to_json(table[flat]);
        preds[key] = entries;
    }
    json consts = json::object();
    for (const auto& [name, idx] : m.constants) consts[name] = m.domain[idx];
    json funcs = json::object();
    for (const auto& [key, table] : m.functions) {
        std::size_t arity = parse_arity(key);
        json entries = json::object();
        for (std::size_t flat = 0; flat < table.size(); ++flat)
            entries[tuple_key(m, flat, arity)] = m.domain[table[flat]];
        funcs[key] = entries;
    }
    json out{{"domain", m.domain}, {"preds", preds}};
    if (!consts.empty()) out["consts"] = consts;
    if (!funcs.empty()) out["funcs"] = funcs;
    return out;
}

pred::Interpretation pred_interpretation_from_json(const json& j) {
    pred::Interpretation m;
    if (!j.contains("domain")) throw ConfigError("interpretation needs a 'domain'");
    m.domain = string_list(j["domain"], "domain");
    if (m.domain.empty()) throw ConfigError("domain must be non-empty");

    if (j.contains("consts"))
        for (const auto& [name, label] : j["consts"].items())
            m.constants[name] = element_index(m, label.get<std::string>(), "consts." + name);

    if (j.contains("funcs"))
        for (const auto& [key, entries] : j["funcs"].items()) {
            std::size_t arity = parse_arity(key);
            std::vector<std::size_t> table(pow_size(m.domain.size(), arity), 0);
            std::vector<bool> seen(table.size(), false);
            for (const auto& [tuple, label] : entries.items()) {
                std::size_t flat = flat_index(m, tuple, arity, "funcs." + key);
                table[flat] = element_index(m, label.get<std::string>(), "funcs." + key);
                seen[flat] = true;
            }
            for (bool s : seen)
                if (!s) throw ConfigError("funcs." + key + " is not total");
            m.functions[key] = std::move(table);
        }

    if (j.contains("preds"))
        for (const auto& [key, entries] : j["preds"].items()) {
            std::size_t arity = parse_arity(key);
            std::vector<NeutroTriple> table(pow_size(m.domain.size(), arity));
            std::vector<bool> seen(table.size(), false);
            for (const auto& [tuple, value] : entries.items()) {
                std::size_t flat = flat_index(m, tuple, arity, "preds." + key);
                table[flat] = triple_from_json(value, "preds." + key + tuple);
                seen[flat] = true;
            }
            for (bool s : seen)
                if (!s) throw ConfigError("preds." + key + " is not total");
            m.predicates[key] = std::move(table);
        }
    return m;
}

// ---------------------------------------------------------------------------
// Reports

namespace {

const char* verdict_name(prop::Verdict v) {
    return v == prop::Verdict::holds_in_all_samples ? "holds-in-all-samples"
                                                    : "counterexample-found";
}
const char* verdict_name(pred::Verdict v) {
    return v == pred::Verdict::holds_in_all_samples ? "holds-in-all-samples"
                                                    : "counterexample-found";
}
const char* mode_name(SampleMode m) { return m == SampleMode::scalar ? "scalar" : "interval"; }

} // namespace

json report_to_json(const prop::CheckReport& rep, const std::string& check_kind) {
    json out{{"check", check_kind},
             {"verdict", verdict_name(rep.verdict)},
             {"samples_tried", rep.samples_tried},
             {"seed", rep.seed},
             {"mode", mode_name(rep.mode)},
             {"eps", rep.eps},
             {"counterexample", nullptr}};
    if (rep.counterexample) {
        const auto& cx = *rep.counterexample;
        json c{{"sample_index", cx.sample_index},
               {"interpretation", to_json(cx.interpretation)},
               {"value", to_json(cx.value)}};
        if (cx.rhs_value) c["rhs_value"] = to_json(*cx.rhs_value);
        out["counterexample"] = c;
    }
    return out;
}

json report_to_json(const pred::FoCheckReport& rep, const std::string& check_kind) {
    json out{{"check", check_kind},
             {"verdict", verdict_name(rep.verdict)},
             {"samples_tried", rep.samples_tried},
             {"seed", rep.seed},
             {"mode", mode_name(rep.mode)},
             {"eps", rep.eps},
             {"counterexample", nullptr}};
    if (rep.counterexample) {
        const auto& cx = *rep.counterexample;
        out["counterexample"] = json{{"sample_index", cx.sample_index},
                                     {"interpretation", to_json(cx.interpretation)},
                                     {"value", to_json(cx.value)}};
    }
    return out;
}

json report_to_json(const pred::SatReport& rep) {
    json out{{"check", "sat"},
             {"verdict", rep.witness_found ? "witness-found" : "no-witness-found"},
             {"samples_tried", rep.samples_tried},
             {"seed", rep.seed},
             {"mode", mode_name(rep.mode)},
             {"eps", rep.eps},
             {"witness", nullptr}};
    if (rep.witness) {
        const auto& w = *rep.witness;
        out["witness"] = json{{"sample_index", w.sample_index},
                              {"interpretation", to_json(w.interpretation)},
                              {"value", to_json(w.value)}};
    }
    return out;
}

std::string report_to_text(const prop::CheckReport& rep) {
    std::string out = std::string("verdict: ") + verdict_name(rep.verdict) + "\n";
    out += "samples tried: " + std::to_string(rep.samples_tried) + "\n";
    out += "seed: " + std::to_string(rep.seed) + "\n";
    if (rep.counterexample) {
        const auto& cx = *rep.counterexample;
        out += "counterexample (sample " + std::to_string(cx.sample_index) + "):\n";
        for (const auto& [name, v] : cx.interpretation)
            out += "  " + name + ": " + to_string(v) + "\n";
        out += "  value: " + to_string(cx.value) + "\n";
        if (cx.rhs_value) out += "  rhs value: " + to_string(*cx.rhs_value) + "\n";
    }
    return out;
}

std::string report_to_text(const pred::FoCheckReport& rep) {
    std::string out = std::string("verdict: ") + verdict_name(rep.verdict) + "\n";
    out += "samples tried: " + std::to_string(rep.samples_tried) + "\n";
    out += "seed: " + std::to_string(rep.seed) + "\n";
    if (rep.counterexample) {
        const auto& cx = *rep.counterexample;
        out += "counterexample (sample " + std::to_string(cx.sample_index) + ", domain size " +
               std::to_string(cx.interpretation.domain.size()) + "):\n";
        out += to_json(cx.interpretation).dump(2) + "\n";
        out += "value: " + to_string(cx.value) + "\n";
    }
    return out;
}

std::string report_to_text(const pred::SatReport& rep) {
    std::string out =
        std::string("verdict: ") + (rep.witness_found ? "witness-found" : "no-witness-found") +
        "\n";
    out += "samples tried: " + std::to_string(rep.samples_tried) + "\n";
    out += "seed: " + std::to_string(rep.seed) + "\n";
    if (rep.witness) {
        const auto& w = *rep.witness;
        out += "witness (sample " + std::to_string(w.sample_index) + "):\n";
        out += to_json(w.interpretation).dump(2) + "\n";
        out += "value: " + to_string(w.value) + "\n";
    }
    return out;
}

// ---------------------------------------------------------------------------
// INLS configuration

namespace {

inls::UniverseGrid grid_from_json(const json& j, std::optional<std::size_t> override_n) {
    if (!j.is_object() || !j.contains("name") || !j.contains("lo") || !j.contains("hi"))
        throw ConfigError("universe needs {\"name\", \"lo\", \"hi\", \"n_points\"}");
    std::size_t n = override_n ? *override_n : j.value("n_points", std::size_t{201});
    return inls::UniverseGrid(j["name"].get<std::string>(), j["lo"].get<double>(),
                              j["hi"].get<double>(), n);
}

std::vector<Interval> component_from_json(const json& j, const inls::UniverseGrid& grid,
                                          bool grid_overridden, const std::string& what) {
    if (!j.is_object()) throw ConfigError(what + ": expected a membership-function object");
    if (j.contains("trapezoid")) {
        const json& knots = j["trapezoid"];
        if (!knots.is_array() || knots.size() != 4)
            throw ConfigError(what + ".trapezoid: expected [a, b, c, d]");
        UnitInterval height = j.contains("height")
                                  ? unit_interval_from_json(j["height"], what + ".height")
                                  : UnitInterval::one();
        try {
            return inls::sample_trapezoid(grid, knots[0].get<double>(), knots[1].get<double>(),
                                          knots[2].get<double>(), knots[3].get<double>(), height);
        } catch (const ConfigError& e) {
            throw ConfigError(what + ": " + e.what());
        }
    }
    if (j.contains("constant"))
        return inls::sample_constant(grid,
                                     unit_interval_from_json(j["constant"], what + ".constant"));
    if (j.contains("points")) {
        if (grid_overridden)
            throw ConfigError(what + ": explicit point arrays cannot be grid-resampled");
        const json& pts = j["points"];
        if (!pts.is_object() || !pts.contains("lo") || !pts.contains("hi"))
            throw ConfigError(what + ".points: expected {\"lo\": [...], \"hi\": [...]}");
        const json& los = pts["lo"];
        const json& his = pts["hi"];
        if (!los.is_array() || !his.is_array() || los.size() != grid.n_points ||
            his.size() != grid.n_points)
            throw ConfigError(what + ".points: arrays must have " +
                              std::to_string(grid.n_points) + " entries");
        std::vector<Interval> out;
        out.reserve(grid.n_points);
        for (std::size_t k = 0; k < grid.n_points; ++k) {
            double lo = los[k].get<double>(), hi = his[k].get<double>();
            if (lo < 0.0 || lo > hi || hi > 1.0)
                throw ConfigError(what + ".points: entry " + std::to_string(k) +
                                  " is not a unit interval");
            out.emplace_back(lo, hi);
        }
        return out;
    }
    throw ConfigError(what + ": expected one of 'trapezoid', 'constant', 'points'");
}

inls::SampledIns sampled_set_from_json(const json& j, const inls::UniverseGrid& grid,
                                       bool grid_overridden, const std::string& what) {
    if (!j.is_object() || !j.contains("t"))
        throw ConfigError(what + ": expected {\"t\": mf, \"i\": mf, \"f\": mf}");
    std::vector<Interval> t = component_from_json(j["t"], grid, grid_overridden, what + ".t");
    std::vector<Interval> i = j.contains("i")
                                  ? component_from_json(j["i"], grid, grid_overridden, what + ".i")
                                  : inls::sample_constant(grid, UnitInterval::zero());
    std::vector<Interval> f = j.contains("f")
                                  ? component_from_json(j["f"], grid, grid_overridden, what + ".f")
                                  : inls::sample_constant(grid, UnitInterval::zero());
    return inls::SampledIns(grid, std::move(t), std::move(i), std::move(f));
}

} // namespace

inls::System system_from_json(const json& j, std::optional<std::size_t> grid_override) {
    inls::System sys;
    if (!j.contains("inputs") || !j["inputs"].is_array() || j["inputs"].empty())
        throw ConfigError("system needs a non-empty 'inputs' array");
    for (const auto& g : j["inputs"]) sys.input_grids.push_back(grid_from_json(g, grid_override));
    if (!j.contains("output")) throw ConfigError("system needs an 'output' universe");
    sys.output_grid = grid_from_json(j["output"], grid_override);

    if (j.contains("weights")) {
        const json& w = j["weights"];
        if (!w.is_object() || !w.contains("a") || !w.contains("b") || !w.contains("c") ||
            !w.contains("d"))
            throw ConfigError("weights: expected {\"a\", \"b\", \"c\", \"d\"}");
        sys.weights = inls::SynthesisWeights(w["a"].get<double>(), w["b"].get<double>(),
                                             w["c"].get<double>(), w["d"].get<double>());
    }

    if (!j.contains("rules") || !j["rules"].is_array() || j["rules"].empty())
        throw ConfigError("system needs a non-empty 'rules' array");
    for (std::size_t k = 0; k < j["rules"].size(); ++k) {
        const json& rj = j["rules"][k];
        std::string where = "rules[" + std::to_string(k) + "]";
        if (!rj.is_object() || !rj.contains("if") || !rj.contains("then"))
            throw ConfigError(where + ": expected {\"if\": [...], \"then\": {...}}");
        const json& ants = rj["if"];
        if (!ants.is_array() || ants.size() != sys.input_grids.size())
            throw ConfigError(where + ".if: expected one antecedent per input universe");
        inls::Rule rule;
        for (std::size_t c = 0; c < ants.size(); ++c)
            rule.antecedents.push_back(
                sampled_set_from_json(ants[c], sys.input_grids[c], grid_override.has_value(),
                                      where + ".if[" + std::to_string(c) + "]"));
        rule.consequent = sampled_set_from_json(rj["then"], sys.output_grid,
                                                grid_override.has_value(), where + ".then");
        sys.rules.push_back(std::move(rule));
    }

    if (j.contains("fired_rules")) {
        for (const auto& idx : j["fired_rules"]) {
            if (!idx.is_number_unsigned()) throw ConfigError("fired_rules: expected rule indices");
            sys.fired_rule_indices.push_back(idx.get<std::size_t>());
        }
        if (sys.fired_rule_indices.empty())
            throw ConfigError("fired_rules must not be an empty list");
    }

    sys.validate();
    return sys;
}

inls::SampledIns input_set_from_json(const json& j, const inls::UniverseGrid& grid) {
    return sampled_set_from_json(j, grid, false, "input set");
}

std::string trace_to_csv(const inls::Trace& trace) {
    std::string out = "# crisp output: " + format_real(trace.crisp) + "\n";
    for (std::size_t r = 0; r < trace.fired_rules.size(); ++r)
        out += "# rule " + std::to_string(trace.fired_rules[r]) + " firing: " +
               to_string(trace.firing_strengths[r]) + "\n";

    out += "y";
    for (std::size_t r = 0; r < trace.fired_rules.size(); ++r) {
        std::string p = "rule" + std::to_string(trace.fired_rules[r]);
        for (const char* c : {"_t_lo", "_t_hi", "_i_lo", "_i_hi", "_f_lo", "_f_hi"}) out += "," + p + c;
    }
    for (const char* c : {"agg_t_lo", "agg_t_hi", "agg_i_lo", "agg_i_hi", "agg_f_lo", "agg_f_hi",
                          "t_reduced", "i_reduced", "f_reduced", "synthesized"})
        out += std::string(",") + c;
    out += "\n";

    const auto& grid = trace.aggregated.grid;
    auto append_triple = [&out](const inls::SampledIns& s, std::size_t k) {
        out += "," + format_real(s.t[k].lo()) + "," + format_real(s.t[k].hi());
        out += "," + format_real(s.i[k].lo()) + "," + format_real(s.i[k].hi());
        out += "," + format_real(s.f[k].lo()) + "," + format_real(s.f[k].hi());
    };
    for (std::size_t k = 0; k < grid.n_points; ++k) {
        out += format_real(grid.point(k));
        for (const auto& ro : trace.rule_outputs) append_triple(ro, k);
        append_triple(trace.aggregated, k);
        out += "," + format_real(trace.reduced.t[k]) + "," + format_real(trace.reduced.i[k]) +
               "," + format_real(trace.reduced.f[k]) + "," + format_real(trace.synthesized[k]);
        out += "\n";
    }
    return out;
}

} // namespace inlogic::io
