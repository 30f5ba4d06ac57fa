#include "inlogic/inls.hpp"

#include <algorithm>
#include <cmath>

#include "inlogic/errors.hpp"

namespace inlogic::inls {

UniverseGrid::UniverseGrid(std::string name_, double lo_, double hi_, std::size_t n_points_)
    : name(std::move(name_)), lo(lo_), hi(hi_), n_points(n_points_) {
    if (!(lo < hi)) throw ConfigError("universe '" + name + "': lo must be < hi");
    if (n_points < 2) throw ConfigError("universe '" + name + "': need at least 2 grid points");
}

std::size_t UniverseGrid::snap(double x) const {
    if (x < lo || x > hi)
        throw ConfigError("crisp input " + format_real(x) + " outside universe '" + name +
                          "' range [" + format_real(lo) + ", " + format_real(hi) + "]");
    double pos = (x - lo) / spacing();
    double k = std::ceil(pos - 0.5); // ties toward lo
    if (k < 0.0) k = 0.0;
    std::size_t idx = static_cast<std::size_t>(k);
    return std::min(idx, n_points - 1);
}

SampledIns::SampledIns(UniverseGrid grid_, std::vector<Interval> t_, std::vector<Interval> i_,
                       std::vector<Interval> f_)
    : grid(std::move(grid_)), t(std::move(t_)), i(std::move(i_)), f(std::move(f_)) {
    if (t.size() != grid.n_points || i.size() != grid.n_points || f.size() != grid.n_points)
        throw ConfigError("sampled set on '" + grid.name + "' needs " +
                          std::to_string(grid.n_points) + " points per component");
    for (const auto* comp : {&t, &i, &f})
        for (const auto& iv : *comp)
            if (iv.lo() < 0.0 || iv.hi() > 1.0)
                throw ConfigError("sampled set on '" + grid.name + "' leaves [0,1]");
}

std::vector<Interval> sample_trapezoid(const UniverseGrid& grid, double a, double b, double c,
                                       double d, const UnitInterval& height) {
    if (!(a <= b && b <= c && c <= d))
        throw ConfigError("trapezoid knots must satisfy a <= b <= c <= d");
    if (a < grid.lo || d > grid.hi)
        throw ConfigError("trapezoid support [" + format_real(a) + ", " + format_real(d) +
                          "] outside universe '" + grid.name + "'");
    std::vector<Interval> out;
    out.reserve(grid.n_points);
    for (std::size_t k = 0; k < grid.n_points; ++k) {
        double x = grid.point(k);
        double shape = 0.0;
        if (x >= a && x <= d) {
            if (x < b)
                shape = (x - a) / (b - a); // b > a here since a <= x < b
            else if (x <= c)
                shape = 1.0;
            else
                shape = (d - x) / (d - c);
        }
        out.emplace_back(height.lo() * shape, height.hi() * shape);
    }
    return out;
}

std::vector<Interval> sample_constant(const UniverseGrid& grid, const UnitInterval& value) {
    return std::vector<Interval>(grid.n_points, value);
}

SynthesisWeights::SynthesisWeights(double a_, double b_, double c_, double d_)
    : a(a_), b(b_), c(c_), d(d_) {
    for (double w : {a, b, c, d})
        if (w < 0.0 || w > 1.0)
            throw ConfigError("synthesization weights must lie in [0,1]");
    if (std::fabs(a + b + c + d - 1.0) > 1e-12)
        throw ConfigError("synthesization weights must sum to 1");
}

void System::validate() const {
    if (rules.empty()) throw ConfigError("rule base is empty");
    if (input_grids.empty()) throw ConfigError("system has no input universes");
    for (std::size_t k = 0; k < rules.size(); ++k) {
        const Rule& rule = rules[k];
        if (rule.antecedents.size() != input_grids.size())
            throw ConfigError("rule " + std::to_string(k) + " has " +
                              std::to_string(rule.antecedents.size()) + " antecedents, expected " +
                              std::to_string(input_grids.size()));
        for (std::size_t c = 0; c < rule.antecedents.size(); ++c)
            if (rule.antecedents[c].grid != input_grids[c])
                throw ConfigError("rule " + std::to_string(k) + " antecedent " +
                                  std::to_string(c) + " is not on universe '" +
                                  input_grids[c].name + "'");
        if (rule.consequent.grid != output_grid)
            throw ConfigError("rule " + std::to_string(k) + " consequent is not on universe '" +
                              output_grid.name + "'");
    }
    for (std::size_t idx : fired_rule_indices)
        if (idx >= rules.size())
            throw ConfigError("fired rule index " + std::to_string(idx) + " out of range");
}

std::vector<std::size_t> System::fired_rules() const {
    if (!fired_rule_indices.empty()) return fired_rule_indices;
    std::vector<std::size_t> all(rules.size());
    for (std::size_t k = 0; k < all.size(); ++k) all[k] = k;
    return all;
}

namespace {

struct ChannelMatch {
    Interval t, i, f;
};

/// One channel's contribution to G^k. Crisp: antecedent at the snapped
/// point. Set-valued: per endpoint, max over the grid of min(input,
/// antecedent) for T and I, min of max for F.
ChannelMatch match_channel(const InputChannel& input, const SampledIns& antecedent) {
    if (const auto* crisp = std::get_if<CrispInput>(&input)) {
        std::size_t k = antecedent.grid.snap(crisp->value);
        return {antecedent.t[k], antecedent.i[k], antecedent.f[k]};
    }
    const auto& set = std::get<SampledIns>(input);
    if (set.grid != antecedent.grid)
        throw ConfigError("set-valued input is not on universe '" + antecedent.grid.name + "'");
    ChannelMatch acc{Interval(0.0, 0.0), Interval(0.0, 0.0), Interval(1.0, 1.0)};
    for (std::size_t k = 0; k < antecedent.grid.n_points; ++k) {
        acc.t = max(acc.t, min(set.t[k], antecedent.t[k]));
        acc.i = max(acc.i, min(set.i[k], antecedent.i[k]));
        acc.f = min(acc.f, max(set.f[k], antecedent.f[k]));
    }
    return acc;
}

} // namespace

FiringStrength neutrosophify(const System& system, const Input& input, std::size_t rule_index) {
    if (input.size() != system.input_grids.size())
        throw ConfigError("got " + std::to_string(input.size()) + " inputs, expected " +
                          std::to_string(system.input_grids.size()));
    const Rule& rule = system.rules.at(rule_index);
    Interval t, i, f;
    for (std::size_t c = 0; c < input.size(); ++c) {
        ChannelMatch m = match_channel(input[c], rule.antecedents[c]);
        if (c == 0) {
            t = m.t;
            i = m.i;
            f = m.f;
        } else {
            t = min(t, m.t);
            i = min(i, m.i);
            f = max(f, m.f);
        }
    }
    return NeutroTriple(clamp01(t), clamp01(i), clamp01(f));
}

SampledIns infer_rule(const FiringStrength& g, const SampledIns& consequent) {
    const std::size_t n = consequent.grid.n_points;
    std::vector<Interval> t(n), i(n), f(n);
    for (std::size_t k = 0; k < n; ++k) {
        t[k] = min(g.t, consequent.t[k]);
        i[k] = min(g.i, consequent.i[k]);
        f[k] = max(g.f, consequent.f[k]);
    }
    return SampledIns(consequent.grid, std::move(t), std::move(i), std::move(f));
}

SampledIns aggregate(const std::vector<SampledIns>& outputs) {
    if (outputs.empty()) throw ConfigError("nothing to aggregate: no fired rules");
    SampledIns acc = outputs.front();
    for (std::size_t r = 1; r < outputs.size(); ++r) {
        const SampledIns& cur = outputs[r];
        if (cur.grid != acc.grid) throw ConfigError("aggregation across different output grids");
        for (std::size_t k = 0; k < acc.grid.n_points; ++k) {
            acc.t[k] = max(acc.t[k], cur.t[k]);
            acc.i[k] = max(acc.i[k], cur.i[k]);
            acc.f[k] = min(acc.f[k], cur.f[k]);
        }
    }
    return acc;
}

TypeReduced type_reduce(const SampledIns& b) {
    TypeReduced out;
    const std::size_t n = b.grid.n_points;
    out.t.reserve(n);
    out.i.reserve(n);
    out.f.reserve(n);
    for (std::size_t k = 0; k < n; ++k) {
        out.t.push_back(b.t[k].midpoint());
        out.i.push_back(b.i[k].midpoint());
        out.f.push_back(b.f[k].midpoint());
    }
    return out;
}

std::vector<double> synthesize(const TypeReduced& reduced, const SynthesisWeights& w) {
    std::vector<double> out;
    out.reserve(reduced.t.size());
    for (std::size_t k = 0; k < reduced.t.size(); ++k) {
        double v = w.a * reduced.t[k] + w.b * (1.0 - reduced.f[k]) + w.c * reduced.i[k] / 2.0 +
                   w.d * (1.0 - reduced.i[k] / 2.0);
        out.push_back(std::max(0.0, std::min(1.0, v)));
    }
    return out;
}

double deneutrosophify_centroid(const std::vector<double>& membership, const UniverseGrid& grid) {
    if (membership.size() != grid.n_points)
        throw ConfigError("membership array does not match the output grid");
    double num = 0.0, den = 0.0;
    const double h = grid.spacing();
    for (std::size_t k = 0; k + 1 < grid.n_points; ++k) {
        double y0 = grid.point(k), y1 = grid.point(k + 1);
        double m0 = membership[k], m1 = membership[k + 1];
        num += h * (m0 * y0 + m1 * y1) / 2.0;
        den += h * (m0 + m1) / 2.0;
    }
    if (den <= 0.0) throw NoActivatedOutput("no activated output");
    return num / den;
}

RunResult run(const System& system, const Input& input) {
    system.validate();

    Trace trace;
    trace.fired_rules = system.fired_rules();
    for (std::size_t idx : trace.fired_rules) {
        FiringStrength g = neutrosophify(system, input, idx);
        trace.firing_strengths.push_back(g);
        trace.rule_outputs.push_back(infer_rule(g, system.rules[idx].consequent));
    }
    trace.aggregated = aggregate(trace.rule_outputs);

    bool all_suppressed = true;
    for (std::size_t k = 0; k < trace.aggregated.grid.n_points && all_suppressed; ++k)
        if (trace.aggregated.t[k] != Interval(0.0, 0.0) ||
            trace.aggregated.f[k] != Interval(1.0, 1.0))
            all_suppressed = false;
    if (all_suppressed) throw NoActivatedOutput("no rule fired above zero");

    trace.reduced = type_reduce(trace.aggregated);
    trace.synthesized = synthesize(trace.reduced, system.weights);
    trace.crisp = deneutrosophify_centroid(trace.synthesized, system.output_grid);
    return RunResult{trace.crisp, std::move(trace)};
}

} // namespace inlogic::inls
