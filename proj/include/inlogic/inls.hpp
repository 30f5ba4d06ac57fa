#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "inlogic/interval.hpp"

namespace inlogic::inls {

/// Uniform grid discretization of a real universe [lo, hi].
struct UniverseGrid {
    std::string name;
    double lo = 0.0;
    double hi = 1.0;
    std::size_t n_points = 201;

    UniverseGrid() = default;
    UniverseGrid(std::string name_, double lo_, double hi_, std::size_t n_points_);

    double spacing() const { return (hi - lo) / static_cast<double>(n_points - 1); }
    double point(std::size_t k) const {
        return k + 1 == n_points ? hi : lo + spacing() * static_cast<double>(k);
    }
    /// Nearest grid index; ties resolve toward lo. Throws ConfigError for
    /// values outside [lo, hi].
    std::size_t snap(double x) const;

    friend bool operator==(const UniverseGrid& a, const UniverseGrid& b) {
        return a.name == b.name && a.lo == b.lo && a.hi == b.hi && a.n_points == b.n_points;
    }
    friend bool operator!=(const UniverseGrid& a, const UniverseGrid& b) { return !(a == b); }
};

/// Interval neutrosophic set sampled on a grid: one (T, I, F) interval
/// triple per grid point, stored as three parallel arrays.
struct SampledIns {
    UniverseGrid grid;
    std::vector<Interval> t;
    std::vector<Interval> i;
    std::vector<Interval> f;

    SampledIns() = default;
    SampledIns(UniverseGrid grid_, std::vector<Interval> t_, std::vector<Interval> i_,
               std::vector<Interval> f_);

    NeutroTriple at(std::size_t k) const {
        return NeutroTriple(UnitInterval(t[k]), UnitInterval(i[k]), UnitInterval(f[k]));
    }
};

/// Trapezoid membership curve over [a, d] with shoulder [b, c], scaled to
/// an interval height: lower curve height.lo * shape, upper curve
/// height.hi * shape, sampled per grid point.
std::vector<Interval> sample_trapezoid(const UniverseGrid& grid, double a, double b, double c,
                                       double d, const UnitInterval& height);

std::vector<Interval> sample_constant(const UniverseGrid& grid, const UnitInterval& value);

/// G^k: the folded result of the input/antecedent match for one rule.
using FiringStrength = NeutroTriple;

struct Rule {
    std::vector<SampledIns> antecedents; // one per input universe
    SampledIns consequent;               // on the output universe
};

/// Synthesization weights; a+b+c+d must equal 1 within 1e-12.
struct SynthesisWeights {
    double a = 0.4;
    double b = 0.3;
    double c = 0.15;
    double d = 0.15;

    SynthesisWeights() = default;
    SynthesisWeights(double a_, double b_, double c_, double d_);
};

struct CrispInput {
    double value = 0.0;
};

using InputChannel = std::variant<CrispInput, SampledIns>;
using Input = std::vector<InputChannel>;

struct System {
    std::vector<UniverseGrid> input_grids;
    UniverseGrid output_grid;
    std::vector<Rule> rules;
    SynthesisWeights weights;
    /// Indices of the fired-rule subset; empty means every rule fires.
    std::vector<std::size_t> fired_rule_indices;

    /// Throws ConfigError if rules are not well-typed against the grids.
    void validate() const;
    std::vector<std::size_t> fired_rules() const;
};

struct TypeReduced {
    std::vector<double> t;
    std::vector<double> i;
    std::vector<double> f;
};

struct Trace {
    std::vector<std::size_t> fired_rules;
    std::vector<FiringStrength> firing_strengths; // one per fired rule
    std::vector<SampledIns> rule_outputs;         // clipped consequents
    SampledIns aggregated;
    TypeReduced reduced;
    std::vector<double> synthesized;
    double crisp = 0.0;
};

struct RunResult {
    double crisp = 0.0;
    Trace trace;
};

/// Step 1. Crisp channels evaluate each antecedent at the snapped grid
/// point; set-valued channels fold sup-min (T, I) / inf-max (F) of input
/// against antecedent over the channel grid. Channels then fold with
/// min/min/max.
FiringStrength neutrosophify(const System& system, const Input& input, std::size_t rule_index);

/// Step 2 (per rule): clip the consequent at the firing strength, per
/// endpoint (min for T and I, max for F).
SampledIns infer_rule(const FiringStrength& g, const SampledIns& consequent);

/// Step 2 (across rules): pointwise max for T and I endpoints, min for F.
SampledIns aggregate(const std::vector<SampledIns>& outputs);

/// Step 3: collapse each interval to its midpoint.
TypeReduced type_reduce(const SampledIns& b);

/// Step 4.1: a*T' + b*(1-F') + c*I'/2 + d*(1-I'/2) per point, clamped.
std::vector<double> synthesize(const TypeReduced& reduced, const SynthesisWeights& w);

/// Step 4.2: centroid by the composite trapezoidal rule. Throws
/// NoActivatedOutput when the membership integrates to zero.
double deneutrosophify_centroid(const std::vector<double>& membership, const UniverseGrid& grid);

/// Steps 1-4 in order; the trace carries every stage.
RunResult run(const System& system, const Input& input);

} // namespace inlogic::inls
