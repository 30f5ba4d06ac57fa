#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "inlogic/errors.hpp"
#include "inlogic/inls.hpp"
#include "inlogic/sampling.hpp"

using namespace inlogic;
using namespace inlogic::inls;

namespace {

SampledIns make_set(const UniverseGrid& grid, std::vector<Interval> t,
                    std::vector<Interval> i, std::vector<Interval> f) {
    return SampledIns(grid, std::move(t), std::move(i), std::move(f));
}

SampledIns trapezoid_set(const UniverseGrid& grid, double a, double b, double c, double d,
                         const UnitInterval& height) {
    return make_set(grid, sample_trapezoid(grid, a, b, c, d, height),
                    sample_constant(grid, UnitInterval::zero()),
                    sample_constant(grid, UnitInterval::zero()));
}

/// One-rule system: triangular antecedent peaking at 5, symmetric
/// trapezoidal consequent centered at `center`.
System one_rule_system(double center, std::size_t n_points) {
    System sys;
    sys.input_grids = {UniverseGrid("x", 0, 10, n_points)};
    sys.output_grid = UniverseGrid("y", 0, 10, n_points);
    Rule rule;
    rule.antecedents = {trapezoid_set(sys.input_grids[0], 3, 5, 5, 7, UnitInterval::one())};
    rule.consequent =
        trapezoid_set(sys.output_grid, center - 2, center - 1, center + 1, center + 2,
                      UnitInterval::one());
    sys.rules.push_back(rule);
    sys.weights = SynthesisWeights(1, 0, 0, 0);
    return sys;
}

SampledIns random_sampled_set(const UniverseGrid& grid, sampling::Rng& rng) {
    std::vector<Interval> t, i, f;
    for (std::size_t k = 0; k < grid.n_points; ++k) {
        t.push_back(sampling::random_unit_interval(rng, SampleMode::interval));
        i.push_back(sampling::random_unit_interval(rng, SampleMode::interval));
        f.push_back(sampling::random_unit_interval(rng, SampleMode::interval));
    }
    return make_set(grid, std::move(t), std::move(i), std::move(f));
}

} // namespace

TEST_CASE("grid points and snapping") {
    UniverseGrid g("x", 0, 10, 101);
    CHECK(g.point(0) == 0.0);
    CHECK(g.point(100) == 10.0);
    CHECK(g.spacing() == doctest::Approx(0.1));
    CHECK(g.snap(0.0) == 0);
    CHECK(g.snap(10.0) == 100);
    CHECK(g.snap(0.349) == 3);
    CHECK(g.snap(0.351) == 4);
    CHECK(g.snap(0.35) == 3); // tie resolves toward lo
    CHECK_THROWS_AS(g.snap(-0.01), ConfigError);
    CHECK_THROWS_AS(g.snap(10.01), ConfigError);
    CHECK_THROWS_AS(UniverseGrid("x", 1, 1, 10), ConfigError);
    CHECK_THROWS_AS(UniverseGrid("x", 0, 1, 1), ConfigError);
}

TEST_CASE("trapezoid sampling") {
    UniverseGrid g("x", 0, 10, 101);
    // Triangle via b == c; full height.
    auto tri = sample_trapezoid(g, 2, 5, 5, 8, UnitInterval::one());
    CHECK(tri[g.snap(5.0)] == Interval(1, 1));
    CHECK(tri[g.snap(2.0)] == Interval(0, 0));
    CHECK(tri[g.snap(3.5)] == Interval(0.5, 0.5));
    CHECK(tri[g.snap(9.0)] == Interval(0, 0)); // outside the support

    auto scaled = sample_trapezoid(g, 2, 5, 5, 8, UnitInterval(0.6, 0.8));
    CHECK(scaled[g.snap(5.0)] == Interval(0.6, 0.8));

    CHECK_THROWS_AS(sample_trapezoid(g, 5, 4, 6, 7, UnitInterval::one()), ConfigError);
    CHECK_THROWS_AS(sample_trapezoid(g, -1, 0, 1, 2, UnitInterval::one()), ConfigError);

    // Degenerate edges: a == b and c == d give vertical shoulders.
    auto crisp_box = sample_trapezoid(g, 2, 2, 4, 4, UnitInterval::one());
    CHECK(crisp_box[g.snap(2.0)] == Interval(1, 1));
    CHECK(crisp_box[g.snap(4.0)] == Interval(1, 1));
    CHECK(crisp_box[g.snap(4.1)] == Interval(0, 0));
}

TEST_CASE("neutrosophification of crisp inputs") {
    UniverseGrid g("x", 0, 10, 101);
    System sys;
    sys.input_grids = {g};
    sys.output_grid = UniverseGrid("y", 0, 10, 101);
    Rule rule;
    rule.antecedents = {trapezoid_set(g, 3, 5, 5, 7, UnitInterval::one())};
    rule.consequent = trapezoid_set(sys.output_grid, 4, 5, 5, 6, UnitInterval::one());
    sys.rules.push_back(rule);

    // At the peak with I = F = [0,0].
    FiringStrength at_peak = neutrosophify(sys, {CrispInput{5.0}}, 0);
    CHECK(at_peak.t == UnitInterval::one());
    CHECK(at_peak.i == UnitInterval::zero());
    CHECK(at_peak.f == UnitInterval::zero());

    FiringStrength off_peak = neutrosophify(sys, {CrispInput{4.0}}, 0);
    CHECK(approx_eq(off_peak.t, UnitInterval(0.5, 0.5), 1e-12));

    CHECK_THROWS_AS(neutrosophify(sys, {}, 0), ConfigError); // arity mismatch
    CHECK_THROWS_AS(neutrosophify(sys, {CrispInput{42.0}}, 0), ConfigError);
}

TEST_CASE("two crisp antecedents fold by min") {
    UniverseGrid g1("x1", 0, 10, 101), g2("x2", 0, 10, 101);
    System sys;
    sys.input_grids = {g1, g2};
    sys.output_grid = UniverseGrid("y", 0, 10, 101);
    Rule rule;
    // T-values 0.3 and 0.8 at the probe points.
    rule.antecedents = {trapezoid_set(g1, 0, 10, 10, 10, UnitInterval(0.3, 0.3)),
                        trapezoid_set(g2, 0, 10, 10, 10, UnitInterval(0.8, 0.8))};
    rule.consequent = trapezoid_set(sys.output_grid, 4, 5, 5, 6, UnitInterval::one());
    sys.rules.push_back(rule);
    FiringStrength gk = neutrosophify(sys, {CrispInput{10.0}, CrispInput{10.0}}, 0);
    CHECK(approx_eq(gk.t, UnitInterval(0.3, 0.3), 1e-12));
}

TEST_CASE("a spike input reproduces the crisp firing strength") {
    UniverseGrid g("x", 0, 10, 101);
    System sys;
    sys.input_grids = {g};
    sys.output_grid = UniverseGrid("y", 0, 10, 101);
    Rule rule;
    rule.antecedents = {make_set(
        g, sample_trapezoid(g, 3, 5, 5, 7, UnitInterval(0.7, 0.9)),
        sample_trapezoid(g, 2, 5, 5, 8, UnitInterval(0.2, 0.5)),
        sample_trapezoid(g, 0, 0, 4, 9, UnitInterval(0.4, 0.6)))};
    rule.consequent = trapezoid_set(sys.output_grid, 4, 5, 5, 6, UnitInterval::one());
    sys.rules.push_back(rule);

    const std::size_t j = g.snap(4.3);
    std::vector<Interval> spike_t(g.n_points, Interval(0, 0));
    std::vector<Interval> spike_i(g.n_points, Interval(0, 0));
    std::vector<Interval> anti_f(g.n_points, Interval(1, 1));
    spike_t[j] = Interval(1, 1);
    spike_i[j] = Interval(1, 1);
    anti_f[j] = Interval(0, 0);
    SampledIns spike = make_set(g, spike_t, spike_i, anti_f);

    FiringStrength crisp = neutrosophify(sys, {CrispInput{g.point(j)}}, 0);
    FiringStrength from_spike = neutrosophify(sys, {InputChannel{spike}}, 0);
    CHECK(crisp.t == from_spike.t);
    CHECK(crisp.i == from_spike.i);
    CHECK(crisp.f == from_spike.f);
}

TEST_CASE("set-valued folding matches the joint product-grid oracle") {
    // The implementation folds each channel separately; the defining
    // equations fold one sup/inf over the whole product grid. Both agree
    // because min/max folds factor across channels.
    sampling::Rng rng(51);
    UniverseGrid g1("x1", 0, 1, 7), g2("x2", 0, 1, 5);
    for (int iter = 0; iter < 100; ++iter) {
        SampledIns a1 = random_sampled_set(g1, rng);
        SampledIns a2 = random_sampled_set(g2, rng);
        SampledIns in1 = random_sampled_set(g1, rng);
        SampledIns in2 = random_sampled_set(g2, rng);

        System sys;
        sys.input_grids = {g1, g2};
        sys.output_grid = UniverseGrid("y", 0, 1, 3);
        Rule rule;
        rule.antecedents = {a1, a2};
        rule.consequent = trapezoid_set(sys.output_grid, 0, 0.5, 0.5, 1, UnitInterval::one());
        sys.rules.push_back(rule);

        FiringStrength factored = neutrosophify(sys, {InputChannel{in1}, InputChannel{in2}}, 0);

        double tlo = 0, thi = 0, ilo = 0, ihi = 0, flo = 1, fhi = 1;
        for (std::size_t k1 = 0; k1 < g1.n_points; ++k1)
            for (std::size_t k2 = 0; k2 < g2.n_points; ++k2) {
                auto fold6 = [](std::initializer_list<double> vs, bool take_min) {
                    double acc = take_min ? 1.0 : 0.0;
                    for (double v : vs) acc = take_min ? std::min(acc, v) : std::max(acc, v);
                    return acc;
                };
                tlo = std::max(tlo, fold6({in1.t[k1].lo(), a1.t[k1].lo(), in2.t[k2].lo(),
                                           a2.t[k2].lo()}, true));
                thi = std::max(thi, fold6({in1.t[k1].hi(), a1.t[k1].hi(), in2.t[k2].hi(),
                                           a2.t[k2].hi()}, true));
                ilo = std::max(ilo, fold6({in1.i[k1].lo(), a1.i[k1].lo(), in2.i[k2].lo(),
                                           a2.i[k2].lo()}, true));
                ihi = std::max(ihi, fold6({in1.i[k1].hi(), a1.i[k1].hi(), in2.i[k2].hi(),
                                           a2.i[k2].hi()}, true));
                flo = std::min(flo, fold6({in1.f[k1].lo(), a1.f[k1].lo(), in2.f[k2].lo(),
                                           a2.f[k2].lo()}, false));
                fhi = std::min(fhi, fold6({in1.f[k1].hi(), a1.f[k1].hi(), in2.f[k2].hi(),
                                           a2.f[k2].hi()}, false));
            }
        CHECK(factored.t == Interval(tlo, thi));
        CHECK(factored.i == Interval(ilo, ihi));
        CHECK(factored.f == Interval(flo, fhi));
    }
}

TEST_CASE("folded strength + clip equals the joint fired-rule equations") {
    // The defining fired-rule form folds input, antecedent and consequent
    // inside one sup/inf over the product grid; the pipeline factors it
    // into a firing strength followed by a pointwise clip.
    sampling::Rng rng(55);
    UniverseGrid g1("x1", 0, 1, 6), g2("x2", 0, 1, 4), out("y", 0, 1, 5);
    for (int iter = 0; iter < 100; ++iter) {
        SampledIns a1 = random_sampled_set(g1, rng);
        SampledIns a2 = random_sampled_set(g2, rng);
        SampledIns in1 = random_sampled_set(g1, rng);
        SampledIns in2 = random_sampled_set(g2, rng);
        SampledIns consequent = random_sampled_set(out, rng);

        System sys;
        sys.input_grids = {g1, g2};
        sys.output_grid = out;
        sys.rules.push_back(Rule{{a1, a2}, consequent});

        Input input = {InputChannel{in1}, InputChannel{in2}};
        SampledIns clipped = infer_rule(neutrosophify(sys, input, 0), consequent);

        for (std::size_t y = 0; y < out.n_points; ++y) {
            double tlo = 0, thi = 0, ilo = 0, ihi = 0, flo = 1, fhi = 1;
            for (std::size_t k1 = 0; k1 < g1.n_points; ++k1)
                for (std::size_t k2 = 0; k2 < g2.n_points; ++k2) {
                    auto fold = [](std::initializer_list<double> vs, bool take_min) {
                        double acc = take_min ? 1.0 : 0.0;
                        for (double v : vs) acc = take_min ? std::min(acc, v) : std::max(acc, v);
                        return acc;
                    };
                    tlo = std::max(tlo, fold({in1.t[k1].lo(), a1.t[k1].lo(), in2.t[k2].lo(),
                                              a2.t[k2].lo(), consequent.t[y].lo()}, true));
                    thi = std::max(thi, fold({in1.t[k1].hi(), a1.t[k1].hi(), in2.t[k2].hi(),
                                              a2.t[k2].hi(), consequent.t[y].hi()}, true));
                    ilo = std::max(ilo, fold({in1.i[k1].lo(), a1.i[k1].lo(), in2.i[k2].lo(),
                                              a2.i[k2].lo(), consequent.i[y].lo()}, true));
                    ihi = std::max(ihi, fold({in1.i[k1].hi(), a1.i[k1].hi(), in2.i[k2].hi(),
                                              a2.i[k2].hi(), consequent.i[y].hi()}, true));
                    flo = std::min(flo, fold({in1.f[k1].lo(), a1.f[k1].lo(), in2.f[k2].lo(),
                                              a2.f[k2].lo(), consequent.f[y].lo()}, false));
                    fhi = std::min(fhi, fold({in1.f[k1].hi(), a1.f[k1].hi(), in2.f[k2].hi(),
                                              a2.f[k2].hi(), consequent.f[y].hi()}, false));
                }
            CHECK(clipped.t[y] == Interval(tlo, thi));
            CHECK(clipped.i[y] == Interval(ilo, ihi));
            CHECK(clipped.f[y] == Interval(flo, fhi));
        }
    }
}

TEST_CASE("rule inference realizes the implication endpoint equations") {
    sampling::Rng rng(56);
    UniverseGrid out("y", 0, 1, 17);
    for (int iter = 0; iter < 200; ++iter) {
        FiringStrength g(sampling::random_unit_interval(rng, SampleMode::interval),
                         sampling::random_unit_interval(rng, SampleMode::interval),
                         sampling::random_unit_interval(rng, SampleMode::interval));
        SampledIns consequent = random_sampled_set(out, rng);
        SampledIns clipped = infer_rule(g, consequent);
        for (std::size_t y = 0; y < out.n_points; ++y) {
            CHECK(clipped.t[y] == Interval(std::min(g.t.lo(), consequent.t[y].lo()),
                                            std::min(g.t.hi(), consequent.t[y].hi())));
            CHECK(clipped.i[y] == Interval(std::min(g.i.lo(), consequent.i[y].lo()),
                                            std::min(g.i.hi(), consequent.i[y].hi())));
            CHECK(clipped.f[y] == Interval(std::max(g.f.lo(), consequent.f[y].lo()),
                                            std::max(g.f.hi(), consequent.f[y].hi())));
        }
    }
}

TEST_CASE("raising an antecedent T curve never lowers the firing strength") {
    sampling::Rng rng(52);
    UniverseGrid g("x", 0, 1, 9);
    UniverseGrid out("y", 0, 1, 3);
    for (int iter = 0; iter < 100; ++iter) {
        SampledIns ant = random_sampled_set(g, rng);
        SampledIns raised = ant;
        for (std::size_t k = 0; k < g.n_points; ++k) {
            double bump = rng.next_unit() * (1.0 - raised.t[k].hi());
            raised.t[k] = Interval(raised.t[k].lo() + bump * 0.5, raised.t[k].hi() + bump);
        }
        System sys;
        sys.input_grids = {g};
        sys.output_grid = out;
        Rule r1{{ant}, trapezoid_set(out, 0, 0.5, 0.5, 1, UnitInterval::one())};
        Rule r2{{raised}, trapezoid_set(out, 0, 0.5, 0.5, 1, UnitInterval::one())};
        sys.rules = {r1, r2};
        SampledIns input = random_sampled_set(g, rng);
        FiringStrength low = neutrosophify(sys, {InputChannel{input}}, 0);
        FiringStrength high = neutrosophify(sys, {InputChannel{input}}, 1);
        CHECK(low.t.lo() <= high.t.lo());
        CHECK(low.t.hi() <= high.t.hi());
    }
}

TEST_CASE("rule inference clips at the firing strength") {
    UniverseGrid out("y", 0, 10, 101);
    SampledIns consequent = trapezoid_set(out, 4, 5, 5, 6, UnitInterval::one());

    SampledIns same = infer_rule(NeutroTriple::top(), consequent);
    // T unchanged, I unchanged ([0,0] already below [1,1]), F raised to... F
    // folds with max, and top has f = [0,0], so F is unchanged too.
    CHECK(same.t == consequent.t);
    CHECK(same.i == consequent.i);
    CHECK(same.f == consequent.f);

    FiringStrength g(UnitInterval(0.4, 0.6), UnitInterval::one(), UnitInterval::zero());
    SampledIns clipped = infer_rule(g, consequent);
    for (std::size_t k = 0; k < out.n_points; ++k) {
        CHECK(clipped.t[k].lo() <= 0.4 + 1e-15);
        CHECK(clipped.t[k].hi() <= 0.6 + 1e-15);
        // Clipping never raises.
        CHECK(clipped.t[k].lo() <= consequent.t[k].lo());
        CHECK(clipped.t[k].hi() <= consequent.t[k].hi());
    }
    CHECK(clipped.t[out.snap(5.0)] == Interval(0.4, 0.6));

    SampledIns suppressed = infer_rule(NeutroTriple::bottom(), consequent);
    for (std::size_t k = 0; k < out.n_points; ++k) {
        CHECK(suppressed.t[k] == Interval(0, 0));
        CHECK(suppressed.i[k] == Interval(0, 0));
        CHECK(suppressed.f[k] == Interval(1, 1));
    }
}

TEST_CASE("aggregation is a pointwise max/max/min fold") {
    UniverseGrid out("y", 0, 1, 11);
    sampling::Rng rng(53);
    SampledIns a = random_sampled_set(out, rng);
    SampledIns b = random_sampled_set(out, rng);
    SampledIns c = random_sampled_set(out, rng);

    CHECK(aggregate({a}).t == a.t); // single rule: identity

    SampledIns abc = aggregate({a, b, c});
    SampledIns cab = aggregate({c, a, b});
    CHECK(abc.t == cab.t);
    CHECK(abc.i == cab.i);
    CHECK(abc.f == cab.f);
    SampledIns nested = aggregate({aggregate({a, b}), c});
    CHECK(nested.t == abc.t);
    CHECK(nested.f == abc.f);

    // Aggregation never lowers T or I, never raises F.
    for (std::size_t k = 0; k < out.n_points; ++k) {
        CHECK(abc.t[k].lo() >= a.t[k].lo());
        CHECK(abc.i[k].hi() >= b.i[k].hi());
        CHECK(abc.f[k].lo() <= c.f[k].lo());
    }

    CHECK_THROWS_AS(aggregate({}), ConfigError);
}

TEST_CASE("type reduction takes midpoints") {
    UniverseGrid out("y", 0, 1, 4);
    SampledIns b = make_set(out, {Interval(0.2, 0.6), Interval(0.5, 0.5), Interval(0, 1),
                                  Interval(0.25, 0.75)},
                            sample_constant(out, UnitInterval(0.5, 0.5)),
                            sample_constant(out, UnitInterval::zero()));
    TypeReduced r = type_reduce(b);
    CHECK(r.t.size() == 4);
    CHECK(r.t[0] == doctest::Approx(0.4).epsilon(1e-15));
    CHECK(r.t[1] == 0.5); // degenerate interval is unchanged
    CHECK(r.t[2] == 0.5);
    CHECK(r.i[3] == 0.5);
}

TEST_CASE("synthesization") {
    TypeReduced r;
    r.t = {0.8};
    r.i = {1.0};
    r.f = {0.2};
    CHECK(synthesize(r, SynthesisWeights(1, 0, 0, 0))[0] == doctest::Approx(0.8));
    // I' = 1 carries the potential truth value 0.5.
    CHECK(synthesize(r, SynthesisWeights(0, 0, 1, 0))[0] == doctest::Approx(0.5));
    CHECK(synthesize(r, SynthesisWeights(0.5, 0.5, 0, 0))[0] == doctest::Approx(0.8));

    CHECK_THROWS_AS(SynthesisWeights(0.5, 0.5, 0.5, -0.5), ConfigError);
    CHECK_THROWS_AS(SynthesisWeights(0.5, 0.3, 0.1, 0.2), ConfigError); // sums to 1.1
}

TEST_CASE("centroid deneutrosophication") {
    UniverseGrid g("y", 0, 10, 201);
    // Symmetric triangle centered at 6.
    auto tri = sample_trapezoid(g, 4, 6, 6, 8, UnitInterval::one());
    std::vector<double> membership;
    for (const auto& iv : tri) membership.push_back(iv.hi());
    CHECK(deneutrosophify_centroid(membership, g) == doctest::Approx(6.0).epsilon(1e-9));

    std::vector<double> constant(g.n_points, 0.7);
    CHECK(deneutrosophify_centroid(constant, g) == doctest::Approx(5.0).epsilon(1e-12));

    std::vector<double> zero(g.n_points, 0.0);
    CHECK_THROWS_AS(deneutrosophify_centroid(zero, g), NoActivatedOutput);
}

TEST_CASE("centroid agrees with a fine Riemann-sum oracle") {
    // Membership {0, 1, 0, 0} on the grid {0, 1, 2, 3}: piecewise-linear
    // interpolation integrated by midpoint sums at 10x resolution.
    UniverseGrid g("y", 0, 3, 4);
    std::vector<double> membership = {0, 1, 0, 0};

    auto interp = [&](double y) {
        if (y <= 0.0 || y >= 2.0) return 0.0;
        return y <= 1.0 ? y : 2.0 - y;
    };
    const std::size_t fine = 30000;
    double h = 3.0 / fine, num = 0, den = 0;
    for (std::size_t k = 0; k < fine; ++k) {
        double y = (k + 0.5) * h;
        num += interp(y) * y * h;
        den += interp(y) * h;
    }
    CHECK(deneutrosophify_centroid(membership, g) == doctest::Approx(num / den).epsilon(1e-6));
}

TEST_CASE("full pipeline on a symmetric one-rule system") {
    System sys = one_rule_system(5.0, 201);
    RunResult result = run(sys, {CrispInput{5.0}});
    CHECK(result.crisp == doctest::Approx(5.0).epsilon(1e-9));
    CHECK(result.crisp >= sys.output_grid.lo);
    CHECK(result.crisp <= sys.output_grid.hi);

    // Trace stages are mutually consistent.
    const Trace& tr = result.trace;
    REQUIRE(tr.fired_rules.size() == 1);
    FiringStrength g = neutrosophify(sys, {CrispInput{5.0}}, 0);
    CHECK(g == tr.firing_strengths[0]);
    SampledIns clipped = infer_rule(g, sys.rules[0].consequent);
    CHECK(clipped.t == tr.rule_outputs[0].t);
    CHECK(aggregate(tr.rule_outputs).t == tr.aggregated.t);
    CHECK(type_reduce(tr.aggregated).t == tr.reduced.t);
    CHECK(synthesize(tr.reduced, sys.weights) == tr.synthesized);
    CHECK(deneutrosophify_centroid(tr.synthesized, sys.output_grid) == tr.crisp);
}

TEST_CASE("every stage preserves the sampled-set invariants") {
    sampling::Rng rng(54);
    UniverseGrid g("x", 0, 1, 21), out("y", 0, 1, 21);
    for (int iter = 0; iter < 50; ++iter) {
        System sys;
        sys.input_grids = {g};
        sys.output_grid = out;
        sys.rules.push_back(Rule{{random_sampled_set(g, rng)}, random_sampled_set(out, rng)});
        sys.rules.push_back(Rule{{random_sampled_set(g, rng)}, random_sampled_set(out, rng)});
        Input input = {InputChannel{random_sampled_set(g, rng)}};
        RunResult result;
        try {
            result = run(sys, input);
        } catch (const NoActivatedOutput&) {
            continue;
        }
        auto check_set = [](const SampledIns& s) {
            for (const auto* comp : {&s.t, &s.i, &s.f})
                for (const auto& iv : *comp) {
                    CHECK(iv.lo() >= 0.0);
                    CHECK(iv.hi() <= 1.0);
                    CHECK(iv.lo() <= iv.hi());
                }
        };
        for (const auto& ro : result.trace.rule_outputs) check_set(ro);
        check_set(result.trace.aggregated);
        for (double v : result.trace.synthesized) {
            CHECK(v >= 0.0);
            CHECK(v <= 1.0);
        }
    }
}

TEST_CASE("rule order permutation leaves the output bit-identical") {
    System sys = one_rule_system(5.0, 201);
    // Add a second, partially overlapping rule.
    Rule second;
    second.antecedents = {trapezoid_set(sys.input_grids[0], 4, 6, 6, 8, UnitInterval(0.8, 0.9))};
    second.consequent = trapezoid_set(sys.output_grid, 6, 7, 7, 8, UnitInterval::one());
    sys.rules.push_back(second);

    System swapped = sys;
    std::swap(swapped.rules[0], swapped.rules[1]);

    double a = run(sys, {CrispInput{5.2}}).crisp;
    double b = run(swapped, {CrispInput{5.2}}).crisp;
    CHECK(a == b);
}

TEST_CASE("no rule fired above zero") {
    UniverseGrid g("x", 0, 10, 11), out("y", 0, 10, 11);
    System sys;
    sys.input_grids = {g};
    sys.output_grid = out;
    Rule rule;
    rule.antecedents = {make_set(g, sample_constant(g, UnitInterval::zero()),
                                 sample_constant(g, UnitInterval::zero()),
                                 sample_constant(g, UnitInterval::one()))};
    rule.consequent = trapezoid_set(out, 4, 5, 5, 6, UnitInterval::one());
    sys.rules.push_back(rule);
    CHECK_THROWS_AS(run(sys, {CrispInput{5.0}}), NoActivatedOutput);
}

TEST_CASE("fired-rule subset restricts inference") {
    System sys = one_rule_system(3.0, 101);
    Rule second;
    second.antecedents = {trapezoid_set(sys.input_grids[0], 3, 5, 5, 7, UnitInterval::one())};
    second.consequent = trapezoid_set(sys.output_grid, 6, 7, 7, 8, UnitInterval::one());
    sys.rules.push_back(second);

    sys.fired_rule_indices = {1};
    RunResult onlysecond = run(sys, {CrispInput{5.0}});
    CHECK(onlysecond.crisp == doctest::Approx(7.0).epsilon(1e-9));

    sys.fired_rule_indices = {7};
    CHECK_THROWS_AS(run(sys, {CrispInput{5.0}}), ConfigError);
}

TEST_CASE("grid refinement converges") {
    double out101 = run(one_rule_system(5.0, 101), {CrispInput{4.0}}).crisp;
    double out201 = run(one_rule_system(5.0, 201), {CrispInput{4.0}}).crisp;
    double out401 = run(one_rule_system(5.0, 401), {CrispInput{4.0}}).crisp;
    CHECK(std::fabs(out201 - out101) < 1e-3);
    CHECK(std::fabs(out401 - out201) < 1e-3);
}

TEST_CASE("system validation catches mis-typed rules") {
    UniverseGrid g("x", 0, 10, 11), out("y", 0, 10, 11);
    System sys;
    sys.input_grids = {g};
    sys.output_grid = out;
    Rule rule;
    rule.antecedents = {trapezoid_set(UniverseGrid("z", 0, 10, 11), 1, 2, 3, 4,
                                      UnitInterval::one())};
    rule.consequent = trapezoid_set(out, 4, 5, 5, 6, UnitInterval::one());
    sys.rules.push_back(rule);
    CHECK_THROWS_AS(sys.validate(), ConfigError);
}
