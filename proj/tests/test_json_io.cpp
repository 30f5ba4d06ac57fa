#include <doctest.h>

#include "inlogic/errors.hpp"
#include "inlogic/json_io.hpp"
#include "inlogic/sampling.hpp"

using namespace inlogic;
using json = nlohmann::json;

namespace {

NeutroTriple random_triple(sampling::Rng& rng) {
    return sampling::random_triple(rng, SampleMode::interval);
}

} // namespace

TEST_CASE("set serialization round-trips and validates") {
    sampling::Rng rng(61);
    for (int iter = 0; iter < 100; ++iter) {
        Universe u("X", {"x1", "x2", "x3"});
        std::vector<NeutroTriple> values;
        for (int k = 0; k < 3; ++k) values.push_back(random_triple(rng));
        InsSet a(u, values);
        CHECK(io::set_from_json(io::to_json(a)) == a);
    }

    json bad = json::parse(R"json({"universe": ["x1"],
                              "values": {"x1": {"t": [0.2, 1.4], "i": [0,0], "f": [0,0]}}})json");
    CHECK_THROWS_AS(io::set_from_json(bad), ConfigError);

    json missing = json::parse(R"json({"universe": ["x1", "x2"],
                                  "values": {"x1": {"t": [0,1], "i": [0,1], "f": [0,1]}}})json");
    CHECK_THROWS_AS(io::set_from_json(missing), ConfigError);

    json inverted = json::parse(R"json({"universe": ["x1"],
                                   "values": {"x1": {"t": [0.8, 0.2], "i": [0,0], "f": [0,0]}}})json");
    CHECK_THROWS_AS(io::set_from_json(inverted), ConfigError);
}

TEST_CASE("relation serialization round-trips") {
    sampling::Rng rng(62);
    Universe from("X", {"x1", "x2"}), to("Y", {"y1", "y2", "y3"});
    std::vector<NeutroTriple> values;
    for (int k = 0; k < 6; ++k) values.push_back(random_triple(rng));
    InsRelation r(from, to, values);
    CHECK(io::relation_from_json(io::to_json(r)) == r);
}

TEST_CASE("propositional interpretation files") {
    json j = json::parse(R"json({"p": {"t": [0.5, 0.5], "i": [0.4, 0.4], "f": [0.7, 0.7]}})json");
    prop::Interpretation m = io::prop_interpretation_from_json(j);
    CHECK(m.at("p") == NeutroTriple(0.5, 0.4, 0.7));
    CHECK(io::prop_interpretation_from_json(io::to_json(m)) == m);
}

TEST_CASE("first-order interpretation files") {
    json j = json::parse(R"json({
        "domain": ["1", "2", "3"],
        "preds": {"p/1": {"(1)": {"t": [0.5,0.5], "i": [1,1], "f": [0.4,0.4]},
                           "(2)": {"t": [1,1], "i": [0.2,0.2], "f": [0,0]},
                           "(3)": {"t": [0.7,0.7], "i": [0.4,0.4], "f": [0.7,0.7]}}},
        "consts": {"a": "2"},
        "funcs": {"g/1": {"(1)": "2", "(2)": "3", "(3)": "1"}}
    })json");
    pred::Interpretation m = io::pred_interpretation_from_json(j);
    CHECK(m.domain.size() == 3);
    CHECK(m.constants.at("a") == 1);
    CHECK(m.functions.at("g/1") == std::vector<std::size_t>{1, 2, 0});
    CHECK(approx_eq(pred::eval(*pred::parse("forall x. p(x)"), m), NeutroTriple(0.5, 0.2, 0.7),
                    0.0));
    CHECK(pred::eval(*pred::parse("p(g(a))"), m) == m.predicates.at("p/1")[2]);

    // Round trip.
    pred::Interpretation back = io::pred_interpretation_from_json(io::to_json(m));
    CHECK(back.domain == m.domain);
    CHECK(back.constants == m.constants);
    CHECK(back.functions == m.functions);
    CHECK(back.predicates == m.predicates);

    // Non-total tables are rejected.
    json partial = j;
    partial["preds"]["p/1"].erase("(2)");
    CHECK_THROWS_AS(io::pred_interpretation_from_json(partial), ConfigError);

    json bad_element = j;
    bad_element["consts"]["a"] = "9";
    CHECK_THROWS_AS(io::pred_interpretation_from_json(bad_element), ConfigError);
}

TEST_CASE("reports serialize deterministically") {
    prop::CheckOptions opts;
    opts.n_samples = 400;
    opts.seed = 31337;
    auto f = prop::parse("p | !p");
    std::string a = io::report_to_json(prop::check_tautology(*f, opts), "taut").dump(2);
    std::string b = io::report_to_json(prop::check_tautology(*f, opts), "taut").dump(2);
    CHECK(a == b);
    CHECK(a.find("counterexample-found") != std::string::npos);

    pred::FoCheckOptions fopts;
    fopts.n_samples = 150;
    fopts.seed = 99;
    auto g = pred::parse("exists x. p(x) -> forall x. p(x)");
    std::string c = io::report_to_json(pred::check_valid(*g, fopts), "valid").dump(2);
    std::string d = io::report_to_json(pred::check_valid(*g, fopts), "valid").dump(2);
    CHECK(c == d);
}

TEST_CASE("system config loading") {
    json j = json::parse(R"json({
        "inputs": [{"name": "x", "lo": 0, "hi": 10, "n_points": 101}],
        "output": {"name": "y", "lo": 0, "hi": 10, "n_points": 101},
        "rules": [{
            "if": [{"t": {"trapezoid": [3, 5, 5, 7]}}],
            "then": {"t": {"trapezoid": [4, 5, 5, 6], "height": [0.9, 1.0]},
                     "i": {"constant": [0.1, 0.2]}}
        }]
    })json");
    inls::System sys = io::system_from_json(j);
    CHECK(sys.input_grids.size() == 1);
    CHECK(sys.rules.size() == 1);
    // Defaults: height [1,1], absent i/f are [0,0], default weights.
    CHECK(sys.rules[0].antecedents[0].t[sys.input_grids[0].snap(5.0)] == Interval(1, 1));
    CHECK(sys.rules[0].antecedents[0].i[0] == Interval(0, 0));
    CHECK(sys.rules[0].consequent.i[0] == Interval(0.1, 0.2));
    CHECK(sys.weights.a == 0.4);

    // Grid override resamples every universe.
    inls::System fine = io::system_from_json(j, 401);
    CHECK(fine.output_grid.n_points == 401);
    CHECK(fine.rules[0].consequent.t.size() == 401);

    json bad_weights = j;
    bad_weights["weights"] = {{"a", 0.9}, {"b", 0.9}, {"c", 0.0}, {"d", 0.0}};
    CHECK_THROWS_AS(io::system_from_json(bad_weights), ConfigError);

    json bad_rule = j;
    bad_rule["rules"][0]["if"] = json::array();
    CHECK_THROWS_AS(io::system_from_json(bad_rule), ConfigError);

    json oob_fired = j;
    oob_fired["fired_rules"] = {5};
    CHECK_THROWS_AS(io::system_from_json(oob_fired), ConfigError);

    // Explicit point arrays + grid override is rejected.
    json points = json::parse(R"json({
        "inputs": [{"name": "x", "lo": 0, "hi": 1, "n_points": 3}],
        "output": {"name": "y", "lo": 0, "hi": 1, "n_points": 3},
        "rules": [{
            "if": [{"t": {"points": {"lo": [0, 0.5, 0], "hi": [0, 1, 0]}}}],
            "then": {"t": {"trapezoid": [0, 0.5, 0.5, 1]}}
        }]
    })json");
    CHECK(io::system_from_json(points).rules[0].antecedents[0].t[1] == Interval(0.5, 1));
    CHECK_THROWS_AS(io::system_from_json(points, 101), ConfigError);
}

TEST_CASE("trace CSV has one row per output grid point") {
    json j = json::parse(R"json({
        "inputs": [{"name": "x", "lo": 0, "hi": 10, "n_points": 11}],
        "output": {"name": "y", "lo": 0, "hi": 10, "n_points": 11},
        "rules": [{"if": [{"t": {"trapezoid": [3, 5, 5, 7]}}],
                   "then": {"t": {"trapezoid": [4, 5, 5, 6]}}}]
    })json");
    inls::System sys = io::system_from_json(j);
    auto result = inls::run(sys, {inls::CrispInput{5.0}});
    std::string csv = io::trace_to_csv(result.trace);
    std::size_t rows = 0;
    for (char ch : csv)
        if (ch == '\n') ++rows;
    // 2 comment lines + header + 11 data rows.
    CHECK(rows == 2 + 1 + 11);
    CHECK(csv.find("agg_t_lo") != std::string::npos);
}
