#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "inlogic/errors.hpp"
#include "inlogic/json_io.hpp"

using namespace inlogic;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitParseError = 1;
constexpr int kExitUnboundSymbol = 2;
constexpr int kExitCounterexample = 3;
constexpr int kExitConfigInvalid = 4;
constexpr int kExitNoActivatedOutput = 5;

struct GlobalOptions {
    double eps = 1e-9;
    std::size_t samples = 10000;
    std::uint64_t seed = 0;
    std::string format = "text";
    bool wide = false;
};

SampleMode mode_of(const GlobalOptions& g) {
    return g.wide ? SampleMode::interval : SampleMode::scalar;
}

void require_text_or_json(const GlobalOptions& g) {
    if (g.format != "text" && g.format != "json")
        throw ConfigError("--format " + g.format + " applies to sweep output only");
}

/// A formula is treated as first-order when it uses quantifiers or
/// applies a predicate to arguments.
bool looks_first_order(const std::string& text) {
    if (text.find("forall") != std::string::npos || text.find("exists") != std::string::npos)
        return true;
    for (std::size_t k = 1; k < text.size(); ++k)
        if (text[k] == '(' &&
            (std::isalnum(static_cast<unsigned char>(text[k - 1])) || text[k - 1] == '_'))
            return true;
    return false;
}

int run_eval(const GlobalOptions& g, const std::string& formula, const std::string& interp_path,
             bool force_fo) {
    require_text_or_json(g);
    NeutroTriple value;
    if (force_fo || looks_first_order(formula)) {
        pred::Interpretation m;
        if (!interp_path.empty())
            m = io::pred_interpretation_from_json(io::load_json_file(interp_path));
        else
            m.domain = {"1"};
        value = pred::eval(*pred::parse(formula), m);
    } else {
        prop::Interpretation m;
        if (!interp_path.empty())
            m = io::prop_interpretation_from_json(io::load_json_file(interp_path));
        value = prop::eval(*prop::parse(formula), m);
    }
    if (g.format == "json")
        std::cout << io::to_json(value).dump(2) << "\n";
    else
        std::cout << to_string(value) << "\n";
    return kExitOk;
}

std::vector<std::size_t> parse_size_list(const std::string& text) {
    std::vector<std::size_t> out;
    std::stringstream ss(text);
    std::string part;
    while (std::getline(ss, part, ','))
        try {
            out.push_back(std::stoul(part));
        } catch (const std::exception&) {
            throw ConfigError("bad --domain-sizes entry '" + part + "'");
        }
    if (out.empty()) throw ConfigError("--domain-sizes must name at least one size");
    return out;
}

int run_check(const GlobalOptions& g, const std::string& kind, const std::string& formula,
              const std::string& formula2, const std::string& domain_sizes) {
    require_text_or_json(g);
    bool holds = false;
    io::json report;
    std::string text;

    if (kind == "taut" || kind == "equiv") {
        prop::CheckOptions opts;
        opts.n_samples = g.samples;
        opts.seed = g.seed;
        opts.eps = g.eps;
        opts.mode = mode_of(g);
        prop::CheckReport rep;
        if (kind == "taut") {
            rep = prop::check_tautology(*prop::parse(formula), opts);
        } else {
            if (formula2.empty()) throw ConfigError("check equiv needs two formulas");
            rep = prop::check_equivalence(*prop::parse(formula), *prop::parse(formula2), opts);
        }
        holds = rep.verdict == prop::Verdict::holds_in_all_samples;
        report = io::report_to_json(rep, kind);
        text = io::report_to_text(rep);
    } else {
        pred::FoCheckOptions opts;
        opts.n_samples = g.samples;
        opts.seed = g.seed;
        opts.eps = g.eps;
        opts.mode = mode_of(g);
        opts.domain_sizes = parse_size_list(domain_sizes);
        if (kind == "valid") {
            pred::FoCheckReport rep = pred::check_valid(*pred::parse(formula), opts);
            holds = rep.verdict == pred::Verdict::holds_in_all_samples;
            report = io::report_to_json(rep, kind);
            text = io::report_to_text(rep);
        } else { // sat
            pred::SatReport rep = pred::check_satisfiable(*pred::parse(formula), opts);
            holds = rep.witness_found;
            report = io::report_to_json(rep);
            text = io::report_to_text(rep);
        }
    }

    if (g.format == "json")
        std::cout << report.dump(2) << "\n";
    else
        std::cout << text;
    return holds ? kExitOk : kExitCounterexample;
}

inls::SynthesisWeights parse_weights(const std::string& text) {
    std::vector<double> w;
    std::stringstream ss(text);
    std::string part;
    while (std::getline(ss, part, ','))
        try {
            w.push_back(std::stod(part));
        } catch (const std::exception&) {
            throw ConfigError("bad --weights entry '" + part + "'");
        }
    if (w.size() != 4) throw ConfigError("--weights needs four comma-separated values");
    return inls::SynthesisWeights(w[0], w[1], w[2], w[3]);
}

inls::Input parse_inputs(const inls::System& sys, const std::vector<std::string>& raw) {
    inls::Input input;
    for (std::size_t k = 0; k < raw.size(); ++k) {
        if (!raw[k].empty() && raw[k][0] == '@') {
            if (k >= sys.input_grids.size())
                throw ConfigError("more inputs than input universes");
            io::json j = io::load_json_file(raw[k].substr(1));
            input.push_back(io::input_set_from_json(j, sys.input_grids[k]));
        } else {
            try {
                input.push_back(inls::CrispInput{std::stod(raw[k])});
            } catch (const std::invalid_argument&) {
                throw ConfigError("input '" + raw[k] +
                                  "' is neither a number nor an @set-file reference");
            }
        }
    }
    return input;
}

int run_inls_run(const GlobalOptions& g, const std::string& system_path,
                 const std::vector<std::string>& raw_inputs, const std::string& weights,
                 std::size_t grid_override, const std::string& trace_path) {
    require_text_or_json(g);
    std::optional<std::size_t> grid;
    if (grid_override > 0) grid = grid_override;
    inls::System sys = io::system_from_json(io::load_json_file(system_path), grid);
    if (!weights.empty()) sys.weights = parse_weights(weights);

    inls::RunResult result = inls::run(sys, parse_inputs(sys, raw_inputs));

    if (!trace_path.empty()) {
        std::ofstream out(trace_path);
        if (!out) throw ConfigError("cannot write trace to '" + trace_path + "'");
        out << io::trace_to_csv(result.trace);
    }
    if (g.format == "json")
        std::cout << io::json{{"crisp", result.crisp}}.dump(2) << "\n";
    else
        std::cout << format_real(result.crisp) << "\n";
    return kExitOk;
}

struct SweepSpec {
    double lo = 0, hi = 0;
    std::size_t n = 0;
};

SweepSpec parse_sweep(const std::string& text) {
    SweepSpec spec;
    std::stringstream ss(text);
    std::string lo, hi, n;
    if (!std::getline(ss, lo, ':') || !std::getline(ss, hi, ':') || !std::getline(ss, n))
        throw ConfigError("--sweep expects lo:hi:n");
    try {
        spec.lo = std::stod(lo);
        spec.hi = std::stod(hi);
        spec.n = std::stoul(n);
    } catch (const std::exception&) {
        throw ConfigError("--sweep expects lo:hi:n with numeric fields");
    }
    if (spec.n < 2 || !(spec.lo < spec.hi)) throw ConfigError("--sweep needs lo < hi and n >= 2");
    return spec;
}

int run_inls_sweep(const GlobalOptions& g, const std::string& system_path,
                   const std::string& sweep_text, std::size_t index,
                   const std::vector<std::string>& fixed_inputs, const std::string& weights,
                   std::size_t grid_override, const std::string& out_path) {
    std::optional<std::size_t> grid;
    if (grid_override > 0) grid = grid_override;
    inls::System sys = io::system_from_json(io::load_json_file(system_path), grid);
    if (!weights.empty()) sys.weights = parse_weights(weights);
    SweepSpec spec = parse_sweep(sweep_text);

    if (index >= sys.input_grids.size()) throw ConfigError("--index out of range");
    if (fixed_inputs.size() != sys.input_grids.size() - 1)
        throw ConfigError("sweep over one of " + std::to_string(sys.input_grids.size()) +
                          " inputs needs " + std::to_string(sys.input_grids.size() - 1) +
                          " fixed inputs, got " + std::to_string(fixed_inputs.size()));

    std::vector<std::string> raw(fixed_inputs);
    raw.insert(raw.begin() + static_cast<std::ptrdiff_t>(index), "0");
    inls::Input input = parse_inputs(sys, raw);

    std::ostringstream csv;
    for (std::size_t k = 0; k < spec.n; ++k) {
        double x = k + 1 == spec.n
                       ? spec.hi
                       : spec.lo + (spec.hi - spec.lo) * static_cast<double>(k) /
                                       static_cast<double>(spec.n - 1);
        input[index] = inls::CrispInput{x};
        csv << format_real(x) << ",";
        try {
            csv << format_real(inls::run(sys, input).crisp);
        } catch (const NoActivatedOutput&) {
            csv << "nan";
        }
        csv << "\n";
    }
    if (out_path.empty()) {
        std::cout << csv.str();
    } else {
        std::ofstream out(out_path);
        if (!out) throw ConfigError("cannot write sweep to '" + out_path + "'");
        out << csv.str();
    }
    (void)g;
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Interval neutrosophic logic: evaluation, semantic checks, and the "
                 "approximate-reasoning pipeline"};
    app.require_subcommand(1);
    app.fallthrough();

    GlobalOptions g;
    app.add_option("--eps", g.eps, "Equality/designation tolerance")->check(CLI::NonNegativeNumber);
    app.add_option("--samples", g.samples, "Random samples per check")
        ->check(CLI::PositiveNumber);
    app.add_option("--seed", g.seed, "Seed for sampled checks");
    app.add_option("--format", g.format, "Output format: text or json")
        ->check(CLI::IsMember({"text", "json"}));
    app.add_flag("--wide", g.wide,
                 "Sample genuine subintervals instead of degenerate (scalar) triples");

    // eval
    std::string formula, formula2, interp_path;
    bool force_fo = false;
    auto* eval_cmd = app.add_subcommand("eval", "Evaluate a formula under an interpretation");
    eval_cmd->add_option("formula", formula, "Formula text")->required();
    eval_cmd->add_option("-i,--interpretation", interp_path, "Interpretation JSON file");
    eval_cmd->add_flag("--fo", force_fo, "Treat the formula as first-order");

    // check
    std::string kind, domain_sizes = "1,2,3";
    auto* check_cmd = app.add_subcommand("check", "Run a sampled semantic check");
    check_cmd->add_option("kind", kind, "taut | equiv | valid | sat")
        ->required()
        ->check(CLI::IsMember({"taut", "equiv", "valid", "sat"}));
    check_cmd->add_option("formula", formula, "Formula text")->required();
    check_cmd->add_option("formula2", formula2, "Second formula (equiv)");
    check_cmd->add_option("--domain-sizes", domain_sizes,
                          "Comma-separated finite domain sizes (valid/sat)");

    // inls run / sweep
    std::string system_path, weights, trace_path, sweep_text, out_path;
    std::vector<std::string> raw_inputs;
    std::size_t grid_override = 0, sweep_index = 0;
    auto* inls_cmd = app.add_subcommand("inls", "Interval neutrosophic logic system");
    inls_cmd->require_subcommand(1);

    auto* run_cmd = inls_cmd->add_subcommand("run", "Run the system on one input vector");
    run_cmd->add_option("system", system_path, "System config JSON")->required();
    run_cmd->add_option("inputs", raw_inputs, "Crisp numbers or @set-file per input universe");
    run_cmd->add_option("--weights", weights, "Override synthesization weights a,b,c,d");
    run_cmd->add_option("--grid", grid_override, "Override grid resolution for all universes");
    run_cmd->add_option("--trace", trace_path, "Write per-stage grid arrays to a CSV file");

    auto* sweep_cmd = inls_cmd->add_subcommand("sweep", "Map crisp input to output as CSV");
    sweep_cmd->add_option("system", system_path, "System config JSON")->required();
    sweep_cmd->add_option("--sweep", sweep_text, "lo:hi:n")->required();
    sweep_cmd->add_option("--index", sweep_index, "Which input universe to sweep");
    sweep_cmd->add_option("inputs", raw_inputs, "Fixed values for the remaining inputs");
    sweep_cmd->add_option("--weights", weights, "Override synthesization weights a,b,c,d");
    sweep_cmd->add_option("--grid", grid_override, "Override grid resolution for all universes");
    sweep_cmd->add_option("-o,--out", out_path, "Write the CSV here instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        app.exit(e);
        return kExitConfigInvalid;
    }

    try {
        if (eval_cmd->parsed()) return run_eval(g, formula, interp_path, force_fo);
        if (check_cmd->parsed()) return run_check(g, kind, formula, formula2, domain_sizes);
        if (run_cmd->parsed())
            return run_inls_run(g, system_path, raw_inputs, weights, grid_override, trace_path);
        if (sweep_cmd->parsed())
            return run_inls_sweep(g, system_path, sweep_text, sweep_index, raw_inputs, weights,
                                  grid_override, out_path);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParseError;
    } catch (const EvalError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUnboundSymbol;
    } catch (const NoActivatedOutput& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNoActivatedOutput;
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfigInvalid;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConfigInvalid;
    }
    return kExitConfigInvalid;
}
