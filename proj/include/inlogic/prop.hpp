#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "inlogic/interval.hpp"
#include "inlogic/sampling.hpp"

namespace inlogic::prop {

struct Formula;
using FormulaPtr = std::shared_ptr<const Formula>;

/// Immutable AST node. Concrete syntax: `!` `&` `|` `->` `<->`, identifiers
/// `[a-z][a-zA-Z0-9_]*`, constants `true`/`false`. Precedence: `!` binds
/// tightest, then `&`/`|` (one tier, left-associative), then `->`/`<->`
/// (one tier, right-associative).
struct Formula {
    enum class Kind { variable, constant, negation, conjunction, disjunction,
                      implication, biimplication };

    Kind kind;
    std::string name;       // variable
    bool value = false;     // constant
    FormulaPtr lhs, rhs;    // rhs empty for negation

    static FormulaPtr var(std::string name);
    static FormulaPtr constant(bool value);
    static FormulaPtr negation(FormulaPtr a);
    static FormulaPtr conjunction(FormulaPtr a, FormulaPtr b);
    static FormulaPtr disjunction(FormulaPtr a, FormulaPtr b);
    static FormulaPtr implication(FormulaPtr a, FormulaPtr b);
    static FormulaPtr biimplication(FormulaPtr a, FormulaPtr b);
};

bool equal(const Formula& a, const Formula& b);

/// Throws ParseError with the offending offset.
FormulaPtr parse(std::string_view text);

/// Minimal-parentheses rendering; parse(to_string(f)) reproduces f.
std::string to_string(const Formula& f);

/// Variable names of f, sorted, unique.
std::vector<std::string> variables(const Formula& f);

using Interpretation = std::map<std::string, NeutroTriple>;

/// Structural Table-I evaluation; throws EvalError naming any unbound
/// variable.
NeutroTriple eval(const Formula& f, const Interpretation& m);

enum class Verdict { holds_in_all_samples, counterexample_found };

struct Counterexample {
    std::size_t sample_index = 0;
    Interpretation interpretation;
    NeutroTriple value;                    // evaluated triple (lhs for equivalence)
    std::optional<NeutroTriple> rhs_value; // second triple for equivalence checks
};

struct CheckReport {
    Verdict verdict = Verdict::holds_in_all_samples;
    std::size_t samples_tried = 0;
    std::uint64_t seed = 0;
    SampleMode mode = SampleMode::scalar;
    double eps = 1e-9;
    std::optional<Counterexample> counterexample;
};

struct CheckOptions {
    std::size_t n_samples = 10000;
    std::uint64_t seed = 0;
    double eps = 1e-9;
    SampleMode mode = SampleMode::scalar;
    /// Upper bound on the enumerated corner grid; beyond it the corner
    /// phase falls back to seeded draws from the corner set.
    std::size_t corner_cap = 100000;
};

/// Sampled refuter/supporter for "f evaluates to <1,1,0> under every
/// interpretation": deterministic corner grid first, then seeded random
/// interpretations. The lowest-indexed failure is reported.
CheckReport check_tautology(const Formula& f, const CheckOptions& options = {});

/// Sampled check of INL(p) = INL(q) over the same interpretation stream.
CheckReport check_equivalence(const Formula& p, const Formula& q,
                              const CheckOptions& options = {});

/// Sweeps pairs of triples (corner grid product, then random) asserting:
/// if v(p) and v(p -> q) are designated then v(q) is designated.
CheckReport check_modus_ponens_preservation(const CheckOptions& options = {});

} // namespace inlogic::prop
