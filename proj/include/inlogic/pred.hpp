#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "inlogic/interval.hpp"
#include "inlogic/sampling.hpp"

namespace inlogic::pred {

/// A term is a variable, a constant, or a function application. An
/// identifier is a variable iff its first letter is one of u..z; any
/// identifier applied to arguments inside a term is a function symbol.
struct Term {
    enum class Kind { variable, constant, function };

    Kind kind;
    std::string name;
    std::vector<Term> args; // function only

    static Term var(std::string name) { return {Kind::variable, std::move(name), {}}; }
    static Term constant(std::string name) { return {Kind::constant, std::move(name), {}}; }
    static Term function(std::string name, std::vector<Term> args) {
        return {Kind::function, std::move(name), std::move(args)};
    }
};

bool equal(const Term& a, const Term& b);
std::string to_string(const Term& t);

/// True iff the name follows the variable convention (first letter u..z).
bool is_variable_name(std::string_view name);

struct Formula;
using FormulaPtr = std::shared_ptr<const Formula>;

/// First-order AST. Syntax extends the propositional one with atoms
/// `p(t1,...,tn)` (0-ary allowed) and binders `forall x. F` / `exists x. F`
/// whose scope is one negation-tier formula.
struct Formula {
    enum class Kind { atom, constant, negation, conjunction, disjunction,
                      implication, biimplication, forall, exists };

    Kind kind;
    std::string name;        // atom predicate or quantified variable
    std::vector<Term> args;  // atom
    bool value = false;      // constant
    FormulaPtr lhs, rhs;     // children; quantifier body in lhs

    static FormulaPtr atom(std::string pred, std::vector<Term> args);
    static FormulaPtr constant(bool value);
    static FormulaPtr negation(FormulaPtr a);
    static FormulaPtr conjunction(FormulaPtr a, FormulaPtr b);
    static FormulaPtr disjunction(FormulaPtr a, FormulaPtr b);
    static FormulaPtr implication(FormulaPtr a, FormulaPtr b);
    static FormulaPtr biimplication(FormulaPtr a, FormulaPtr b);
    static FormulaPtr forall(std::string var, FormulaPtr body);
    static FormulaPtr exists(std::string var, FormulaPtr body);
};

bool equal(const Formula& a, const Formula& b);
FormulaPtr parse(std::string_view text);
std::string to_string(const Formula& f);

/// One variable occurrence in left-to-right order (binder occurrences
/// included); `position` is the 0-based occurrence index.
struct Occurrence {
    std::string name;
    std::size_t position;
    bool bound;
};

std::vector<Occurrence> variable_occurrences(const Formula& f);
std::vector<Occurrence> bound_occurrences(const Formula& f);
std::set<std::string> free_vars(const Formula& f);

/// Finite-domain interpretation. Function and predicate tables are flat,
/// mixed-radix indexed over element tuples and keyed "name/arity".
struct Interpretation {
    std::vector<std::string> domain;                            // element labels
    std::map<std::string, std::size_t> constants;               // name -> element index
    std::map<std::string, std::vector<std::size_t>> functions;  // "f/n" -> table
    std::map<std::string, std::vector<NeutroTriple>> predicates;// "p/n" -> table

    std::size_t table_index(const std::vector<std::size_t>& elems) const;
};

std::string symbol_key(std::string_view name, std::size_t arity);

using VarAssignment = std::map<std::string, std::size_t>; // variable -> element index

/// Table-II evaluation; quantifiers fold componentwise min/max over the
/// domain. Throws EvalError for unbound variables and unknown symbols.
NeutroTriple eval(const Formula& f, const Interpretation& m, const VarAssignment& e = {});

enum class Verdict { holds_in_all_samples, counterexample_found };

struct FoCounterexample {
    std::size_t sample_index = 0;
    Interpretation interpretation;
    NeutroTriple value;
};

struct FoCheckReport {
    Verdict verdict = Verdict::holds_in_all_samples;
    std::size_t samples_tried = 0;
    std::uint64_t seed = 0;
    SampleMode mode = SampleMode::scalar;
    double eps = 1e-9;
    std::optional<FoCounterexample> counterexample;
};

struct SatReport {
    bool witness_found = false;
    std::size_t samples_tried = 0;
    std::uint64_t seed = 0;
    SampleMode mode = SampleMode::scalar;
    double eps = 1e-9;
    std::optional<FoCounterexample> witness;
};

struct FoCheckOptions {
    std::vector<std::size_t> domain_sizes = {1, 2, 3};
    std::size_t n_samples = 2000; // random interpretations per domain size
    std::uint64_t seed = 0;
    double eps = 1e-9;
    SampleMode mode = SampleMode::scalar;
    std::size_t corner_cap = 4096;     // full corner enumeration bound
    std::size_t corner_samples = 2000; // seeded corner draws past the bound
};

/// Sampled refuter/supporter of validity over finite domains. For each
/// requested size: constant tables over every corner triple, then the
/// corner-table grid (enumerated or seeded draws), then random tables.
/// Requires a closed formula.
FoCheckReport check_valid(const Formula& f, const FoCheckOptions& options = {});

/// Searches the same interpretation stream for a model (a designated
/// evaluation). Requires a closed formula.
SatReport check_satisfiable(const Formula& f, const FoCheckOptions& options = {});

} // namespace inlogic::pred
