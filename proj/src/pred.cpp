#include "inlogic/pred.hpp"

#include <cctype>
#include <functional>

#include "inlogic/errors.hpp"

namespace inlogic::pred {

bool is_variable_name(std::string_view name) {
    return !name.empty() && name[0] >= 'u' && name[0] <= 'z';
}

bool equal(const Term& a, const Term& b) {
    if (a.kind != b.kind || a.name != b.name || a.args.size() != b.args.size()) return false;
    for (std::size_t k = 0; k < a.args.size(); ++k)
        if (!equal(a.args[k], b.args[k])) return false;
    return true;
}

std::string to_string(const Term& t) {
    std::string out = t.name;
    if (t.kind == Term::Kind::function) {
        out += '(';
        for (std::size_t k = 0; k < t.args.size(); ++k) {
            if (k) out += ',';
            out += to_string(t.args[k]);
        }
        out += ')';
    }
    return out;
}

FormulaPtr Formula::atom(std::string pred, std::vector<Term> args) {
    auto f = std::make_shared<Formula>();
    f->kind = Kind::atom;
    f->name = std::move(pred);
    f->args = std::move(args);
    return f;
}

FormulaPtr Formula::constant(bool value) {
    auto f = std::make_shared<Formula>();
    f->kind = Kind::constant;
    f->value = value;
    return f;
}

namespace {
FormulaPtr make_node(Formula::Kind kind, FormulaPtr lhs, FormulaPtr rhs) {
    auto f = std::make_shared<Formula>();
    f->kind = kind;
    f->lhs = std::move(lhs);
    f->rhs = std::move(rhs);
    return f;
}

FormulaPtr make_quantifier(Formula::Kind kind, std::string var, FormulaPtr body) {
    auto f = std::make_shared<Formula>();
    f->kind = kind;
    f->name = std::move(var);
    f->lhs = std::move(body);
    return f;
}
} // namespace

FormulaPtr Formula::negation(FormulaPtr a) {
    return make_node(Kind::negation, std::move(a), nullptr);
}
FormulaPtr Formula::conjunction(FormulaPtr a, FormulaPtr b) {
    return make_node(Kind::conjunction, std::move(a), std::move(b));
}
FormulaPtr Formula::disjunction(FormulaPtr a, FormulaPtr b) {
    return make_node(Kind::disjunction, std::move(a), std::move(b));
}
FormulaPtr Formula::implication(FormulaPtr a, FormulaPtr b) {
    return make_node(Kind::implication, std::move(a), std::move(b));
}
FormulaPtr Formula::biimplication(FormulaPtr a, FormulaPtr b) {
    return make_node(Kind::biimplication, std::move(a), std::move(b));
}
FormulaPtr Formula::forall(std::string var, FormulaPtr body) {
    return make_quantifier(Kind::forall, std::move(var), std::move(body));
}
FormulaPtr Formula::exists(std::string var, FormulaPtr body) {
    return make_quantifier(Kind::exists, std::move(var), std::move(body));
}

bool equal(const Formula& a, const Formula& b) {
    if (a.kind != b.kind) return false;
    switch (a.kind) {
    case Formula::Kind::atom: {
        if (a.name != b.name || a.args.size() != b.args.size()) return false;
        for (std::size_t k = 0; k < a.args.size(); ++k)
            if (!equal(a.args[k], b.args[k])) return false;
        return true;
    }
    case Formula::Kind::constant: return a.value == b.value;
    case Formula::Kind::negation: return equal(*a.lhs, *b.lhs);
    case Formula::Kind::forall:
    case Formula::Kind::exists: return a.name == b.name && equal(*a.lhs, *b.lhs);
    default: return equal(*a.lhs, *b.lhs) && equal(*a.rhs, *b.rhs);
    }
}

// ---------------------------------------------------------------------------
// Lexing and parsing

namespace {

enum class Tok { ident, k_true, k_false, k_forall, k_exists, bang, amp, pipe, arrow, darrow,
                 lparen, rparen, comma, dot, end };

struct Token {
    Tok kind;
    std::string text;
    std::size_t pos;
};

class Lexer {
public:
    explicit Lexer(std::string_view text) : text_(text) {}

    Token next() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        std::size_t start = pos_;
        if (pos_ >= text_.size()) return {Tok::end, "", start};
        char c = text_[pos_];
        switch (c) {
        case '(': return ++pos_, Token{Tok::lparen, "(", start};
        case ')': return ++pos_, Token{Tok::rparen, ")", start};
        case ',': return ++pos_, Token{Tok::comma, ",", start};
        case '.': return ++pos_, Token{Tok::dot, ".", start};
        case '!': return ++pos_, Token{Tok::bang, "!", start};
        case '&': return ++pos_, Token{Tok::amp, "&", start};
        case '|': return ++pos_, Token{Tok::pipe, "|", start};
        case '-':
            if (pos_ + 1 < text_.size() && text_[pos_ + 1] == '>')
                return pos_ += 2, Token{Tok::arrow, "->", start};
            throw ParseError("stray '-'", start);
        case '<':
            if (pos_ + 2 < text_.size() && text_[pos_ + 1] == '-' && text_[pos_ + 2] == '>')
                return pos_ += 3, Token{Tok::darrow, "<->", start};
            throw ParseError("stray '<'", start);
        default: break;
        }
        if (std::isalnum(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t len = 1;
            while (start + len < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[start + len])) ||
                    text_[start + len] == '_'))
                ++len;
            pos_ = start + len;
            std::string word(text_.substr(start, len));
            if (word == "true") return {Tok::k_true, word, start};
            if (word == "false") return {Tok::k_false, word, start};
            if (word == "forall") return {Tok::k_forall, word, start};
            if (word == "exists") return {Tok::k_exists, word, start};
            return {Tok::ident, word, start};
        }
        throw ParseError(std::string("unexpected character '") + c + "'", start);
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;
};

class Parser {
public:
    explicit Parser(std::string_view text) : lexer_(text) { advance(); }

    FormulaPtr parse_all() {
        FormulaPtr f = parse_impl_tier();
        expect(Tok::end, "end of input");
        return f;
    }

private:
    void advance() { tok_ = lexer_.next(); }

    void expect(Tok kind, const char* what) {
        if (tok_.kind != kind)
            throw ParseError(std::string("expected ") + what + ", found '" +
                                 (tok_.kind == Tok::end ? "<end>" : tok_.text) + "'",
                             tok_.pos);
    }

    FormulaPtr parse_impl_tier() {
        FormulaPtr lhs = parse_and_or_tier();
        if (tok_.kind == Tok::arrow) {
            advance();
            return Formula::implication(std::move(lhs), parse_impl_tier());
        }
        if (tok_.kind == Tok::darrow) {
            advance();
            return Formula::biimplication(std::move(lhs), parse_impl_tier());
        }
        return lhs;
    }

    FormulaPtr parse_and_or_tier() {
        FormulaPtr lhs = parse_unary();
        while (tok_.kind == Tok::amp || tok_.kind == Tok::pipe) {
            bool conj = tok_.kind == Tok::amp;
            advance();
            FormulaPtr rhs = parse_unary();
            lhs = conj ? Formula::conjunction(std::move(lhs), std::move(rhs))
                       : Formula::disjunction(std::move(lhs), std::move(rhs));
        }
        return lhs;
    }

    // Quantifiers sit in the negation tier; their scope is one unary.
    FormulaPtr parse_unary() {
        if (tok_.kind == Tok::bang) {
            advance();
            return Formula::negation(parse_unary());
        }
        if (tok_.kind == Tok::k_forall || tok_.kind == Tok::k_exists) {
            bool universal = tok_.kind == Tok::k_forall;
            advance();
            expect(Tok::ident, "a variable");
            std::string var = tok_.text;
            std::size_t var_pos = tok_.pos;
            if (!is_variable_name(var))
                throw ParseError("'" + var + "' cannot be quantified: variables start with u..z",
                                 var_pos);
            advance();
            expect(Tok::dot, "'.'");
            advance();
            FormulaPtr body = parse_unary();
            return universal ? Formula::forall(std::move(var), std::move(body))
                             : Formula::exists(std::move(var), std::move(body));
        }
        return parse_atom();
    }

    FormulaPtr parse_atom() {
        switch (tok_.kind) {
        case Tok::k_true: advance(); return Formula::constant(true);
        case Tok::k_false: advance(); return Formula::constant(false);
        case Tok::ident: {
            std::string name = tok_.text;
            advance();
            std::vector<Term> args;
            if (tok_.kind == Tok::lparen) args = parse_arg_list();
            return Formula::atom(std::move(name), std::move(args));
        }
        case Tok::lparen: {
            advance();
            FormulaPtr f = parse_impl_tier();
            expect(Tok::rparen, "')'");
            advance();
            return f;
        }
        default:
            throw ParseError("expected a formula, found '" +
                                 (tok_.kind == Tok::end ? "<end>" : tok_.text) + "'",
                             tok_.pos);
        }
    }

    std::vector<Term> parse_arg_list() {
        expect(Tok::lparen, "'('");
        advance();
        std::vector<Term> args;
        args.push_back(parse_term());
        while (tok_.kind == Tok::comma) {
            advance();
            args.push_back(parse_term());
        }
        expect(Tok::rparen, "')'");
        advance();
        return args;
    }

    Term parse_term() {
        expect(Tok::ident, "a term");
        std::string name = tok_.text;
        advance();
        if (tok_.kind == Tok::lparen) return Term::function(std::move(name), parse_arg_list());
        if (is_variable_name(name)) return Term::var(std::move(name));
        return Term::constant(std::move(name));
    }

    Lexer lexer_;
    Token tok_{Tok::end, "", 0};
};

int tier_of(Formula::Kind kind) {
    switch (kind) {
    case Formula::Kind::implication:
    case Formula::Kind::biimplication: return 1;
    case Formula::Kind::conjunction:
    case Formula::Kind::disjunction: return 2;
    default: return 3;
    }
}

void print(const Formula& f, std::string& out) {
    auto child = [&out](const Formula& c, bool parens) {
        if (parens) out += '(';
        print(c, out);
        if (parens) out += ')';
    };
    switch (f.kind) {
    case Formula::Kind::atom: {
        out += f.name;
        if (!f.args.empty()) {
            out += '(';
            for (std::size_t k = 0; k < f.args.size(); ++k) {
                if (k) out += ',';
                out += to_string(f.args[k]);
            }
            out += ')';
        }
        return;
    }
    case Formula::Kind::constant: out += f.value ? "true" : "false"; return;
    case Formula::Kind::negation:
        out += '!';
        child(*f.lhs, tier_of(f.lhs->kind) < 3);
        return;
    case Formula::Kind::forall:
    case Formula::Kind::exists:
        out += f.kind == Formula::Kind::forall ? "forall " : "exists ";
        out += f.name;
        out += ". ";
        child(*f.lhs, tier_of(f.lhs->kind) < 3);
        return;
    case Formula::Kind::conjunction:
    case Formula::Kind::disjunction:
        child(*f.lhs, tier_of(f.lhs->kind) < 2);
        out += f.kind == Formula::Kind::conjunction ? " & " : " | ";
        child(*f.rhs, tier_of(f.rhs->kind) <= 2);
        return;
    case Formula::Kind::implication:
    case Formula::Kind::biimplication:
        child(*f.lhs, tier_of(f.lhs->kind) <= 1);
        out += f.kind == Formula::Kind::implication ? " -> " : " <-> ";
        print(*f.rhs, out);
        return;
    }
}

} // namespace

FormulaPtr parse(std::string_view text) { return Parser(text).parse_all(); }

std::string to_string(const Formula& f) {
    std::string out;
    print(f, out);
    return out;
}

// ---------------------------------------------------------------------------
// Scope analysis

namespace {

void walk_term(const Term& t, const std::set<std::string>& bound, std::size_t& position,
               std::vector<Occurrence>& out) {
    if (t.kind == Term::Kind::variable) {
        out.push_back({t.name, position++, bound.count(t.name) > 0});
        return;
    }
    for (const auto& arg : t.args) walk_term(arg, bound, position, out);
}

void walk(const Formula& f, std::set<std::string>& bound, std::size_t& position,
          std::vector<Occurrence>& out) {
    switch (f.kind) {
    case Formula::Kind::atom:
        for (const auto& arg : f.args) walk_term(arg, bound, position, out);
        return;
    case Formula::Kind::constant: return;
    case Formula::Kind::negation: walk(*f.lhs, bound, position, out); return;
    case Formula::Kind::forall:
    case Formula::Kind::exists: {
        out.push_back({f.name, position++, true}); // the binder occurrence itself
        bool fresh = bound.insert(f.name).second;
        walk(*f.lhs, bound, position, out);
        if (fresh) bound.erase(f.name);
        return;
    }
    default:
        walk(*f.lhs, bound, position, out);
        walk(*f.rhs, bound, position, out);
    }
}

} // namespace

std::vector<Occurrence> variable_occurrences(const Formula& f) {
    std::vector<Occurrence> out;
    std::set<std::string> bound;
    std::size_t position = 0;
    walk(f, bound, position, out);
    return out;
}

std::vector<Occurrence> bound_occurrences(const Formula& f) {
    std::vector<Occurrence> out;
    for (auto& occ : variable_occurrences(f))
        if (occ.bound) out.push_back(occ);
    return out;
}

std::set<std::string> free_vars(const Formula& f) {
    std::set<std::string> out;
    for (auto& occ : variable_occurrences(f))
        if (!occ.bound) out.insert(occ.name);
    return out;
}

// ---------------------------------------------------------------------------
// Evaluation

std::string symbol_key(std::string_view name, std::size_t arity) {
    return std::string(name) + "/" + std::to_string(arity);
}

std::size_t Interpretation::table_index(const std::vector<std::size_t>& elems) const {
    std::size_t idx = 0;
    for (std::size_t e : elems) idx = idx * domain.size() + e;
    return idx;
}

namespace {

std::size_t eval_term(const Term& t, const Interpretation& m, const VarAssignment& e) {
    switch (t.kind) {
    case Term::Kind::variable: {
        auto it = e.find(t.name);
        if (it == e.end()) throw EvalError("unbound variable '" + t.name + "'");
        return it->second;
    }
    case Term::Kind::constant: {
        auto it = m.constants.find(t.name);
        if (it == m.constants.end()) throw EvalError("unknown constant '" + t.name + "'");
        return it->second;
    }
    case Term::Kind::function: {
        auto it = m.functions.find(symbol_key(t.name, t.args.size()));
        if (it == m.functions.end())
            throw EvalError("unknown function '" + symbol_key(t.name, t.args.size()) + "'");
        std::vector<std::size_t> elems;
        elems.reserve(t.args.size());
        for (const auto& arg : t.args) elems.push_back(eval_term(arg, m, e));
        return it->second.at(m.table_index(elems));
    }
    }
    throw EvalError("corrupt term node");
}

NeutroTriple eval_rec(const Formula& f, const Interpretation& m, VarAssignment& e) {
    switch (f.kind) {
    case Formula::Kind::atom: {
        auto it = m.predicates.find(symbol_key(f.name, f.args.size()));
        if (it == m.predicates.end())
            throw EvalError("unknown predicate '" + symbol_key(f.name, f.args.size()) + "'");
        std::vector<std::size_t> elems;
        elems.reserve(f.args.size());
        for (const auto& arg : f.args) elems.push_back(eval_term(arg, m, e));
        return it->second.at(m.table_index(elems));
    }
    case Formula::Kind::constant:
        return f.value ? NeutroTriple::top() : NeutroTriple::bottom();
    case Formula::Kind::negation: return complement(eval_rec(*f.lhs, m, e));
    case Formula::Kind::conjunction:
        return conjunction(eval_rec(*f.lhs, m, e), eval_rec(*f.rhs, m, e));
    case Formula::Kind::disjunction:
        return disjunction(eval_rec(*f.lhs, m, e), eval_rec(*f.rhs, m, e));
    case Formula::Kind::implication:
        return implication(eval_rec(*f.lhs, m, e), eval_rec(*f.rhs, m, e));
    case Formula::Kind::biimplication:
        return biimplication(eval_rec(*f.lhs, m, e), eval_rec(*f.rhs, m, e));
    case Formula::Kind::forall:
    case Formula::Kind::exists: {
        if (m.domain.empty()) throw EvalError("interpretation has an empty domain");
        std::optional<std::size_t> saved;
        if (auto it = e.find(f.name); it != e.end()) saved = it->second;
        NeutroTriple acc;
        for (std::size_t d = 0; d < m.domain.size(); ++d) {
            e[f.name] = d;
            NeutroTriple v = eval_rec(*f.lhs, m, e);
            if (d == 0)
                acc = v;
            else
                acc = f.kind == Formula::Kind::forall ? conjunction(acc, v) : disjunction(acc, v);
        }
        if (saved)
            e[f.name] = *saved;
        else
            e.erase(f.name);
        return acc;
    }
    }
    throw EvalError("corrupt formula node");
}

} // namespace

NeutroTriple eval(const Formula& f, const Interpretation& m, const VarAssignment& e) {
    VarAssignment env = e;
    return eval_rec(f, m, env);
}

// ---------------------------------------------------------------------------
// Sampled validity / satisfiability

namespace {

struct Signature {
    std::set<std::string> constants;
    std::set<std::pair<std::string, std::size_t>> functions;
    std::set<std::pair<std::string, std::size_t>> predicates;
};

void collect_term(const Term& t, Signature& sig) {
    switch (t.kind) {
    case Term::Kind::variable: return;
    case Term::Kind::constant: sig.constants.insert(t.name); return;
    case Term::Kind::function:
        sig.functions.insert({t.name, t.args.size()});
        for (const auto& arg : t.args) collect_term(arg, sig);
    }
}

void collect(const Formula& f, Signature& sig) {
    switch (f.kind) {
    case Formula::Kind::atom:
        sig.predicates.insert({f.name, f.args.size()});
        for (const auto& arg : f.args) collect_term(arg, sig);
        return;
    case Formula::Kind::constant: return;
    case Formula::Kind::negation:
    case Formula::Kind::forall:
    case Formula::Kind::exists: collect(*f.lhs, sig); return;
    default:
        collect(*f.lhs, sig);
        collect(*f.rhs, sig);
    }
}

std::size_t pow_size(std::size_t base, std::size_t exp) {
    std::size_t out = 1;
    for (std::size_t k = 0; k < exp; ++k) out *= base;
    return out;
}

std::vector<std::string> make_domain(std::size_t n) {
    std::vector<std::string> out;
    out.reserve(n);
    for (std::size_t k = 1; k <= n; ++k) out.push_back(std::to_string(k));
    return out;
}

/// Skeleton interpretation with correctly-sized (but unfilled) tables.
Interpretation make_skeleton(const Signature& sig, std::size_t n) {
    Interpretation m;
    m.domain = make_domain(n);
    for (const auto& c : sig.constants) m.constants[c] = 0;
    for (const auto& [name, arity] : sig.functions)
        m.functions[symbol_key(name, arity)].assign(pow_size(n, arity), 0);
    for (const auto& [name, arity] : sig.predicates)
        m.predicates[symbol_key(name, arity)].assign(pow_size(n, arity), NeutroTriple());
    return m;
}

void fill_random(Interpretation& m, sampling::Rng& rng, SampleMode mode, bool corner_values) {
    const std::size_t n = m.domain.size();
    for (auto& [key, idx] : m.constants) idx = rng.next_index(n);
    for (auto& [key, table] : m.functions)
        for (auto& cell : table) cell = rng.next_index(n);
    for (auto& [key, table] : m.predicates)
        for (auto& cell : table)
            cell = corner_values ? sampling::random_corner_triple(rng, mode)
                                 : sampling::random_triple(rng, mode);
}

/// Visits interpretations for one domain size in a deterministic order.
/// Phase A: all-constant predicate tables over each corner triple.
/// Phase B: the corner-table grid, enumerated when it fits under
/// corner_cap, otherwise corner_samples seeded draws.
/// Phase C: n_samples random tables.
bool for_each_interpretation(const Signature& sig, std::size_t domain_size,
                             const FoCheckOptions& opts, std::size_t& index,
                             const std::function<bool(std::size_t, const Interpretation&)>& visit) {
    const auto corners = sampling::corner_triples(opts.mode);
    Interpretation m = make_skeleton(sig, domain_size);

    if (sig.constants.empty() && sig.functions.empty() && sig.predicates.empty())
        return visit(index++, m);

    std::size_t pred_cells = 0;
    for (const auto& [key, table] : m.predicates) pred_cells += table.size();

    for (const auto& c : corners) {
        for (auto& [key, table] : m.predicates)
            for (auto& cell : table) cell = c;
        if (!visit(index++, m)) return false;
    }

    std::size_t total = 1;
    bool overflow = pred_cells == 0;
    for (std::size_t k = 0; k < pred_cells && !overflow; ++k) {
        if (total > opts.corner_cap / corners.size()) overflow = true;
        else total *= corners.size();
    }
    if (!overflow && total <= opts.corner_cap) {
        for (std::size_t code = 0; code < total; ++code) {
            std::size_t rest = code;
            for (auto& [key, table] : m.predicates)
                for (auto& cell : table) {
                    cell = corners[rest % corners.size()];
                    rest /= corners.size();
                }
            if (!visit(index++, m)) return false;
        }
    } else if (pred_cells > 0) {
        for (std::size_t j = 0; j < opts.corner_samples; ++j) {
            sampling::Rng rng(
                sampling::derive_seed(opts.seed ^ (0xC044E4ULL + domain_size), j));
            fill_random(m, rng, opts.mode, /*corner_values=*/true);
            if (!visit(index++, m)) return false;
        }
    }

    for (std::size_t j = 0; j < opts.n_samples; ++j) {
        sampling::Rng rng(sampling::derive_seed(opts.seed + domain_size, j));
        fill_random(m, rng, opts.mode, /*corner_values=*/false);
        if (!visit(index++, m)) return false;
    }
    return true;
}

void require_closed(const Formula& f) {
    auto free = free_vars(f);
    if (!free.empty()) throw EvalError("formula is open: '" + *free.begin() + "' occurs free");
}

} // namespace

FoCheckReport check_valid(const Formula& f, const FoCheckOptions& opts) {
    require_closed(f);
    Signature sig;
    collect(f, sig);

    FoCheckReport rep;
    rep.seed = opts.seed;
    rep.mode = opts.mode;
    rep.eps = opts.eps;

    std::size_t index = 0;
    for (std::size_t n : opts.domain_sizes) {
        bool keep_going =
            for_each_interpretation(sig, n, opts, index, [&](std::size_t i, const Interpretation& m) {
                NeutroTriple v = eval(f, m);
                if (!is_designated(v, opts.eps)) {
                    rep.verdict = Verdict::counterexample_found;
                    rep.counterexample = FoCounterexample{i, m, v};
                    return false;
                }
                return true;
            });
        if (!keep_going) break;
    }
    rep.samples_tried = index;
    return rep;
}

SatReport check_satisfiable(const Formula& f, const FoCheckOptions& opts) {
    require_closed(f);
    Signature sig;
    collect(f, sig);

    SatReport rep;
    rep.seed = opts.seed;
    rep.mode = opts.mode;
    rep.eps = opts.eps;

    std::size_t index = 0;
    for (std::size_t n : opts.domain_sizes) {
        bool keep_going =
            for_each_interpretation(sig, n, opts, index, [&](std::size_t i, const Interpretation& m) {
                NeutroTriple v = eval(f, m);
                if (is_designated(v, opts.eps)) {
                    rep.witness_found = true;
                    rep.witness = FoCounterexample{i, m, v};
                    return false;
                }
                return true;
            });
        if (!keep_going) break;
    }
    rep.samples_tried = index;
    return rep;
}

} // namespace inlogic::pred
