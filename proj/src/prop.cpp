#include "inlogic/prop.hpp"

#include <cctype>
#include <functional>
#include <set>

#include "inlogic/errors.hpp"

namespace inlogic::prop {

FormulaPtr Formula::var(std::string name) {
    auto f = std::make_shared<Formula>();
    f->kind = Kind::variable;
    f->name = std::move(name);
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

bool equal(const Formula& a, const Formula& b) {
    if (a.kind != b.kind) return false;
    switch (a.kind) {
    case Formula::Kind::variable: return a.name == b.name;
    case Formula::Kind::constant: return a.value == b.value;
    case Formula::Kind::negation: return equal(*a.lhs, *b.lhs);
    default: return equal(*a.lhs, *b.lhs) && equal(*a.rhs, *b.rhs);
    }
}

// ---------------------------------------------------------------------------
// Lexing and parsing

namespace {

enum class Tok { ident, k_true, k_false, bang, amp, pipe, arrow, darrow, lparen, rparen, end };

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
        if (c == '(') return ++pos_, Token{Tok::lparen, "(", start};
        if (c == ')') return ++pos_, Token{Tok::rparen, ")", start};
        if (c == '!') return ++pos_, Token{Tok::bang, "!", start};
        if (c == '&') return ++pos_, Token{Tok::amp, "&", start};
        if (c == '|') return ++pos_, Token{Tok::pipe, "|", start};
        if (c == '-') {
            if (pos_ + 1 < text_.size() && text_[pos_ + 1] == '>')
                return pos_ += 2, Token{Tok::arrow, "->", start};
            throw ParseError("stray '-'", start);
        }
        if (c == '<') {
            if (pos_ + 2 < text_.size() && text_[pos_ + 1] == '-' && text_[pos_ + 2] == '>')
                return pos_ += 3, Token{Tok::darrow, "<->", start};
            throw ParseError("stray '<'", start);
        }
        if (c >= 'a' && c <= 'z') {
            std::size_t len = 1;
            while (start + len < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[start + len])) ||
                    text_[start + len] == '_'))
                ++len;
            pos_ = start + len;
            std::string word(text_.substr(start, len));
            if (word == "true") return {Tok::k_true, word, start};
            if (word == "false") return {Tok::k_false, word, start};
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

    // Lowest tier, right-associative: a -> b <-> c parses as a -> (b <-> c).
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

    // One shared tier, left-associative: p & q | r parses as (p & q) | r.
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

    FormulaPtr parse_unary() {
        if (tok_.kind == Tok::bang) {
            advance();
            return Formula::negation(parse_unary());
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
            return Formula::var(std::move(name));
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
    case Formula::Kind::variable: out += f.name; return;
    case Formula::Kind::constant: out += f.value ? "true" : "false"; return;
    case Formula::Kind::negation:
        out += '!';
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
        print(*f.rhs, out); // right-associative, no parens needed
        return;
    }
}

void collect_variables(const Formula& f, std::set<std::string>& out) {
    switch (f.kind) {
    case Formula::Kind::variable: out.insert(f.name); return;
    case Formula::Kind::constant: return;
    case Formula::Kind::negation: collect_variables(*f.lhs, out); return;
    default:
        collect_variables(*f.lhs, out);
        collect_variables(*f.rhs, out);
    }
}

} // namespace

FormulaPtr parse(std::string_view text) { return Parser(text).parse_all(); }

std::string to_string(const Formula& f) {
    std::string out;
    print(f, out);
    return out;
}

std::vector<std::string> variables(const Formula& f) {
    std::set<std::string> names;
    collect_variables(f, names);
    return {names.begin(), names.end()};
}

NeutroTriple eval(const Formula& f, const Interpretation& m) {
    switch (f.kind) {
    case Formula::Kind::variable: {
        auto it = m.find(f.name);
        if (it == m.end()) throw EvalError("unbound variable '" + f.name + "'");
        return it->second;
    }
    case Formula::Kind::constant:
        return f.value ? NeutroTriple::top() : NeutroTriple::bottom();
    case Formula::Kind::negation: return complement(eval(*f.lhs, m));
    case Formula::Kind::conjunction: return conjunction(eval(*f.lhs, m), eval(*f.rhs, m));
    case Formula::Kind::disjunction: return disjunction(eval(*f.lhs, m), eval(*f.rhs, m));
    case Formula::Kind::implication: return implication(eval(*f.lhs, m), eval(*f.rhs, m));
    case Formula::Kind::biimplication: return biimplication(eval(*f.lhs, m), eval(*f.rhs, m));
    }
    throw EvalError("corrupt formula node");
}

// ---------------------------------------------------------------------------
// Sampling checkers

namespace {

constexpr std::uint64_t kCornerStreamTag = 0xC044E4ULL;

/// Visits interpretations over `vars` in a deterministic order: the corner
/// grid (enumerated when small enough, otherwise seeded corner draws),
/// then `n_samples` random interpretations. Stops early when `visit`
/// returns false. Returns the number of interpretations visited.
std::size_t for_each_interpretation(
    const std::vector<std::string>& vars, const CheckOptions& opts,
    const std::function<bool(std::size_t, const Interpretation&)>& visit) {
    std::size_t index = 0;
    Interpretation m;

    if (vars.empty()) {
        visit(index, m);
        return 1;
    }

    const auto corners = sampling::corner_triples(opts.mode);

    // Does |corners|^|vars| fit under the cap?
    std::size_t total = 1;
    bool overflow = false;
    for (std::size_t k = 0; k < vars.size(); ++k) {
        if (total > opts.corner_cap / corners.size()) {
            overflow = true;
            break;
        }
        total *= corners.size();
    }

    if (!overflow && total <= opts.corner_cap) {
        for (std::size_t code = 0; code < total; ++code) {
            std::size_t rest = code;
            for (const auto& var : vars) {
                m[var] = corners[rest % corners.size()];
                rest /= corners.size();
            }
            if (!visit(index, m)) return index + 1;
            ++index;
        }
    } else {
        for (std::size_t j = 0; j < opts.corner_cap; ++j) {
            sampling::Rng rng(sampling::derive_seed(opts.seed ^ kCornerStreamTag, j));
            for (const auto& var : vars) m[var] = sampling::random_corner_triple(rng, opts.mode);
            if (!visit(index, m)) return index + 1;
            ++index;
        }
    }

    for (std::size_t j = 0; j < opts.n_samples; ++j) {
        sampling::Rng rng(sampling::derive_seed(opts.seed, j));
        for (const auto& var : vars) m[var] = sampling::random_triple(rng, opts.mode);
        if (!visit(index, m)) return index + 1;
        ++index;
    }
    return index;
}

CheckReport blank_report(const CheckOptions& opts) {
    CheckReport rep;
    rep.seed = opts.seed;
    rep.mode = opts.mode;
    rep.eps = opts.eps;
    return rep;
}

} // namespace

CheckReport check_tautology(const Formula& f, const CheckOptions& opts) {
    CheckReport rep = blank_report(opts);
    rep.samples_tried = for_each_interpretation(
        variables(f), opts, [&](std::size_t index, const Interpretation& m) {
            NeutroTriple v = eval(f, m);
            if (!is_designated(v, opts.eps)) {
                rep.verdict = Verdict::counterexample_found;
                rep.counterexample = Counterexample{index, m, v, std::nullopt};
                return false;
            }
            return true;
        });
    return rep;
}

CheckReport check_equivalence(const Formula& p, const Formula& q, const CheckOptions& opts) {
    std::set<std::string> names;
    for (auto& v : variables(p)) names.insert(v);
    for (auto& v : variables(q)) names.insert(v);
    std::vector<std::string> vars(names.begin(), names.end());

    CheckReport rep = blank_report(opts);
    rep.samples_tried =
        for_each_interpretation(vars, opts, [&](std::size_t index, const Interpretation& m) {
            NeutroTriple vp = eval(p, m);
            NeutroTriple vq = eval(q, m);
            if (!approx_eq(vp, vq, opts.eps)) {
                rep.verdict = Verdict::counterexample_found;
                rep.counterexample = Counterexample{index, m, vp, vq};
                return false;
            }
            return true;
        });
    return rep;
}

CheckReport check_modus_ponens_preservation(const CheckOptions& opts) {
    const std::vector<std::string> vars = {"p", "q"};
    CheckReport rep = blank_report(opts);
    rep.samples_tried =
        for_each_interpretation(vars, opts, [&](std::size_t index, const Interpretation& m) {
            const NeutroTriple& vp = m.at("p");
            const NeutroTriple& vq = m.at("q");
            if (is_designated(vp, opts.eps) && is_designated(implication(vp, vq), opts.eps) &&
                !is_designated(vq, opts.eps)) {
                rep.verdict = Verdict::counterexample_found;
                rep.counterexample = Counterexample{index, m, vq, implication(vp, vq)};
                return false;
            }
            return true;
        });
    return rep;
}

} // namespace inlogic::prop
