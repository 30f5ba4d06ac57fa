#include "inlogic/sets.hpp"

#include <set>

#include "inlogic/errors.hpp"

namespace inlogic {

Universe::Universe(std::string name, std::vector<std::string> points)
    : name_(std::move(name)), points_(std::move(points)) {
    if (points_.empty()) throw std::invalid_argument("universe '" + name_ + "' has no points");
    for (std::size_t k = 0; k < points_.size(); ++k) {
        if (!index_.emplace(points_[k], k).second)
            throw std::invalid_argument("universe '" + name_ + "' has duplicate point '" +
                                        points_[k] + "'");
    }
}

std::size_t Universe::index_of(std::string_view label) const {
    auto it = index_.find(label);
    if (it == index_.end())
        throw EvalError("point '" + std::string(label) + "' is not in universe '" + name_ + "'");
    return it->second;
}

InsSet::InsSet(Universe universe, std::vector<NeutroTriple> values)
    : universe_(std::move(universe)), values_(std::move(values)) {
    if (values_.size() != universe_.size())
        throw std::invalid_argument("set over '" + universe_.name() + "' needs " +
                                    std::to_string(universe_.size()) + " values, got " +
                                    std::to_string(values_.size()));
}

InsSet InsSet::constant(Universe universe, const NeutroTriple& v) {
    std::vector<NeutroTriple> values(universe.size(), v);
    return InsSet(std::move(universe), std::move(values));
}

InsRelation::InsRelation(Universe from, Universe to, std::vector<NeutroTriple> values)
    : from_(std::move(from)), to_(std::move(to)), values_(std::move(values)) {
    if (values_.size() != from_.size() * to_.size())
        throw std::invalid_argument("relation over '" + from_.name() + "' x '" + to_.name() +
                                    "' needs " + std::to_string(from_.size() * to_.size()) +
                                    " values, got " + std::to_string(values_.size()));
}

InsRelation InsRelation::constant(Universe from, Universe to, const NeutroTriple& v) {
    std::vector<NeutroTriple> values(from.size() * to.size(), v);
    return InsRelation(std::move(from), std::move(to), std::move(values));
}

namespace {

void require_same_universe(const InsSet& a, const InsSet& b) {
    if (a.universe() != b.universe())
        throw EvalError("universe mismatch: '" + a.universe().name() + "' vs '" +
                        b.universe().name() + "'");
}

InsSet pointwise(const InsSet& a, NeutroTriple (*op)(const NeutroTriple&)) {
    std::vector<NeutroTriple> out;
    out.reserve(a.values().size());
    for (const auto& v : a.values()) out.push_back(op(v));
    return InsSet(a.universe(), std::move(out));
}

InsSet pointwise(const InsSet& a, const InsSet& b,
                 NeutroTriple (*op)(const NeutroTriple&, const NeutroTriple&)) {
    require_same_universe(a, b);
    std::vector<NeutroTriple> out;
    out.reserve(a.values().size());
    for (std::size_t k = 0; k < a.values().size(); ++k)
        out.push_back(op(a.values()[k], b.values()[k]));
    return InsSet(a.universe(), std::move(out));
}

/// sup-min / inf-max fold of one (T,I,F) pair into an accumulator.
NeutroTriple compose_step(const NeutroTriple& acc, const NeutroTriple& a, const NeutroTriple& b) {
    NeutroTriple term = conjunction(a, b); // <min t, min i, max f>
    return NeutroTriple(clamp01(max(acc.t, term.t)), clamp01(max(acc.i, term.i)),
                        clamp01(min(acc.f, term.f)));
}

NeutroTriple compose_identity() {
    // Neutral element of the sup-min / inf-max fold.
    return NeutroTriple(UnitInterval::zero(), UnitInterval::zero(), UnitInterval::one());
}

} // namespace

bool is_empty(const InsSet& a) {
    const NeutroTriple pattern(UnitInterval::zero(), UnitInterval::one(), UnitInterval::zero());
    for (const auto& v : a.values())
        if (v != pattern) return false;
    return true;
}

bool contains(const InsSet& a, const InsSet& b) {
    require_same_universe(a, b);
    for (std::size_t k = 0; k < a.values().size(); ++k)
        if (!leq(a.values()[k], b.values()[k])) return false;
    return true;
}

InsSet complement(const InsSet& a) { return pointwise(a, &inlogic::complement); }

InsSet intersection(const InsSet& a, const InsSet& b) {
    return pointwise(a, b, &inlogic::conjunction);
}

InsSet set_union(const InsSet& a, const InsSet& b) {
    return pointwise(a, b, &inlogic::disjunction);
}

InsSet truth_favorite(const InsSet& a) { return pointwise(a, &inlogic::truth_favorite); }

InsSet false_favorite(const InsSet& a) { return pointwise(a, &inlogic::false_favorite); }

InsRelation compose(const InsRelation& r, const InsRelation& s) {
    if (r.to() != s.from())
        throw EvalError("composition mismatch: '" + r.to().name() + "' vs '" + s.from().name() +
                        "'");
    const std::size_t nx = r.from().size(), ny = r.to().size(), nz = s.to().size();
    std::vector<NeutroTriple> out;
    out.reserve(nx * nz);
    for (std::size_t x = 0; x < nx; ++x) {
        for (std::size_t z = 0; z < nz; ++z) {
            NeutroTriple acc = compose_identity();
            for (std::size_t y = 0; y < ny; ++y) acc = compose_step(acc, r.at(x, y), s.at(y, z));
            out.push_back(acc);
        }
    }
    return InsRelation(r.from(), s.to(), std::move(out));
}

InsSet compose(const InsSet& a, const InsRelation& s) {
    if (a.universe() != s.from())
        throw EvalError("composition mismatch: '" + a.universe().name() + "' vs '" +
                        s.from().name() + "'");
    const std::size_t nx = a.universe().size(), nz = s.to().size();
    std::vector<NeutroTriple> out;
    out.reserve(nz);
    for (std::size_t z = 0; z < nz; ++z) {
        NeutroTriple acc = compose_identity();
        for (std::size_t x = 0; x < nx; ++x) acc = compose_step(acc, a.at(x), s.at(x, z));
        out.push_back(acc);
    }
    return InsSet(Universe(s.to()), std::move(out));
}

} // namespace inlogic
