#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "inlogic/interval.hpp"

namespace inlogic {

/// Finite space of points. Point order is fixed and significant (it drives
/// value storage and serialization).
class Universe {
public:
    Universe(std::string name, std::vector<std::string> points);

    const std::string& name() const { return name_; }
    const std::vector<std::string>& points() const { return points_; }
    std::size_t size() const { return points_.size(); }

    /// Index of a point label; throws EvalError for unknown labels.
    std::size_t index_of(std::string_view label) const;

    friend bool operator==(const Universe& a, const Universe& b) {
        return a.name_ == b.name_ && a.points_ == b.points_;
    }
    friend bool operator!=(const Universe& a, const Universe& b) { return !(a == b); }

private:
    std::string name_;
    std::vector<std::string> points_;
    std::map<std::string, std::size_t, std::less<>> index_;
};

/// Interval neutrosophic set on a finite universe: one triple per point.
class InsSet {
public:
    InsSet(Universe universe, std::vector<NeutroTriple> values);

    static InsSet constant(Universe universe, const NeutroTriple& v);

    const Universe& universe() const { return universe_; }
    const std::vector<NeutroTriple>& values() const { return values_; }
    const NeutroTriple& at(std::size_t idx) const { return values_.at(idx); }
    const NeutroTriple& at(std::string_view label) const {
        return values_[universe_.index_of(label)];
    }

    friend bool operator==(const InsSet& a, const InsSet& b) {
        return a.universe_ == b.universe_ && a.values_ == b.values_;
    }
    friend bool operator!=(const InsSet& a, const InsSet& b) { return !(a == b); }

private:
    Universe universe_;
    std::vector<NeutroTriple> values_;
};

/// Interval neutrosophic relation on from x to; values stored row-major.
class InsRelation {
public:
    InsRelation(Universe from, Universe to, std::vector<NeutroTriple> values);

    static InsRelation constant(Universe from, Universe to, const NeutroTriple& v);

    const Universe& from() const { return from_; }
    const Universe& to() const { return to_; }
    const std::vector<NeutroTriple>& values() const { return values_; }
    const NeutroTriple& at(std::size_t row, std::size_t col) const {
        return values_[row * to_.size() + col];
    }
    const NeutroTriple& at(std::string_view x, std::string_view y) const {
        return at(from_.index_of(x), to_.index_of(y));
    }

    friend bool operator==(const InsRelation& a, const InsRelation& b) {
        return a.from_ == b.from_ && a.to_ == b.to_ && a.values_ == b.values_;
    }

private:
    Universe from_;
    Universe to_;
    std::vector<NeutroTriple> values_;
};

/// True iff every point carries the distinguished empty pattern
/// <[0,0],[1,1],[0,0]>. Note this is not the bottom element <0,0,1>.
bool is_empty(const InsSet& a);

/// Pointwise component order; a and b must share a universe.
bool contains(const InsSet& a, const InsSet& b);

InsSet complement(const InsSet& a);
InsSet intersection(const InsSet& a, const InsSet& b);
InsSet set_union(const InsSet& a, const InsSet& b);
InsSet truth_favorite(const InsSet& a);
InsSet false_favorite(const InsSet& a);

/// Sup-star composition: sup-min for T and I, inf-max for F.
InsRelation compose(const InsRelation& r, const InsRelation& s);
InsSet compose(const InsSet& a, const InsRelation& s);

inline bool operator<=(const InsSet& a, const InsSet& b) { return contains(a, b); }
inline InsSet operator~(const InsSet& a) { return complement(a); }
inline InsSet operator&(const InsSet& a, const InsSet& b) { return intersection(a, b); }
inline InsSet operator|(const InsSet& a, const InsSet& b) { return set_union(a, b); }

} // namespace inlogic
