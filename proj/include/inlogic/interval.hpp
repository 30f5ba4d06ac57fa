#pragma once

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>

#include "inlogic/errors.hpp"

namespace inlogic {

/// Closed real interval [lo, hi]. Immutable; lo <= hi is enforced at
/// construction. The endpoint conventions follow the usual interval
/// arithmetic rules: a + b sums endpoints, a - b crosses them.
class Interval {
public:
    Interval() = default;

    Interval(double lo, double hi) : lo_(lo), hi_(hi) {
        if (std::isnan(lo) || std::isnan(hi))
            throw std::invalid_argument("interval endpoint is NaN");
        if (lo > hi)
            throw std::invalid_argument("interval with lo > hi: [" + std::to_string(lo) + ", " +
                                        std::to_string(hi) + "]");
    }

    static Interval point(double v) { return Interval(v, v); }

    double lo() const { return lo_; }
    double hi() const { return hi_; }
    double midpoint() const { return (lo_ + hi_) / 2.0; }
    double width() const { return hi_ - lo_; }
    bool is_point() const { return lo_ == hi_; }

    friend bool operator==(const Interval& a, const Interval& b) {
        return a.lo_ == b.lo_ && a.hi_ == b.hi_;
    }
    friend bool operator!=(const Interval& a, const Interval& b) { return !(a == b); }

private:
    double lo_ = 0.0;
    double hi_ = 0.0;
};

inline Interval operator+(const Interval& a, const Interval& b) {
    return Interval(a.lo() + b.lo(), a.hi() + b.hi());
}

inline Interval operator-(const Interval& a, const Interval& b) {
    return Interval(a.lo() - b.hi(), a.hi() - b.lo());
}

inline Interval operator-(const Interval& a) { return Interval(-a.hi(), -a.lo()); }

inline Interval min(const Interval& a, const Interval& b) {
    return Interval(std::min(a.lo(), b.lo()), std::min(a.hi(), b.hi()));
}

inline Interval max(const Interval& a, const Interval& b) {
    return Interval(std::max(a.lo(), b.lo()), std::max(a.hi(), b.hi()));
}

/// Endpointwise order: a.lo <= b.lo and a.hi <= b.hi.
inline bool leq(const Interval& a, const Interval& b) {
    return a.lo() <= b.lo() && a.hi() <= b.hi();
}

inline bool approx_eq(const Interval& a, const Interval& b, double eps) {
    return std::fabs(a.lo() - b.lo()) <= eps && std::fabs(a.hi() - b.hi()) <= eps;
}

/// Subinterval of [0, 1]; the carrier of every membership degree.
class UnitInterval : public Interval {
public:
    UnitInterval() = default;

    UnitInterval(double lo, double hi) : Interval(lo, hi) {
        if (lo < 0.0 || hi > 1.0)
            throw std::invalid_argument("unit interval out of [0,1]: [" + std::to_string(lo) +
                                        ", " + std::to_string(hi) + "]");
    }

    explicit UnitInterval(const Interval& iv) : UnitInterval(iv.lo(), iv.hi()) {}

    static UnitInterval point(double v) { return UnitInterval(v, v); }
    static UnitInterval zero() { return UnitInterval(0.0, 0.0); }
    static UnitInterval one() { return UnitInterval(1.0, 1.0); }
};

inline UnitInterval clamp01(const Interval& a) {
    auto clip = [](double v) { return std::max(0.0, std::min(1.0, v)); };
    return UnitInterval(clip(a.lo()), clip(a.hi()));
}

/// <T, I, F>: truth, indeterminacy and falsity degrees of a proposition or
/// of a set at a point. The three components are independent.
struct NeutroTriple {
    UnitInterval t;
    UnitInterval i;
    UnitInterval f;

    NeutroTriple() : t(), i(), f(0.0, 0.0) {}
    NeutroTriple(UnitInterval t_, UnitInterval i_, UnitInterval f_) : t(t_), i(i_), f(f_) {}
    NeutroTriple(double t_, double i_, double f_)
        : t(UnitInterval::point(t_)), i(UnitInterval::point(i_)), f(UnitInterval::point(f_)) {}

    /// The designated truth value <1,1,0>, the top of the component order.
    static NeutroTriple top() { return NeutroTriple(1.0, 1.0, 0.0); }
    /// <0,0,1>, the bottom of the component order.
    static NeutroTriple bottom() { return NeutroTriple(0.0, 0.0, 1.0); }

    friend bool operator==(const NeutroTriple& a, const NeutroTriple& b) {
        return a.t == b.t && a.i == b.i && a.f == b.f;
    }
    friend bool operator!=(const NeutroTriple& a, const NeutroTriple& b) { return !(a == b); }
};

/// Component order: t and i rise, f falls.
inline bool leq(const NeutroTriple& a, const NeutroTriple& b) {
    return leq(a.t, b.t) && leq(a.i, b.i) && leq(b.f, a.f);
}

inline bool approx_eq(const NeutroTriple& a, const NeutroTriple& b, double eps) {
    return approx_eq(a.t, b.t, eps) && approx_eq(a.i, b.i, eps) && approx_eq(a.f, b.f, eps);
}

inline bool is_designated(const NeutroTriple& v, double eps) {
    return approx_eq(v, NeutroTriple::top(), eps);
}

namespace detail {
inline NeutroTriple clamped(const Interval& t, const Interval& i, const Interval& f) {
    return NeutroTriple(clamp01(t), clamp01(i), clamp01(f));
}
inline const Interval& unit1() {
    static const Interval one(1.0, 1.0);
    return one;
}
inline const Interval& unit0() {
    static const Interval zero(0.0, 0.0);
    return zero;
}
} // namespace detail

/// <f, 1-i, t>; doubles as the pointwise set complement.
inline NeutroTriple complement(const NeutroTriple& a) {
    return detail::clamped(a.f, detail::unit1() - a.i, a.t);
}

/// <min t, min i, max f>; doubles as the pointwise set intersection.
inline NeutroTriple conjunction(const NeutroTriple& a, const NeutroTriple& b) {
    return detail::clamped(min(a.t, b.t), min(a.i, b.i), max(a.f, b.f));
}

/// <max t, max i, min f>; doubles as the pointwise set union.
inline NeutroTriple disjunction(const NeutroTriple& a, const NeutroTriple& b) {
    return detail::clamped(max(a.t, b.t), max(a.i, b.i), min(a.f, b.f));
}

/// <min(1, 1-t(p)+t(q)), min(1, 1-i(p)+i(q)), max(0, f(q)-f(p))>.
inline NeutroTriple implication(const NeutroTriple& a, const NeutroTriple& b) {
    return detail::clamped(min(detail::unit1(), detail::unit1() - a.t + b.t),
                           min(detail::unit1(), detail::unit1() - a.i + b.i),
                           max(detail::unit0(), b.f - a.f));
}

/// <min(1-t(p)+t(q), 1-t(q)+t(p)), same for i, max(f(p)-f(q), f(q)-f(p))>.
inline NeutroTriple biimplication(const NeutroTriple& a, const NeutroTriple& b) {
    return detail::clamped(
        min(detail::unit1() - a.t + b.t, detail::unit1() - b.t + a.t),
        min(detail::unit1() - a.i + b.i, detail::unit1() - b.i + a.i),
        max(a.f - b.f, b.f - a.f));
}

/// Folds indeterminacy into truth: <min(1, t+i), [0,0], f>.
inline NeutroTriple truth_favorite(const NeutroTriple& a) {
    return detail::clamped(min(detail::unit1(), a.t + a.i), detail::unit0(), a.f);
}

/// Folds indeterminacy into falsity: <t, [0,0], min(1, f+i)>.
inline NeutroTriple false_favorite(const NeutroTriple& a) {
    return detail::clamped(a.t, detail::unit0(), min(detail::unit1(), a.f + a.i));
}

inline std::string format_real(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

inline std::string to_string(const Interval& a) {
    return "[" + format_real(a.lo()) + "," + format_real(a.hi()) + "]";
}

inline std::string to_string(const NeutroTriple& v) {
    return "t=" + to_string(v.t) + " i=" + to_string(v.i) + " f=" + to_string(v.f);
}

} // namespace inlogic
