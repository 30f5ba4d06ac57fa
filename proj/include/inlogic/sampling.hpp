#pragma once

#include <cstdint>
#include <vector>

#include "inlogic/interval.hpp"

namespace inlogic {

/// Distribution used by the sampling checkers.
///
/// `scalar` draws degenerate triples (one uniform per component) and a
/// corner grid over {0, 0.5, 1}; the schema theorems of the logic hold
/// exactly on this fragment. `interval` draws genuine subintervals (two
/// uniforms sorted) and the full corner grid of the 6 intervals with
/// endpoints in {0, 0.5, 1}; equivalence and monotonicity checks remain
/// exact there, but reflexive implication schemas do not, because
/// composed interval arithmetic widens dependent occurrences.
enum class SampleMode { scalar, interval };

namespace sampling {

/// splitmix64; used to derive independent per-sample generator states so
/// that (seed, index) alone reproduces any sample.
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/// Small deterministic generator; identical streams on every platform.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(splitmix64(seed ^ 0x6a09e667f3bcc909ULL)) {}

    std::uint64_t next_u64() {
        state_ = splitmix64(state_);
        return state_;
    }

    /// Uniform double in [0, 1).
    double next_unit() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    /// Uniform integer in [0, n).
    std::size_t next_index(std::size_t n) { return static_cast<std::size_t>(next_u64() % n); }

    /// Uniform dyadic rational k/256 in [0, 1]; exact in binary, so
    /// algebraic-law tests can assert bitwise equality.
    double next_dyadic() { return static_cast<double>(next_u64() % 257) / 256.0; }

private:
    std::uint64_t state_;
};

inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
    return splitmix64(seed) ^ splitmix64(index * 0x9e3779b97f4a7c15ULL + 1);
}

inline UnitInterval random_unit_interval(Rng& rng, SampleMode mode) {
    if (mode == SampleMode::scalar) return UnitInterval::point(rng.next_unit());
    double a = rng.next_unit();
    double b = rng.next_unit();
    if (a > b) std::swap(a, b);
    return UnitInterval(a, b);
}

inline NeutroTriple random_triple(Rng& rng, SampleMode mode) {
    UnitInterval t = random_unit_interval(rng, mode);
    UnitInterval i = random_unit_interval(rng, mode);
    UnitInterval f = random_unit_interval(rng, mode);
    return NeutroTriple(t, i, f);
}

inline UnitInterval random_dyadic_interval(Rng& rng) {
    double a = rng.next_dyadic();
    double b = rng.next_dyadic();
    if (a > b) std::swap(a, b);
    return UnitInterval(a, b);
}

inline NeutroTriple random_dyadic_triple(Rng& rng) {
    UnitInterval t = random_dyadic_interval(rng);
    UnitInterval i = random_dyadic_interval(rng);
    UnitInterval f = random_dyadic_interval(rng);
    return NeutroTriple(t, i, f);
}

/// The corner values for one component: 3 points in scalar mode, the 6
/// intervals with endpoints in {0, 0.5, 1} in interval mode.
inline const std::vector<UnitInterval>& corner_intervals(SampleMode mode) {
    static const std::vector<UnitInterval> scalar = {
        UnitInterval::point(0.0), UnitInterval::point(0.5), UnitInterval::point(1.0)};
    static const std::vector<UnitInterval> interval = {
        UnitInterval(0.0, 0.0), UnitInterval(0.0, 0.5), UnitInterval(0.0, 1.0),
        UnitInterval(0.5, 0.5), UnitInterval(0.5, 1.0), UnitInterval(1.0, 1.0)};
    return mode == SampleMode::scalar ? scalar : interval;
}

/// All corner triples: 27 in scalar mode, 216 in interval mode.
inline std::vector<NeutroTriple> corner_triples(SampleMode mode) {
    const auto& cs = corner_intervals(mode);
    std::vector<NeutroTriple> out;
    out.reserve(cs.size() * cs.size() * cs.size());
    for (const auto& t : cs)
        for (const auto& i : cs)
            for (const auto& f : cs) out.emplace_back(t, i, f);
    return out;
}

inline NeutroTriple random_corner_triple(Rng& rng, SampleMode mode) {
    const auto& cs = corner_intervals(mode);
    return NeutroTriple(cs[rng.next_index(cs.size())], cs[rng.next_index(cs.size())],
                        cs[rng.next_index(cs.size())]);
}

} // namespace sampling
} // namespace inlogic
