#pragma once

#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "domain_model.hpp"
#include "rational.hpp"
#include "stair.hpp"

namespace floer_radial {

enum class Region { I, II, III, IV, V };

inline const char* region_name(Region r) {
    switch (r) {
        case Region::I: return "I";
        case Region::II: return "II";
        case Region::III: return "III";
        case Region::IV: return "IV";
        case Region::V: return "V";
    }
    return "?";
}

/// Interval of possible action values; closed endpoints only where the
/// action table says so (region I is closed, region IV is a point).
struct ActionRange {
    Rational lo, hi;
    bool lo_closed = false;
    bool hi_closed = false;

    bool contains(double x, double tol) const {
        double l = to_double(lo), h = to_double(hi);
        bool above = lo_closed ? x >= l - tol : x > l - tol;
        bool below = hi_closed ? x <= h + tol : x < h + tol;
        return above && below;
    }
};

/// A family of twisted Hamiltonian orbits: constants in regions I and IV,
/// Reeb-period crossings of h' in regions II, III, V.
struct OrbitClass {
    Region region = Region::I;
    std::optional<double> radius;        // crossing radius, regions II/III/V
    Rational period = 0;                 // multiples of 2*pi; 0 for constants
    std::optional<Rational> exact_action;
    std::optional<double> action;
    std::optional<ActionRange> action_range;  // region I
};

/// The action table: I -> [A - sup_f, A + sup_f], II -> (A, 2*b*d1),
/// III -> (-B, 0), IV -> {-B}, V -> (-B, -C).
inline ActionRange region_action_range(Region region, const StairProfile& profile,
                                       const SymplectoSize& sz) {
    const StairParams& p = profile.params;
    switch (region) {
        case Region::I:
            return {p.A - sz.sup_f, p.A + sz.sup_f, true, true};
        case Region::II:
            return {p.A, 2 * p.b * p.delta1, false, false};
        case Region::III:
            return {-p.B, 0, false, false};
        case Region::IV:
            return {-p.B, -p.B, true, true};
        case Region::V:
            return {-p.B, -p.C, false, false};
    }
    throw std::logic_error("unknown region");
}

namespace detail {

/// Bisection for h'(r) = period on a certified-monotone sampled derivative.
inline double crossing_radius(const SampledProfile& prof, double period, bool increasing,
                              double tol) {
    const auto& g = prof.grid;
    const auto& d = prof.derivs;
    for (std::size_t i = 1; i < d.size(); ++i) {
        double step = d[i] - d[i - 1];
        if (increasing ? step < -tol : step > tol)
            throw std::runtime_error("non-monotone sampled derivative");
    }
    RampInterp deriv{g, d};
    double lo = g.front(), hi = g.back();
    for (int it = 0; it < 200; ++it) {
        double mid = 0.5 * (lo + hi);
        double v = deriv(mid) - period;
        if (std::abs(v) <= tol || hi - lo <= tol * 1e-3) return mid;
        if ((v < 0.0) == increasing) lo = mid; else hi = mid;
    }
    return 0.5 * (lo + hi);
}

}  // namespace detail

/// Enumerates the twisted-orbit families of a certified stair profile over a
/// period spectrum.  Regions I and IV contribute one constant family each;
/// each smooth segment contributes one crossing family per spectrum period
/// inside the range of its derivative, with action r*h'(r) - h(r).  Linear
/// segments have admissible (non-period) slopes and contribute nothing.
inline std::vector<OrbitClass> enumerate_orbits(const StairProfile& profile,
                                                const PeriodSpectrum& spec,
                                                const SymplectoSize& sz, double tol = 1e-6) {
    const StairParams& p = profile.params;
    std::vector<OrbitClass> out;

    {
        OrbitClass c;
        c.region = Region::I;
        c.action_range = region_action_range(Region::I, profile, sz);
        if (sz.sup_f == 0) c.exact_action = p.A;
        c.action = to_double(p.A);
        out.push_back(c);
    }

    auto crossings = [&](Region region, const StairSegment& seg, bool increasing) {
        const SampledProfile& prof = *seg.smooth;
        detail::RampInterp value{prof.grid, prof.values};
        double dmin = increasing ? prof.derivs.front() : prof.derivs.back();
        double dmax = increasing ? prof.derivs.back() : prof.derivs.front();
        Rational bound(dmax);
        for (const Rational& period : spec.periods_below(bound)) {
            double pd = to_double(period);
            if (!(pd > dmin + tol && pd < dmax - tol)) continue;
            double r = detail::crossing_radius(prof, pd, increasing, tol);
            OrbitClass c;
            c.region = region;
            c.radius = r;
            c.period = period;
            c.action = r * pd - value(r);
            out.push_back(c);
        }
    };

    crossings(Region::II, profile.segments[1], /*increasing=*/true);   // h1
    crossings(Region::III, profile.segments[3], /*increasing=*/false); // h2

    {
        OrbitClass c;
        c.region = Region::IV;
        c.exact_action = -p.B;
        c.action = to_double(-p.B);
        out.push_back(c);
    }

    crossings(Region::V, profile.segments[5], /*increasing=*/true);    // h3
    return out;
}

/// Splits orbit families by action sign: regions I and II must be positive,
/// III, IV, V negative.  Zero or wrong-signed actions signal non-generic
/// parameters and are reported as errors.
inline std::pair<std::vector<OrbitClass>, std::vector<OrbitClass>> filtration_split(
    const std::vector<OrbitClass>& orbits) {
    std::vector<OrbitClass> below, at_or_above;
    for (const auto& c : orbits) {
        bool expect_positive = c.region == Region::I || c.region == Region::II;
        if (c.region == Region::I && c.action_range) {
            if (!(c.action_range->lo > 0))
                throw std::runtime_error("region I action sign ambiguous: sup|F_phi| >= A");
        }
        double a = c.exact_action ? to_double(*c.exact_action) : c.action.value();
        if (a == 0.0) throw std::runtime_error("zero-action orbit: perturb parameters");
        if ((a > 0.0) != expect_positive)
            throw std::runtime_error(std::string("orbit in region ") + region_name(c.region) +
                                     " has unexpected action sign");
        (a < 0.0 ? below : at_or_above).push_back(c);
    }
    return {std::move(below), std::move(at_or_above)};
}

}  // namespace floer_radial
