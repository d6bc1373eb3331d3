#pragma once

#include <array>
#include <cmath>
#include <optional>
#include <stdexcept>
#include <vector>

#include "rational.hpp"
#include "smoothing.hpp"

namespace floer_radial {

/// Constants of a stair-like Hamiltonian: slopes (a, b), the largest period
/// b0 < b, the symplectomorphism size constant c_phi, and the selected
/// parameters delta1..3, A, B, C.
struct StairParams {
    Rational a, b, b0, c_phi;
    Rational A, delta1, delta2, B, delta3, C;
};

/// The feasibility condition C(W1, phi) < min{b - b0, b - a}, exact.
inline bool stair_feasible(const Rational& a, const Rational& b, const Rational& b0,
                           const Rational& c_phi) {
    if (!(a > 0 && a < b)) throw std::invalid_argument("need 0 < a < b");
    if (!(b0 > 0 && b0 < b)) throw std::invalid_argument("need 0 < b0 < b");
    if (c_phi < 0) throw std::invalid_argument("c_phi must be nonnegative");
    return c_phi < std::min(b - b0, b - a);
}

/// One certified inequality: the middle quantity, its strict upper bound when
/// the condition is two-sided, and the verdict.
struct InequalityCheck {
    bool pass = false;
    Rational value;                 // the quantity that must be positive
    std::optional<Rational> upper;  // strict upper bound, when present
};

struct StairCertificate {
    std::array<InequalityCheck, 5> ineq;
    bool all_pass = false;
    // Verdict of the paper's displayed form of the first inequality,
    // 0 < -A - 2*b*d1 - b*d1 < b*d1, reported alongside the consistent reading.
    bool displayed_ineq1_pass = false;
};

/// Evaluates the five certified inequalities in exact arithmetic:
///   (1) 0 < b*d1 - A < b*d1
///   (2) 0 < B + 2*b*d1 - b*(1 - d2) < b*d2
///   (3) b*(1 - d2) - 2*b*d1 > (1 - d2)*b0
///   (4) B > b0
///   (5) 0 < B - C - a*(1 + d3) < a*d3
inline StairCertificate check_inequalities(const StairParams& p) {
    StairCertificate cert;
    auto two_sided = [](Rational value, Rational upper) {
        InequalityCheck c;
        c.value = value;
        c.upper = upper;
        c.pass = value > 0 && value < upper;
        return c;
    };
    auto one_sided = [](Rational value) {
        InequalityCheck c;
        c.value = value;
        c.pass = value > 0;
        return c;
    };

    cert.ineq[0] = two_sided(p.b * p.delta1 - p.A, p.b * p.delta1);
    cert.ineq[1] = two_sided(p.B + 2 * p.b * p.delta1 - p.b * (1 - p.delta2), p.b * p.delta2);
    cert.ineq[2] = one_sided(p.b * (1 - p.delta2) - 2 * p.b * p.delta1 - (1 - p.delta2) * p.b0);
    cert.ineq[3] = one_sided(p.B - p.b0);
    cert.ineq[4] = two_sided(p.B - p.C - p.a * (1 + p.delta3), p.a * p.delta3);

    cert.all_pass = true;
    for (const auto& c : cert.ineq) cert.all_pass = cert.all_pass && c.pass;

    Rational displayed = -p.A - 2 * p.b * p.delta1 - p.b * p.delta1;
    cert.displayed_ineq1_pass = displayed > 0 && displayed < p.b * p.delta1;
    return cert;
}

/// Picks the stair constants as midpoints of the selection intervals, in the
/// order A, delta1, delta2, B, delta3, C.  The result always passes
/// check_inequalities; an empty interval cannot occur when the input is
/// feasible.
inline StairParams select_constants(const Rational& a, const Rational& b, const Rational& b0,
                                    const Rational& c_phi) {
    if (!stair_feasible(a, b, b0, c_phi))
        throw std::invalid_argument("infeasible stair input: c_phi >= min{b-b0, b-a}");

    StairParams p;
    p.a = a;
    p.b = b;
    p.b0 = b0;
    p.c_phi = c_phi;

    const Rational margin = std::min(b - b0, b - a);
    auto pick = [](const Rational& lo, const Rational& hi) {
        if (!(lo < hi)) throw std::logic_error("empty selection interval");
        return midpoint(lo, hi);
    };

    p.A = pick(c_phi / 2, margin / 2);
    p.delta1 = pick(p.A / b, margin / (2 * b));
    p.delta2 = pick(0, 1 - 2 * b * p.delta1 / (b - b0));
    p.B = pick(std::max({a, b0, Rational(b - 2 * b * p.delta1 - b * p.delta2)}),
               b - 2 * b * p.delta1);
    p.delta3 = pick(0, (p.B - a) / a);
    p.C = pick(std::max(Rational(0), Rational(p.B - a * (1 + 2 * p.delta3))),
               p.B - a * (1 + p.delta3));

    if (!check_inequalities(p).all_pass)
        throw std::logic_error("selected constants fail the inequality certificate");
    return p;
}

enum class SegmentKind { Constant, Linear, Smooth };

/// One radial piece of a stair profile.  Linear pieces store slope and
/// intercept exactly; smooth pieces carry their certified sampled build.
struct StairSegment {
    Rational lo, hi;
    SegmentKind kind = SegmentKind::Constant;
    Rational const_value;         // Constant
    Rational slope, intercept;    // Linear: slope*r + intercept
    std::optional<SampledProfile> smooth;

    double value_at(double r) const {
        switch (kind) {
            case SegmentKind::Constant:
                return to_double(const_value);
            case SegmentKind::Linear:
                return to_double(slope) * r + to_double(intercept);
            case SegmentKind::Smooth:
                return detail::RampInterp{smooth->grid, smooth->values}(r);
        }
        return 0.0;
    }
};

struct StairProfile {
    StairParams params;
    std::vector<StairSegment> segments;
    double tol = 1e-6;
};

/// Assembles the full seven-segment stair profile, building h1, h3 with the
/// convex interpolant and h2 with the concave one (barrier b0), and checks
/// continuity at every junction.
inline StairProfile assemble_stair(const StairParams& p, double tol = 1e-6, int grid_n = 10001) {
    if (!check_inequalities(p).all_pass)
        throw std::invalid_argument("stair parameters fail the inequality certificate");

    StairProfile out;
    out.params = p;
    out.tol = tol;

    auto constant = [](Rational lo, Rational hi, Rational v) {
        StairSegment s;
        s.lo = std::move(lo);
        s.hi = std::move(hi);
        s.kind = SegmentKind::Constant;
        s.const_value = std::move(v);
        return s;
    };
    auto linear = [](Rational lo, Rational hi, Rational slope, Rational intercept) {
        StairSegment s;
        s.lo = std::move(lo);
        s.hi = std::move(hi);
        s.kind = SegmentKind::Linear;
        s.slope = std::move(slope);
        s.intercept = std::move(intercept);
        return s;
    };
    auto smooth = [](Rational lo, Rational hi, SampledProfile prof) {
        StairSegment s;
        s.lo = std::move(lo);
        s.hi = std::move(hi);
        s.kind = SegmentKind::Smooth;
        s.smooth = std::move(prof);
        return s;
    };

    // h1: constant -A  ->  linear b*(r - 2*d1)
    InterpolationSpec s1{p.delta1, p.delta1, p.b, -p.A, -2 * p.b * p.delta1,
                         InterpShape::ConvexToLinear, std::nullopt};
    // h2: linear b*(r - 2*d1)  ->  constant B, above the line b0*r
    InterpolationSpec s2{1 - p.delta2, p.delta2, p.b, -2 * p.b * p.delta1, p.B,
                         InterpShape::LinearToConstant, p.b0};
    // h3: constant B  ->  linear a*r + C
    InterpolationSpec s3{1 + p.delta3, p.delta3, p.a, p.B, p.C,
                         InterpShape::ConvexToLinear, std::nullopt};

    SampledProfile h1 = build_convex(s1, tol, grid_n);
    SampledProfile h2 = build_concave(s2, tol, grid_n);
    SampledProfile h3 = build_convex(s3, tol, grid_n);

    out.segments.push_back(constant(0, p.delta1, -p.A));
    out.segments.push_back(smooth(p.delta1, 2 * p.delta1, std::move(h1)));
    out.segments.push_back(linear(2 * p.delta1, 1 - p.delta2, p.b, -2 * p.b * p.delta1));
    out.segments.push_back(smooth(1 - p.delta2, 1, std::move(h2)));
    out.segments.push_back(constant(1, 1 + p.delta3, p.B));
    out.segments.push_back(smooth(1 + p.delta3, 1 + 2 * p.delta3, std::move(h3)));
    out.segments.push_back(linear(1 + 2 * p.delta3, 2 + 2 * p.delta3, p.a, p.C));

    for (std::size_t i = 1; i < out.segments.size(); ++i) {
        double r = to_double(out.segments[i].lo);
        double left = out.segments[i - 1].value_at(r);
        double right = out.segments[i].value_at(r);
        if (std::abs(left - right) > tol)
            throw SmoothingError("stair profile discontinuous at a junction");
    }
    return out;
}

}  // namespace floer_radial
