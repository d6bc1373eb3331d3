#pragma once

#include <cmath>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "rational.hpp"

namespace floer_radial {

enum class InterpShape { ConvexToLinear, LinearToConstant };

/// Data of an interpolation problem on [r0, r0 + ell]:
///   convex case:  constant beta0 on the left, alpha*r + beta1 on the right;
///   concave case: alpha*r + beta0 on the left, constant beta1 on the right,
///                 optionally forced to stay above the line barrier * r.
struct InterpolationSpec {
    Rational r0;
    Rational ell;
    Rational alpha;
    Rational beta0;
    Rational beta1;
    InterpShape shape = InterpShape::ConvexToLinear;
    std::optional<Rational> barrier;
};

enum class InterpBranch {
    Integral,  // target equals the plain bump integral c1
    Stretch,   // target larger: argument stretched by k1
    Damp       // target smaller: bump damped by (eps_s, k2)
};

/// A sampled C^1 profile on a uniform grid, with the construction branch
/// and parameters recorded.
struct SampledProfile {
    std::vector<double> grid;
    std::vector<double> values;
    std::vector<double> derivs;
    InterpBranch branch = InterpBranch::Integral;
    double k1 = 1.0;
    double eps_s = 1.0;
    double k2 = 1.0;
};

class SmoothingError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Exact feasibility test for the convex problem:
///   alpha*r0 < beta0 - beta1   and   beta1 - beta0 + alpha*r0 + alpha*ell > 0.
inline bool convex_feasible(const InterpolationSpec& s) {
    if (s.ell <= 0 || s.alpha <= 0) return false;
    return s.alpha * s.r0 < s.beta0 - s.beta1 &&
           s.beta1 - s.beta0 + s.alpha * s.r0 + s.alpha * s.ell > 0;
}

/// Exact feasibility test for the concave problem:
///   0 < beta1 - beta0 - alpha*r0 < ell*alpha,
/// plus the barrier endpoint conditions when a barrier line is given.
inline bool concave_feasible(const InterpolationSpec& s) {
    if (s.ell <= 0 || s.alpha <= 0) return false;
    Rational gap = s.beta1 - s.beta0 - s.alpha * s.r0;
    if (!(gap > 0 && gap < s.ell * s.alpha)) return false;
    if (s.barrier) {
        const Rational& a1 = *s.barrier;
        if (!(s.alpha * s.r0 + s.beta0 > s.r0 * a1)) return false;
        if (!(s.beta1 > a1 * (s.r0 + s.ell))) return false;
    }
    return true;
}

namespace detail {

inline double bump(double u) {
    if (std::abs(u) >= 1.0) return 0.0;
    return std::exp(-1.0 / (1.0 - u * u));
}

inline double trapezoid(const std::vector<double>& f, double h) {
    double s = 0.5 * (f.front() + f.back());
    for (std::size_t i = 1; i + 1 < f.size(); ++i) s += f[i];
    return s * h;
}

inline std::vector<double> cumulative_trapezoid(const std::vector<double>& f, double h) {
    std::vector<double> out(f.size());
    out[0] = 0.0;
    for (std::size_t i = 1; i < f.size(); ++i)
        out[i] = out[i - 1] + 0.5 * h * (f[i - 1] + f[i]);
    return out;
}

/// Piecewise-linear read of a sampled monotone ramp, clamped to its
/// limit values outside the grid.
struct RampInterp {
    const std::vector<double>& grid;
    const std::vector<double>& vals;

    double operator()(double r) const {
        if (r <= grid.front()) return vals.front();
        if (r >= grid.back()) return vals.back();
        double h = (grid.back() - grid.front()) / double(grid.size() - 1);
        auto i = std::size_t((r - grid.front()) / h);
        if (i + 1 >= grid.size()) i = grid.size() - 2;
        double w = (r - grid[i]) / h;
        return (1.0 - w) * vals[i] + w * vals[i + 1];
    }
};

struct CertifySpec {
    double left_value, right_value;
    double left_deriv, right_deriv;
    bool convex;  // else concave
};

inline void certify(const SampledProfile& p, const CertifySpec& c, double tol,
                    const char* what) {
    auto fail = [&](const std::string& msg) {
        throw SmoothingError(std::string(what) + " certification failed: " + msg);
    };
    const auto& h = p.values;
    const auto& d = p.derivs;
    if (std::abs(h.front() - c.left_value) > tol) fail("left endpoint value");
    if (std::abs(h.back() - c.right_value) > tol) fail("right endpoint value");
    if (std::abs(d.front() - c.left_deriv) > tol) fail("left endpoint derivative");
    if (std::abs(d.back() - c.right_deriv) > tol) fail("right endpoint derivative");
    // The bump underflows to exact zero near the interval ends, so interior
    // samples there can be 0; negativity is the real defect.
    for (std::size_t i = 1; i + 1 < d.size(); ++i)
        if (d[i] < 0.0) fail("derivative negative at interior sample");
    for (std::size_t i = 1; i < d.size(); ++i) {
        double dd = d[i] - d[i - 1];
        if (c.convex ? dd < -tol : dd > tol) fail("curvature sign violated");
    }
    for (std::size_t i = 1; i + 1 < h.size(); ++i) {
        double dd = h[i + 1] - 2.0 * h[i] + h[i - 1];
        if (c.convex ? dd < -tol : dd > tol) fail("second difference sign violated");
    }
}

}  // namespace detail

/// Builds the convex interpolant of Lemma-A.1 type as a sampled profile.
///
/// The derivative is assembled from the standard bump: f2 is the bump
/// rescaled so its grid integral is exactly alpha, f3 its running integral
/// (a 0 -> alpha ramp).  The total rise c1 = integral of f3 is then matched
/// to the required rise T = beta1 - beta0 + r0*alpha + ell*alpha by one of
/// three branches: T = c1 uses f3 itself; T > c1 stretches the argument by
/// k1 >= 1 (monotone bisection); T < c1 damps f3 by the factor
/// eps + (1-eps)/alpha * f3(k2(r - r0 - ell) + r0 + ell) with the coupling
/// k2 = 1/eps and bisection on eps in (0, 1].
inline SampledProfile build_convex(const InterpolationSpec& spec, double tol = 1e-6,
                                   int grid_n = 10001) {
    if (spec.shape != InterpShape::ConvexToLinear)
        throw std::invalid_argument("build_convex requires a convex-to-linear spec");
    if (!convex_feasible(spec)) throw SmoothingError("infeasible convex interpolation spec");
    if (grid_n < 3) throw std::invalid_argument("grid_n too small");
    if (tol <= 0) throw std::invalid_argument("tol must be positive");

    const double r0 = to_double(spec.r0);
    const double ell = to_double(spec.ell);
    const double alpha = to_double(spec.alpha);
    const double beta0 = to_double(spec.beta0);
    const double target = to_double(spec.beta1 - spec.beta0 +
                                    spec.alpha * spec.r0 + spec.alpha * spec.ell);

    const int n = grid_n;
    const double h = ell / double(n - 1);
    std::vector<double> grid(n);
    for (int i = 0; i < n; ++i) grid[i] = r0 + h * double(i);
    grid.back() = r0 + ell;

    std::vector<double> f2(n);
    for (int i = 0; i < n; ++i) f2[i] = detail::bump((2.0 * grid[i] - 2.0 * r0 - ell) / ell);
    const double raw = detail::trapezoid(f2, h);
    for (auto& v : f2) v *= alpha / raw;  // grid integral of f2 is now alpha

    std::vector<double> f3 = detail::cumulative_trapezoid(f2, h);
    const double c1 = detail::trapezoid(f3, h);
    detail::RampInterp ramp{grid, f3};

    SampledProfile out;
    out.grid = grid;

    const double inner_tol = tol / 10.0;
    const int max_iter = 200;

    std::vector<double> hp(n);
    if (std::abs(target - c1) <= 1e-12 * std::max(1.0, std::abs(c1))) {
        out.branch = InterpBranch::Integral;
        hp = f3;
    } else if (target > c1) {
        out.branch = InterpBranch::Stretch;
        auto g1 = [&](double t) {
            std::vector<double> f4(n);
            for (int i = 0; i < n; ++i) f4[i] = ramp(t * (grid[i] - r0) + r0);
            return detail::trapezoid(f4, h);
        };
        double lo = 1.0, hi = 2.0;
        while (g1(hi) < target) {
            hi *= 2.0;
            if (hi > std::ldexp(1.0, 60))
                throw SmoothingError("stretch bracket exhausted (tol/grid too tight)");
        }
        double mid = hi;
        for (int it = 0; it < max_iter; ++it) {
            mid = 0.5 * (lo + hi);
            double v = g1(mid);
            if (std::abs(v - target) <= inner_tol) break;
            (v < target ? lo : hi) = mid;
            if (it == max_iter - 1 && std::abs(v - target) > inner_tol)
                throw SmoothingError("stretch bisection did not converge");
        }
        out.k1 = mid;
        for (int i = 0; i < n; ++i) hp[i] = ramp(mid * (grid[i] - r0) + r0);
    } else {
        out.branch = InterpBranch::Damp;
        auto g2 = [&](double s) {
            double t = 1.0 / s;
            std::vector<double> f(n);
            for (int i = 0; i < n; ++i) {
                double f5 = s + (1.0 - s) / alpha * ramp(t * (grid[i] - r0 - ell) + r0 + ell);
                f[i] = f3[i] * f5;
            }
            return detail::trapezoid(f, h);
        };
        double hi = 1.0, lo = 0.5;
        while (g2(lo) >= target) {
            hi = lo;
            lo *= 0.5;
            if (lo < 1e-18)
                throw SmoothingError("damp bracket exhausted (tol/grid too tight)");
        }
        double mid = lo;
        for (int it = 0; it < max_iter; ++it) {
            mid = 0.5 * (lo + hi);
            double v = g2(mid);
            if (std::abs(v - target) <= inner_tol) break;
            (v < target ? lo : hi) = mid;
            if (it == max_iter - 1 && std::abs(v - target) > inner_tol)
                throw SmoothingError("damp bisection did not converge");
        }
        out.eps_s = mid;
        out.k2 = 1.0 / mid;
        for (int i = 0; i < n; ++i) {
            double f5 = mid + (1.0 - mid) / alpha * ramp(out.k2 * (grid[i] - r0 - ell) + r0 + ell);
            hp[i] = f3[i] * f5;
        }
    }

    out.derivs = hp;
    out.values = detail::cumulative_trapezoid(hp, h);
    for (auto& v : out.values) v += beta0;

    detail::certify(out,
                    {beta0, to_double(spec.alpha * (spec.r0 + spec.ell) + spec.beta1),
                     0.0, alpha, /*convex=*/true},
                    tol, "convex");
    return out;
}

/// Builds the concave interpolant by reflection: h(r) = -g(-r) where g is the
/// convex interpolant on [-r0-ell, -r0] with left constant -beta1 and right
/// linear alpha*r - beta0.  When a barrier line alpha1*r is given, the sampled
/// profile is additionally checked to stay strictly above it.
inline SampledProfile build_concave(const InterpolationSpec& spec, double tol = 1e-6,
                                    int grid_n = 10001) {
    if (spec.shape != InterpShape::LinearToConstant)
        throw std::invalid_argument("build_concave requires a linear-to-constant spec");
    if (!concave_feasible(spec)) throw SmoothingError("infeasible concave interpolation spec");

    InterpolationSpec mirror;
    mirror.r0 = -spec.r0 - spec.ell;
    mirror.ell = spec.ell;
    mirror.alpha = spec.alpha;
    mirror.beta0 = -spec.beta1;
    mirror.beta1 = -spec.beta0;
    mirror.shape = InterpShape::ConvexToLinear;

    SampledProfile g = build_convex(mirror, tol, grid_n);

    SampledProfile out;
    out.branch = g.branch;
    out.k1 = g.k1;
    out.eps_s = g.eps_s;
    out.k2 = g.k2;
    const std::size_t n = g.grid.size();
    out.grid.resize(n);
    out.values.resize(n);
    out.derivs.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t j = n - 1 - i;
        out.grid[i] = -g.grid[j];
        out.values[i] = -g.values[j];
        out.derivs[i] = g.derivs[j];
    }

    detail::certify(out,
                    {to_double(spec.alpha * spec.r0 + spec.beta0), to_double(spec.beta1),
                     to_double(spec.alpha), 0.0, /*convex=*/false},
                    tol, "concave");

    if (spec.barrier) {
        double a1 = to_double(*spec.barrier);
        for (std::size_t i = 0; i < n; ++i)
            if (!(out.values[i] > a1 * out.grid[i]))
                throw SmoothingError("concave profile touches the barrier line");
    }
    return out;
}

}  // namespace floer_radial
