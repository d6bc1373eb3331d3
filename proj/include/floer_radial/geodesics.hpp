#pragma once

#include <Eigen/Dense>

#include <array>
#include <cmath>
#include <random>
#include <stdexcept>
#include <string>

namespace floer_radial {

/// A pair of metric tensors at one point, G1 to be dominated by G0.
struct MetricSample {
    std::string point_id;
    Eigen::MatrixXd G0;
    Eigen::MatrixXd G1;
};

namespace detail {

inline void require_spd(const Eigen::MatrixXd& g, const char* name) {
    if (g.rows() != g.cols()) throw std::invalid_argument(std::string(name) + " is not square");
    if ((g - g.transpose()).cwiseAbs().maxCoeff() > 1e-12)
        throw std::invalid_argument(std::string(name) + " is not symmetric");
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(g);
    if (es.eigenvalues().minCoeff() <= 0.0)
        throw std::invalid_argument(std::string(name) + " is not positive-definite");
}

}  // namespace detail

/// g1 <= g0 pointwise: G0 - G1 positive semidefinite within tol.
inline bool metric_dominates(const MetricSample& s, double tol = 1e-9) {
    detail::require_spd(s.G0, "G0");
    detail::require_spd(s.G1, "G1");
    if (s.G0.rows() != s.G1.rows())
        throw std::invalid_argument("metric dimensions disagree");
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(s.G0 - s.G1);
    return es.eigenvalues().minCoeff() >= -tol;
}

/// Dual-norm inclusion: for random covectors alpha, the metric-dual vectors
/// v, w (g0(v,.) = alpha = g1(w,.)) satisfy |v|_0 <= |w|_1, i.e.
/// alpha' G0^{-1} alpha <= alpha' G1^{-1} alpha.  This is the computational
/// content of D*Q(g1) being contained in D*Q(g0).
inline bool dual_inclusion_check(const MetricSample& s, int n_covectors, double tol = 1e-9,
                                 std::uint64_t seed = 0) {
    if (!metric_dominates(s, tol))
        throw std::invalid_argument("dual_inclusion_check requires metric_dominates");
    const auto d = s.G0.rows();
    Eigen::LLT<Eigen::MatrixXd> llt0(s.G0), llt1(s.G1);
    if (llt0.info() != Eigen::Success || llt1.info() != Eigen::Success)
        throw std::runtime_error("Cholesky factorization failed");
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    for (int i = 0; i < n_covectors; ++i) {
        Eigen::VectorXd alpha(d);
        for (Eigen::Index j = 0; j < d; ++j) alpha[j] = gauss(rng);
        double q0 = alpha.dot(llt0.solve(alpha));
        double q1 = alpha.dot(llt1.solve(alpha));
        if (q0 > q1 + tol) return false;
    }
    return true;
}

namespace detail {

/// Circumference of an ellipse with semi-axes p, q.  The integrand is smooth
/// and periodic, so the periodic trapezoid rule converges spectrally; refine
/// by doubling until stationary.
inline double ellipse_circumference(double p, double q) {
    auto integrate = [&](int n) {
        double s = 0.0;
        for (int i = 0; i < n; ++i) {
            double t = 2.0 * M_PI * double(i) / double(n);
            double st = std::sin(t), ct = std::cos(t);
            s += std::sqrt(p * p * st * st + q * q * ct * ct);
        }
        return s * 2.0 * M_PI / double(n);
    };
    double prev = integrate(64);
    for (int n = 128; n <= (1 << 22); n *= 2) {
        double cur = integrate(n);
        if (std::abs(cur - prev) < 1e-13 * std::max(1.0, std::abs(cur))) return cur;
        prev = cur;
    }
    throw std::runtime_error("ellipse quadrature did not converge");
}

}  // namespace detail

/// Circumferences of the three principal ellipses of the ellipsoid with
/// semi-axes (a1, a2, a3): the (a1,a2), (a1,a3), (a2,a3) sections, each a
/// closed geodesic.
inline std::array<double, 3> ellipsoid_principal_lengths(double a1, double a2, double a3) {
    if (!(a1 > 0 && a2 > 0 && a3 > 0))
        throw std::invalid_argument("semi-axes must be positive");
    return {detail::ellipse_circumference(a1, a2),
            detail::ellipse_circumference(a1, a3),
            detail::ellipse_circumference(a2, a3)};
}

struct GeodesicReport {
    bool domination_ok = false;
    std::array<double, 3> lengths{};
    double witness = 0.0;  // shortest principal length
    int witness_index = -1;
    bool pass = false;     // domination holds and witness <= 2*pi + tol
};

namespace detail {

/// Induced metric of the map (theta, phi) -> (a1 cos(phi) sin(theta),
/// a2 sin(phi) sin(theta), a3 cos(theta)) at one parameter point.
inline Eigen::Matrix2d sphere_pullback_metric(double a1, double a2, double a3, double theta,
                                              double phi) {
    Eigen::Vector3d dth(a1 * std::cos(phi) * std::cos(theta),
                        a2 * std::sin(phi) * std::cos(theta),
                        -a3 * std::sin(theta));
    Eigen::Vector3d dph(-a1 * std::sin(phi) * std::sin(theta),
                        a2 * std::cos(phi) * std::sin(theta),
                        0.0);
    Eigen::Matrix2d g;
    g << dth.dot(dth), dth.dot(dph), dph.dot(dth), dph.dot(dph);
    return g;
}

}  // namespace detail

/// Certificate for the short-geodesic corollary on an ellipsoid: checks that
/// the induced metric is dominated by the round metric on a parameter grid,
/// computes the three principal lengths, and passes iff the shortest is at
/// most 2*pi + tol.
inline GeodesicReport geodesic_certificate(double a1, double a2, double a3, double tol = 1e-6,
                                           int grid_points = 512) {
    GeodesicReport rep;

    int n_theta = std::max(4, int(std::sqrt(double(grid_points) / 2.0)));
    int n_phi = 2 * n_theta;
    rep.domination_ok = true;
    for (int i = 1; i < n_theta && rep.domination_ok; ++i) {
        double theta = M_PI * double(i) / double(n_theta);
        for (int j = 0; j < n_phi; ++j) {
            double phi = 2.0 * M_PI * double(j) / double(n_phi);
            MetricSample s;
            s.G0 = detail::sphere_pullback_metric(1.0, 1.0, 1.0, theta, phi);
            s.G1 = detail::sphere_pullback_metric(a1, a2, a3, theta, phi);
            if (!metric_dominates(s, tol)) {
                rep.domination_ok = false;
                break;
            }
        }
    }

    rep.lengths = ellipsoid_principal_lengths(a1, a2, a3);
    rep.witness_index = 0;
    for (int i = 1; i < 3; ++i)
        if (rep.lengths[i] < rep.lengths[rep.witness_index]) rep.witness_index = i;
    rep.witness = rep.lengths[rep.witness_index];

    if (!rep.domination_ok)
        throw std::invalid_argument("round metric does not dominate: hypotheses unmet");
    rep.pass = rep.witness <= 2.0 * M_PI + tol;
    return rep;
}

}  // namespace floer_radial
