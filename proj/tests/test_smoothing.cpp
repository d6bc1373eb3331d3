#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "floer_radial/smoothing.hpp"
#include "generators.hpp"

using namespace floer_radial;

namespace {

// Independent trapezoid integral of the sampled derivative.
double trapz_derivs(const SampledProfile& p) {
    double h = (p.grid.back() - p.grid.front()) / double(p.grid.size() - 1);
    double s = 0.5 * (p.derivs.front() + p.derivs.back());
    for (std::size_t i = 1; i + 1 < p.derivs.size(); ++i) s += p.derivs[i];
    return s * h;
}

}  // namespace

TEST_CASE("convex feasibility is the exact inequality pair") {
    InterpolationSpec s{0, 1, 1, 0, Rational(-1, 2), InterpShape::ConvexToLinear, {}};
    CHECK(convex_feasible(s));
    s.beta1 = Rational(1, 10);
    CHECK_FALSE(convex_feasible(s));
    s.beta1 = -2;
    CHECK_FALSE(convex_feasible(s));
}

TEST_CASE("concave feasibility, including barrier endpoints") {
    InterpolationSpec s{Rational(9, 10), Rational(1, 10), 2, Rational(-2, 5), Rational(31, 20),
                        InterpShape::LinearToConstant, {}};
    CHECK(concave_feasible(s));
    s.barrier = Rational(3, 2);
    CHECK(concave_feasible(s));

    InterpolationSpec bad{0, 1, 1, 0, 2, InterpShape::LinearToConstant, {}};
    CHECK_FALSE(concave_feasible(bad));
}

TEST_CASE("build_convex: certified reference instance") {
    InterpolationSpec s{0, 1, 1, 0, Rational(-1, 2), InterpShape::ConvexToLinear, {}};
    auto p = build_convex(s, 1e-6, 10001);
    CHECK(std::abs(p.values.front()) <= 1e-6);
    CHECK(std::abs(p.values.back() - 0.5) <= 1e-6);
    CHECK(std::abs(p.derivs.front()) <= 1e-6);
    CHECK(std::abs(p.derivs.back() - 1.0) <= 1e-6);
}

TEST_CASE("build_convex: branch selection") {
    SECTION("target equal to the plain bump integral") {
        // Quadrature oracle for c1 = integral of the 0 -> alpha ramp on the
        // same grid (r0 = 0, ell = 1, alpha = 1), then choose beta1 so that
        // the required rise is exactly that value.
        const int n = 10001;
        const double h = 1.0 / double(n - 1);
        std::vector<double> f2(n);
        for (int i = 0; i < n; ++i) {
            double u = 2.0 * (h * double(i)) - 1.0;
            f2[i] = std::abs(u) < 1.0 ? std::exp(-1.0 / (1.0 - u * u)) : 0.0;
        }
        double raw = 0.5 * (f2.front() + f2.back());
        for (int i = 1; i + 1 < n; ++i) raw += f2[i];
        raw *= h;
        for (auto& v : f2) v /= raw;
        std::vector<double> f3(n, 0.0);
        for (int i = 1; i < n; ++i) f3[i] = f3[i - 1] + 0.5 * h * (f2[i - 1] + f2[i]);
        double c1 = 0.5 * (f3.front() + f3.back());
        for (int i = 1; i + 1 < n; ++i) c1 += f3[i];
        c1 *= h;

        InterpolationSpec s{0, 1, 1, 0, Rational(c1) - 1, InterpShape::ConvexToLinear, {}};
        REQUIRE(convex_feasible(s));
        auto p = build_convex(s, 1e-6, n);
        CHECK(p.branch == InterpBranch::Integral);
    }

    SECTION("target smaller: damped branch with near-flat start") {
        InterpolationSpec s{0, 1, 1, 0, parse_rational("-0.999"), InterpShape::ConvexToLinear, {}};
        auto p = build_convex(s, 1e-6, 10001);
        CHECK(p.branch == InterpBranch::Damp);
        CHECK(std::abs(p.values.back() - (1.0 - 0.999)) <= 1e-6);
    }

    SECTION("target larger: stretched branch") {
        InterpolationSpec s{0, 1, 1, 0, parse_rational("-0.05"), InterpShape::ConvexToLinear, {}};
        auto p = build_convex(s, 1e-6, 10001);
        CHECK(p.branch == InterpBranch::Stretch);
        CHECK(p.k1 >= 1.0);
    }
}

TEST_CASE("build_concave: reflection and barrier") {
    SECTION("reflection duality") {
        InterpolationSpec conv{0, 1, 1, 0, Rational(-1, 2), InterpShape::ConvexToLinear, {}};
        auto g = build_convex(conv, 1e-6, 2001);

        InterpolationSpec conc;
        conc.shape = InterpShape::LinearToConstant;
        conc.r0 = -1;
        conc.ell = 1;
        conc.alpha = 1;
        conc.beta0 = Rational(1, 2);  // left linear r + 1/2 = -(a*(-r) + beta1_conv)
        conc.beta1 = 0;               // right constant = -beta0_conv
        REQUIRE(concave_feasible(conc));
        auto h = build_concave(conc, 1e-6, 2001);

        REQUIRE(h.grid.size() == g.grid.size());
        for (std::size_t i = 0; i < h.grid.size(); ++i) {
            std::size_t j = h.grid.size() - 1 - i;
            CHECK(std::abs(h.grid[i] + g.grid[j]) <= 1e-12);
            CHECK(std::abs(h.values[i] + g.values[j]) <= 1e-6);
        }
    }

    SECTION("stair h2 instance stays above the barrier line") {
        InterpolationSpec s{Rational(9, 10), Rational(1, 10), 2, Rational(-2, 5), Rational(31, 20),
                            InterpShape::LinearToConstant, Rational(3, 2)};
        auto p = build_concave(s, 1e-6, 10001);
        for (std::size_t i = 0; i < p.grid.size(); ++i)
            CHECK(p.values[i] > 1.5 * p.grid[i]);
    }

    SECTION("infeasible barrier rejected") {
        InterpolationSpec s{Rational(9, 10), Rational(1, 10), 2, Rational(-2, 5), Rational(31, 20),
                            InterpShape::LinearToConstant, 2};
        // beta1 = 31/20 < 2*(r0+ell) = 2
        CHECK_FALSE(concave_feasible(s));
        CHECK_THROWS_AS(build_concave(s), SmoothingError);
    }
}

TEST_CASE("smoothing properties over random specs") {
    std::mt19937_64 rng(20240817);

    SECTION("round-trip feasibility, feasible and infeasible sampled") {
        for (int i = 0; i < 250; ++i) {
            auto s = testgen::random_feasible_convex(rng);
            REQUIRE(convex_feasible(s));
            CHECK_NOTHROW(build_convex(s, 1e-6, 2001));
        }
        for (int i = 0; i < 250; ++i) {
            auto s = testgen::random_infeasible_convex(rng);
            REQUIRE_FALSE(convex_feasible(s));
            CHECK_THROWS_AS(build_convex(s, 1e-6, 2001), SmoothingError);
        }
    }

    SECTION("Newton-Leibniz consistency of the samples") {
        for (int i = 0; i < 30; ++i) {
            auto s = testgen::random_feasible_convex(rng);
            auto p = build_convex(s, 1e-6, 2001);
            CHECK(std::abs(trapz_derivs(p) - (p.values.back() - p.values.front())) <= 1e-5);
        }
    }

    SECTION("concave round-trip") {
        for (int i = 0; i < 100; ++i) {
            auto s = testgen::random_feasible_concave(rng);
            REQUIRE(concave_feasible(s));
            CHECK_NOTHROW(build_concave(s, 1e-6, 2001));
        }
        for (int i = 0; i < 100; ++i) {
            auto s = testgen::random_infeasible_concave(rng);
            REQUIRE_FALSE(concave_feasible(s));
            CHECK_THROWS_AS(build_concave(s, 1e-6, 2001), SmoothingError);
        }
    }
}
