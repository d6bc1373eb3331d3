#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "floer_radial/domain_model.hpp"
#include "floer_radial/stair.hpp"
#include "generators.hpp"

using namespace floer_radial;

namespace {
const Rational kA = 1, kB = 2, kB0(3, 2), kCphi(1, 10);
}

TEST_CASE("stair feasibility") {
    CHECK(stair_feasible(kA, kB, kB0, kCphi));
    CHECK_FALSE(stair_feasible(kA, kB, kB0, Rational(1, 2)));  // boundary is strict
    CHECK(stair_feasible(kA, kB, kB0, 0));
    CHECK_THROWS_AS(stair_feasible(2, 1, Rational(1, 2), 0), std::invalid_argument);
}

TEST_CASE("select_constants: worked instance") {
    auto p = select_constants(kA, kB, kB0, kCphi);
    CHECK(p.A == Rational(3, 20));        // 0.15
    CHECK(p.delta1 == Rational(1, 10));   // 0.1
    CHECK(p.delta2 == Rational(1, 10));   // 0.1
    CHECK(p.B == Rational(31, 20));       // 1.55
    CHECK(p.delta3 == Rational(11, 40));  // 0.275
    CHECK(p.C == Rational(11, 80));       // 0.1375

    auto cert = check_inequalities(p);
    CHECK(cert.all_pass);
    CHECK(cert.ineq[0].value == Rational(1, 20));    // 0.05
    CHECK(cert.ineq[1].value == Rational(3, 20));    // 0.15
    CHECK(cert.ineq[2].value == Rational(1, 20));    // 0.05
    CHECK(cert.ineq[3].value == Rational(1, 20));    // 0.05
    CHECK(cert.ineq[4].value == Rational(11, 80));   // 0.1375
    CHECK(*cert.ineq[4].upper == Rational(11, 40));

    // The displayed sign-flipped form of the first inequality never holds
    // for positive constants; the certificate reports it alongside.
    CHECK_FALSE(cert.displayed_ineq1_pass);

    SECTION("degenerate boundary A = b*delta1 fails the first inequality") {
        auto q = p;
        q.A = q.b * q.delta1;
        CHECK_FALSE(check_inequalities(q).ineq[0].pass);
    }

    SECTION("infeasible input rejected") {
        CHECK_THROWS_AS(select_constants(kA, kB, kB0, Rational(1, 2)), std::invalid_argument);
    }
}

TEST_CASE("check_inequalities fault injection") {
    auto p = select_constants(kA, kB, kB0, kCphi);

    SECTION("B = b0 fails (4)") {
        p.B = p.b0;
        auto cert = check_inequalities(p);
        CHECK_FALSE(cert.ineq[3].pass);
        CHECK_FALSE(cert.all_pass);
    }

    SECTION("C above B - a(1+delta3) fails (5)") {
        p.C = p.B - p.a * (1 + p.delta3) + Rational(1, 100);
        CHECK_FALSE(check_inequalities(p).ineq[4].pass);
    }
}

TEST_CASE("select_constants always certifies, randomly") {
    std::mt19937_64 rng(414);
    for (int i = 0; i < 1000; ++i) {
        auto in = testgen::random_feasible_stair(rng);
        auto p = select_constants(in.a, in.b, in.b0, in.c_phi);
        CHECK(check_inequalities(p).all_pass);
    }
    for (int i = 0; i < 1000; ++i) {
        auto in = testgen::random_infeasible_stair(rng);
        CHECK_FALSE(stair_feasible(in.a, in.b, in.b0, in.c_phi));
    }
}

TEST_CASE("feasibility boundary is sharp") {
    std::mt19937_64 rng(415);
    for (int i = 0; i < 100; ++i) {
        auto in = testgen::random_feasible_stair(rng);
        Rational margin = std::min(in.b - in.b0, in.b - in.a);
        CHECK_FALSE(stair_feasible(in.a, in.b, in.b0, margin));
        CHECK(stair_feasible(in.a, in.b, in.b0, margin * Rational(999, 1000)));
    }
}

TEST_CASE("assemble_stair: running example") {
    auto p = select_constants(kA, kB, kB0, kCphi);
    auto profile = assemble_stair(p, 1e-6, 4001);
    REQUIRE(profile.segments.size() == 7);

    SECTION("h2 stays above the line b0*r") {
        const auto& h2 = *profile.segments[3].smooth;
        for (std::size_t i = 0; i < h2.grid.size(); ++i)
            CHECK(h2.values[i] > 1.5 * h2.grid[i]);
    }

    SECTION("profile is nondecreasing and continuous") {
        double prev = -to_double(p.A) - 1e-9;
        for (double r = 0.0; r <= to_double(Rational(2) + 2 * p.delta3); r += 0.003) {
            for (const auto& seg : profile.segments) {
                if (r >= to_double(seg.lo) && r <= to_double(seg.hi)) {
                    double v = seg.value_at(r);
                    CHECK(v >= prev - 1e-6);
                    prev = std::max(prev, v);
                    break;
                }
            }
        }
    }

    SECTION("inconsistent params rejected before smoothing") {
        auto q = p;
        q.B = q.b0;
        CHECK_THROWS_AS(assemble_stair(q), std::invalid_argument);
    }
}

TEST_CASE("assemble_stair: degenerate phi (c_phi = 0)") {
    auto p = select_constants(kA, kB, kB0, 0);
    CHECK_NOTHROW(assemble_stair(p, 1e-6, 2001));
}

TEST_CASE("shrinking makes infeasible inputs feasible") {
    // For c_phi >= margin there is t with e^{-t} * c_phi < margin; with
    // t = ln(c_phi / target) the rescaled constant equals target exactly.
    std::mt19937_64 rng(416);
    for (int i = 0; i < 50; ++i) {
        auto in = testgen::random_infeasible_stair(rng);
        if (in.c_phi == 0) continue;
        Rational margin = std::min(in.b - in.b0, in.b - in.a);
        Rational target = margin / 2;
        SymplectoSize sz(in.c_phi / 2, in.c_phi / 2);  // c_constant = c_phi
        REQUIRE(c_constant(sz) == in.c_phi);
        auto t = RescaleTime::log_of(in.c_phi / target);
        auto shrunk = liouville_rescale(sz, t);
        CHECK(c_constant(shrunk) == target);
        CHECK(stair_feasible(in.a, in.b, in.b0, c_constant(shrunk)));
    }
}
