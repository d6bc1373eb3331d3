#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "floer_radial/transfer.hpp"

using namespace floer_radial;

TEST_CASE("ambient bound") {
    SECTION("pass with slack") {
        auto r = ambient_bound({3, 10, 8});
        CHECK(r.verdict == BoundVerdict::Pass);
        CHECK(r.strict_pass);
        CHECK(r.slack == 4);
    }

    SECTION("below = 0 requires equality") {
        auto r = ambient_bound({0, 5, 5});
        CHECK(r.verdict == BoundVerdict::EqualityRequired);
        CHECK_FALSE(r.strict_pass);  // the strict inequality 0 < 0 fails
        CHECK(r.slack == 0);
    }

    SECTION("fail") {
        auto r = ambient_bound({2, 10, 5});
        CHECK(r.verdict == BoundVerdict::Fail);
        CHECK(r.slack == -1);
    }

    SECTION("symmetric in the two totals") {
        std::mt19937_64 rng(31);
        std::uniform_int_distribution<long> d(0, 40);
        for (int i = 0; i < 300; ++i) {
            long below = d(rng) + 1, w1 = d(rng), w2 = d(rng);
            auto r1 = ambient_bound({below, w2, w1});
            auto r2 = ambient_bound({below, w1, w2});
            CHECK(r1.verdict == r2.verdict);
            CHECK(r1.slack == r2.slack);
        }
    }

    CHECK_THROWS_AS(ambient_bound({-1, 0, 0}), std::invalid_argument);
}

TEST_CASE("copies layout") {
    SECTION("delta = 1/3, m = 2") {
        auto c = copies_layout(Rational(1, 3), 2);
        CHECK(c.rho == 4);
        CHECK(c.r0 == Rational(1, 16));
        REQUIRE(c.supports.size() == 2);
        CHECK(c.supports[0] == std::pair<Rational, Rational>(Rational(1, 16), Rational(1, 4)));
        CHECK(c.supports[1] == std::pair<Rational, Rational>(Rational(1, 4), 1));
        // e^T = delta^{m-1}/(1+delta)^m = (1/3) / (16/9) = 3/16
        CHECK(c.t_arg == Rational(3, 16));
    }

    SECTION("delta = 1/4, m = 3") {
        auto c = copies_layout(Rational(1, 4), 3);
        CHECK(c.rho == 5);
        CHECK(c.r0 == Rational(1, 125));
        CHECK(c.supports.back().second == 1);
    }

    SECTION("domain of delta") {
        CHECK_THROWS_AS(copies_layout(Rational(1, 2), 1), std::invalid_argument);
        CHECK_THROWS_AS(copies_layout(0, 1), std::invalid_argument);
        CHECK_THROWS_AS(copies_layout(Rational(1, 3), 0), std::invalid_argument);
    }

    SECTION("exact tiling for all small denominators") {
        for (long q = 3; q <= 20; ++q)
            for (long p = 1; 2 * p < q; ++p)
                for (int m = 1; m <= 20; m += 7) {
                    auto c = copies_layout(Rational(p, q), m);
                    REQUIRE(int(c.supports.size()) == m);
                    CHECK(c.r0 * rational_pow(c.rho, m) == 1);
                    CHECK(c.supports.front().first == c.r0);
                    CHECK(c.supports.back().second == 1);
                    for (std::size_t j = 1; j < c.supports.size(); ++j)
                        CHECK(c.supports[j].first == c.supports[j - 1].second);
                }
    }
}

TEST_CASE("generator count") {
    CHECK(generator_count(2, 4, 1) == 6);
    CHECK(generator_count(2, 4, 10) == 42);
    CHECK(generator_count(0, 1, 5) == 5);
    CHECK_THROWS_AS(generator_count(-1, 1, 1), std::invalid_argument);
    CHECK_THROWS_AS(generator_count(1, 1, 0), std::invalid_argument);
}

TEST_CASE("kappa estimate") {
    SECTION("4m + 2 over 100 terms, default window") {
        std::vector<long> dims;
        for (long m = 1; m <= 100; ++m) dims.push_back(4 * m + 2);
        // max over the tail is at the smallest m in the window, m = 51
        CHECK(kappa_estimate(dims) == Rational(4 * 51 + 2, 51));
        CHECK(kappa_estimate(dims) == 4 + Rational(2, 51));
    }

    SECTION("constant sequence decays like 1/m") {
        std::vector<long> dims(100, 7);
        CHECK(kappa_estimate(dims) == Rational(7, 51));
    }

    SECTION("A + m*B converges to B") {
        for (long A : {0L, 1L, 2L}) {
            long B = 4;
            std::vector<long> dims;
            for (long m = 1; m <= 2000; ++m) dims.push_back(generator_count(A, B, int(m)));
            Rational est = kappa_estimate(dims);
            CHECK(est >= B);
            CHECK(est - B <= Rational(2, 1000));
        }
    }

    SECTION("window fraction validated") {
        CHECK_THROWS_AS(kappa_estimate({}, 0.5), std::invalid_argument);
        CHECK_THROWS_AS(kappa_estimate({1}, 0.0), std::invalid_argument);
        CHECK_THROWS_AS(kappa_estimate({1}, 1.5), std::invalid_argument);
        CHECK(kappa_estimate({6}, 1.0) == 6);
    }
}
