#include <doctest.h>

#include <random>

#include "laurent/trig_comb.hpp"
#include "oracles.hpp"

using namespace laurent;

namespace {

const double kPi6 = kPi / 6.0;
const Complex kI{0.0, 1.0};

}  // namespace

TEST_CASE("tau_eval examples") {
    for (int n = 1; n <= 6; ++n) CHECK(std::abs(tau_eval(n, 0.0, 0.0) - 1.0) < 1e-14);
    CHECK(std::abs(tau_eval(2, kPi6, kPi / 2) + 1.0) < 1e-14);
    CHECK(std::abs(tau_eval(2, kPi6, 0.0) - 7.0) < 1e-13);
    CHECK_THROWS_AS(tau_eval(2, kQuarterPi, 0.0), DomainError);
}

TEST_CASE("tau_coeffs examples") {
    for (double theta : {0.0, 0.2, kPi6}) {
        const TrigPoly p = tau_coeffs(1, theta);
        CHECK(std::abs(p.coeff(0)) < 1e-15);
        CHECK(p.coeff(1) == doctest::Approx(1.0 / std::cos(2 * theta)));
    }
    const TrigPoly q = tau_coeffs(2, kPi6);
    CHECK(q.coeff(2) == doctest::Approx(4.0));
    CHECK(q.coeff(0) == doctest::Approx(3.0));
    CHECK(std::abs(q.coeff(1)) < 1e-14);
    CHECK_THROWS_AS(tau_coeffs(2, kQuarterPi), DomainError);
}

TEST_CASE("three routes to tau agree") {
    std::mt19937_64 rng(23);
    std::uniform_real_distribution<double> u(-3.0, 3.0);
    for (double theta : oracle::open_theta_grid()) {
        for (int n = 1; n <= 8; ++n) {
            const TrigPoly p = tau_coeffs(n, theta);
            for (int trial = 0; trial < 10; ++trial) {
                const double t = u(rng);
                const Complex a = tau_eval(n, theta, t);
                const double scale = 1.0 + std::abs(a);
                CHECK(std::abs(p.eval(t) - a) <= 1e-10 * scale);
                CHECK(std::abs(tau_eval_via_laurent(n, theta, t) - a) <= 1e-10 * scale);
            }
        }
    }
}

TEST_CASE("interval_system") {
    const IntervalSystem s0 = interval_system(0.0, -1, 1);
    REQUIRE(s0.intervals().size() == 3);
    CHECK(s0.interval(0).lo == doctest::Approx(0.0));
    CHECK(s0.interval(0).hi == doctest::Approx(kPi));
    for (double t = -10.0; t <= 10.0; t += 0.37) CHECK(s0.contains(t));

    const IntervalSystem s = interval_system(kPi / 8, -1, 1);
    CHECK(s.interval(1).lo == doctest::Approx(kPi + kPi / 4));
    CHECK(s.interval(1).hi == doctest::Approx(2 * kPi - kPi / 4));
    CHECK(s.contains(kPi / 4));
    CHECK_FALSE(s.contains_interior(kPi / 4, 1e-12));
    CHECK(s.contains_interior(kPi / 2));
    CHECK_FALSE(s.contains(0.1));
    CHECK_FALSE(s.contains(kPi + 0.1));
    CHECK(s.contains(-kPi / 2));
}

TEST_CASE("|tau| <= 1 exactly on the interval system") {
    for (double theta : oracle::open_theta_grid()) {
        const IntervalSystem s = interval_system(theta, 0, 0);
        for (int n = 1; n <= 6; ++n) {
            for (double t = -4.0; t <= 4.0; t += 0.01) {
                const double v = std::abs(tau_eval(n, theta, t));
                if (s.contains_interior(t, 1e-6)) CHECK(v <= 1.0 + 1e-12);
                if (!s.contains(t, 1e-6) && n == 1) CHECK(v > 1.0);
            }
        }
    }
}

TEST_CASE("tau_roots examples") {
    for (double theta : {0.0, 0.3, kPi6}) {
        const auto r = tau_roots(1, theta);
        REQUIRE(r.size() == 1);
        CHECK(r[0] == doctest::Approx(kPi / 2));
    }
    const auto r2 = tau_roots(2, kPi6);
    REQUIRE(r2.size() == 2);
    CHECK(r2[0] == doctest::Approx(1.2094292028881888).epsilon(1e-12));
    CHECK(r2[1] == doctest::Approx(1.9321634507016041).epsilon(1e-12));
    const auto r3 = tau_roots(3, 0.0);
    REQUIRE(r3.size() == 3);
    CHECK(r3[0] == doctest::Approx(kPi / 6));
    CHECK(r3[1] == doctest::Approx(kPi / 2));
    CHECK(r3[2] == doctest::Approx(5 * kPi / 6));
}

TEST_CASE("tau_pm1_roots examples") {
    const auto a = tau_pm1_roots(1, 0.0);
    REQUIRE(a.size() == 2);
    CHECK(std::abs(a[0].t) < 1e-12);
    CHECK(a[0].level == 1);
    CHECK(a[0].multiplicity == 1);
    CHECK(a[1].t == doctest::Approx(kPi));
    CHECK(a[1].level == -1);

    const auto b = tau_pm1_roots(2, kPi6);
    REQUIRE(b.size() == 3);
    CHECK(b[0].t == doctest::Approx(kPi / 3));
    CHECK(b[0].level == 1);
    CHECK(b[1].t == doctest::Approx(kPi / 2));
    CHECK(b[1].level == -1);
    CHECK(b[1].multiplicity == 2);
    CHECK(b[2].t == doctest::Approx(2 * kPi / 3));
    CHECK(b[2].level == 1);
}

TEST_CASE("level roots hit their level and stay in the period") {
    for (double theta : oracle::open_theta_grid()) {
        for (int n = 1; n <= 12; ++n) {
            for (const LevelRoot& r : tau_pm1_roots(n, theta)) {
                CHECK(std::abs(tau_eval(n, theta, r.t) - double(r.level)) < 1e-10);
                CHECK(r.t >= 2 * theta - 1e-12);
                CHECK(r.t <= kPi - 2 * theta + 1e-12);
            }
        }
    }
}

TEST_CASE("comb_height examples") {
    CHECK(comb_height(0.0) == 0.0);
    CHECK(comb_height(kPi6) == doctest::Approx(1.3169578969248166).epsilon(1e-14));
    CHECK(comb_height(kPi / 8) == doctest::Approx(0.881373587019543).epsilon(1e-14));
    CHECK_THROWS_AS(comb_height(kQuarterPi), DomainError);
}

TEST_CASE("comb_map examples and branches") {
    CHECK(std::abs(comb_map(0.0, kPi6) - Complex{0.0, 1.3169578969248166}) < 1e-12);
    for (double theta : oracle::open_theta_grid()) {
        CHECK(std::abs(comb_map(kPi / 2, theta) + kPi / 2) < 1e-14);
        CHECK(std::abs(comb_map(0.0, theta) - kI * comb_height(theta)) < 1e-10);
    }
    CHECK_THROWS_AS(comb_map(Complex{0.0, -1.0}, 0.2), DomainError);
}

TEST_CASE("tau = cos(n u) on the real line and in the upper half-plane") {
    std::mt19937_64 rng(29);
    std::uniform_real_distribution<double> re(-3.0, 3.0);
    std::uniform_real_distribution<double> im(0.0, 1.5);
    for (double theta : oracle::open_theta_grid()) {
        for (int n = 1; n <= 8; ++n) {
            for (int trial = 0; trial < 20; ++trial) {
                const Complex t{re(rng), trial % 2 == 0 ? 0.0 : im(rng)};
                const Complex expect = tau_eval(n, theta, t);
                const Complex got = std::cos(double(n) * comb_map(t, theta));
                CHECK(std::abs(got - expect) <= 1e-9 * (1.0 + std::abs(expect)));
            }
        }
    }
}

TEST_CASE("comb_map is real on the open interval system") {
    const double theta = kPi / 8;
    for (double t = kPi / 4 + 0.01; t < 3 * kPi / 4; t += 0.01) {
        const Complex u = comb_map(t, theta);
        CHECK(u.imag() == 0.0);
        CHECK(u.real() <= 0.0);
        CHECK(u.real() >= -kPi);
    }
}
