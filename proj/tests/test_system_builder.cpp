#include "knudsen/errors.hpp"
#include "knudsen/parity_spectral.hpp"
#include "knudsen/system_builder.hpp"

#include <doctest.h>

#include <cmath>

using namespace knudsen;

TEST_CASE("temperature system M=3") {
    const ReducedSystem s = build_temperature_system(3);
    CHECK(s.m_even == 1);
    CHECK(s.m_odd == 1);
    CHECK(s.m0(0, 0) == doctest::Approx(3.0 / std::sqrt(5.0)).epsilon(1e-15));
    CHECK(s.a(0) == doctest::Approx(std::sqrt(3.0)).epsilon(1e-15));
    CHECK(s.b(0) == doctest::Approx(std::sqrt(15.0)).epsilon(1e-15));
}

TEST_CASE("temperature system M=5 entries") {
    const ReducedSystem s = build_temperature_system(5);
    CHECK(s.m_even == 3);
    CHECK(s.m_odd == 3);
    // 1-based (2,2) and (3,3): sqrt(2k+3) and sqrt(2k+1) at k = 1.
    CHECK(s.m0(1, 1) == doctest::Approx(std::sqrt(5.0)).epsilon(1e-15));
    CHECK(s.m0(2, 2) == doctest::Approx(std::sqrt(3.0)).epsilon(1e-15));
    CHECK(s.m0(1, 0) == doctest::Approx(std::sqrt(8.0 / 5.0)).epsilon(1e-15));
    CHECK(s.m0(2, 0) == doctest::Approx(-std::sqrt(6.0 / 5.0)).epsilon(1e-15));

    // The sqrt(2k) = 2 band entry first appears at 1-based (5,3).
    const ReducedSystem s7 = build_temperature_system(7);
    CHECK(s7.m0(4, 2) == doctest::Approx(2.0).epsilon(1e-15));
    CHECK(s7.m0(3, 1) == doctest::Approx(std::sqrt(6.0)).epsilon(1e-15));
}

TEST_CASE("temperature system dimensions and band") {
    for (int m = 3; m <= 41; m += 2) {
        const ReducedSystem s = build_temperature_system(m);
        CHECK(s.m_odd == 2 * ((m - 1) / 2) - 1);
        CHECK(s.m_even == 2 * (m / 2) - 1);
        CHECK(s.m_even + s.m_odd == 2 * (m - 2));
        const Eigen::MatrixXd d = s.m0.dense();
        for (int i = 0; i < s.m_even; ++i) {
            CHECK(s.a(i) > 0.0);
            for (int j = 0; j < s.m_odd; ++j) {
                if (i - j < 0 || i - j > 2) {
                    CHECK(d(i, j) == 0.0);
                }
            }
        }
        for (int j = 0; j < s.m_odd; ++j) {
            CHECK(s.b(j) > 0.0);
        }
    }
    LowerBand3 band(4, 4);
    CHECK_THROWS_AS(band.set(0, 1, 1.0), InputError);
}

TEST_CASE("builders reject invalid orders") {
    CHECK_THROWS_AS(build_temperature_system(4), InputError);
    CHECK_THROWS_AS(build_temperature_system(1), InputError);
    CHECK_THROWS_AS(build_temperature_system(kMaxTemperatureOrder + 2), InputError);
    CHECK_THROWS_AS(build_kramers_system(5, 1.0), InputError);
    CHECK_THROWS_AS(build_kramers_system(4, 0.0), InputError);
    CHECK_THROWS_AS(build_kramers_system(4, -1.0), InputError);
}

TEST_CASE("M0 entries equal the inner products over the scalings") {
    for (int m = 3; m <= 31; m += 2) {
        const ReducedSystem s = build_temperature_system(m);
        for (int i = 0; i < s.m_even; ++i) {
            for (int j = 0; j < s.m_odd; ++j) {
                const double ip = inner_product_oracle(temperature_even_basis(i + 1), temperature_odd_basis(j + 1));
                const double expected = ip / (s.a(i) * s.b(j));
                CHECK(std::abs(s.m0(i, j) - expected) <= 1e-12 * std::max(1.0, std::abs(expected)));
            }
        }
    }
    for (double pr : {2.0 / 3.0, 1.0}) {
        for (int m = 4; m <= 30; m += 2) {
            const ReducedSystem s = build_kramers_system(m, pr);
            for (int i = 0; i < s.m_even; ++i) {
                for (int j = 0; j < s.m_odd; ++j) {
                    const double ip = inner_product_oracle(kramers_even_basis(i + 1), kramers_odd_basis(j + 1));
                    const double expected = ip / (s.a(i) * s.b(j));
                    CHECK(std::abs(s.m0(i, j) - expected) <= 1e-12 * std::max(1.0, std::abs(expected)));
                }
            }
        }
    }
}

TEST_CASE("inner_product_oracle examples") {
    CHECK(inner_product_oracle(MultiIndex{0, 2, 0}, MultiIndex{0, 3, 0}) == doctest::Approx(6.0));
    CHECK(inner_product_oracle(MultiIndex{1, 0, 0}, MultiIndex{0, 1, 0}) == 0.0);
    CHECK(inner_product_oracle(MultiIndex{2, 0, 0}, MultiIndex{2, 1, 0}) == doctest::Approx(2.0));
    // Hard-coded first-row inner products.
    CHECK(inner_product_oracle(temperature_even_basis(1), temperature_odd_basis(1)) == doctest::Approx(9.0));
    CHECK(inner_product_oracle(temperature_even_basis(2), temperature_odd_basis(1)) == doctest::Approx(24.0));
    CHECK(inner_product_oracle(temperature_even_basis(3), temperature_odd_basis(1)) == doctest::Approx(-6.0));
}

TEST_CASE("Kramers scalings") {
    CHECK(build_kramers_system(4, 1.0).a(0) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
    const double a_pr = build_kramers_system(4, 2.0 / 3.0).a(0);
    CHECK(a_pr == doctest::Approx(std::sqrt(28.0 / 15.0)).epsilon(1e-15));
    for (double pr : {0.5, 2.0 / 3.0, 1.5}) {
        const double ratio = build_kramers_system(4, 1.0).a(0) / build_kramers_system(4, pr).a(0);
        CHECK(ratio == doctest::Approx(std::sqrt(5.0 / (4.0 + pr))).epsilon(1e-14));
    }
    const ReducedSystem s6 = build_kramers_system(6, 1.0);
    CHECK(s6.m0(0, 0) == doctest::Approx(std::sqrt(3.0)).epsilon(1e-15));
    for (int m = 4; m <= 40; m += 2) {
        const ReducedSystem s = build_kramers_system(m, 0.7);
        CHECK(s.m_even == (m - 1) / 2);
        CHECK(s.m_odd == (m - 2) / 2);
        const Eigen::MatrixXd d = s.m0.dense();
        for (int i = 0; i < s.m_even; ++i) {
            for (int j = 0; j < s.m_odd; ++j) {
                if (i != j && i != j + 1) {
                    CHECK(d(i, j) == 0.0);
                }
            }
        }
    }
}

TEST_CASE("M0 magnitude bound") {
    for (int m = 3; m <= 1025; m += 2) {
        CHECK(build_temperature_system(m).m0.max_abs() <= std::sqrt(m + 3.0));
    }
    for (int m = 4; m <= 1024; m += 2) {
        CHECK(build_kramers_system(m, 1.0).m0.max_abs() <= std::sqrt(m + 3.0));
    }
}

TEST_CASE("M0 has full column rank") {
    for (int m = 3; m <= 99; m += 2) {
        const SvdResult svd = jacobi_svd(build_temperature_system(m).m0.dense());
        CHECK(svd.sigma.minCoeff() > 1e-8);
    }
    for (int m = 4; m <= 98; m += 2) {
        const SvdResult svd = jacobi_svd(build_kramers_system(m, 1.0).m0.dense());
        CHECK(svd.sigma.minCoeff() > 1e-8);
    }
}
