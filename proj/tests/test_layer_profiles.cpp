#include "knudsen/errors.hpp"
#include "knudsen/layer_profiles.hpp"
#include "knudsen/verification.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>

using namespace knudsen;

namespace {
const double kKn = std::numbers::sqrt2 / 2.0;
}

TEST_CASE("M=3 temperature solution") {
    for (double chi : {0.1, 0.5, 1.0}) {
        const TemperatureLayerSolution sol = temperature_solution(3, chi, kKn, 1.0, 1.0, 0.0);
        const double b = accommodation_factor(chi);
        const double t0 = -1.0 / (std::sqrt(5.0) * (6.0 + 3.0 * std::sqrt(5.0) * b));
        REQUIRE(sol.lambda.size() == 1);
        CHECK(sol.lambda(0) == doctest::Approx(3.0 / std::sqrt(5.0)).epsilon(1e-14));
        CHECK(sol.t0_wall == doctest::Approx(t0).epsilon(1e-12));
        CHECK(sol.c0 == doctest::Approx(-1.0 / (2.0 * b) + 0.3 * t0).epsilon(1e-12));
        for (double y : {0.0, 0.3, 2.0}) {
            const double closed = -(2.0 / (5.0 * kKn)) * y + sol.c0 - 0.8 * t0 * std::exp(-std::sqrt(5.0) * y / (3.0 * kKn));
            CHECK(sol.theta(y) == doctest::Approx(closed).epsilon(1e-12));
        }
    }
    CHECK(jump_coefficient(temperature_solution(3, 1.0, kKn, 1.0, 1.0, 0.0)) == doctest::Approx(1.1287).epsilon(1e-4));
}

TEST_CASE("jump coefficient anchors") {
    CHECK(jump_coefficient(temperature_solution(13, 0.1, kKn, 1.0, 1.0, 0.0)) == doctest::Approx(21.426).epsilon(5e-5));
    CHECK(jump_coefficient(temperature_solution(13, 0.5, kKn, 1.0, 1.0, 0.0)) == doctest::Approx(3.6149).epsilon(3e-5));
    CHECK(jump_coefficient(temperature_solution(13, 1.0, kKn, 2.0 / 3.0, 1.0, 0.0)) ==
          doctest::Approx(1.94475).epsilon(1e-4));
}

TEST_CASE("solution invariants") {
    for (int m : {3, 7, 13}) {
        const TemperatureLayerSolution sol = temperature_solution(m, 0.7, 0.4, 1.3, 0.9, 0.25);
        CHECK(sol.theta(0.0) == doctest::Approx(sol.theta0).epsilon(1e-12));
        CHECK((sol.lambda.array() > 0.0).all());
        CHECK(sol.lambda.size() == build_temperature_system(m).m_odd);
        for (Eigen::Index i = 0; i + 1 < sol.lambda.size(); ++i) {
            CHECK(sol.lambda(i) >= sol.lambda(i + 1));
        }
        // Far field reduces to the linear profile.
        const double y = 50.0 * sol.lambda(0) * sol.kn;
        const double linear = -(2.0 * sol.pr * sol.q2 / (5.0 * sol.kn)) * y + sol.c0;
        CHECK(std::abs(sol.theta(y) - linear) <= 1e-12 * std::abs(sol.c0));
    }
}

TEST_CASE("normalized identity y + zeta - theta_d") {
    for (int m : {3, 9}) {
        for (double pr : {1.0, 2.0 / 3.0}) {
            const TemperatureLayerSolution sol = temperature_solution(m, 0.6, kKn, pr, 1.0, 0.0);
            const double zeta = jump_coefficient(sol);
            for (double y : {0.0, 0.01, 0.5, 3.0, 20.0}) {
                const double lhs = y + zeta - temperature_defect(sol, y);
                const double rhs = sol.theta(y) / (-2.0 * pr * 1.0 / (5.0 * kKn));
                CHECK(std::abs(lhs - rhs) <= 1e-12 * std::max(1.0, std::abs(rhs)));
                CHECK(normalized_temperature(sol, y) == doctest::Approx(rhs).epsilon(1e-14));
            }
            CHECK(std::abs(temperature_defect(sol, 500.0)) < 1e-15);
        }
    }
    CHECK_THROWS_AS(temperature_defect(temperature_solution(3, 1.0, kKn, 1.0, 1.0, 0.0), -1.0), InputError);
}

TEST_CASE("Pr scaling of the jump coefficient") {
    for (int m : {3, 7, 13}) {
        const TemperatureJumpModel model(m);
        const double z1 = jump_coefficient(model.solve(0.8, kKn, 1.0, 1.0, 0.0));
        for (double pr : {0.5, 2.0 / 3.0, 1.0, 1.5}) {
            const double z = jump_coefficient(model.solve(0.8, kKn, pr, 1.0, 0.0));
            CHECK(std::abs(z * pr - z1) <= 1e-12 * z1);
        }
    }
}

TEST_CASE("q2 linearity and Kn invariance") {
    const TemperatureJumpModel model(9);
    const TemperatureLayerSolution a = model.solve(0.5, kKn, 1.0, 1.0, 0.1);
    const TemperatureLayerSolution b = model.solve(0.5, kKn, 1.0, 3.0, 0.1);
    for (double y : {0.0, 0.2, 1.0, 6.0}) {
        const double da = a.theta(y) - a.theta_wall;
        const double db = b.theta(y) - b.theta_wall;
        CHECK(std::abs(db - 3.0 * da) <= 1e-12 * std::abs(3.0 * da));
    }
    const TemperatureLayerSolution k1 = model.solve(0.5, 0.1, 1.0, 1.0, 0.0);
    const TemperatureLayerSolution k2 = model.solve(0.5, 1.0, 1.0, 1.0, 0.0);
    CHECK((k1.c_tilde - k2.c_tilde).cwiseAbs().maxCoeff() <= 1e-12 * k1.c_tilde.cwiseAbs().maxCoeff());
    CHECK(jump_coefficient(k1) / 0.1 == doctest::Approx(jump_coefficient(k2) / 1.0).epsilon(1e-12));
    const TemperatureLayerSolution zero_flux = model.solve(0.5, kKn, 1.0, 0.0, 0.0);
    CHECK((zero_flux.c_tilde - a.c_tilde).cwiseAbs().maxCoeff() <= 1e-12);
}

TEST_CASE("defect is a sum of m_o exponentials with rates lambda Kn") {
    const TemperatureLayerSolution sol = temperature_solution(7, 1.0, 0.5, 1.0, 1.0, 0.0);
    CHECK(sol.c_tilde.size() == build_temperature_system(7).m_odd);
    const ParityEigen e = decompose(build_temperature_system(7));
    CHECK((sol.lambda - e.lambda_plus).cwiseAbs().maxCoeff() == 0.0);
    double manual = 0.0;
    for (Eigen::Index i = 0; i < sol.c_tilde.size(); ++i) {
        manual += sol.c_tilde(i) * std::exp(-1.3 / (sol.lambda(i) * 0.5));
    }
    CHECK(temperature_defect(sol, 1.3) == doctest::Approx(-(2.0 * 0.5) * manual).epsilon(1e-14));
}

TEST_CASE("effective conductivity") {
    const TemperatureLayerSolution sol = temperature_solution(11, 1.0, kKn, 2.0 / 3.0, 1.0, 0.0);
    for (double y : {0.1, 1.0, 5.0}) {
        const double h = 1e-6;
        const double fd = (temperature_defect(sol, y + h) - temperature_defect(sol, y - h)) / (2.0 * h);
        const double an = temperature_defect_slope(sol, y);
        CHECK(std::abs(fd - an) <= 1e-6 * std::abs(an));
    }
    const ConductivityRatio far = effective_conductivity(sol, 60.0 * sol.lambda(0) * sol.kn);
    CHECK(!far.pole);
    CHECK(std::abs(far.ratio - 1.0) <= 1e-10);

    const ConductivityRatio wall = effective_conductivity(sol, 0.0);
    CHECK(!wall.pole);
    CHECK(wall.ratio < 1.0);
    double prev = wall.ratio;
    for (double y : make_grid(1e-4, 40.0, 2000, GridSpacing::Geometric)) {
        const double r = effective_conductivity(sol, y).ratio;
        CHECK(r >= prev - 1e-15);
        prev = r;
    }

    // A hand-built defect with a steep positive slope produces a pole report.
    TemperatureLayerSolution steep = sol;
    steep.c_tilde = Eigen::VectorXd::Constant(sol.c_tilde.size(), 10.0);
    const ConductivityRatio pole = effective_conductivity(steep, 0.0);
    CHECK(pole.pole);
    CHECK(std::isnan(pole.ratio));
}

TEST_CASE("sign and permutation invariance of the profile") {
    const ReducedSystem s = build_temperature_system(9);
    ParityEigen e = decompose(s);
    const TemperatureJumpModel reference(9, e);
    const TemperatureLayerSolution base = reference.solve(0.7, kKn, 1.0, 1.0, 0.0);

    ParityEigen flipped = e;
    for (Eigen::Index c = 0; c < flipped.lambda_plus.size(); c += 2) {
        flipped.r_even.col(c) *= -1.0;
        flipped.r_odd.col(c) *= -1.0;
    }
    // Reverse the column order.
    ParityEigen permuted = flipped;
    const Eigen::Index n = e.lambda_plus.size();
    for (Eigen::Index c = 0; c < n; ++c) {
        permuted.lambda_plus(c) = flipped.lambda_plus(n - 1 - c);
        permuted.r_even.col(c) = flipped.r_even.col(n - 1 - c);
        permuted.r_odd.col(c) = flipped.r_odd.col(n - 1 - c);
    }
    const TemperatureLayerSolution other = TemperatureJumpModel(9, permuted).solve(0.7, kKn, 1.0, 1.0, 0.0);
    for (double y : make_grid(0.0, 10.0, 50, GridSpacing::Linear)) {
        CHECK(std::abs(temperature_defect(base, y) - temperature_defect(other, y)) <= 1e-10);
        CHECK(std::abs(base.theta(y) - other.theta(y)) <= 1e-10);
    }
}

TEST_CASE("Kramers velocity solution") {
    const KramersModel model(8, 1.0);
    const VelocityLayerSolution a = model.solve(1.0, kKn, 1.0, 0.0);
    const VelocityLayerSolution b = model.solve(1.0, kKn, 2.0, 0.0);
    CHECK(a.velocity(0.0) == doctest::Approx(a.u1_0).epsilon(1e-12));
    for (double y : {0.0, 0.3, 2.0, 10.0}) {
        CHECK(std::abs(b.velocity(y) - 2.0 * a.velocity(y)) <= 1e-12 * std::abs(2.0 * a.velocity(y)));
    }
    CHECK((a.lambda.array() > 0.0).all());
    CHECK(viscous_slip_coefficient(a) == doctest::Approx(-(kKn / 1.0) * a.c0k));
    CHECK(viscous_slip_coefficient(a) > 0.0);

    const VelocityLayerSolution w = model.solve(0.4, kKn, 1.0, 0.3);
    const VelocityLayerSolution w0 = model.solve(0.4, kKn, 1.0, 0.0);
    CHECK(viscous_slip_coefficient(w) == doctest::Approx(viscous_slip_coefficient(w0)).epsilon(1e-12));
    CHECK_THROWS_AS(velocity_solution(7, 1.0, kKn, 1.0, 1.0, 0.0), InputError);
    CHECK_THROWS_AS(temperature_solution(8, 1.0, kKn, 1.0, 1.0, 0.0), InputError);
}

TEST_CASE("chi to zero limit") {
    CHECK(chi_zero_limit() == doctest::Approx(1.107784).epsilon(1e-6));
    const TemperatureJumpModel model(13);
    double prev_gap = 1e300;
    for (double chi : {1e-2, 1e-3, 1e-4}) {
        const double v = chi / (2.0 - chi) * jump_coefficient(model.solve(chi, kKn, 1.0, 1.0, 0.0));
        const double gap = std::abs(v - chi_zero_limit());
        CHECK(gap < prev_gap);
        prev_gap = gap;
    }
    CHECK(prev_gap <= 0.01 * chi_zero_limit());
}

TEST_CASE("convergence order") {
    CHECK(convergence_orders_for(6) == std::array<int, 3>{129, 257, 513});
    CHECK_THROWS_AS(convergence_orders_for(0), InputError);
    CHECK_THROWS_AS(convergence_orders_for(10), InputError);
    const ConvergenceOrder a = convergence_order(1.0, 3, kKn);
    const ConvergenceOrder b = convergence_order(1.0, 3, 1.0);
    CHECK(!a.degenerate);
    CHECK(std::abs(a.beta - b.beta) <= 1e-10);
    CHECK(a.beta > 0.5);
    CHECK(a.beta < 1.5);
}

TEST_CASE("grids") {
    const std::vector<double> g = make_grid(1e-3, 10.0, 5, GridSpacing::Geometric);
    CHECK(g.front() == doctest::Approx(1e-3));
    CHECK(g.back() == 10.0);
    CHECK(g[2] == doctest::Approx(0.1));
    CHECK_THROWS_AS(make_grid(0.0, 1.0, 4, GridSpacing::Geometric), InputError);
    const TemperatureLayerSolution sol = temperature_solution(5, 1.0, kKn, 1.0, 1.0, 0.0);
    const std::vector<double> d = default_grid(sol);
    CHECK(d.size() == 400);
    CHECK(d.back() == doctest::Approx(60.0 * sol.lambda(0) * kKn));
    for (std::size_t i = 1; i < d.size(); ++i) {
        CHECK(d[i] > d[i - 1]);
    }
}
