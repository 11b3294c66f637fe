#include "knudsen/errors.hpp"
#include "knudsen/parity_spectral.hpp"
#include "knudsen/verification.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

using namespace knudsen;

namespace {

double max_abs(const Eigen::MatrixXd& m) { return m.size() ? m.cwiseAbs().maxCoeff() : 0.0; }

void check_structure(const ReducedSystem& s) {
    const ParityEigen e = decompose(s);
    const Eigen::Index k = e.lambda_plus.size();
    CHECK(k == s.m_odd);
    for (Eigen::Index i = 0; i + 1 < k; ++i) {
        CHECK(e.lambda_plus(i) >= e.lambda_plus(i + 1));
    }
    CHECK(e.lambda_plus.minCoeff() > 0.0);
    const Eigen::MatrixXd m0 = s.m0.dense();
    for (Eigen::Index c = 0; c < k; ++c) {
        const double scale = e.lambda_plus(c) * e.r_even.col(c).norm();
        CHECK((m0 * e.r_odd.col(c) - e.r_even.col(c) * e.lambda_plus(c)).cwiseAbs().maxCoeff() <= 1e-10 * scale);
        CHECK((m0.transpose() * e.r_even.col(c) - e.r_odd.col(c) * e.lambda_plus(c)).cwiseAbs().maxCoeff() <=
              1e-10 * scale);
    }
    const Eigen::MatrixXd r = assemble_full_R(e);
    CHECK(max_abs(r.transpose() * r - Eigen::MatrixXd::Identity(r.rows(), r.cols())) <= 1e-10);
    CHECK(max_abs(e.r_even.transpose() * e.r_even - 0.5 * Eigen::MatrixXd::Identity(k, k)) <= 1e-10);
    CHECK(e.r_zero.cols() == s.m_even - s.m_odd);

    // Sign convention: largest-magnitude entry of each R_odd column is positive.
    for (Eigen::Index c = 0; c < k; ++c) {
        Eigen::Index row = 0;
        e.r_odd.col(c).cwiseAbs().maxCoeff(&row);
        CHECK(e.r_odd(row, c) > 0.0);
    }
}

} // namespace

TEST_CASE("jacobi_svd reconstructs and orders") {
    std::mt19937 gen(7);
    std::normal_distribution<double> nd;
    Eigen::MatrixXd a(12, 8);
    for (Eigen::Index i = 0; i < a.size(); ++i) {
        a.data()[i] = nd(gen);
    }
    const SvdResult svd = jacobi_svd(a);
    CHECK(max_abs(svd.u * svd.sigma.asDiagonal() * svd.v.transpose() - a) <= 1e-12 * a.norm());
    CHECK(max_abs(svd.v.transpose() * svd.v - Eigen::MatrixXd::Identity(8, 8)) <= 1e-13);
    CHECK(max_abs(svd.u.transpose() * svd.u - Eigen::MatrixXd::Identity(8, 8)) <= 1e-13);
    for (Eigen::Index i = 0; i + 1 < svd.sigma.size(); ++i) {
        CHECK(svd.sigma(i) >= svd.sigma(i + 1));
    }
    const Eigen::VectorXd ref = Eigen::JacobiSVD<Eigen::MatrixXd>(a).singularValues();
    CHECK(max_abs(ref - svd.sigma) <= 1e-12);
}

TEST_CASE("M=3 decomposition") {
    const ParityEigen e = decompose(build_temperature_system(3));
    CHECK(e.lambda_plus(0) == doctest::Approx(3.0 / std::sqrt(5.0)).epsilon(1e-15));
    const Eigen::MatrixXd r = assemble_full_R(e);
    const double h = std::sqrt(2.0) / 2.0;
    // Up to the column-sign convention the columns are (-h, -h) and (-h, h).
    CHECK(std::abs(r(0, 0)) == doctest::Approx(h));
    CHECK(std::abs(r(1, 0)) == doctest::Approx(h));
    CHECK(r(0, 0) * r(1, 0) > 0.0);
    CHECK(r(0, 1) * r(1, 1) < 0.0);
    const Eigen::VectorXd lam = assemble_full_lambda(e);
    CHECK(lam(0) == doctest::Approx(3.0 / std::sqrt(5.0)));
    CHECK(lam(1) == doctest::Approx(-3.0 / std::sqrt(5.0)));
}

TEST_CASE("structural invariants for temperature and Kramers systems") {
    for (int m = 3; m <= 61; m += 2) {
        check_structure(build_temperature_system(m));
    }
    for (int m = 4; m <= 60; m += 2) {
        check_structure(build_kramers_system(m, 2.0 / 3.0));
    }
}

TEST_CASE("eigenvalues pair against the dense oracle") {
    for (int m : {5, 7, 15, 31}) {
        const ReducedSystem s = build_temperature_system(m);
        const ParityEigen e = decompose(s);
        Eigen::VectorXd expected = assemble_full_lambda(e);
        std::sort(expected.data(), expected.data() + expected.size());
        const SymmetricEigen de = dense_symmetric_eig(s.full_matrix());
        CHECK(max_abs(expected - de.values) <= 1e-10);
    }
    const ReducedSystem k = build_kramers_system(9 + 1, 1.0);
    const ParityEigen e = decompose(k);
    CHECK(e.r_zero.cols() == k.m_even - k.m_odd);
}

TEST_CASE("full R diagonalizes M at M=7") {
    const ReducedSystem s = build_temperature_system(7);
    const ParityEigen e = decompose(s);
    const Eigen::MatrixXd m = s.full_matrix();
    const Eigen::MatrixXd r = assemble_full_R(e);
    const Eigen::MatrixXd d = assemble_full_lambda(e).asDiagonal();
    CHECK(max_abs(r.transpose() * m * r - d) <= 1e-10 * m.norm());
}

TEST_CASE("decompose is deterministic") {
    const ReducedSystem s = build_temperature_system(41);
    const ParityEigen a = decompose(s);
    const ParityEigen b = decompose(s);
    CHECK((a.lambda_plus.array() == b.lambda_plus.array()).all());
    CHECK((a.r_even.array() == b.r_even.array()).all());
    CHECK((a.r_odd.array() == b.r_odd.array()).all());
}
