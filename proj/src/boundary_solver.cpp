#include "knudsen/boundary_solver.hpp"

#include "knudsen/errors.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace knudsen {

double accommodation_factor(double chi) {
    if (!(chi > 0.0 && chi <= 1.0)) {
        throw InputError("accommodation coefficient must lie in (0, 1], got " + std::to_string(chi));
    }
    return 2.0 * chi / ((2.0 - chi) * std::sqrt(2.0 * std::numbers::pi));
}

Eigen::MatrixXd WallMatrix::raw() const {
    const Eigen::Index n = normalized.rows();
    Eigen::MatrixXd out(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = 0; j < n; ++j) {
            out(i, j) = normalized(i, j) * std::exp(log_norms[static_cast<std::size_t>(i)] +
                                                    log_norms[static_cast<std::size_t>(j)]);
        }
    }
    return out;
}

namespace {

double half_log_factorial(int n) { return 0.5 * std::lgamma(n + 1.0); }

void require_table(const HalfSpaceTable& table, int needed) {
    if (table.max_order() < needed) {
        throw InputError("half-space table too small: need order " + std::to_string(needed) + ", have " +
                         std::to_string(table.max_order()));
    }
}

} // namespace

WallMatrix assemble_temperature_Tb(int order, const HalfSpaceTable& table) {
    if (order < 3 || order % 2 == 0) {
        throw InputError("assemble_temperature_Tb: M must be odd and >= 3");
    }
    const int m_even = 2 * (order / 2) - 1;
    const int n = m_even + 1;
    require_table(table, n + 1);

    std::vector<int> alpha(static_cast<std::size_t>(n));
    WallMatrix out;
    out.log_norms.resize(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) {
        alpha[static_cast<std::size_t>(j)] = (j % 2 == 0) ? j + 2 : j - 1;
        out.log_norms[static_cast<std::size_t>(j)] = half_log_factorial(alpha[static_cast<std::size_t>(j)]);
    }
    const double s00 = table.s_normalized(0, 0);
    out.normalized = Eigen::MatrixXd::Zero(n, n);
    for (int i = 0; i < n; ++i) {
        for (int j = i % 2; j < n; j += 2) {
            const int ai = alpha[static_cast<std::size_t>(i)];
            const int aj = alpha[static_cast<std::size_t>(j)];
            double v = table.s_normalized(ai, aj);
            if (i % 2 == 0) {
                v -= table.s_normalized(ai, 0) * table.s_normalized(0, aj) / s00;
            }
            out.normalized(i, j) = v;
        }
    }
    // Exact symmetry regardless of evaluation order.
    out.normalized = 0.5 * (out.normalized + out.normalized.transpose()).eval();
    return out;
}

Eigen::MatrixXd assemble_T(const WallMatrix& tb, const std::vector<double>& log_a) {
    const Eigen::Index n = tb.normalized.rows();
    if (static_cast<Eigen::Index>(log_a.size()) + 1 != n || n < 2) {
        throw InputError("assemble_T: L1 size does not match T^b");
    }
    // Q = diag(1, L1^{-1}) diag(P1, I) N, so that T = Q T^b_normalized Q^T.
    Eigen::MatrixXd q = Eigen::MatrixXd::Zero(n, n);
    const double n0 = std::exp(tb.log_norms[0]);
    const double n1 = std::exp(tb.log_norms[1]);
    const double inv_a1 = std::exp(-log_a[0]);
    q(0, 0) = 0.5 * n0;
    q(0, 1) = n1;
    q(1, 0) = inv_a1 * n0;
    q(1, 1) = -inv_a1 * n1;
    for (Eigen::Index j = 2; j < n; ++j) {
        q(j, j) = std::exp(tb.log_norms[static_cast<std::size_t>(j)] - log_a[static_cast<std::size_t>(j - 1)]);
    }
    Eigen::MatrixXd t = q * tb.normalized * q.transpose();
    return 0.5 * (t + t.transpose());
}

WallMatrix assemble_kramers_Sk(int order, const HalfSpaceTable& table) {
    if (order < 4 || order % 2 != 0) {
        throw InputError("assemble_kramers_Sk: M must be even and >= 4");
    }
    const int m_even = (order - 1) / 2;
    const int n = m_even + 1;
    require_table(table, 2 * (n - 1));
    WallMatrix out;
    out.log_norms.resize(static_cast<std::size_t>(n));
    out.normalized.resize(n, n);
    for (int i = 0; i < n; ++i) {
        out.log_norms[static_cast<std::size_t>(i)] = half_log_factorial(2 * i);
        for (int j = 0; j < n; ++j) {
            out.normalized(i, j) = table.s_normalized(2 * i, 2 * j);
        }
    }
    return out;
}

Eigen::MatrixXd assemble_kramers_T(const WallMatrix& sk, const std::vector<double>& log_a) {
    const Eigen::Index n = sk.normalized.rows();
    if (static_cast<Eigen::Index>(log_a.size()) + 1 != n) {
        throw InputError("assemble_kramers_T: L1 size does not match S_k");
    }
    Eigen::VectorXd q(n);
    q(0) = std::exp(sk.log_norms[0]);
    for (Eigen::Index j = 1; j < n; ++j) {
        q(j) = std::exp(sk.log_norms[static_cast<std::size_t>(j)] - log_a[static_cast<std::size_t>(j - 1)]);
    }
    return q.asDiagonal() * sk.normalized * q.asDiagonal();
}

WallBoundarySystem assemble_wall_system(const ReducedSystem& system, const HalfSpaceTable& table,
                                        double chi) {
    WallBoundarySystem out;
    out.kind = system.kind;
    out.order = system.order;
    out.chi = chi;
    out.b_chi = accommodation_factor(chi);
    out.c_vec = Eigen::VectorXd::Zero(system.m_odd + 1);
    if (system.kind == ProblemKind::TemperatureJump) {
        out.wall = assemble_temperature_Tb(system.order, table);
        out.t_scaled = assemble_T(out.wall, system.log_a);
        const double c[4] = {1.0, 4.0 / (5.0 * std::sqrt(3.0)), 2.0 * std::sqrt(6.0) / 5.0,
                             2.0 * std::sqrt(2.0) / 5.0};
        for (Eigen::Index i = 0; i < std::min<Eigen::Index>(4, out.c_vec.size()); ++i) {
            out.c_vec(i) = c[i];
        }
    } else {
        out.wall = assemble_kramers_Sk(system.order, table);
        out.t_scaled = assemble_kramers_T(out.wall, system.log_a);
        out.c_vec(0) = 1.0;
        if (out.c_vec.size() > 1) {
            out.c_vec(1) = 2.0 / system.a(0);
        }
    }
    return out;
}

Eigen::MatrixXd assemble_K(const WallBoundarySystem& wall, const ParityEigen& eigen) {
    const Eigen::Index n = wall.t_scaled.rows();
    if (eigen.r_even.rows() + 1 != n) {
        throw InputError("assemble_K: eigen decomposition does not match the wall system");
    }
    Eigen::MatrixXd k = wall.b_chi * wall.t_scaled;
    const Eigen::MatrixXd rl = eigen.r_even * eigen.lambda_plus.asDiagonal();
    k.bottomRightCorner(n - 1, n - 1) -= 2.0 * rl * eigen.r_even.transpose();
    return 0.5 * (k + k.transpose());
}

WallSolution solve_wall(const WallBoundarySystem& wall, const ParityEigen& eigen, double flux,
                        double wall_value) {
    if (eigen.r_even.rows() != eigen.r_odd.rows()) {
        throw InputError("solve_wall: only parities with m_e = m_o (odd-M temperature, even-M Kramers) "
                         "are supported");
    }
    const Eigen::MatrixXd k = assemble_K(wall, eigen);
    Eigen::LLT<Eigen::MatrixXd> llt(-k);
    if (llt.info() != Eigen::Success) {
        throw StructuralError("solve_wall: -K(chi) is not positive definite for M = " +
                              std::to_string(wall.order) + ", chi = " + std::to_string(wall.chi));
    }
    const Eigen::VectorXd x = llt.solve(-flux * wall.c_vec);
    const Eigen::Index n = x.size();

    WallSolution out;
    out.wall_offset = x(0);
    out.wall_unknown = wall_value + x(0);
    out.v_plus0 = 2.0 * eigen.r_even.transpose() * x.tail(n - 1);
    out.w_even0 = eigen.r_even * out.v_plus0;
    out.w_odd0 = eigen.r_odd * out.v_plus0;
    return out;
}

} // namespace knudsen
