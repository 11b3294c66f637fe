#include "knudsen/layer_profiles.hpp"

#include "knudsen/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <string>

namespace knudsen {

double default_knudsen() { return std::numbers::sqrt2 / 2.0; }

namespace {

void require_positive(double value, const char* name) {
    if (!(value > 0.0) || !std::isfinite(value)) {
        throw InputError(std::string(name) + " must be positive and finite");
    }
}

double decay_sum(const Eigen::VectorXd& amp, const Eigen::VectorXd& lambda, double kn, double y) {
    double s = 0.0;
    for (Eigen::Index i = 0; i < amp.size(); ++i) {
        s += amp(i) * std::exp(-y / (lambda(i) * kn));
    }
    return s;
}

// Sorts the decomposition by descending λ so that solution arrays are
// independent of how the caller ordered equal or permuted columns.
ParityEigen sorted_descending(ParityEigen e) {
    const Eigen::Index n = e.lambda_plus.size();
    std::vector<Eigen::Index> idx(static_cast<std::size_t>(n));
    std::iota(idx.begin(), idx.end(), 0);
    std::stable_sort(idx.begin(), idx.end(),
                     [&](Eigen::Index a, Eigen::Index b) { return e.lambda_plus(a) > e.lambda_plus(b); });
    ParityEigen out = e;
    for (Eigen::Index k = 0; k < n; ++k) {
        const Eigen::Index src = idx[static_cast<std::size_t>(k)];
        out.lambda_plus(k) = e.lambda_plus(src);
        out.r_even.col(k) = e.r_even.col(src);
        out.r_odd.col(k) = e.r_odd.col(src);
    }
    return out;
}

void check_eigen_shape(const ReducedSystem& system, const ParityEigen& eigen) {
    if (eigen.r_even.rows() != system.m_even || eigen.r_odd.rows() != system.m_odd ||
        eigen.r_even.cols() != system.m_odd || eigen.lambda_plus.size() != system.m_odd) {
        throw InputError("decomposition does not match the order-" + std::to_string(system.order) + " system");
    }
    if ((eigen.lambda_plus.array() <= 0.0).any()) {
        throw StructuralError("decomposition has non-positive decay rates");
    }
}

WallBoundarySystem with_chi(WallBoundarySystem wall, double chi) {
    wall.b_chi = accommodation_factor(chi);
    wall.chi = chi;
    return wall;
}

} // namespace

double TemperatureLayerSolution::theta(double y) const {
    return -(2.0 * pr * q2 / (5.0 * kn)) * y + c0 + decay_sum(r_tilde, lambda, kn, y);
}

double VelocityLayerSolution::velocity(double y) const {
    return -sigma12 * y / kn + c0k + decay_sum(amplitudes, lambda, kn, y);
}

TemperatureJumpModel::TemperatureJumpModel(int order)
    : TemperatureJumpModel(order, decompose(build_temperature_system(order))) {}

TemperatureJumpModel::TemperatureJumpModel(int order, ParityEigen eigen)
    : system_(build_temperature_system(order)), eigen_(sorted_descending(std::move(eigen))) {
    check_eigen_shape(system_, eigen_);
    const HalfSpaceTable table(order);
    wall_ = assemble_wall_system(system_, table, 1.0);
}

TemperatureLayerSolution TemperatureJumpModel::solve(double chi, double kn, double pr, double q2,
                                                     double theta_wall) const {
    require_positive(kn, "Kn");
    require_positive(pr, "Pr");
    const WallBoundarySystem wall = with_chi(wall_, chi);
    const WallSolution ws = solve_wall(wall, eigen_, q2, theta_wall);

    TemperatureLayerSolution sol;
    sol.order = system_.order;
    sol.chi = chi;
    sol.kn = kn;
    sol.pr = pr;
    sol.q2 = q2;
    sol.theta_wall = theta_wall;
    sol.theta0 = ws.wall_unknown;
    sol.lambda = eigen_.lambda_plus;
    sol.v_plus0 = ws.v_plus0;
    sol.t0_wall = ws.w_even0(0) / system_.a(0);

    const double row[3] = {std::sqrt(3.0) / 3.0, std::sqrt(6.0) / 2.0, std::numbers::sqrt2 / 2.0};
    const Eigen::Index rows = std::min<Eigen::Index>(3, system_.m_even);
    Eigen::VectorXd row_r = Eigen::VectorXd::Zero(system_.m_odd);
    for (Eigen::Index i = 0; i < rows; ++i) {
        row_r += row[i] * eigen_.r_even.row(i).transpose();
    }
    const Eigen::VectorXd p = row_r.cwiseProduct(ws.v_plus0);
    sol.r_tilde = -0.8 * p;
    sol.c0 = sol.theta0 - sol.r_tilde.sum();
    if (q2 != 0.0) {
        sol.c_tilde = p / q2;
    } else {
        const WallSolution unit = solve_wall(wall, eigen_, 1.0, 0.0);
        sol.c_tilde = row_r.cwiseProduct(unit.v_plus0);
    }
    return sol;
}

KramersModel::KramersModel(int order, double pr)
    : KramersModel(order, pr, decompose(build_kramers_system(order, pr))) {}

KramersModel::KramersModel(int order, double pr, ParityEigen eigen)
    : system_(build_kramers_system(order, pr)), eigen_(sorted_descending(std::move(eigen))) {
    check_eigen_shape(system_, eigen_);
    const HalfSpaceTable table(order);
    wall_ = assemble_wall_system(system_, table, 1.0);
}

VelocityLayerSolution KramersModel::solve(double chi, double kn, double sigma12, double u1_wall) const {
    require_positive(kn, "Kn");
    const WallBoundarySystem wall = with_chi(wall_, chi);
    const WallSolution ws = solve_wall(wall, eigen_, sigma12, u1_wall);

    VelocityLayerSolution sol;
    sol.order = system_.order;
    sol.chi = chi;
    sol.kn = kn;
    sol.pr = system_.prandtl;
    sol.sigma12 = sigma12;
    sol.u1_wall = u1_wall;
    sol.u1_0 = ws.wall_unknown;
    sol.lambda = eigen_.lambda_plus;
    sol.v_plus0 = ws.v_plus0;
    sol.amplitudes = -(2.0 / system_.a(0)) * eigen_.r_even.row(0).transpose().cwiseProduct(ws.v_plus0);
    sol.c0k = sol.u1_0 - sol.amplitudes.sum();
    return sol;
}

TemperatureLayerSolution temperature_solution(int order, double chi, double kn, double pr, double q2,
                                              double theta_wall) {
    accommodation_factor(chi);
    return TemperatureJumpModel(order).solve(chi, kn, pr, q2, theta_wall);
}

double jump_coefficient(const TemperatureLayerSolution& sol) {
    if (sol.q2 == 0.0) {
        throw InputError("jump_coefficient: heat flux q2 must be nonzero");
    }
    return -(5.0 * sol.kn / (2.0 * sol.pr * sol.q2)) * (sol.c0 - sol.theta_wall);
}

double temperature_defect(const TemperatureLayerSolution& sol, double y) {
    if (y < 0.0) {
        throw InputError("temperature_defect: y must be non-negative");
    }
    return -(2.0 * sol.kn / sol.pr) * decay_sum(sol.c_tilde, sol.lambda, sol.kn, y);
}

double temperature_defect_slope(const TemperatureLayerSolution& sol, double y) {
    if (y < 0.0) {
        throw InputError("temperature_defect_slope: y must be non-negative");
    }
    double s = 0.0;
    for (Eigen::Index i = 0; i < sol.c_tilde.size(); ++i) {
        s += sol.c_tilde(i) / sol.lambda(i) * std::exp(-y / (sol.lambda(i) * sol.kn));
    }
    return (2.0 / sol.pr) * s;
}

double normalized_temperature(const TemperatureLayerSolution& sol, double y) {
    return (sol.theta(y) - sol.theta_wall) / (-2.0 * sol.pr * sol.q2 / (5.0 * sol.kn));
}

ConductivityRatio effective_conductivity(const TemperatureLayerSolution& sol, double y) {
    const double denom = 1.0 - temperature_defect_slope(sol, y);
    if (denom <= 0.0) {
        return {std::numeric_limits<double>::quiet_NaN(), true};
    }
    return {1.0 / denom, false};
}

VelocityLayerSolution velocity_solution(int order, double chi, double kn, double pr, double sigma12,
                                        double u1_wall) {
    accommodation_factor(chi);
    return KramersModel(order, pr).solve(chi, kn, sigma12, u1_wall);
}

double viscous_slip_coefficient(const VelocityLayerSolution& sol) {
    if (sol.sigma12 == 0.0) {
        throw InputError("viscous_slip_coefficient: shear stress sigma12 must be nonzero");
    }
    return -(sol.kn / sol.sigma12) * (sol.c0k - sol.u1_wall);
}

double chi_zero_limit() { return 5.0 * std::sqrt(std::numbers::pi) / 8.0; }

std::array<int, 3> convergence_orders_for(int k) {
    if (k < 1 || (1 << (k + 3)) + 1 > kMaxTemperatureOrder) {
        throw InputError("convergence order index k must lie in [1, 9], got " + std::to_string(k));
    }
    return {(1 << (k + 1)) + 1, (1 << (k + 2)) + 1, (1 << (k + 3)) + 1};
}

std::vector<ConvergenceOrder> convergence_orders(const std::vector<double>& chis, int k, double kn) {
    const std::array<int, 3> orders = convergence_orders_for(k);
    for (double chi : chis) {
        accommodation_factor(chi);
    }
    std::vector<ConvergenceOrder> out(chis.size());
    for (std::size_t j = 0; j < 3; ++j) {
        const TemperatureJumpModel model(orders[j]);
        for (std::size_t c = 0; c < chis.size(); ++c) {
            out[c].orders = orders;
            out[c].zetas[j] = jump_coefficient(model.solve(chis[c], kn, 1.0, 1.0, 0.0));
        }
    }
    for (ConvergenceOrder& co : out) {
        const double d1 = co.zetas[1] - co.zetas[0];
        const double d2 = co.zetas[2] - co.zetas[1];
        if (std::abs(d1) < 1e-14) {
            co.degenerate = true;
            co.beta = std::numeric_limits<double>::quiet_NaN();
        } else {
            co.beta = -std::log2(d2 / d1);
        }
    }
    return out;
}

ConvergenceOrder convergence_order(double chi, int k, double kn) {
    return convergence_orders({chi}, k, kn).front();
}

std::vector<double> make_grid(double y_min, double y_max, int count, GridSpacing spacing) {
    if (count < 1) {
        throw InputError("grid needs at least one point");
    }
    if (!(y_min >= 0.0) || !(y_max >= y_min) || !std::isfinite(y_max)) {
        throw InputError("grid bounds must satisfy 0 <= y_min <= y_max");
    }
    if (spacing == GridSpacing::Geometric && !(y_min > 0.0)) {
        throw InputError("geometric grid needs y_min > 0");
    }
    std::vector<double> y(static_cast<std::size_t>(count));
    if (count == 1) {
        y[0] = y_min;
        return y;
    }
    for (int i = 0; i < count; ++i) {
        const double s = static_cast<double>(i) / (count - 1);
        y[static_cast<std::size_t>(i)] = spacing == GridSpacing::Linear
                                             ? y_min + s * (y_max - y_min)
                                             : y_min * std::pow(y_max / y_min, s);
    }
    y.back() = y_max;
    return y;
}

std::vector<double> default_grid(const TemperatureLayerSolution& sol) {
    return make_grid(1e-3, 60.0 * sol.lambda(0) * sol.kn, 400, GridSpacing::Geometric);
}

std::vector<double> default_grid(const VelocityLayerSolution& sol) {
    return make_grid(1e-3, 60.0 * sol.lambda(0) * sol.kn, 400, GridSpacing::Geometric);
}

} // namespace knudsen
