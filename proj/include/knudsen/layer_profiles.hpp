#ifndef KNUDSEN_LAYER_PROFILES_HPP
#define KNUDSEN_LAYER_PROFILES_HPP

#include "knudsen/boundary_solver.hpp"
#include "knudsen/parity_spectral.hpp"
#include "knudsen/special_functions.hpp"
#include "knudsen/system_builder.hpp"

#include <Eigen/Dense>

#include <array>
#include <vector>

namespace knudsen {

/// Kn = sqrt(2)/2, the normalization used for the tabulated jump coefficients.
double default_knudsen();

struct TemperatureLayerSolution {
    int order = 0;
    double chi = 0.0;
    double kn = 0.0;
    double pr = 0.0;
    double q2 = 0.0;
    double theta_wall = 0.0;
    double c0 = 0.0;
    double theta0 = 0.0;
    double t0_wall = 0.0;          ///< t̄0(0)
    Eigen::VectorXd lambda;        ///< decay rates, descending
    Eigen::VectorXd r_tilde;       ///< θ̄ layer amplitudes
    Eigen::VectorXd c_tilde;       ///< θ_d amplitudes, independent of Kn and q̄2
    Eigen::VectorXd v_plus0;

    /// θ̄(ȳ) = -(2 Pr q̄2/(5 Kn)) ȳ + c0 + Σ r̃_i exp(-ȳ/(λ_i Kn)).
    [[nodiscard]] double theta(double y) const;
};

struct VelocityLayerSolution {
    int order = 0;
    double chi = 0.0;
    double kn = 0.0;
    double pr = 0.0;
    double sigma12 = 0.0;
    double u1_wall = 0.0;
    double c0k = 0.0;
    double u1_0 = 0.0;
    Eigen::VectorXd lambda;
    Eigen::VectorXd amplitudes;
    Eigen::VectorXd v_plus0;

    /// ū1(ȳ) = -σ̄12 ȳ/Kn + c0k + Σ amplitudes_i exp(-ȳ/(λ_i Kn)).
    [[nodiscard]] double velocity(double y) const;
};

/// Temperature-jump pipeline for one odd order. The decomposition and wall
/// matrix are computed once and reused for every χ.
class TemperatureJumpModel {
public:
    explicit TemperatureJumpModel(int order);
    /// Uses a caller-supplied decomposition of the order-M system (any valid
    /// column signs and ordering).
    TemperatureJumpModel(int order, ParityEigen eigen);

    [[nodiscard]] TemperatureLayerSolution solve(double chi, double kn, double pr, double q2,
                                                 double theta_wall) const;
    [[nodiscard]] const ReducedSystem& system() const { return system_; }
    [[nodiscard]] const ParityEigen& eigen() const { return eigen_; }
    /// Boundary data at χ = 1; solve() only swaps b(χ).
    [[nodiscard]] const WallBoundarySystem& wall() const { return wall_; }

private:
    ReducedSystem system_;
    ParityEigen eigen_;
    WallBoundarySystem wall_;
};

class KramersModel {
public:
    KramersModel(int order, double pr);
    KramersModel(int order, double pr, ParityEigen eigen);

    [[nodiscard]] VelocityLayerSolution solve(double chi, double kn, double sigma12, double u1_wall) const;
    [[nodiscard]] const ReducedSystem& system() const { return system_; }
    [[nodiscard]] const ParityEigen& eigen() const { return eigen_; }
    [[nodiscard]] const WallBoundarySystem& wall() const { return wall_; }

private:
    ReducedSystem system_;
    ParityEigen eigen_;
    WallBoundarySystem wall_;
};

TemperatureLayerSolution temperature_solution(int order, double chi, double kn, double pr, double q2,
                                              double theta_wall);

/// ζ = -(5 Kn/(2 Pr q̄2)) (c0 - θ̄^W), i.e. the value for θ̄^W = 0, q̄2 = 1.
double jump_coefficient(const TemperatureLayerSolution& sol);

/// θ_d(ȳ) = -(2 Kn/Pr) Σ c̃_i exp(-ȳ/(λ_i Kn)).
double temperature_defect(const TemperatureLayerSolution& sol, double y);

/// dθ_d/dȳ, analytic.
double temperature_defect_slope(const TemperatureLayerSolution& sol, double y);

/// θ̃ = (θ̄ - θ̄^W) / (-2 Pr q̄2/(5 Kn)) = ȳ + ζ - θ_d.
double normalized_temperature(const TemperatureLayerSolution& sol, double y);

struct ConductivityRatio {
    double ratio = 1.0;  ///< κ_eff/κ0, NaN at a pole
    bool pole = false;   ///< 1 - dθ_d/dȳ <= 0 at this point
};

ConductivityRatio effective_conductivity(const TemperatureLayerSolution& sol, double y);

VelocityLayerSolution velocity_solution(int order, double chi, double kn, double pr, double sigma12,
                                        double u1_wall);

/// ζ_v = -(Kn/σ̄12)(c0k - ū1^W).
double viscous_slip_coefficient(const VelocityLayerSolution& sol);

/// lim_{χ→0} (χ/(2-χ)) ζ = 5 sqrt(π)/8.
double chi_zero_limit();

struct ConvergenceOrder {
    double beta = 0.0;
    bool degenerate = false;  ///< |ζ_{k+1} - ζ_k| < 1e-14
    std::array<int, 3> orders{};
    std::array<double, 3> zetas{};
};

/// Orders used for β_k: M = 2^{k+1}+1, 2^{k+2}+1, 2^{k+3}+1.
std::array<int, 3> convergence_orders_for(int k);

/// β_k = -log2((ζ_{k+2} - ζ_{k+1}) / (ζ_{k+1} - ζ_k)) at Pr = 1.
ConvergenceOrder convergence_order(double chi, int k, double kn = default_knudsen());

/// β_k for several χ, reusing one decomposition per order.
std::vector<ConvergenceOrder> convergence_orders(const std::vector<double>& chis, int k,
                                                 double kn = default_knudsen());

enum class GridSpacing { Linear, Geometric };

/// count points from y_min to y_max inclusive. Geometric spacing needs y_min > 0.
std::vector<double> make_grid(double y_min, double y_max, int count, GridSpacing spacing);

/// Geometric grid from 1e-3 to 60 λ1 Kn with 400 points.
std::vector<double> default_grid(const TemperatureLayerSolution& sol);
std::vector<double> default_grid(const VelocityLayerSolution& sol);

} // namespace knudsen

#endif // KNUDSEN_LAYER_PROFILES_HPP
