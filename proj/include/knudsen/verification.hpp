#ifndef KNUDSEN_VERIFICATION_HPP
#define KNUDSEN_VERIFICATION_HPP

#include "knudsen/system_builder.hpp"

#include <Eigen/Dense>

#include <functional>
#include <string>
#include <vector>

namespace knudsen {

inline constexpr int kQuadratureMaxOrder = 30;

/// S(α,β) by adaptive Gauss-Kronrod quadrature of
/// sqrt(2π/θ) ∫_{-∞}^0 ξ θ^{(α+β)/2} He_β He_α ω dξ, truncated to [-c sqrt(θ), 0]
/// with c = 12 + sqrt(α+β). Orders above kQuadratureMaxOrder are rejected.
double quadrature_S(int alpha, int beta, double theta);

/// quadrature_S(α, β, θ) / sqrt(α! β!).
double quadrature_S_normalized(int alpha, int beta, double theta);

struct SymmetricEigen {
    Eigen::VectorXd values;   ///< ascending
    Eigen::MatrixXd vectors;  ///< orthonormal columns
    int sweeps = 0;
};

/// Cyclic Jacobi on a dense symmetric matrix. Rejects input that is not
/// symmetric to 1e-12 (relative to the largest entry).
SymmetricEigen dense_symmetric_eig(const Eigen::MatrixXd& a);

/// Half-space integral provider, raw S(α,β).
using HalfSpaceFn = std::function<double(int, int)>;

/// Wall state of the temperature problem in the original moments:
/// t[i] = f_{(i+2)e2}, g[i] = f_{2e1+ie2} + f_{2e3+ie2} for i = 0..M-2.
/// g[1] is overwritten by the closure g1 = q2 - 3 t1.
struct TemperatureWallState {
    double theta_offset = 0.0;  ///< θ̄(0) - θ̄^W
    std::vector<double> t;
    std::vector<double> g;
};

/// f[i] = f_{e1+ie2}, i = 0..M-1, with f[1] = σ̄12; f[0] is unused.
struct KramersWallState {
    double u_offset = 0.0;  ///< ū1(0) - ū1^W
    std::vector<double> f;
};

TemperatureWallState temperature_state(const ReducedSystem& system, double theta_offset,
                                       const Eigen::VectorXd& w_even, const Eigen::VectorXd& w_odd,
                                       double q2);
KramersWallState kramers_state(const ReducedSystem& system, double u_offset, const Eigen::VectorXd& w_even,
                               const Eigen::VectorXd& w_odd, double sigma12);

/// Residuals of the linearized Maxwell wall conditions written in the original
/// moments, one row per boundary equation, each divided by α2! of its row.
Eigen::VectorXd temperature_wall_residual(int order, double chi, double q2, const TemperatureWallState& state,
                                          const HalfSpaceFn& s);
Eigen::VectorXd kramers_wall_residual(int order, double chi, const KramersWallState& state,
                                      const HalfSpaceFn& s);

struct BvpConfig {
    double y_max = 0.0;       ///< 0 selects 40 λ1 Kn
    int n_cells = 20000;
    double tolerance = 1e-10; ///< bound on the wall linear-solve residual
    double stretch = 50.0;    ///< ratio of the last to the first cell width
};

struct BvpProfile {
    std::vector<double> y;
    std::vector<double> value;  ///< θ̄ or ū1 at the nodes
    double wall_value = 0.0;
    double lambda1 = 0.0;
    double solve_residual = 0.0;
};

/// First-order implicit upwind discretization of the characteristic form of
/// M dŵ/dȳ = -ŵ/Kn (dense Jacobi eigenvectors of M), with the wall conditions
/// imposed in their raw form and v̂- = 0 at y_max. Odd M <= 15.
BvpProfile bvp_temperature(int order, double chi, double kn, double pr, double q2, double theta_wall,
                           const BvpConfig& cfg = {});
/// Same for the Kramers system. Even M <= 14.
BvpProfile bvp_kramers(int order, double chi, double kn, double pr, double sigma12, double u1_wall,
                       const BvpConfig& cfg = {});

/// Grids with n and 2n cells share every node of the coarse one.
struct RefinedProfile {
    std::vector<double> y;             ///< coarse nodes
    std::vector<double> coarse;
    std::vector<double> fine;
    std::vector<double> extrapolated;  ///< 2 fine - coarse
};

RefinedProfile refine(const BvpProfile& coarse, const BvpProfile& fine);

struct CheckResult {
    std::string name;
    bool passed = false;
    double max_residual = 0.0;
    double tolerance = 0.0;
};

enum class VerifyLevel { Quick, Full };

/// Runs the oracle suites: closed-form vs quadrature S, structured vs dense
/// eigenvalues, raw wall residuals, and analytic profiles vs the BVP.
std::vector<CheckResult> run_verification(VerifyLevel level, const HalfSpaceFn& s);
std::vector<CheckResult> run_verification(VerifyLevel level);

} // namespace knudsen

#endif // KNUDSEN_VERIFICATION_HPP
