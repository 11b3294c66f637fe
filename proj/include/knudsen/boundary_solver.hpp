#ifndef KNUDSEN_BOUNDARY_SOLVER_HPP
#define KNUDSEN_BOUNDARY_SOLVER_HPP

#include "knudsen/parity_spectral.hpp"
#include "knudsen/special_functions.hpp"
#include "knudsen/system_builder.hpp"

#include <Eigen/Dense>

#include <vector>

namespace knudsen {

/// b(χ) = 2χ / ((2-χ) sqrt(2π)). Throws InputError unless χ ∈ (0, 1].
double accommodation_factor(double chi);

/// Symmetric wall matrix W held as N^{-1} W N^{-1}, N = diag(sqrt(α_j!)),
/// so that orders in the thousands stay finite.
struct WallMatrix {
    Eigen::MatrixXd normalized;
    std::vector<double> log_norms;

    /// N * normalized * N. Only finite for moderate orders.
    [[nodiscard]] Eigen::MatrixXd raw() const;
};

/// T^b of the temperature problem (size m_e + 1). Row/column j carries the
/// normal index α_j = j + 2 for even j (t-type rows, with the wall density
/// eliminated) and α_j = j - 1 for odd j (g-type rows).
WallMatrix assemble_temperature_Tb(int order, const HalfSpaceTable& table);

/// T = diag(1, L1^{-1}) diag(P1, I) T^b diag(P1, I) diag(1, L1^{-1}), P1 = [[0.5, 1], [1, -1]].
/// log_a holds log a_i of the even scalings.
Eigen::MatrixXd assemble_T(const WallMatrix& tb, const std::vector<double>& log_a);

/// S_k of the Kramers problem, s_ij = S(2i-2, 2j-2), size m_e + 1.
WallMatrix assemble_kramers_Sk(int order, const HalfSpaceTable& table);

/// T̃_k = diag(1, L1^k)^{-1} S_k diag(1, L1^k)^{-1}.
Eigen::MatrixXd assemble_kramers_T(const WallMatrix& sk, const std::vector<double>& log_a);

/// Maxwell-wall boundary data for one reduced system and accommodation coefficient.
struct WallBoundarySystem {
    ProblemKind kind = ProblemKind::TemperatureJump;
    int order = 0;
    WallMatrix wall;            ///< T^b or S_k
    Eigen::MatrixXd t_scaled;   ///< T or T̃_k
    Eigen::VectorXd c_vec;      ///< c_r or r_k, length m_o + 1
    double b_chi = 0.0;
    double chi = 0.0;
};

WallBoundarySystem assemble_wall_system(const ReducedSystem& system, const HalfSpaceTable& table,
                                        double chi);

/// K(χ) = b(χ) T - 2 diag(0, R_even Λ+ R_even^T).
Eigen::MatrixXd assemble_K(const WallBoundarySystem& wall, const ParityEigen& eigen);

struct WallSolution {
    double wall_unknown = 0.0;  ///< θ̄(0) or ū1(0)
    double wall_offset = 0.0;   ///< wall_unknown - wall_value
    Eigen::VectorXd v_plus0;    ///< decaying characteristic amplitudes at the wall
    Eigen::VectorXd w_even0;
    Eigen::VectorXd w_odd0;
};

/// Solves K(χ) diag(1, R_even) (wall_unknown - wall_value, v̂+(0)) = flux * c_vec
/// by a Cholesky factorization of -K. flux is q̄2 (temperature) or σ̄12 (Kramers).
/// Throws StructuralError if -K is not positive definite.
WallSolution solve_wall(const WallBoundarySystem& wall, const ParityEigen& eigen, double flux,
                        double wall_value);

} // namespace knudsen

#endif // KNUDSEN_BOUNDARY_SOLVER_HPP
