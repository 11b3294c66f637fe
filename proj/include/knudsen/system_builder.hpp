#ifndef KNUDSEN_SYSTEM_BUILDER_HPP
#define KNUDSEN_SYSTEM_BUILDER_HPP

#include "knudsen/special_functions.hpp"

#include <Eigen/Dense>

#include <array>
#include <vector>

namespace knudsen {

enum class ProblemKind { TemperatureJump, Kramers };

inline constexpr int kMaxTemperatureOrder = 4097;
inline constexpr int kMaxKramersOrder = 4096;

/// Lower-triangular band matrix holding the diagonals (i, i-d), d = 0, 1, 2.
/// Storage is O(rows); indices are 0-based.
class LowerBand3 {
public:
    LowerBand3() = default;
    LowerBand3(int rows, int cols);

    [[nodiscard]] int rows() const { return rows_; }
    [[nodiscard]] int cols() const { return cols_; }
    [[nodiscard]] double operator()(int i, int j) const;
    void set(int i, int j, double value);
    [[nodiscard]] Eigen::MatrixXd dense() const;
    [[nodiscard]] double max_abs() const;

private:
    int rows_ = 0;
    int cols_ = 0;
    std::array<std::vector<double>, 3> diag_;
};

/// Even-odd reduced moment system  [[0, M0], [M0^T, 0]] dŵ/dy = -ŵ/Kn.
///
/// Storage is 0-based: row i of M0 and entry i of the L1 scalings belong to the
/// one-based basis function φ_{i+1}; likewise column j / L2 entry j to ψ_{j+1}.
///
/// Temperature unknown ordering (ŵ = L f̂):
///   even: (t0, t2, g2, t4, g4, ...)      odd: (t1 - q2/5, t3, g3, t5, g5, ...)
/// with t_i = f_{(i+2)e2} and g_i = f_{2e1+i e2} + f_{2e3+i e2}.
/// Kramers ordering: even (f_{e1+2e2}, f_{e1+4e2}, ...), odd (f_{e1+3e2}, f_{e1+5e2}, ...).
///
/// The diagonal scalings grow factorially, so they are kept as natural logarithms.
struct ReducedSystem {
    ProblemKind kind = ProblemKind::TemperatureJump;
    int order = 0;
    int m_even = 0;
    int m_odd = 0;
    LowerBand3 m0;
    std::vector<double> log_a;
    std::vector<double> log_b;
    double prandtl = 1.0;

    [[nodiscard]] double a(int i) const;
    [[nodiscard]] double b(int j) const;
    /// Dense (m_even + m_odd) square coefficient matrix [[0, M0], [M0^T, 0]].
    [[nodiscard]] Eigen::MatrixXd full_matrix() const;
};

/// Temperature-jump system for odd 3 <= M <= kMaxTemperatureOrder.
ReducedSystem build_temperature_system(int order);

/// Kramers system for even 4 <= M <= kMaxKramersOrder and Prandtl number > 0.
ReducedSystem build_kramers_system(int order, double prandtl);

struct HermiteTerm {
    double coef = 1.0;
    MultiIndex index;
};

/// Finite linear combination of 3-D Hermite polynomials He^{[0,1]}_α.
using HermiteCombination = std::vector<HermiteTerm>;

/// φ_i / ψ_j of the temperature system, 1-based as in the moment derivation.
HermiteCombination temperature_even_basis(int i);
HermiteCombination temperature_odd_basis(int j);
/// φ^k_i = He_{e1 + 2i e2}, ψ^k_j = He_{e1 + (2j+1) e2}.
HermiteCombination kramers_even_basis(int i);
HermiteCombination kramers_odd_basis(int j);

/// <He_phi, xi_2 He_psi> under the unit Gaussian weight, by the three-term
/// recursion and orthogonality. Test-side reference for the closed forms.
double inner_product_oracle(const MultiIndex& phi, const MultiIndex& psi);
double inner_product_oracle(const HermiteCombination& phi, const HermiteCombination& psi);
/// <p, p> under the unit Gaussian weight.
double norm_squared_oracle(const HermiteCombination& p);

} // namespace knudsen

#endif // KNUDSEN_SYSTEM_BUILDER_HPP
