#ifndef KNUDSEN_SPECIAL_FUNCTIONS_HPP
#define KNUDSEN_SPECIAL_FUNCTIONS_HPP

#include <vector>

namespace knudsen {

/// Largest order for which raw (unnormalized) S and I are returned in double precision.
inline constexpr int kRawHalfSpaceMaxOrder = 150;

/// A real number stored as sign and natural log of its magnitude. sign == 0 means exactly zero.
struct SignedLog {
    int sign = 0;
    double log_magnitude = 0.0;

    [[nodiscard]] double value() const;
    [[nodiscard]] bool is_zero() const { return sign == 0; }
};

/// Hermite polynomial He_order^{[u,theta]}(xi) from the three-term recursion
/// (xi-u) He_{n+1} = (n+1) He_n + theta He_{n+2}. Throws InputError for theta <= 0.
double hermite_eval(int order, double xi, double u, double theta);

/// z_n = theta^{n/2} He_n^{[0,theta]}(0): z_0 = 1, z_1 = 0, z_{n+1} = -n z_{n-1}.
SignedLog z_value_log(int n);

/// z_n as a double. Overflows to +-inf beyond n ~ 300.
double z_value(int n);

/// Half-line integral I(alpha, beta). Raw values; requires alpha, beta <= kRawHalfSpaceMaxOrder.
double half_space_I(int alpha, int beta);

/// Half-line boundary integral S(alpha, beta). Raw values; requires alpha, beta <= kRawHalfSpaceMaxOrder.
/// Away from the diagonal band, S = (α+β+1)/((α-β)^2-1) z_α z_β, except that
/// for α, β both odd S = 2 z_{α+1} z_{β+1}/((α-β)^2-1).
double half_space_S(int alpha, int beta);

/// S(alpha, beta) / sqrt(alpha! beta!), evaluated without forming factorials.
double half_space_S_normalized(int alpha, int beta);

/// Wall-Maxwellian moment integral J_m(x) by the recursion
/// J_m = ((theta0 * dtheta) J_{m-2} + x J_{m-1}) / m, J_0 = 1, J_1 = x.
/// dtheta is the dimensionless temperature difference between wall and gas.
double wall_J(int m, double x, double theta0, double dtheta);

struct MultiIndex {
    int a1 = 0;
    int a2 = 0;
    int a3 = 0;

    [[nodiscard]] int order() const { return a1 + a2 + a3; }
    friend bool operator==(const MultiIndex&, const MultiIndex&) = default;
};

/// Linearized wall and gas state entering the wall moments m̄_α.
struct WallMoments {
    double theta_bar_wall = 0.0;
    double theta_bar_gas = 0.0;
    double u_bar_wall[3] = {0.0, 0.0, 0.0};
    double u_bar_gas[3] = {0.0, 0.0, 0.0};
    /// Gas-side normal moments f̄_{beta e2}, indexed by beta. Only the even
    /// entries with beta >= 2 are used, to eliminate the wall density.
    std::vector<double> normal_moments;
};

/// ρ̄^W − ρ̄ from the zeroth boundary condition, given the gas-side normal moments.
double wall_density_offset(const WallMoments& wm);

/// m̄_α of the wall Maxwellian. For α = 0 returns ρ̄^W − ρ̄ (see wall_density_offset).
double linearized_wall_moment(const MultiIndex& alpha, const WallMoments& wm);

/// Memoized normalized half-space integrals S(α,β)/sqrt(α!β!) for 0 <= α,β <= max_order.
/// Immutable after construction.
class HalfSpaceTable {
public:
    explicit HalfSpaceTable(int max_order);

    [[nodiscard]] int max_order() const { return max_order_; }
    [[nodiscard]] double s_normalized(int alpha, int beta) const;
    /// Raw S(α,β); only for α,β <= kRawHalfSpaceMaxOrder.
    [[nodiscard]] double s(int alpha, int beta) const;
    /// z_n / sqrt(n!) in signed-log form.
    [[nodiscard]] const SignedLog& z_normalized(int n) const { return z_norm_[static_cast<std::size_t>(n)]; }

private:
    int max_order_;
    std::vector<SignedLog> z_norm_;
    std::vector<double> table_;
};

} // namespace knudsen

#endif // KNUDSEN_SPECIAL_FUNCTIONS_HPP
