#include "knudsen/special_functions.hpp"

#include "knudsen/errors.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace knudsen {

namespace {

constexpr double kHalfSqrt2Pi = 1.2533141373155002512; // sqrt(2 pi) / 2

void require_raw_range(int alpha, int beta, const char* who) {
    if (alpha < 0 || beta < 0 || alpha > kRawHalfSpaceMaxOrder || beta > kRawHalfSpaceMaxOrder) {
        throw InputError(std::string(who) + ": indices must lie in [0, " +
                         std::to_string(kRawHalfSpaceMaxOrder) + "], got (" +
                         std::to_string(alpha) + ", " + std::to_string(beta) + ")");
    }
}

// z_n / sqrt(n!) via the ratio z_{2m}/sqrt((2m)!) = -sqrt((2m-1)/(2m)) z_{2m-2}/sqrt((2m-2)!).
SignedLog z_normalized_direct(int n) {
    if (n % 2 != 0) {
        return {};
    }
    double log_mag = 0.0;
    for (int m = 1; m <= n / 2; ++m) {
        log_mag += 0.5 * std::log1p(-1.0 / (2.0 * m));
    }
    return {(n / 2) % 2 == 0 ? 1 : -1, log_mag};
}

// S(α,β)/sqrt(α!β!). z(n) returns z_n/sqrt(n!) for 0 <= n <= max(α,β)+1.
// Both odd: S = 2 z_{α+1} z_{β+1}/((α-β)^2-1), from S = β I(α,β-1) + I(α,β+1).
template <class ZFn>
double s_normalized_from(int alpha, int beta, ZFn z) {
    if (beta == alpha + 1) {
        return kHalfSqrt2Pi * std::sqrt(static_cast<double>(alpha + 1));
    }
    if (beta == alpha - 1) {
        return kHalfSqrt2Pi * std::sqrt(static_cast<double>(alpha));
    }
    const double d = static_cast<double>(alpha - beta);
    if (alpha % 2 == 1 && beta % 2 == 1) {
        const SignedLog za = z(alpha + 1);
        const SignedLog zb = z(beta + 1);
        const double coef = 2.0 * std::sqrt(static_cast<double>(alpha + 1)) *
                            std::sqrt(static_cast<double>(beta + 1)) / (d * d - 1.0);
        return coef * za.sign * zb.sign * std::exp(za.log_magnitude + zb.log_magnitude);
    }
    if (alpha % 2 == 1 || beta % 2 == 1) {
        return 0.0;
    }
    const SignedLog za = z(alpha);
    const SignedLog zb = z(beta);
    const double coef = static_cast<double>(alpha + beta + 1) / (d * d - 1.0);
    return coef * za.sign * zb.sign * std::exp(za.log_magnitude + zb.log_magnitude);
}

} // namespace

double SignedLog::value() const {
    if (sign == 0) {
        return 0.0;
    }
    return sign * std::exp(log_magnitude);
}

double hermite_eval(int order, double xi, double u, double theta) {
    if (!(theta > 0.0)) {
        throw InputError("hermite_eval: theta must be positive");
    }
    if (order < 0) {
        throw InputError("hermite_eval: order must be non-negative");
    }
    const double x = xi - u;
    double prev = 1.0;
    if (order == 0) {
        return prev;
    }
    double cur = x / theta;
    for (int n = 1; n < order; ++n) {
        const double next = (x * cur - n * prev) / theta;
        prev = cur;
        cur = next;
    }
    return cur;
}

SignedLog z_value_log(int n) {
    if (n < 0) {
        throw InputError("z_value: n must be non-negative");
    }
    if (n % 2 != 0) {
        return {};
    }
    double log_mag = 0.0;
    for (int k = 1; k <= n / 2; ++k) {
        log_mag += std::log(2.0 * k - 1.0);
    }
    return {(n / 2) % 2 == 0 ? 1 : -1, log_mag};
}

double z_value(int n) {
    // Exact integer recursion while representable; avoids exp/log rounding for small n.
    if (n < 0) {
        throw InputError("z_value: n must be non-negative");
    }
    if (n % 2 != 0) {
        return 0.0;
    }
    double z = 1.0;
    for (int k = 1; k <= n / 2; ++k) {
        z *= -(2.0 * k - 1.0);
    }
    return z;
}

double half_space_I(int alpha, int beta) {
    require_raw_range(alpha, beta, "half_space_I");
    if (alpha == beta) {
        return std::tgamma(alpha + 1.0) * kHalfSqrt2Pi;
    }
    const double num = z_value(alpha + 1) * z_value(beta) - z_value(beta + 1) * z_value(alpha);
    return num / static_cast<double>(alpha - beta);
}

double half_space_S(int alpha, int beta) {
    require_raw_range(alpha, beta, "half_space_S");
    if (beta == alpha + 1) {
        return kHalfSqrt2Pi * std::tgamma(alpha + 2.0);
    }
    if (beta == alpha - 1) {
        return kHalfSqrt2Pi * std::tgamma(alpha + 1.0);
    }
    const double d = static_cast<double>(alpha - beta);
    if (alpha % 2 == 1 && beta % 2 == 1) {
        return 2.0 / (d * d - 1.0) * (z_value(alpha + 1) * z_value(beta + 1));
    }
    return static_cast<double>(alpha + beta + 1) / (d * d - 1.0) * (z_value(alpha) * z_value(beta));
}

double half_space_S_normalized(int alpha, int beta) {
    if (alpha < 0 || beta < 0) {
        throw InputError("half_space_S_normalized: indices must be non-negative");
    }
    return s_normalized_from(alpha, beta, z_normalized_direct);
}

double wall_J(int m, double x, double theta0, double dtheta) {
    if (!(theta0 > 0.0)) {
        throw InputError("wall_J: theta0 must be positive");
    }
    if (m < 0) {
        throw InputError("wall_J: m must be non-negative");
    }
    double jm2 = 1.0;
    if (m == 0) {
        return jm2;
    }
    double jm1 = x;
    const double d = theta0 * dtheta;
    for (int k = 2; k <= m; ++k) {
        const double jk = (d * jm2 + x * jm1) / k;
        jm2 = jm1;
        jm1 = jk;
    }
    return jm1;
}

double wall_density_offset(const WallMoments& wm) {
    double sum = 0.0;
    const int n = static_cast<int>(wm.normal_moments.size());
    for (int beta = 2; beta < n; beta += 2) {
        double m_beta = 0.0;
        if (beta == 2) {
            m_beta = 0.5 * (wm.theta_bar_wall - wm.theta_bar_gas);
        }
        sum += half_space_S(0, beta) * (wm.normal_moments[static_cast<std::size_t>(beta)] - m_beta);
    }
    return sum / half_space_S(0, 0);
}

double linearized_wall_moment(const MultiIndex& alpha, const WallMoments& wm) {
    if (alpha.a1 < 0 || alpha.a2 < 0 || alpha.a3 < 0) {
        throw InputError("linearized_wall_moment: negative multi-index component");
    }
    const int comps[3] = {alpha.a1, alpha.a2, alpha.a3};
    const int order = alpha.order();
    if (order == 0) {
        return wall_density_offset(wm);
    }
    for (int i = 0; i < 3; ++i) {
        if (comps[i] != order) {
            continue;
        }
        if (order == 1) {
            return wm.u_bar_wall[i] - wm.u_bar_gas[i];
        }
        if (order == 2) {
            return 0.5 * (wm.theta_bar_wall - wm.theta_bar_gas);
        }
    }
    return 0.0;
}

HalfSpaceTable::HalfSpaceTable(int max_order) : max_order_(max_order) {
    if (max_order < 0) {
        throw InputError("HalfSpaceTable: max_order must be non-negative");
    }
    const auto n = static_cast<std::size_t>(max_order) + 1;
    z_norm_.resize(n + 1);
    z_norm_[0] = {1, 0.0};
    for (std::size_t k = 2; k <= n; k += 2) {
        const SignedLog& prev = z_norm_[k - 2];
        z_norm_[k] = {-prev.sign, prev.log_magnitude + 0.5 * std::log1p(-1.0 / static_cast<double>(k))};
    }
    table_.resize(n * n);
    for (int a = 0; a <= max_order; ++a) {
        for (int b = a; b <= max_order; ++b) {
            const double v = s_normalized_from(
                a, b, [&](int k) { return z_norm_[static_cast<std::size_t>(k)]; });
            table_[static_cast<std::size_t>(a) * n + static_cast<std::size_t>(b)] = v;
            table_[static_cast<std::size_t>(b) * n + static_cast<std::size_t>(a)] = v;
        }
    }
}

double HalfSpaceTable::s_normalized(int alpha, int beta) const {
    if (alpha < 0 || beta < 0 || alpha > max_order_ || beta > max_order_) {
        throw InputError("HalfSpaceTable: index outside the table");
    }
    const auto n = static_cast<std::size_t>(max_order_) + 1;
    return table_[static_cast<std::size_t>(alpha) * n + static_cast<std::size_t>(beta)];
}

double HalfSpaceTable::s(int alpha, int beta) const {
    require_raw_range(alpha, beta, "HalfSpaceTable::s");
    const double norm = std::sqrt(std::tgamma(alpha + 1.0)) * std::sqrt(std::tgamma(beta + 1.0));
    return s_normalized(alpha, beta) * norm;
}

} // namespace knudsen
