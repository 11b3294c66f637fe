#include "knudsen/system_builder.hpp"

#include "knudsen/errors.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace knudsen {

LowerBand3::LowerBand3(int rows, int cols) : rows_(rows), cols_(cols) {
    for (auto& d : diag_) {
        d.assign(static_cast<std::size_t>(rows), 0.0);
    }
}

double LowerBand3::operator()(int i, int j) const {
    const int d = i - j;
    if (i < 0 || j < 0 || i >= rows_ || j >= cols_ || d < 0 || d > 2) {
        return 0.0;
    }
    return diag_[static_cast<std::size_t>(d)][static_cast<std::size_t>(i)];
}

void LowerBand3::set(int i, int j, double value) {
    const int d = i - j;
    if (i < 0 || j < 0 || i >= rows_ || j >= cols_ || d < 0 || d > 2) {
        throw InputError("LowerBand3::set: (" + std::to_string(i) + ", " + std::to_string(j) +
                         ") is outside the band");
    }
    diag_[static_cast<std::size_t>(d)][static_cast<std::size_t>(i)] = value;
}

Eigen::MatrixXd LowerBand3::dense() const {
    Eigen::MatrixXd out = Eigen::MatrixXd::Zero(rows_, cols_);
    for (int i = 0; i < rows_; ++i) {
        for (int j = std::max(0, i - 2); j <= std::min(i, cols_ - 1); ++j) {
            out(i, j) = (*this)(i, j);
        }
    }
    return out;
}

double LowerBand3::max_abs() const {
    double m = 0.0;
    for (const auto& d : diag_) {
        for (double v : d) {
            m = std::max(m, std::abs(v));
        }
    }
    return m;
}

double ReducedSystem::a(int i) const { return std::exp(log_a.at(static_cast<std::size_t>(i))); }

double ReducedSystem::b(int j) const { return std::exp(log_b.at(static_cast<std::size_t>(j))); }

Eigen::MatrixXd ReducedSystem::full_matrix() const {
    const int n = m_even + m_odd;
    Eigen::MatrixXd out = Eigen::MatrixXd::Zero(n, n);
    const Eigen::MatrixXd b0 = m0.dense();
    out.topRightCorner(m_even, m_odd) = b0;
    out.bottomLeftCorner(m_odd, m_even) = b0.transpose();
    return out;
}

namespace {

double half_log_factorial(int n) { return 0.5 * std::lgamma(n + 1.0); }

} // namespace

ReducedSystem build_temperature_system(int order) {
    if (order < 3 || order > kMaxTemperatureOrder || order % 2 == 0) {
        throw InputError("build_temperature_system: M must be odd in [3, " +
                         std::to_string(kMaxTemperatureOrder) + "], got " + std::to_string(order));
    }
    ReducedSystem sys;
    sys.kind = ProblemKind::TemperatureJump;
    sys.order = order;
    sys.m_odd = 2 * ((order - 1) / 2) - 1;
    sys.m_even = 2 * (order / 2) - 1;
    const int ne = sys.m_even;
    const int no = sys.m_odd;

    // Scalings, with index p = storage index + 1.
    sys.log_a.resize(static_cast<std::size_t>(ne));
    sys.log_b.resize(static_cast<std::size_t>(no));
    for (int p = 1; p <= ne; ++p) {
        double v = 0.5 * std::log(3.0);
        if (p > 1) {
            v = (p % 2 == 0) ? half_log_factorial(p + 2) : half_log_factorial(p - 1);
        }
        sys.log_a[static_cast<std::size_t>(p - 1)] = v;
    }
    for (int p = 1; p <= no; ++p) {
        double v = 0.5 * std::log(15.0);
        if (p > 1) {
            v = (p % 2 == 0) ? half_log_factorial(p + 3) : half_log_factorial(p);
        }
        sys.log_b[static_cast<std::size_t>(p - 1)] = v;
    }

    // <φ_i, ξ2 ψ_j>/(a_i b_j) as factorial ratios. The first column uses the
    // special combinations φ1, ψ1 with inner products 9, 24 and -6.
    sys.m0 = LowerBand3(ne, no);
    auto put = [&](int i, int j, double v) {
        if (i <= ne && j <= no) {
            sys.m0.set(i - 1, j - 1, v);
        }
    };
    put(1, 1, 3.0 / std::sqrt(5.0));
    put(2, 1, std::sqrt(8.0 / 5.0));
    put(3, 1, -std::sqrt(6.0 / 5.0));
    for (int k = 1; 2 * k <= std::max(ne, no); ++k) {
        put(2 * k, 2 * k, std::sqrt(2.0 * k + 3.0));
        put(2 * k + 1, 2 * k + 1, std::sqrt(2.0 * k + 1.0));
        if (k >= 2) {
            put(2 * k, 2 * k - 2, std::sqrt(2.0 * k + 2.0));
            put(2 * k + 1, 2 * k - 1, std::sqrt(2.0 * k));
        }
    }
    return sys;
}

ReducedSystem build_kramers_system(int order, double prandtl) {
    if (order < 4 || order > kMaxKramersOrder || order % 2 != 0) {
        throw InputError("build_kramers_system: M must be even in [4, " +
                         std::to_string(kMaxKramersOrder) + "], got " + std::to_string(order));
    }
    if (!(prandtl > 0.0) || !std::isfinite(prandtl)) {
        throw InputError("build_kramers_system: Prandtl number must be positive");
    }
    ReducedSystem sys;
    sys.kind = ProblemKind::Kramers;
    sys.order = order;
    sys.prandtl = prandtl;
    sys.m_even = (order - 1) / 2;
    sys.m_odd = (order - 2) / 2;
    const int ne = sys.m_even;
    const int no = sys.m_odd;
    // Shakhov correction to the first even weight.
    const double c1 = 1.0 - (1.0 - prandtl) / 5.0;

    sys.log_a.resize(static_cast<std::size_t>(ne));
    sys.log_b.resize(static_cast<std::size_t>(no));
    for (int i = 1; i <= ne; ++i) {
        sys.log_a[static_cast<std::size_t>(i - 1)] =
            half_log_factorial(2 * i) + (i == 1 ? 0.5 * std::log(c1) : 0.0);
    }
    for (int j = 1; j <= no; ++j) {
        sys.log_b[static_cast<std::size_t>(j - 1)] = half_log_factorial(2 * j + 1);
    }

    // <φ_i, ξ2 ψ_j> is (2j+1)! for i = j and (2j+2)! for i = j+1.
    sys.m0 = LowerBand3(ne, no);
    for (int j = 1; j <= no; ++j) {
        const double ci = (j == 1) ? c1 : 1.0;
        sys.m0.set(j - 1, j - 1, std::sqrt((2.0 * j + 1.0) / ci));
        if (j + 1 <= ne) {
            sys.m0.set(j, j - 1, std::sqrt(2.0 * j + 2.0));
        }
    }
    return sys;
}

HermiteCombination temperature_even_basis(int i) {
    if (i < 1) {
        throw InputError("temperature_even_basis: index is 1-based");
    }
    if (i == 1) {
        return {{1.0, {0, 2, 0}}, {-0.5, {2, 0, 0}}, {-0.5, {0, 0, 2}}};
    }
    if (i % 2 == 0) {
        return {{1.0, {0, i + 2, 0}}};
    }
    const int k = (i - 1) / 2;
    return {{0.5, {2, 2 * k, 0}}, {0.5, {0, 2 * k, 2}}};
}

HermiteCombination temperature_odd_basis(int j) {
    if (j < 1) {
        throw InputError("temperature_odd_basis: index is 1-based");
    }
    if (j == 1) {
        return {{1.0, {0, 3, 0}}, {-1.5, {2, 1, 0}}, {-1.5, {0, 1, 2}}};
    }
    if (j % 2 == 0) {
        return {{1.0, {0, j + 3, 0}}};
    }
    const int k = (j - 1) / 2;
    return {{0.5, {2, 2 * k + 1, 0}}, {0.5, {0, 2 * k + 1, 2}}};
}

HermiteCombination kramers_even_basis(int i) {
    if (i < 1) {
        throw InputError("kramers_even_basis: index is 1-based");
    }
    return {{1.0, {1, 2 * i, 0}}};
}

HermiteCombination kramers_odd_basis(int j) {
    if (j < 1) {
        throw InputError("kramers_odd_basis: index is 1-based");
    }
    return {{1.0, {1, 2 * j + 1, 0}}};
}

namespace {

double factorial(int n) { return std::tgamma(n + 1.0); }

double hermite_norm_squared(const MultiIndex& a) {
    return factorial(a.a1) * factorial(a.a2) * factorial(a.a3);
}

double orthogonal_product(const MultiIndex& a, const MultiIndex& b) {
    if (a.a2 < 0 || b.a2 < 0 || !(a == b)) {
        return 0.0;
    }
    return hermite_norm_squared(a);
}

} // namespace

double inner_product_oracle(const MultiIndex& phi, const MultiIndex& psi) {
    // ξ2 He_ψ = ψ2 He_{ψ-e2} + He_{ψ+e2}
    const MultiIndex down{psi.a1, psi.a2 - 1, psi.a3};
    const MultiIndex up{psi.a1, psi.a2 + 1, psi.a3};
    double total = orthogonal_product(phi, up);
    if (psi.a2 > 0) {
        total += psi.a2 * orthogonal_product(phi, down);
    }
    return total;
}

double inner_product_oracle(const HermiteCombination& phi, const HermiteCombination& psi) {
    double total = 0.0;
    for (const auto& p : phi) {
        for (const auto& q : psi) {
            total += p.coef * q.coef * inner_product_oracle(p.index, q.index);
        }
    }
    return total;
}

double norm_squared_oracle(const HermiteCombination& p) {
    double total = 0.0;
    for (const auto& x : p) {
        for (const auto& y : p) {
            total += x.coef * y.coef * orthogonal_product(x.index, y.index);
        }
    }
    return total;
}

} // namespace knudsen
