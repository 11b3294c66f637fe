#include "knudsen/verification.hpp"

#include "knudsen/boundary_solver.hpp"
#include "knudsen/errors.hpp"
#include "knudsen/layer_profiles.hpp"
#include "knudsen/parity_spectral.hpp"
#include "knudsen/special_functions.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace knudsen {

namespace {

// He_n(x)/sqrt(n!) for n = 0..order at one point.
void normalized_hermite(int order, double x, std::vector<double>& h) {
    h.assign(static_cast<std::size_t>(order + 1), 0.0);
    h[0] = 1.0;
    if (order >= 1) {
        h[1] = x;
    }
    for (int n = 1; n < order; ++n) {
        h[static_cast<std::size_t>(n + 1)] =
            (x * h[static_cast<std::size_t>(n)] - std::sqrt(static_cast<double>(n)) * h[static_cast<std::size_t>(n - 1)]) /
            std::sqrt(n + 1.0);
    }
}

double log_factorial(int n) { return std::lgamma(n + 1.0); }

} // namespace

double quadrature_S_normalized(int alpha, int beta, double theta) {
    if (alpha < 0 || beta < 0 || alpha > kQuadratureMaxOrder || beta > kQuadratureMaxOrder) {
        throw InputError("quadrature_S: orders must lie in [0, " + std::to_string(kQuadratureMaxOrder) + "]");
    }
    if (!(theta > 0.0)) {
        throw InputError("quadrature_S: theta must be positive");
    }
    const double sqrt_theta = std::sqrt(theta);
    const double c = 12.0 + std::sqrt(static_cast<double>(alpha + beta));
    const int top = std::max(alpha, beta);
    std::vector<double> h;
    auto integrand = [&](double xi) {
        const double x = xi / sqrt_theta;
        normalized_hermite(top, x, h);
        // θ^{(α+β)/2} He^{[0,θ]}_α He^{[0,θ]}_β = He_α(x) He_β(x).
        const double omega = std::exp(-0.5 * x * x) / std::sqrt(2.0 * std::numbers::pi * theta);
        return std::sqrt(2.0 * std::numbers::pi / theta) * xi * h[static_cast<std::size_t>(alpha)] *
               h[static_cast<std::size_t>(beta)] * omega;
    };
    double error = 0.0;
    return boost::math::quadrature::gauss_kronrod<double, 61>::integrate(integrand, -c * sqrt_theta, 0.0, 12,
                                                                          1e-13, &error);
}

double quadrature_S(int alpha, int beta, double theta) {
    const double scale = std::exp(0.5 * (log_factorial(alpha) + log_factorial(beta)));
    return quadrature_S_normalized(alpha, beta, theta) * scale;
}

SymmetricEigen dense_symmetric_eig(const Eigen::MatrixXd& input) {
    if (input.rows() != input.cols()) {
        throw InputError("dense_symmetric_eig: matrix must be square");
    }
    const Eigen::Index n = input.rows();
    const double amax = n > 0 ? input.cwiseAbs().maxCoeff() : 0.0;
    if ((input - input.transpose()).cwiseAbs().maxCoeff() > 1e-12 * std::max(1.0, amax)) {
        throw InputError("dense_symmetric_eig: matrix is not symmetric");
    }
    Eigen::MatrixXd a = 0.5 * (input + input.transpose());
    Eigen::MatrixXd v = Eigen::MatrixXd::Identity(n, n);
    const double fro = a.norm();
    int sweep = 0;
    for (; sweep < 100; ++sweep) {
        double off = 0.0;
        for (Eigen::Index q = 1; q < n; ++q) {
            for (Eigen::Index p = 0; p < q; ++p) {
                off += a(p, q) * a(p, q);
            }
        }
        if (std::sqrt(2.0 * off) <= 1e-15 * fro) {
            break;
        }
        for (Eigen::Index p = 0; p < n - 1; ++p) {
            for (Eigen::Index q = p + 1; q < n; ++q) {
                const double apq = a(p, q);
                if (apq == 0.0) {
                    continue;
                }
                const double tau = (a(q, q) - a(p, p)) / (2.0 * apq);
                const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::hypot(1.0, tau));
                const double c = 1.0 / std::hypot(1.0, t);
                const double s = t * c;
                for (Eigen::Index k = 0; k < n; ++k) {
                    const double akp = a(k, p);
                    const double akq = a(k, q);
                    a(k, p) = c * akp - s * akq;
                    a(k, q) = s * akp + c * akq;
                }
                for (Eigen::Index k = 0; k < n; ++k) {
                    const double apk = a(p, k);
                    const double aqk = a(q, k);
                    a(p, k) = c * apk - s * aqk;
                    a(q, k) = s * apk + c * aqk;
                }
                a(p, q) = 0.0;
                a(q, p) = 0.0;
                for (Eigen::Index k = 0; k < n; ++k) {
                    const double vkp = v(k, p);
                    const double vkq = v(k, q);
                    v(k, p) = c * vkp - s * vkq;
                    v(k, q) = s * vkp + c * vkq;
                }
            }
        }
    }
    if (sweep == 100) {
        throw StructuralError("dense_symmetric_eig: no convergence after 100 sweeps");
    }
    std::vector<Eigen::Index> idx(static_cast<std::size_t>(n));
    for (Eigen::Index i = 0; i < n; ++i) {
        idx[static_cast<std::size_t>(i)] = i;
    }
    std::stable_sort(idx.begin(), idx.end(), [&](Eigen::Index x, Eigen::Index y) { return a(x, x) < a(y, y); });
    SymmetricEigen out;
    out.values.resize(n);
    out.vectors.resize(n, n);
    out.sweeps = sweep;
    for (Eigen::Index k = 0; k < n; ++k) {
        const Eigen::Index src = idx[static_cast<std::size_t>(k)];
        out.values(k) = a(src, src);
        out.vectors.col(k) = v.col(src);
    }
    return out;
}

TemperatureWallState temperature_state(const ReducedSystem& system, double theta_offset,
                                       const Eigen::VectorXd& w_even, const Eigen::VectorXd& w_odd,
                                       double q2) {
    const int m = system.order;
    TemperatureWallState st;
    st.theta_offset = theta_offset;
    st.t.assign(static_cast<std::size_t>(m - 1), 0.0);
    st.g.assign(static_cast<std::size_t>(m - 1), 0.0);
    for (int i = 0; i < system.m_even; ++i) {
        const double f = w_even(i) / system.a(i);
        if (i == 0) {
            st.t[0] = f;
        } else if (i % 2 == 1) {
            st.t[static_cast<std::size_t>(i + 1)] = f;
        } else {
            st.g[static_cast<std::size_t>(i)] = f;
        }
    }
    for (int j = 0; j < system.m_odd; ++j) {
        const double f = w_odd(j) / system.b(j);
        if (j == 0) {
            st.t[1] = f + q2 / 5.0;
        } else if (j % 2 == 1) {
            st.t[static_cast<std::size_t>(j + 2)] = f;
        } else {
            st.g[static_cast<std::size_t>(j + 1)] = f;
        }
    }
    st.g[1] = q2 - 3.0 * st.t[1];
    return st;
}

KramersWallState kramers_state(const ReducedSystem& system, double u_offset, const Eigen::VectorXd& w_even,
                               const Eigen::VectorXd& w_odd, double sigma12) {
    KramersWallState st;
    st.u_offset = u_offset;
    st.f.assign(static_cast<std::size_t>(system.order), 0.0);
    st.f[1] = sigma12;
    for (int i = 0; i < system.m_even; ++i) {
        st.f[static_cast<std::size_t>(2 * i + 2)] = w_even(i) / system.a(i);
    }
    for (int j = 0; j < system.m_odd; ++j) {
        st.f[static_cast<std::size_t>(2 * j + 3)] = w_odd(j) / system.b(j);
    }
    return st;
}

Eigen::VectorXd temperature_wall_residual(int order, double chi, double q2, const TemperatureWallState& st,
                                          const HalfSpaceFn& s) {
    if (order < 3 || order % 2 == 0 || static_cast<int>(st.t.size()) != order - 1 ||
        static_cast<int>(st.g.size()) != order - 1) {
        throw InputError("temperature_wall_residual: state does not match an odd order");
    }
    const double b = accommodation_factor(chi);
    auto t = [&](int i) { return i < 0 ? 0.0 : st.t[static_cast<std::size_t>(i)]; };
    auto g = [&](int i) {
        if (i < 0) {
            return 0.0;
        }
        return i == 1 ? q2 - 3.0 * st.t[1] : st.g[static_cast<std::size_t>(i)];
    };
    const double s00 = s(0, 0);
    Eigen::VectorXd r(order - 1);
    Eigen::Index row = 0;
    for (int i = 0; i <= order - 3; i += 2) {
        const int a2 = i + 2;
        double rhs = 0.0;
        for (int beta = 2; beta <= order - 1; beta += 2) {
            const double f = beta == 2 ? t(0) + 0.5 * st.theta_offset : t(beta - 2);
            rhs += (s(a2, beta) - s(a2, 0) * s(0, beta) / s00) * f;
        }
        const double fact = std::exp(log_factorial(a2));
        r(row++) = (fact * (t(i - 1) + (i + 3) * t(i + 1)) - b * rhs) / fact;
    }
    for (int i = 0; i <= order - 3; i += 2) {
        double rhs = 0.0;
        for (int beta = 0; beta <= order - 3; beta += 2) {
            const double f = beta == 0 ? -t(0) + st.theta_offset : g(beta);
            rhs += s(i, beta) * f;
        }
        const double fact = std::exp(log_factorial(i));
        r(row++) = (fact * (g(i - 1) + (i + 1) * g(i + 1)) - b * rhs) / fact;
    }
    return r;
}

Eigen::VectorXd kramers_wall_residual(int order, double chi, const KramersWallState& st, const HalfSpaceFn& s) {
    if (order < 4 || order % 2 != 0 || static_cast<int>(st.f.size()) != order) {
        throw InputError("kramers_wall_residual: state does not match an even order");
    }
    const double b = accommodation_factor(chi);
    auto f = [&](int i) { return i < 0 ? 0.0 : st.f[static_cast<std::size_t>(i)]; };
    Eigen::VectorXd r(order / 2);
    Eigen::Index row = 0;
    for (int i = 0; i <= order - 2; i += 2) {
        double rhs = 0.0;
        for (int beta = 0; beta <= order - 2; beta += 2) {
            rhs += s(i, beta) * (beta == 0 ? st.u_offset : f(beta));
        }
        const double fact = std::exp(log_factorial(i));
        r(row++) = (fact * (f(i - 1) + (i + 1) * f(i + 1)) - b * rhs) / fact;
    }
    return r;
}

namespace {

struct PositiveModes {
    Eigen::VectorXd lambda;
    Eigen::MatrixXd vectors;
};

PositiveModes positive_modes(const ReducedSystem& system) {
    const SymmetricEigen e = dense_symmetric_eig(system.full_matrix());
    const double scale = e.values.cwiseAbs().maxCoeff();
    std::vector<Eigen::Index> keep;
    for (Eigen::Index i = 0; i < e.values.size(); ++i) {
        if (e.values(i) > 1e-10 * scale) {
            keep.push_back(i);
        }
    }
    PositiveModes out;
    out.lambda.resize(static_cast<Eigen::Index>(keep.size()));
    out.vectors.resize(e.vectors.rows(), static_cast<Eigen::Index>(keep.size()));
    for (std::size_t k = 0; k < keep.size(); ++k) {
        out.lambda(static_cast<Eigen::Index>(k)) = e.values(keep[k]);
        out.vectors.col(static_cast<Eigen::Index>(k)) = e.vectors.col(keep[k]);
    }
    return out;
}

std::vector<double> nested_grid(double y_max, int n, double stretch) {
    std::vector<double> y(static_cast<std::size_t>(n + 1));
    const double log_r = std::log(stretch) / n;
    const double denom = std::expm1(n * log_r);
    for (int k = 0; k <= n; ++k) {
        y[static_cast<std::size_t>(k)] = y_max * std::expm1(k * log_r) / denom;
    }
    y.back() = y_max;
    return y;
}

// Solves residual(x) = 0 for an affine residual by dense LU.
Eigen::VectorXd solve_affine(const std::function<Eigen::VectorXd(const Eigen::VectorXd&)>& residual,
                             Eigen::Index n, double tol, double& achieved) {
    const Eigen::VectorXd r0 = residual(Eigen::VectorXd::Zero(n));
    if (r0.size() != n) {
        throw StructuralError("BVP oracle: wall equation count does not match the unknowns");
    }
    Eigen::MatrixXd a(n, n);
    for (Eigen::Index k = 0; k < n; ++k) {
        a.col(k) = residual(Eigen::VectorXd::Unit(n, k)) - r0;
    }
    const Eigen::VectorXd x = a.fullPivLu().solve(-r0);
    achieved = residual(x).cwiseAbs().maxCoeff() / std::max(1.0, r0.cwiseAbs().maxCoeff());
    if (!(achieved <= tol)) {
        throw StructuralError("BVP oracle: wall solve residual " + std::to_string(achieved) +
                              " exceeds tolerance");
    }
    return x;
}

void check_config(const BvpConfig& cfg, double y_max, double lambda1, double kn) {
    if (cfg.n_cells < 1000) {
        throw InputError("BvpConfig: n_cells must be >= 1000");
    }
    if (y_max < 20.0 * lambda1 * kn * (1.0 - 1e-12)) {
        throw InputError("BvpConfig: y_max must be >= 20 lambda1 Kn");
    }
    if (!(cfg.stretch >= 1.0)) {
        throw InputError("BvpConfig: stretch must be >= 1");
    }
}

struct GridSweep {
    std::vector<double> y;
    std::vector<double> value;
};

// Marches v_k(y_j) = v_k(y_{j-1}) / (1 + h/(λ_k Kn)) and records obs(ŵ_even head).
template <class Obs>
GridSweep march(const PositiveModes& modes, const Eigen::VectorXd& v0, Eigen::Index head, double kn,
                const std::vector<double>& y, Obs obs) {
    GridSweep out;
    out.y = y;
    out.value.resize(y.size());
    Eigen::VectorXd v = v0;
    const Eigen::MatrixXd top = modes.vectors.topRows(head);
    for (std::size_t j = 0; j < y.size(); ++j) {
        if (j > 0) {
            const double h = y[j] - y[j - 1];
            for (Eigen::Index k = 0; k < v.size(); ++k) {
                v(k) /= 1.0 + h / (modes.lambda(k) * kn);
            }
        }
        out.value[j] = obs(y[j], Eigen::VectorXd(top * v));
    }
    return out;
}

} // namespace

BvpProfile bvp_temperature(int order, double chi, double kn, double pr, double q2, double theta_wall,
                           const BvpConfig& cfg) {
    if (order < 3 || order % 2 == 0 || order > 15) {
        throw InputError("bvp_temperature: M must be odd and <= 15");
    }
    const ReducedSystem sys = build_temperature_system(order);
    const PositiveModes modes = positive_modes(sys);
    const double lambda1 = modes.lambda.maxCoeff();
    const double y_max = cfg.y_max > 0.0 ? cfg.y_max : 40.0 * lambda1 * kn;
    check_config(cfg, y_max, lambda1, kn);

    const Eigen::Index m = modes.lambda.size();
    auto residual = [&](const Eigen::VectorXd& x) {
        const Eigen::VectorXd w = modes.vectors * x.tail(m);
        const TemperatureWallState st =
            temperature_state(sys, x(0), w.head(sys.m_even), w.tail(sys.m_odd), q2);
        return temperature_wall_residual(order, chi, q2, st, half_space_S);
    };
    BvpProfile out;
    const Eigen::VectorXd x = solve_affine(residual, m + 1, cfg.tolerance, out.solve_residual);
    out.wall_value = theta_wall + x(0);
    out.lambda1 = lambda1;

    const Eigen::Index head = std::min<Eigen::Index>(3, sys.m_even);
    const double weights[3] = {1.0, 6.0, 1.0};
    auto defect = [&](const Eigen::VectorXd& we) {
        double s = 0.0;
        for (Eigen::Index i = 0; i < head; ++i) {
            s += weights[i] * we(i) / sys.a(static_cast<int>(i));
        }
        return s;
    };
    const double x0 = defect((modes.vectors.topRows(head) * x.tail(m)).eval());
    const double slope = -2.0 * pr * q2 / (5.0 * kn);
    GridSweep sw = march(modes, x.tail(m), head, kn, nested_grid(y_max, cfg.n_cells, cfg.stretch),
                         [&](double y, const Eigen::VectorXd& we) {
                             return out.wall_value + slope * y - 0.8 * (defect(we) - x0);
                         });
    out.y = std::move(sw.y);
    out.value = std::move(sw.value);
    return out;
}

BvpProfile bvp_kramers(int order, double chi, double kn, double pr, double sigma12, double u1_wall,
                       const BvpConfig& cfg) {
    if (order < 4 || order % 2 != 0 || order > 14) {
        throw InputError("bvp_kramers: M must be even and <= 14");
    }
    const ReducedSystem sys = build_kramers_system(order, pr);
    const PositiveModes modes = positive_modes(sys);
    const double lambda1 = modes.lambda.maxCoeff();
    const double y_max = cfg.y_max > 0.0 ? cfg.y_max : 40.0 * lambda1 * kn;
    check_config(cfg, y_max, lambda1, kn);

    const Eigen::Index m = modes.lambda.size();
    auto residual = [&](const Eigen::VectorXd& x) {
        const Eigen::VectorXd w = modes.vectors * x.tail(m);
        const KramersWallState st = kramers_state(sys, x(0), w.head(sys.m_even), w.tail(sys.m_odd), sigma12);
        return kramers_wall_residual(order, chi, st, half_space_S);
    };
    BvpProfile out;
    const Eigen::VectorXd x = solve_affine(residual, m + 1, cfg.tolerance, out.solve_residual);
    out.wall_value = u1_wall + x(0);
    out.lambda1 = lambda1;

    const double a1 = sys.a(0);
    const double f0 = (modes.vectors.row(0) * x.tail(m)).value() / a1;
    GridSweep sw = march(modes, x.tail(m), 1, kn, nested_grid(y_max, cfg.n_cells, cfg.stretch),
                         [&](double y, const Eigen::VectorXd& we) {
                             return out.wall_value - sigma12 * y / kn - 2.0 * (we(0) / a1 - f0);
                         });
    out.y = std::move(sw.y);
    out.value = std::move(sw.value);
    return out;
}

RefinedProfile refine(const BvpProfile& coarse, const BvpProfile& fine) {
    const std::size_t n = coarse.y.size() - 1;
    if (fine.y.size() != 2 * n + 1) {
        throw InputError("refine: fine grid must have twice the cells of the coarse grid");
    }
    RefinedProfile out;
    out.y = coarse.y;
    out.coarse = coarse.value;
    out.fine.resize(n + 1);
    out.extrapolated.resize(n + 1);
    for (std::size_t j = 0; j <= n; ++j) {
        if (std::abs(fine.y[2 * j] - coarse.y[j]) > 1e-12 * std::max(1.0, coarse.y.back())) {
            throw InputError("refine: grids are not nested");
        }
        out.fine[j] = fine.value[2 * j];
        out.extrapolated[j] = 2.0 * out.fine[j] - out.coarse[j];
    }
    return out;
}

namespace {

CheckResult make_check(std::string name, double residual, double tol) {
    return {std::move(name), residual <= tol, residual, tol};
}

struct ProfileErrors {
    double coarse = 0.0;
    double fine = 0.0;
    double extrapolated = 0.0;
};

template <class Exact>
ProfileErrors profile_errors(const RefinedProfile& r, Exact exact) {
    ProfileErrors e;
    for (std::size_t j = 0; j < r.y.size(); ++j) {
        const double ex = exact(r.y[j]);
        e.coarse = std::max(e.coarse, std::abs(r.coarse[j] - ex));
        e.fine = std::max(e.fine, std::abs(r.fine[j] - ex));
        e.extrapolated = std::max(e.extrapolated, std::abs(r.extrapolated[j] - ex));
    }
    return e;
}

void add_profile_checks(std::vector<CheckResult>& out, const std::string& label, const ProfileErrors& e) {
    out.push_back(make_check(label + " profile vs BVP (refined)", e.extrapolated, 1e-6));
    const double ratio = e.coarse / e.fine;
    out.push_back({label + " BVP first-order convergence ratio", std::abs(ratio - 2.0) <= 0.2,
                   std::abs(ratio - 2.0), 0.2});
}

} // namespace

std::vector<CheckResult> run_verification(VerifyLevel level, const HalfSpaceFn& s) {
    const bool full = level == VerifyLevel::Full;
    std::vector<CheckResult> out;

    // Closed-form half-space integrals against quadrature.
    {
        const int top = full ? kQuadratureMaxOrder : 12;
        double rel = 0.0;
        double zero_abs = 0.0;
        double asym = 0.0;
        for (int a = 0; a <= top; ++a) {
            for (int b = 0; b <= top; ++b) {
                const double norm = std::exp(0.5 * (log_factorial(a) + log_factorial(b)));
                const double closed = s(a, b) / norm;
                const double quad = quadrature_S_normalized(a, b, 1.0);
                if (std::abs(quad) < 1e-12) {
                    zero_abs = std::max(zero_abs, std::abs(closed));
                } else {
                    rel = std::max(rel, std::abs(closed - quad) / std::abs(quad));
                }
                asym = std::max(asym, std::abs(s(a, b) - s(b, a)));
            }
        }
        out.push_back(make_check("S(alpha,beta) vs quadrature, relative", rel, 1e-9));
        out.push_back(make_check("S(alpha,beta) zeros, absolute (normalized)", zero_abs, 1e-12));
        out.push_back(make_check("S(alpha,beta) symmetry", asym, 0.0));
    }

    // Structured eigendecomposition against dense Jacobi.
    {
        const int top_t = full ? 99 : 7;
        const int top_k = full ? 98 : 6;
        double eig_err = 0.0;
        double orth_err = 0.0;
        auto compare = [&](const ReducedSystem& sys) {
            const ParityEigen pe = decompose(sys);
            const SymmetricEigen de = dense_symmetric_eig(sys.full_matrix());
            Eigen::VectorXd expected = assemble_full_lambda(pe);
            std::sort(expected.data(), expected.data() + expected.size());
            eig_err = std::max(eig_err, (expected - de.values).cwiseAbs().maxCoeff());
            const Eigen::MatrixXd r = assemble_full_R(pe);
            const Eigen::Index n = r.rows();
            orth_err = std::max(orth_err, (r.transpose() * r - Eigen::MatrixXd::Identity(n, n)).cwiseAbs().maxCoeff());
            const Eigen::Index k = pe.r_even.cols();
            orth_err = std::max(orth_err, (pe.r_even.transpose() * pe.r_even - 0.5 * Eigen::MatrixXd::Identity(k, k))
                                              .cwiseAbs()
                                              .maxCoeff());
        };
        for (int m = 3; m <= top_t; m += 2) {
            compare(build_temperature_system(m));
        }
        for (int m = 4; m <= top_k; m += 2) {
            compare(build_kramers_system(m, 1.0));
        }
        out.push_back(make_check("parity eigenvalues vs dense Jacobi", eig_err, 1e-10));
        out.push_back(make_check("R orthogonality", orth_err, 1e-10));
    }

    // Wall solve against the raw boundary equations.
    {
        double res = 0.0;
        for (double chi : {0.5, 1.0}) {
            for (int m : {3, 5, 7}) {
                const TemperatureJumpModel model(m);
                const TemperatureLayerSolution sol = model.solve(chi, default_knudsen(), 1.0, 1.0, 0.0);
                const Eigen::VectorXd we = model.eigen().r_even * sol.v_plus0;
                const Eigen::VectorXd wo = model.eigen().r_odd * sol.v_plus0;
                const TemperatureWallState st = temperature_state(model.system(), sol.theta0, we, wo, 1.0);
                res = std::max(res, temperature_wall_residual(m, chi, 1.0, st, s).cwiseAbs().maxCoeff());
            }
            for (int m : {4, 6, 8}) {
                const KramersModel model(m, 1.0);
                const VelocityLayerSolution sol = model.solve(chi, default_knudsen(), 1.0, 0.0);
                const Eigen::VectorXd we = model.eigen().r_even * sol.v_plus0;
                const Eigen::VectorXd wo = model.eigen().r_odd * sol.v_plus0;
                const KramersWallState st = kramers_state(model.system(), sol.u1_0, we, wo, 1.0);
                res = std::max(res, kramers_wall_residual(m, chi, st, s).cwiseAbs().maxCoeff());
            }
        }
        out.push_back(make_check("wall solve vs raw boundary equations", res, 1e-10));
    }

    // Analytic profiles against the finite-difference BVP.
    {
        const double kn = default_knudsen();
        BvpConfig coarse_cfg;
        BvpConfig fine_cfg;
        fine_cfg.n_cells = 2 * coarse_cfg.n_cells;
        const std::vector<int> temps = full ? std::vector<int>{3, 7} : std::vector<int>{3};
        const std::vector<int> kramers = full ? std::vector<int>{4, 8} : std::vector<int>{4};
        for (int m : temps) {
            const TemperatureLayerSolution sol = temperature_solution(m, 1.0, kn, 1.0, 1.0, 0.0);
            const RefinedProfile r = refine(bvp_temperature(m, 1.0, kn, 1.0, 1.0, 0.0, coarse_cfg),
                                            bvp_temperature(m, 1.0, kn, 1.0, 1.0, 0.0, fine_cfg));
            add_profile_checks(out, "temperature M=" + std::to_string(m),
                               profile_errors(r, [&](double y) { return sol.theta(y); }));
        }
        for (int m : kramers) {
            const VelocityLayerSolution sol = velocity_solution(m, 1.0, kn, 1.0, 1.0, 0.0);
            const RefinedProfile r = refine(bvp_kramers(m, 1.0, kn, 1.0, 1.0, 0.0, coarse_cfg),
                                            bvp_kramers(m, 1.0, kn, 1.0, 1.0, 0.0, fine_cfg));
            add_profile_checks(out, "Kramers M=" + std::to_string(m),
                               profile_errors(r, [&](double y) { return sol.velocity(y); }));
        }
    }
    return out;
}

std::vector<CheckResult> run_verification(VerifyLevel level) {
    return run_verification(level, [](int a, int b) { return half_space_S(a, b); });
}

} // namespace knudsen
