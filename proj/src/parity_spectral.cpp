#include "knudsen/parity_spectral.hpp"

#include "knudsen/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <vector>

namespace knudsen {

SvdResult jacobi_svd(const Eigen::MatrixXd& a, double tol, int max_sweeps) {
    const Eigen::Index m = a.rows();
    const Eigen::Index n = a.cols();
    if (m < n) {
        throw InputError("jacobi_svd: expects rows >= cols");
    }
    Eigen::MatrixXd w = a;
    Eigen::MatrixXd v = Eigen::MatrixXd::Identity(n, n);
    Eigen::VectorXd norms2(n);
    for (Eigen::Index j = 0; j < n; ++j) {
        norms2(j) = w.col(j).squaredNorm();
    }

    int sweep = 0;
    bool rotated = true;
    while (rotated && sweep < max_sweeps) {
        rotated = false;
        ++sweep;
        for (Eigen::Index p = 0; p + 1 < n; ++p) {
            for (Eigen::Index q = p + 1; q < n; ++q) {
                const double alpha = norms2(p);
                const double beta = norms2(q);
                if (alpha == 0.0 || beta == 0.0) {
                    continue;
                }
                const double gamma = w.col(p).dot(w.col(q));
                if (std::abs(gamma) <= tol * std::sqrt(alpha) * std::sqrt(beta)) {
                    continue;
                }
                rotated = true;
                const double zeta = (beta - alpha) / (2.0 * gamma);
                const double t = std::copysign(1.0, zeta) / (std::abs(zeta) + std::sqrt(1.0 + zeta * zeta));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = c * t;
                for (Eigen::Index i = 0; i < m; ++i) {
                    const double wp = w(i, p);
                    const double wq = w(i, q);
                    w(i, p) = c * wp - s * wq;
                    w(i, q) = s * wp + c * wq;
                }
                for (Eigen::Index i = 0; i < n; ++i) {
                    const double vp = v(i, p);
                    const double vq = v(i, q);
                    v(i, p) = c * vp - s * vq;
                    v(i, q) = s * vp + c * vq;
                }
                norms2(p) = alpha - t * gamma;
                norms2(q) = beta + t * gamma;
            }
        }
        // Refresh cached norms once per sweep to stop drift.
        for (Eigen::Index j = 0; j < n; ++j) {
            norms2(j) = w.col(j).squaredNorm();
        }
    }
    if (rotated) {
        throw StructuralError("jacobi_svd: no convergence after " + std::to_string(max_sweeps) + " sweeps");
    }

    std::vector<Eigen::Index> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), Eigen::Index{0});
    Eigen::VectorXd sig(n);
    for (Eigen::Index j = 0; j < n; ++j) {
        sig(j) = std::sqrt(norms2(j));
    }
    std::stable_sort(perm.begin(), perm.end(),
                     [&](Eigen::Index x, Eigen::Index y) { return sig(x) > sig(y); });

    SvdResult out;
    out.sweeps = sweep;
    out.sigma.resize(n);
    out.u.resize(m, n);
    out.v.resize(n, n);
    for (Eigen::Index k = 0; k < n; ++k) {
        const Eigen::Index j = perm[static_cast<std::size_t>(k)];
        out.sigma(k) = sig(j);
        out.v.col(k) = v.col(j);
        if (sig(j) > 0.0) {
            out.u.col(k) = w.col(j) / sig(j);
        } else {
            out.u.col(k).setZero();
        }
    }
    return out;
}

namespace {

// Orthonormal basis of the complement of span(q) in R^m, by twice-iterated Gram-Schmidt
// on the coordinate vectors, picking at each step the one with the largest remainder.
Eigen::MatrixXd orthogonal_complement(const Eigen::MatrixXd& q) {
    const Eigen::Index m = q.rows();
    const Eigen::Index k = m - q.cols();
    Eigen::MatrixXd basis(m, q.cols() + k);
    basis.leftCols(q.cols()) = q;
    Eigen::Index filled = q.cols();
    Eigen::MatrixXd out(m, k);
    for (Eigen::Index c = 0; c < k; ++c) {
        double best_norm = -1.0;
        Eigen::VectorXd best;
        for (Eigen::Index e = 0; e < m; ++e) {
            Eigen::VectorXd x = Eigen::VectorXd::Unit(m, e);
            for (int pass = 0; pass < 2; ++pass) {
                x -= basis.leftCols(filled) * (basis.leftCols(filled).transpose() * x);
            }
            const double nx = x.norm();
            if (nx > best_norm + 1e-14) {
                best_norm = nx;
                best = x;
            }
        }
        best /= best_norm;
        basis.col(filled++) = best;
        out.col(c) = best;
    }
    return out;
}

} // namespace

ParityEigen decompose(const ReducedSystem& system) {
    const Eigen::MatrixXd m0 = system.m0.dense();
    if (m0.cols() == 0) {
        throw InputError("decompose: empty odd block");
    }
    SvdResult svd = jacobi_svd(m0);

    const double scale = m0.norm();
    const double floor = 1e-12 * scale;
    for (Eigen::Index k = 0; k < svd.sigma.size(); ++k) {
        if (!(svd.sigma(k) > floor)) {
            throw StructuralError("decompose: singular value " + std::to_string(svd.sigma(k)) +
                                  " below rank tolerance; M0 should have full column rank");
        }
    }

    for (Eigen::Index k = 0; k < svd.v.cols(); ++k) {
        Eigen::Index arg = 0;
        double best = -1.0;
        for (Eigen::Index i = 0; i < svd.v.rows(); ++i) {
            const double mag = std::abs(svd.v(i, k));
            if (mag > best) {
                best = mag;
                arg = i;
            }
        }
        if (svd.v(arg, k) < 0.0) {
            svd.v.col(k) *= -1.0;
            svd.u.col(k) *= -1.0;
        }
    }

    ParityEigen out;
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    out.lambda_plus = svd.sigma;
    out.r_even = svd.u * inv_sqrt2;
    out.r_odd = svd.v * inv_sqrt2;
    out.r_zero = orthogonal_complement(svd.u);
    return out;
}

Eigen::MatrixXd assemble_full_R(const ParityEigen& eigen) {
    const Eigen::Index ne = eigen.r_even.rows();
    const Eigen::Index no = eigen.r_odd.rows();
    const Eigen::Index nz = eigen.r_zero.cols();
    Eigen::MatrixXd r = Eigen::MatrixXd::Zero(ne + no, 2 * no + nz);
    r.block(0, 0, ne, no) = eigen.r_even;
    r.block(ne, 0, no, no) = eigen.r_odd;
    if (nz > 0) {
        r.block(0, no, ne, nz) = eigen.r_zero;
    }
    r.block(0, no + nz, ne, no) = eigen.r_even;
    r.block(ne, no + nz, no, no) = -eigen.r_odd;
    return r;
}

Eigen::VectorXd assemble_full_lambda(const ParityEigen& eigen) {
    const Eigen::Index no = eigen.lambda_plus.size();
    const Eigen::Index nz = eigen.r_zero.cols();
    Eigen::VectorXd lam = Eigen::VectorXd::Zero(2 * no + nz);
    lam.head(no) = eigen.lambda_plus;
    lam.tail(no) = -eigen.lambda_plus;
    return lam;
}

} // namespace knudsen
