#pragma once

// Small dense matrices and the factorizations the loss models need.  Sizes
// here are the number of assets/risk factors (tens at most), so the cyclic
// Jacobi sweep is plenty and keeps results deterministic across platforms.

#include <algorithm>
#include <cmath>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace cvarsens {

class Matrix {
  public:
    Matrix() = default;
    Matrix(int rows, int cols, double fill = 0.0)
        : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols, fill) {
        if (rows < 0 || cols < 0) throw std::invalid_argument("Matrix: negative shape");
    }

    static Matrix identity(int n) {
        Matrix m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = 1.0;
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    double& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
    double operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * cols_ + j]; }

    std::span<const double> row(int i) const {
        return {a_.data() + static_cast<std::size_t>(i) * cols_, static_cast<std::size_t>(cols_)};
    }

  private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<double> a_;
};

inline Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("Matrix multiply: shape mismatch");
    Matrix c(a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int k = 0; k < a.cols(); ++k) {
            const double aik = a(i, k);
            if (aik == 0.0) continue;
            for (int j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
        }
    return c;
}

inline Matrix transpose(const Matrix& a) {
    Matrix t(a.cols(), a.rows());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) t(j, i) = a(i, j);
    return t;
}

inline void mat_vec(const Matrix& a, std::span<const double> x, std::span<double> out) {
    if (a.cols() != static_cast<int>(x.size()) || a.rows() != static_cast<int>(out.size()))
        throw std::invalid_argument("mat_vec: shape mismatch");
    for (int i = 0; i < a.rows(); ++i) {
        double s = 0.0;
        for (int j = 0; j < a.cols(); ++j) s += a(i, j) * x[static_cast<std::size_t>(j)];
        out[static_cast<std::size_t>(i)] = s;
    }
}

inline double frobenius_norm(const Matrix& a) {
    double s = 0.0;
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) s += a(i, j) * a(i, j);
    return std::sqrt(s);
}

inline double reconstruction_error(const Matrix& factor, const Matrix& target) {
    const Matrix prod = factor * transpose(factor);
    double s = 0.0;
    for (int i = 0; i < target.rows(); ++i)
        for (int j = 0; j < target.cols(); ++j) {
            const double dd = prod(i, j) - target(i, j);
            s += dd * dd;
        }
    return std::sqrt(s);
}

inline void require_symmetric(const Matrix& a, double tol = 1e-12) {
    if (a.rows() != a.cols()) throw std::invalid_argument("matrix must be square");
    for (int i = 0; i < a.rows(); ++i)
        for (int j = i + 1; j < a.cols(); ++j)
            if (std::abs(a(i, j) - a(j, i)) > tol)
                throw std::invalid_argument("matrix must be symmetric");
}

struct SymmetricEigen {
    std::vector<double> values;  // descending
    Matrix vectors;              // unit-length eigenvectors in matching columns
};

// Cyclic Jacobi rotations; converges when the off-diagonal Frobenius norm
// drops below tol times the diagonal norm.
inline SymmetricEigen jacobi_eigen(Matrix a, double tol = 1e-12, int max_sweeps = 100) {
    require_symmetric(a);
    const int n = a.rows();
    Matrix v = Matrix::identity(n);

    auto off_diag_norm = [&] {
        double s = 0.0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) s += 2.0 * a(i, j) * a(i, j);
        return std::sqrt(s);
    };
    auto diag_norm = [&] {
        double s = 0.0;
        for (int i = 0; i < n; ++i) s += a(i, i) * a(i, i);
        return std::sqrt(s);
    };

    for (int sweep = 0; sweep < max_sweeps; ++sweep) {
        if (off_diag_norm() <= tol * std::max(diag_norm(), 1e-300)) break;
        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                const double apq = a(p, q);
                if (apq == 0.0) continue;
                const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
                const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                                 (std::abs(theta) + std::sqrt(1.0 + theta * theta));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;
                for (int k = 0; k < n; ++k) {
                    const double akp = a(k, p), akq = a(k, q);
                    a(k, p) = c * akp - s * akq;
                    a(k, q) = s * akp + c * akq;
                }
                for (int k = 0; k < n; ++k) {
                    const double apk = a(p, k), aqk = a(q, k);
                    a(p, k) = c * apk - s * aqk;
                    a(q, k) = s * apk + c * aqk;
                }
                for (int k = 0; k < n; ++k) {
                    const double vkp = v(k, p), vkq = v(k, q);
                    v(k, p) = c * vkp - s * vkq;
                    v(k, q) = s * vkp + c * vkq;
                }
            }
        }
    }

    // Order descending; stable in the original column index so exact ties
    // (e.g. the identity matrix) keep their input order.
    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int i, int j) { return a(i, i) > a(j, j); });

    SymmetricEigen out;
    out.values.resize(static_cast<std::size_t>(n));
    out.vectors = Matrix(n, n);
    for (int c = 0; c < n; ++c) {
        const int src = order[static_cast<std::size_t>(c)];
        out.values[static_cast<std::size_t>(c)] = a(src, src);
        // Sign convention: the entry of largest magnitude is positive.
        int arg = 0;
        for (int k = 1; k < n; ++k)
            if (std::abs(v(k, src)) > std::abs(v(arg, src))) arg = k;
        const double sign = v(arg, src) < 0.0 ? -1.0 : 1.0;
        for (int k = 0; k < n; ++k) out.vectors(k, c) = sign * v(k, src);
    }
    return out;
}

// Principal-components factor of a correlation matrix: columns are
// sqrt(lambda_i) * v_i in descending eigenvalue order, so A A^T = rho.
inline Matrix pca_factor(const Matrix& rho) {
    require_symmetric(rho);
    for (int i = 0; i < rho.rows(); ++i)
        if (std::abs(rho(i, i) - 1.0) > 1e-12)
            throw std::invalid_argument("pca_factor: correlation matrix needs a unit diagonal");
    SymmetricEigen eig = jacobi_eigen(rho);
    Matrix a(rho.rows(), rho.cols());
    for (int c = 0; c < rho.cols(); ++c) {
        double lambda = eig.values[static_cast<std::size_t>(c)];
        if (lambda < -1e-10)
            throw std::invalid_argument("pca_factor: matrix is not positive semidefinite");
        lambda = std::max(lambda, 0.0);
        const double scale = std::sqrt(lambda);
        for (int k = 0; k < rho.rows(); ++k) a(k, c) = scale * eig.vectors(k, c);
    }
    return a;
}

inline Matrix cholesky_factor(const Matrix& spd) {
    require_symmetric(spd);
    const int n = spd.rows();
    Matrix l(n, n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j <= i; ++j) {
            double s = spd(i, j);
            for (int k = 0; k < j; ++k) s -= l(i, k) * l(j, k);
            if (i == j) {
                if (s <= 0.0)
                    throw std::invalid_argument("cholesky_factor: matrix is not positive definite");
                l(i, i) = std::sqrt(s);
            } else {
                l(i, j) = s / l(j, j);
            }
        }
    }
    return l;
}

enum class FactorMethod { cholesky, pca };

inline Matrix matrix_factor(const Matrix& sigma, FactorMethod method) {
    if (method == FactorMethod::cholesky) return cholesky_factor(sigma);
    // PCA route tolerates semidefinite input; reuse the correlation-free path.
    SymmetricEigen eig = jacobi_eigen(sigma);
    Matrix c(sigma.rows(), sigma.cols());
    for (int col = 0; col < sigma.cols(); ++col) {
        double lambda = eig.values[static_cast<std::size_t>(col)];
        if (lambda < -1e-10)
            throw std::invalid_argument("matrix_factor: matrix is not positive semidefinite");
        lambda = std::max(lambda, 0.0);
        const double scale = std::sqrt(lambda);
        for (int k = 0; k < sigma.rows(); ++k) c(k, col) = scale * eig.vectors(k, col);
    }
    return c;
}

inline Matrix equicorrelated(int d, double rho) {
    if (d < 1) throw std::invalid_argument("equicorrelated: d must be >= 1");
    Matrix m(d, d, rho);
    for (int i = 0; i < d; ++i) m(i, i) = 1.0;
    return m;
}

}  // namespace cvarsens
