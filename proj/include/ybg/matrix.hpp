#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace ybg {

using Complex = std::complex<double>;

inline bool is_finite(Complex z) {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
}

/// Dense row-major complex matrix. Immutable by convention once built:
/// all operations return fresh values.
class DenseMatrix {
  public:
    DenseMatrix() = default;

    DenseMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols, Complex{0.0, 0.0}) {
        if (rows == 0 || cols == 0)
            throw std::invalid_argument("DenseMatrix: dimensions must be positive");
    }

    DenseMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries)
        : rows_(rows), cols_(cols), data_(std::move(entries)) {
        if (rows == 0 || cols == 0)
            throw std::invalid_argument("DenseMatrix: dimensions must be positive");
        if (data_.size() != rows * cols)
            throw std::invalid_argument("DenseMatrix: entry count does not match dimensions");
        for (const Complex& z : data_)
            if (!is_finite(z))
                throw std::invalid_argument("DenseMatrix: non-finite entry");
    }

    static DenseMatrix identity(std::size_t n) {
        DenseMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.data_[i * n + i] = 1.0;
        return m;
    }

    static DenseMatrix zero(std::size_t rows, std::size_t cols) { return DenseMatrix(rows, cols); }

    /// Real-valued initializer-list constructor, handy for fixtures.
    static DenseMatrix from_rows(const std::vector<std::vector<double>>& rows) {
        if (rows.empty() || rows.front().empty())
            throw std::invalid_argument("from_rows: empty data");
        DenseMatrix m(rows.size(), rows.front().size());
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != m.cols_)
                throw std::invalid_argument("from_rows: ragged rows");
            for (std::size_t j = 0; j < m.cols_; ++j) m.data_[i * m.cols_ + j] = rows[i][j];
        }
        m.check_finite();
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

    Complex operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
    Complex& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }

    const std::vector<Complex>& data() const { return data_; }

    void set(std::size_t i, std::size_t j, Complex v) {
        if (!is_finite(v)) throw std::invalid_argument("set: non-finite value");
        data_[i * cols_ + j] = v;
    }

    DenseMatrix operator+(const DenseMatrix& o) const {
        require_same_shape(o, "operator+");
        DenseMatrix r(rows_, cols_);
        for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = data_[i] + o.data_[i];
        return r;
    }

    DenseMatrix operator-(const DenseMatrix& o) const {
        require_same_shape(o, "operator-");
        DenseMatrix r(rows_, cols_);
        for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = data_[i] - o.data_[i];
        return r;
    }

    DenseMatrix operator*(Complex s) const {
        DenseMatrix r(rows_, cols_);
        for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = data_[i] * s;
        return r;
    }

    bool operator==(const DenseMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }

    DenseMatrix transpose() const {
        DenseMatrix r(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) r.data_[j * rows_ + i] = data_[i * cols_ + j];
        return r;
    }

    DenseMatrix conj() const {
        DenseMatrix r(rows_, cols_);
        for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = std::conj(data_[i]);
        return r;
    }

    double max_abs() const {
        double m = 0.0;
        for (const Complex& z : data_) m = std::max(m, std::abs(z));
        return m;
    }

    double frobenius_norm() const {
        double s = 0.0;
        for (const Complex& z : data_) s += std::norm(z);
        return std::sqrt(s);
    }

  private:
    void require_same_shape(const DenseMatrix& o, const char* op) const {
        if (rows_ != o.rows_ || cols_ != o.cols_)
            throw std::invalid_argument(std::string(op) + ": shape mismatch");
    }
    void check_finite() const {
        for (const Complex& z : data_)
            if (!is_finite(z)) throw std::invalid_argument("DenseMatrix: non-finite entry");
    }

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Complex> data_;
};

/// Standard product with a fixed summation order (ascending inner index),
/// so results are bit-identical regardless of how callers parallelize.
inline DenseMatrix matmul(const DenseMatrix& a, const DenseMatrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("matmul: inner dimensions differ");
    const std::size_t m = a.rows(), k = a.cols(), n = b.cols();
    DenseMatrix r(m, n);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t p = 0; p < k; ++p) {
            const Complex aip = a(i, p);
            if (aip == Complex{0.0, 0.0}) continue;
            for (std::size_t j = 0; j < n; ++j) r.at(i, j) += aip * b(p, j);
        }
    }
    return r;
}

inline DenseMatrix adjoint(const DenseMatrix& a) { return a.transpose().conj(); }

inline double max_abs_diff(const DenseMatrix& a, const DenseMatrix& b) {
    return (a - b).max_abs();
}

/// Matrix from a permutation table (1-based, as in user-facing reports):
/// sends e_j to e_{perm[j]}.
inline DenseMatrix permutation_matrix(const std::vector<std::size_t>& perm_1based) {
    const std::size_t n = perm_1based.size();
    std::vector<bool> hit(n, false);
    for (std::size_t v : perm_1based) {
        if (v < 1 || v > n || hit[v - 1])
            throw std::invalid_argument("permutation_matrix: table is not a bijection");
        hit[v - 1] = true;
    }
    DenseMatrix p(n, n);
    for (std::size_t j = 0; j < n; ++j) p.at(perm_1based[j] - 1, j) = 1.0;
    return p;
}

struct SvdResult {
    std::vector<double> values;  // descending
    DenseMatrix u;               // rows x min(rows,cols)
    DenseMatrix v;               // cols x min(rows,cols); A ~= U diag(values) V^H
};

namespace detail {

/// One-sided Jacobi on A with rows >= cols. Columns of the working copy
/// converge to U*Sigma; V accumulates the rotations.
inline SvdResult jacobi_svd_tall(const DenseMatrix& a) {
    const std::size_t m = a.rows(), n = a.cols();
    std::vector<Complex> w(a.data());  // row-major copy
    DenseMatrix v = DenseMatrix::identity(n);
    auto col_dot = [&](std::size_t p, std::size_t q) {  // w_p^H w_q
        Complex s{0.0, 0.0};
        for (std::size_t i = 0; i < m; ++i) s += std::conj(w[i * n + p]) * w[i * n + q];
        return s;
    };
    const double tol = 1e-15;
    for (int sweep = 0; sweep < 100; ++sweep) {
        bool converged = true;
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const double alpha = col_dot(p, p).real();
                const double beta = col_dot(q, q).real();
                const Complex gamma = col_dot(p, q);
                const double g = std::abs(gamma);
                if (g <= tol * std::sqrt(alpha * beta) || g == 0.0) continue;
                converged = false;
                const Complex phase = gamma / g;  // gamma = g * phase
                const double zeta = (beta - alpha) / (2.0 * g);
                const double t = (zeta >= 0.0 ? 1.0 : -1.0) /
                                 (std::abs(zeta) + std::sqrt(1.0 + zeta * zeta));
                const double cs = 1.0 / std::sqrt(1.0 + t * t);
                const double sn = cs * t;
                const Complex pc = std::conj(phase);
                for (std::size_t i = 0; i < m; ++i) {
                    const Complex wp = w[i * n + p], wq = w[i * n + q];
                    w[i * n + p] = cs * wp - sn * pc * wq;
                    w[i * n + q] = sn * wp + cs * pc * wq;
                }
                for (std::size_t i = 0; i < n; ++i) {
                    const Complex vp = v(i, p), vq = v(i, q);
                    v.at(i, p) = cs * vp - sn * pc * vq;
                    v.at(i, q) = sn * vp + cs * pc * vq;
                }
            }
        }
        if (converged) break;
    }
    std::vector<double> sigma(n);
    DenseMatrix u(m, n);
    for (std::size_t j = 0; j < n; ++j) {
        double s = 0.0;
        for (std::size_t i = 0; i < m; ++i) s += std::norm(w[i * n + j]);
        sigma[j] = std::sqrt(s);
        if (sigma[j] > 0.0)
            for (std::size_t i = 0; i < m; ++i) u.at(i, j) = w[i * n + j] / sigma[j];
    }
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t x, std::size_t y) { return sigma[x] > sigma[y]; });
    SvdResult out;
    out.values.resize(n);
    out.u = DenseMatrix(m, n);
    out.v = DenseMatrix(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        out.values[j] = sigma[order[j]];
        for (std::size_t i = 0; i < m; ++i) out.u.at(i, j) = u(i, order[j]);
        for (std::size_t i = 0; i < n; ++i) out.v.at(i, j) = v(i, order[j]);
    }
    return out;
}

}  // namespace detail

inline SvdResult svd(const DenseMatrix& a) {
    if (a.rows() >= a.cols()) return detail::jacobi_svd_tall(a);
    SvdResult t = detail::jacobi_svd_tall(adjoint(a));
    std::swap(t.u, t.v);
    return t;
}

inline std::vector<double> singular_values(const DenseMatrix& a) { return svd(a).values; }

/// Count of singular values >= rel_tol * sigma_max; 0 for the zero matrix.
inline std::size_t numerical_rank(const DenseMatrix& a, double rel_tol = 1e-8) {
    if (rel_tol <= 0.0 || rel_tol >= 1.0)
        throw std::invalid_argument("numerical_rank: rel_tol must lie in (0,1)");
    const std::vector<double> s = singular_values(a);
    if (s.empty() || s.front() == 0.0) return 0;
    const double cut = rel_tol * s.front();
    std::size_t r = 0;
    while (r < s.size() && s[r] >= cut) ++r;
    return r;
}

/// Cheap invertibility probe via LU with partial pivoting: false when some
/// elimination step has no pivot above 1e-12 of the largest initial entry.
/// Used where a full SVD would be too expensive.
inline bool lu_invertible(const DenseMatrix& a) {
    if (!a.square()) throw std::invalid_argument("lu_invertible: matrix must be square");
    const std::size_t n = a.rows();
    std::vector<Complex> lu(a.data());
    const double scale = a.max_abs();
    if (scale == 0.0) return false;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t best = k;
        for (std::size_t i = k + 1; i < n; ++i)
            if (std::abs(lu[i * n + k]) > std::abs(lu[best * n + k])) best = i;
        if (std::abs(lu[best * n + k]) < 1e-12 * scale) return false;
        if (best != k)
            for (std::size_t j = k; j < n; ++j) std::swap(lu[k * n + j], lu[best * n + j]);
        const Complex pivot = lu[k * n + k];
        for (std::size_t i = k + 1; i < n; ++i) {
            const Complex f = lu[i * n + k] / pivot;
            if (f == Complex{0.0, 0.0}) continue;
            for (std::size_t j = k + 1; j < n; ++j) lu[i * n + j] -= f * lu[k * n + j];
        }
    }
    return true;
}

class SingularMatrixError : public std::domain_error {
  public:
    explicit SingularMatrixError(const std::string& what) : std::domain_error(what) {}
};

/// Inverse via LU with partial pivoting. Rejects inputs whose smallest
/// singular value is below 1e-12 of the largest.
inline DenseMatrix inverse(const DenseMatrix& a) {
    if (!a.square()) throw std::invalid_argument("inverse: matrix must be square");
    const std::vector<double> s = singular_values(a);
    if (s.front() == 0.0 || s.back() < 1e-12 * s.front())
        throw SingularMatrixError("inverse: matrix is numerically singular");
    const std::size_t n = a.rows();
    std::vector<Complex> lu(a.data());
    std::vector<std::size_t> piv(n);
    std::iota(piv.begin(), piv.end(), 0);
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t best = k;
        for (std::size_t i = k + 1; i < n; ++i)
            if (std::abs(lu[i * n + k]) > std::abs(lu[best * n + k])) best = i;
        if (best != k) {
            for (std::size_t j = 0; j < n; ++j) std::swap(lu[k * n + j], lu[best * n + j]);
            std::swap(piv[k], piv[best]);
        }
        const Complex pivot = lu[k * n + k];
        if (pivot == Complex{0.0, 0.0})
            throw SingularMatrixError("inverse: zero pivot");
        for (std::size_t i = k + 1; i < n; ++i) {
            const Complex f = lu[i * n + k] / pivot;
            lu[i * n + k] = f;
            for (std::size_t j = k + 1; j < n; ++j) lu[i * n + j] -= f * lu[k * n + j];
        }
    }
    DenseMatrix inv(n, n);
    std::vector<Complex> x(n);
    for (std::size_t col = 0; col < n; ++col) {
        for (std::size_t i = 0; i < n; ++i) x[i] = (piv[i] == col) ? Complex{1.0, 0.0} : Complex{0.0, 0.0};
        for (std::size_t i = 1; i < n; ++i)
            for (std::size_t j = 0; j < i; ++j) x[i] -= lu[i * n + j] * x[j];
        for (std::size_t i = n; i-- > 0;) {
            for (std::size_t j = i + 1; j < n; ++j) x[i] -= lu[i * n + j] * x[j];
            x[i] /= lu[i * n + i];
        }
        for (std::size_t i = 0; i < n; ++i) inv.at(i, col) = x[i];
    }
    return inv;
}

}  // namespace ybg
