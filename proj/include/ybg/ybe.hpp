#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "ybg/block.hpp"
#include "ybg/matrix.hpp"

namespace ybg {

inline constexpr double kDefaultTol = 1e-10;
inline constexpr std::size_t kDefaultVerifyCap = 16;   // full YBE check up to this local dim
inline constexpr std::size_t kDefaultConstructCap = 64;

/// c (x) I_n acting on the first two of three local factors.
inline DenseMatrix lift12(const DenseMatrix& c, std::size_t n) {
    if (c.rows() != n * n || c.cols() != n * n)
        throw std::invalid_argument("lift12: matrix is not n^2 x n^2");
    return kronecker(c, DenseMatrix::identity(n));
}

/// I_n (x) c acting on the last two of three local factors.
inline DenseMatrix lift23(const DenseMatrix& c, std::size_t n) {
    if (c.rows() != n * n || c.cols() != n * n)
        throw std::invalid_argument("lift23: matrix is not n^2 x n^2");
    return kronecker(DenseMatrix::identity(n), c);
}

/// Max-abs entry of c12 c23 c12 - c23 c12 c23, triple products evaluated
/// left to right.
inline double ybe_residual(const DenseMatrix& c, std::size_t n) {
    const DenseMatrix l = lift12(c, n), m = lift23(c, n);
    const DenseMatrix lhs = matmul(matmul(l, m), l);
    const DenseMatrix rhs = matmul(matmul(m, l), m);
    return max_abs_diff(lhs, rhs);
}

namespace detail {

/// Apply (c (x) I_n) to a vector of length n^3 without forming the lift:
/// view v as an (n^2, n) matrix and left-multiply by c.
inline std::vector<Complex> apply_lift12(const DenseMatrix& c, std::size_t n,
                                         const std::vector<Complex>& v) {
    std::vector<Complex> w(v.size(), Complex{0.0, 0.0});
    const std::size_t n2 = n * n;
    for (std::size_t i = 0; i < n2; ++i)
        for (std::size_t j = 0; j < n2; ++j) {
            const Complex cij = c(i, j);
            if (cij == Complex{0.0, 0.0}) continue;
            for (std::size_t k = 0; k < n; ++k) w[i * n + k] += cij * v[j * n + k];
        }
    return w;
}

/// Apply (I_n (x) c): view v as an (n, n^2) matrix and right-multiply by c^T.
inline std::vector<Complex> apply_lift23(const DenseMatrix& c, std::size_t n,
                                         const std::vector<Complex>& v) {
    std::vector<Complex> w(v.size(), Complex{0.0, 0.0});
    const std::size_t n2 = n * n;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t a = 0; a < n2; ++a) {
            const Complex va = v[i * n2 + a];
            if (va == Complex{0.0, 0.0}) continue;
            for (std::size_t b = 0; b < n2; ++b) {
                const Complex cba = c(b, a);
                if (cba != Complex{0.0, 0.0}) w[i * n2 + b] += cba * va;
            }
        }
    return w;
}

}  // namespace detail

/// Matrix-free spot check: max-abs difference of the two YBE sides applied to
/// `samples` seeded random unit vectors. Used above the full-check cap.
inline double ybe_spot_residual(const DenseMatrix& c, std::size_t n, std::uint64_t seed = 0,
                                std::size_t samples = 32) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    const std::size_t dim = n * n * n;
    double worst = 0.0;
    for (std::size_t s = 0; s < samples; ++s) {
        std::vector<Complex> v(dim);
        double norm = 0.0;
        for (Complex& z : v) {
            z = Complex{gauss(rng), gauss(rng)};
            norm += std::norm(z);
        }
        norm = std::sqrt(norm);
        for (Complex& z : v) z /= norm;
        using detail::apply_lift12;
        using detail::apply_lift23;
        const auto lhs = apply_lift12(c, n, apply_lift23(c, n, apply_lift12(c, n, v)));
        const auto rhs = apply_lift23(c, n, apply_lift12(c, n, apply_lift23(c, n, v)));
        for (std::size_t i = 0; i < dim; ++i)
            worst = std::max(worst, std::abs(lhs[i] - rhs[i]));
    }
    return worst;
}

struct RMatrixCertificate {
    DenseMatrix matrix;
    std::size_t local_dim = 0;
    double residual = 0.0;       // full residual, or spot-check bound when !fully_verified
    bool fully_verified = true;  // false when only the sampled check ran
    bool invertible = false;
    bool unitary = false;
    double unitary_defect = 0.0;  // max-abs of c c^* - I
    bool valid = false;           // residual <= tol and invertible
    double tol = kDefaultTol;
};

/// Verify the YBE, invertibility and unitarity of a candidate R-matrix.
inline RMatrixCertificate certify(const DenseMatrix& c, std::size_t n, double tol = kDefaultTol,
                                  std::size_t verify_cap = kDefaultVerifyCap,
                                  std::uint64_t seed = 0) {
    if (c.rows() != n * n || c.cols() != n * n)
        throw std::invalid_argument("certify: matrix is not n^2 x n^2");
    if (tol <= 0.0) throw std::invalid_argument("certify: tolerance must be positive");
    RMatrixCertificate cert;
    cert.matrix = c;
    cert.local_dim = n;
    cert.tol = tol;
    cert.fully_verified = n <= verify_cap;
    cert.residual = cert.fully_verified ? ybe_residual(c, n) : ybe_spot_residual(c, n, seed);
    // The SVD-based invertibility test is O(n^6) in the local dimension; above
    // the full-verification regime fall back to the LU pivot probe.
    if (n * n <= 512) {
        const std::vector<double> s = singular_values(c);
        cert.invertible = s.front() > 0.0 && s.back() >= 1e-12 * s.front();
    } else {
        cert.invertible = lu_invertible(c);
    }
    cert.unitary_defect = max_abs_diff(matmul(c, adjoint(c)), DenseMatrix::identity(n * n));
    cert.unitary = cert.unitary_defect <= tol;
    cert.valid = cert.residual <= tol && cert.invertible;
    return cert;
}

/// The flip (swap) gate tau on C^n (x) C^n.
inline DenseMatrix swap_gate(std::size_t n) {
    if (n == 0) throw std::invalid_argument("swap_gate: n must be positive");
    DenseMatrix p(n * n, n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) p.at(j * n + i, i * n + j) = 1.0;
    return p;
}

enum class TransformKind { Scalar, Inverse, FlipConjugate };

/// Solution-preserving transforms: nonzero scalar multiple, inverse, and
/// conjugation by the flip (tau c tau).
inline DenseMatrix transform(const DenseMatrix& c, std::size_t n, TransformKind kind,
                             Complex scalar = Complex{1.0, 0.0}) {
    if (c.rows() != n * n || !c.square())
        throw std::invalid_argument("transform: matrix is not n^2 x n^2");
    switch (kind) {
        case TransformKind::Scalar:
            if (scalar == Complex{0.0, 0.0})
                throw std::invalid_argument("transform: scalar must be nonzero");
            return c * scalar;
        case TransformKind::Inverse:
            return inverse(c);
        case TransformKind::FlipConjugate: {
            const DenseMatrix tau = swap_gate(n);
            return matmul(matmul(tau, c), tau);
        }
    }
    throw std::invalid_argument("transform: unknown kind");
}

/// True iff c' (mu (x) mu) = (mu (x) mu) c within tol, for invertible mu.
inline bool isomorphic_check(const DenseMatrix& c, const DenseMatrix& c_prime,
                             const DenseMatrix& mu, double tol = kDefaultTol) {
    if (!mu.square()) throw std::invalid_argument("isomorphic_check: mu must be square");
    const std::size_t n = mu.rows();
    if (c.rows() != n * n || c.cols() != n * n || c_prime.rows() != n * n ||
        c_prime.cols() != n * n)
        throw std::invalid_argument("isomorphic_check: dimension mismatch");
    const std::vector<double> s = singular_values(mu);
    if (s.front() == 0.0 || s.back() < 1e-12 * s.front())
        throw std::invalid_argument("isomorphic_check: mu is singular");
    const DenseMatrix mm = kronecker(mu, mu);
    return max_abs_diff(matmul(c_prime, mm), matmul(mm, c)) <= tol;
}

/// Box product of two certified R-matrices: Tracy-Singh over the canonical
/// partitions. The result is certified in turn; by the composition theorem the
/// check must pass, so a failure indicates an internal defect and throws.
inline RMatrixCertificate box_r(const RMatrixCertificate& a, const RMatrixCertificate& b,
                                double tol = kDefaultTol,
                                std::size_t verify_cap = kDefaultVerifyCap,
                                std::size_t construct_cap = kDefaultConstructCap) {
    if (!a.valid || !b.valid)
        throw std::invalid_argument("box_r: inputs must be valid R-matrix certificates");
    const std::size_t n = a.local_dim * b.local_dim;
    if (n > construct_cap)
        throw std::invalid_argument("box_r: composite local dimension exceeds construction cap");
    const PartitionedMatrix pa(a.matrix, canonical_partition(a.matrix.rows()));
    const PartitionedMatrix pb(b.matrix, canonical_partition(b.matrix.rows()));
    RMatrixCertificate cert = certify(tracy_singh(pa, pb).matrix, n, tol, verify_cap);
    if (!cert.valid)
        throw std::logic_error("box_r: composed matrix failed certification (internal error)");
    return cert;
}

/// Left-associated iterated box products of copies of a and b:
/// (((a box a) ... ) box b) with k copies of a then l copies of b.
inline RMatrixCertificate iterate_family(const RMatrixCertificate& a, const RMatrixCertificate& b,
                                         std::size_t k, std::size_t l,
                                         double tol = kDefaultTol,
                                         std::size_t verify_cap = kDefaultVerifyCap,
                                         std::size_t construct_cap = kDefaultConstructCap) {
    if (k + l == 0) throw std::invalid_argument("iterate_family: need at least one factor");
    RMatrixCertificate acc;
    bool started = false;
    auto absorb = [&](const RMatrixCertificate& next) {
        if (!started) {
            acc = next;
            started = true;
        } else {
            acc = box_r(acc, next, tol, verify_cap, construct_cap);
        }
    };
    for (std::size_t i = 0; i < k; ++i) absorb(a);
    for (std::size_t i = 0; i < l; ++i) absorb(b);
    return acc;
}

struct NoncanonicalBoxResult {
    PartitionedMatrix product;
    double residual = 0.0;  // YBE residual of the product, local dim = sqrt(rows)
};

/// Tracy-Singh product over caller-supplied (possibly noncanonical)
/// partitions, plus the YBE residual of the result. Unlike box_r this makes no
/// validity promise: noncanonical partitions generally break the YBE.
inline NoncanonicalBoxResult noncanonical_box(const PartitionedMatrix& a,
                                              const PartitionedMatrix& b) {
    PartitionedMatrix prod = tracy_singh(a, b);
    if (!prod.matrix.square())
        throw std::invalid_argument("noncanonical_box: product is not square");
    std::size_t n = 0;
    while ((n + 1) * (n + 1) <= prod.matrix.rows()) ++n;
    if (n * n != prod.matrix.rows())
        throw std::invalid_argument("noncanonical_box: product size is not a perfect square");
    const double res = ybe_residual(prod.matrix, n);
    return NoncanonicalBoxResult{std::move(prod), res};
}

}  // namespace ybg
