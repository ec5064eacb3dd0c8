#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "ybg/block.hpp"
#include "ybg/matrix.hpp"
#include "ybg/ybe.hpp"

namespace ybg {

inline constexpr double kRankRelTol = 1e-8;

/// Pure state of two d-level systems, amplitudes in the lexicographic
/// product basis e_i (x) e_j.
struct TwoQuditState {
    std::size_t d = 0;
    std::vector<Complex> amplitudes;  // length d^2

    TwoQuditState(std::size_t d_, std::vector<Complex> amps)
        : d(d_), amplitudes(std::move(amps)) {
        if (d == 0 || amplitudes.size() != d * d)
            throw std::invalid_argument("TwoQuditState: amplitude count must be d^2");
        for (Complex z : amplitudes)
            if (!is_finite(z)) throw std::invalid_argument("TwoQuditState: non-finite amplitude");
    }

    double norm() const {
        double s = 0.0;
        for (Complex z : amplitudes) s += std::norm(z);
        return std::sqrt(s);
    }
};

/// The d x d coefficient matrix C with C(i,j) = amplitude of e_i (x) e_j.
inline DenseMatrix coefficient_matrix(const TwoQuditState& s) {
    DenseMatrix c(s.d, s.d);
    for (std::size_t i = 0; i < s.d; ++i)
        for (std::size_t j = 0; j < s.d; ++j) c.at(i, j) = s.amplitudes[i * s.d + j];
    return c;
}

struct StateFactorization {
    bool decomposable = false;
    std::vector<Complex> alpha;  // unit factors, s ~ alpha (x) beta up to phase
    std::vector<Complex> beta;
};

/// A state is a product state iff its coefficient matrix has rank 1.
inline StateFactorization factor_state(const TwoQuditState& s, double rel_tol = kRankRelTol) {
    StateFactorization f;
    const DenseMatrix c = coefficient_matrix(s);
    if (numerical_rank(c, rel_tol) != 1) return f;
    const SvdResult sv = svd(c);
    f.decomposable = true;
    f.alpha.resize(s.d);
    f.beta.resize(s.d);
    for (std::size_t i = 0; i < s.d; ++i) {
        f.alpha[i] = sv.u(i, 0);
        f.beta[i] = std::conj(sv.v(i, 0));  // C = sigma * alpha beta^T
    }
    return f;
}

inline bool is_decomposable_state(const TwoQuditState& s, double rel_tol = kRankRelTol) {
    return factor_state(s, rel_tol).decomposable;
}

struct KronFactorization {
    bool factorable = false;
    DenseMatrix l1;  // d x d factors, L ~ l1 (x) l2; Frobenius norms balanced,
    DenseMatrix l2;  // l1's first nonzero entry real positive
    double reconstruction_error = 0.0;
};

namespace detail {

/// Van Loan rearrangement: R[i*d+j][k*d+l] = L[i*d+k][j*d+l]. L is a Kronecker
/// product iff R has rank 1.
inline DenseMatrix rearrange(const DenseMatrix& l, std::size_t d) {
    DenseMatrix r(d * d, d * d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            for (std::size_t k = 0; k < d; ++k)
                for (std::size_t l_ = 0; l_ < d; ++l_)
                    r.at(i * d + j, k * d + l_) = l(i * d + k, j * d + l_);
    return r;
}

inline std::size_t local_dim_of(const DenseMatrix& l, const char* who) {
    if (!l.square()) throw std::invalid_argument(std::string(who) + ": matrix must be square");
    std::size_t d = 0;
    while ((d + 1) * (d + 1) <= l.rows()) ++d;
    if (d * d != l.rows() || d < 2)
        throw std::invalid_argument(std::string(who) +
                                    ": size must be d^2 x d^2 with d >= 2");
    return d;
}

}  // namespace detail

/// Decide whether L = L1 (x) L2 and recover the factors from the dominant
/// singular pair of the rearrangement.
inline KronFactorization kron_factor(const DenseMatrix& l, double rel_tol = kRankRelTol) {
    const std::size_t d = detail::local_dim_of(l, "kron_factor");
    KronFactorization out;
    const DenseMatrix r = detail::rearrange(l, d);
    if (numerical_rank(r, rel_tol) != 1) return out;
    const SvdResult sv = svd(r);
    const double root = std::sqrt(sv.values[0]);
    DenseMatrix l1(d, d), l2(d, d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            l1.at(i, j) = root * sv.u(i * d + j, 0);
            l2.at(i, j) = root * std::conj(sv.v(i * d + j, 0));
        }
    // Normalize the phase split: make l1's first nonzero entry real positive.
    for (std::size_t idx = 0; idx < d * d; ++idx) {
        const Complex z = l1.data()[idx];
        if (std::abs(z) > 1e-14) {
            const Complex phase = z / std::abs(z);
            l1 = l1 * (Complex{1.0, 0.0} / phase);
            l2 = l2 * phase;
            break;
        }
    }
    out.factorable = true;
    out.l1 = std::move(l1);
    out.l2 = std::move(l2);
    out.reconstruction_error = max_abs_diff(l, kronecker(out.l1, out.l2));
    return out;
}

enum class GateVerdict { Primitive, Entangling };

struct GateClassification {
    GateVerdict verdict = GateVerdict::Primitive;
    bool with_swap = false;           // primitive as (L1 (x) L2) P rather than L1 (x) L2
    KronFactorization factors;        // set for primitive gates
    std::optional<TwoQuditState> witness;  // product state with entangled image
    std::size_t witness_image_rank = 0;
    bool unitary = false;
    double unitary_defect = 0.0;
    bool non_unitary_warning = false;
};

inline TwoQuditState apply_gate(const DenseMatrix& l, const TwoQuditState& s) {
    if (l.cols() != s.amplitudes.size())
        throw std::invalid_argument("apply_gate: dimension mismatch");
    std::vector<Complex> out(l.rows(), Complex{0.0, 0.0});
    for (std::size_t i = 0; i < l.rows(); ++i)
        for (std::size_t j = 0; j < l.cols(); ++j) out[i] += l(i, j) * s.amplitudes[j];
    return TwoQuditState(s.d, std::move(out));
}

/// Deterministic witness search: basis products, two-term superposition
/// products, then seeded random product states. Returns a product state whose
/// image under the gate is entangled (coefficient rank >= 2), if one is found
/// within the budget.
inline std::optional<TwoQuditState> witness_search(const DenseMatrix& l, std::uint64_t seed = 0,
                                                   std::size_t budget = 0,
                                                   double rel_tol = kRankRelTol) {
    const std::size_t d = detail::local_dim_of(l, "witness_search");
    if (budget == 0) budget = 10 * d * d * d * d;
    std::size_t tried = 0;

    auto product_state = [&](const std::vector<Complex>& a, const std::vector<Complex>& b) {
        std::vector<Complex> amps(d * d);
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j) amps[i * d + j] = a[i] * b[j];
        return TwoQuditState(d, std::move(amps));
    };
    auto entangles = [&](const TwoQuditState& s) {
        return numerical_rank(coefficient_matrix(apply_gate(l, s)), rel_tol) >= 2;
    };
    auto basis = [&](std::size_t i) {
        std::vector<Complex> v(d, Complex{0.0, 0.0});
        v[i] = 1.0;
        return v;
    };
    auto two_term = [&](std::size_t i, std::size_t k) {
        std::vector<Complex> v(d, Complex{0.0, 0.0});
        const double s = 1.0 / std::sqrt(2.0);
        v[i] = s;
        v[k] = s;
        return v;
    };

    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            if (tried++ >= budget) return std::nullopt;
            TwoQuditState s = product_state(basis(i), basis(j));
            if (entangles(s)) return s;
        }
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t k = i + 1; k < d; ++k)
            for (std::size_t j = 0; j < d; ++j) {
                if (tried++ >= budget) return std::nullopt;
                TwoQuditState s = product_state(two_term(i, k), basis(j));
                if (entangles(s)) return s;
            }
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            for (std::size_t l_ = j + 1; l_ < d; ++l_) {
                if (tried++ >= budget) return std::nullopt;
                TwoQuditState s = product_state(basis(i), two_term(j, l_));
                if (entangles(s)) return s;
            }

    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    auto random_unit = [&] {
        std::vector<Complex> v(d);
        double norm = 0.0;
        for (Complex& z : v) {
            z = Complex{gauss(rng), gauss(rng)};
            norm += std::norm(z);
        }
        norm = std::sqrt(norm);
        for (Complex& z : v) z /= norm;
        return v;
    };
    while (tried++ < budget) {
        TwoQuditState s = product_state(random_unit(), random_unit());
        if (entangles(s)) return s;
    }
    return std::nullopt;
}

/// Brylinski dichotomy: L is primitive iff L = L1 (x) L2 or L = (L1 (x) L2) P
/// with P the swap; otherwise it is entangling and some product state has an
/// entangled image.
inline GateClassification classify_gate(const DenseMatrix& l, bool unitary_required = false,
                                        double tol = kDefaultTol,
                                        double rel_tol = kRankRelTol, std::uint64_t seed = 0) {
    const std::size_t d = detail::local_dim_of(l, "classify_gate");
    GateClassification out;
    out.unitary_defect = max_abs_diff(matmul(l, adjoint(l)), DenseMatrix::identity(d * d));
    out.unitary = out.unitary_defect <= tol;
    if (!out.unitary) {
        if (unitary_required)
            throw std::invalid_argument("classify_gate: matrix is not unitary");
        out.non_unitary_warning = true;
    }

    KronFactorization direct = kron_factor(l, rel_tol);
    if (direct.factorable) {
        out.verdict = GateVerdict::Primitive;
        out.with_swap = false;
        out.factors = std::move(direct);
        return out;
    }
    KronFactorization swapped = kron_factor(matmul(l, swap_gate(d)), rel_tol);
    if (swapped.factorable) {
        out.verdict = GateVerdict::Primitive;
        out.with_swap = true;
        out.factors = std::move(swapped);
        return out;
    }

    out.verdict = GateVerdict::Entangling;
    out.witness = witness_search(l, seed, 0, rel_tol);
    if (out.witness)
        out.witness_image_rank =
            numerical_rank(coefficient_matrix(apply_gate(l, *out.witness)), rel_tol);
    return out;
}

/// Tracy-Singh product of state vectors: the product-basis reshuffle of
/// phi (x) psi matching the box product of gates, so that
/// (a box b)(phi boxdot psi) = (a phi) boxdot (b psi).
inline TwoQuditState state_tracy_singh(const TwoQuditState& phi, const TwoQuditState& psi) {
    const std::size_t n = phi.d, m = psi.d, nm = n * m;
    std::vector<Complex> amps(nm * nm, Complex{0.0, 0.0});
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t k = 0; k < m; ++k)
                for (std::size_t s = 0; s < m; ++s)
                    amps[(i * m + k) * nm + (r * m + s)] =
                        phi.amplitudes[i * n + r] * psi.amplitudes[k * m + s];
    return TwoQuditState(nm, std::move(amps));
}

/// Combine product-state witnesses: both inputs must be product states, and
/// the combined state is again a product state of the composite qudits.
inline TwoQuditState product_witness(const TwoQuditState& phi, const TwoQuditState& psi,
                                     double rel_tol = kRankRelTol) {
    if (!is_decomposable_state(phi, rel_tol) || !is_decomposable_state(psi, rel_tol))
        throw std::invalid_argument("product_witness: inputs must be product states");
    return state_tracy_singh(phi, psi);
}

}  // namespace ybg
