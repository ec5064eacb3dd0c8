#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ybg/entangle.hpp"
#include "ybg/gates.hpp"
#include "ybg/set_theoretic.hpp"
#include "ybg/ybe.hpp"

namespace ybg {

inline std::vector<std::size_t> prime_factorize(std::size_t d) {
    if (d < 2) throw std::invalid_argument("prime_factorize: d must be >= 2");
    std::vector<std::size_t> out;
    for (std::size_t p = 2; p * p <= d; ++p)
        while (d % p == 0) {
            out.push_back(p);
            d /= p;
        }
    if (d > 1) out.push_back(d);
    return out;
}

enum class GateKind { Entangling, Primitive };

struct GateCertificate {
    GateKind kind = GateKind::Entangling;
    std::size_t local_dim = 0;
    std::vector<std::size_t> prime_recipe;  // per-prime local dims, ascending
    RMatrixCertificate r_certificate;       // YBE / invertibility / unitarity checks
    GateClassification classification;      // Brylinski verdict with evidence
};

namespace detail {

/// Per-prime building blocks: unitary R-matrices that are entangling
/// (example_c for p = 2, the square-free family for odd p) or primitive
/// (the cyclic shift family).
inline DenseMatrix prime_gate(std::size_t p, GateKind kind) {
    if (kind == GateKind::Entangling)
        return p == 2 ? example_c() : to_matrix(square_free_prime(p));
    return to_matrix(cyclic_prime(p));
}

}  // namespace detail

/// Build a certified two-qudit gate of composite local dimension d as the
/// left-associated box product of per-prime gates, then verify the requested
/// entanglement verdict. The construction theorems guarantee the verdict, so
/// a mismatch is an internal error.
inline GateCertificate make_gate(std::size_t d, GateKind kind, double tol = kDefaultTol,
                                 std::size_t verify_cap = kDefaultVerifyCap,
                                 std::size_t construct_cap = kDefaultConstructCap,
                                 std::uint64_t seed = 0) {
    if (d < 2) throw std::invalid_argument("make_gate: local dimension must be >= 2");
    if (d > construct_cap)
        throw std::invalid_argument("make_gate: local dimension exceeds construction cap");
    GateCertificate cert;
    cert.kind = kind;
    cert.local_dim = d;
    cert.prime_recipe = prime_factorize(d);

    bool started = false;
    RMatrixCertificate acc;
    for (std::size_t p : cert.prime_recipe) {
        RMatrixCertificate next = certify(detail::prime_gate(p, kind), p, tol, verify_cap, seed);
        if (!next.valid)
            throw std::logic_error("make_gate: prime building block failed certification");
        acc = started ? box_r(acc, next, tol, verify_cap, construct_cap) : next;
        started = true;
    }
    cert.r_certificate = acc;

    cert.classification = classify_gate(acc.matrix, /*unitary_required=*/true, tol,
                                        kRankRelTol, seed);
    const GateVerdict expected =
        kind == GateKind::Entangling ? GateVerdict::Entangling : GateVerdict::Primitive;
    if (cert.classification.verdict != expected)
        throw std::logic_error("make_gate: classification contradicts construction (internal)");
    return cert;
}

inline GateCertificate entangling_gate(std::size_t d, double tol = kDefaultTol,
                                       std::uint64_t seed = 0) {
    return make_gate(d, GateKind::Entangling, tol, kDefaultVerifyCap, kDefaultConstructCap, seed);
}

inline GateCertificate primitive_gate(std::size_t d, double tol = kDefaultTol,
                                      std::uint64_t seed = 0) {
    return make_gate(d, GateKind::Primitive, tol, kDefaultVerifyCap, kDefaultConstructCap, seed);
}

}  // namespace ybg
