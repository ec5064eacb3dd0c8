// Acceptance gate: one pass/fail line per criterion.
//
// Usage: acceptance [N]  — run criterion N only (1..9), or all when omitted.
// Exit code is the number of failed criteria.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "ybg/entangle.hpp"
#include "ybg/factory.hpp"
#include "ybg/gates.hpp"
#include "ybg/io.hpp"
#include "ybg/set_theoretic.hpp"
#include "ybg/ybe.hpp"

using namespace ybg;

namespace {

struct Checker {
    bool ok = true;
    std::string detail;

    void expect(bool cond, const std::string& what) {
        if (!cond) {
            ok = false;
            if (!detail.empty()) detail += "; ";
            detail += what;
        }
    }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// ---- criterion 1: golden R-matrices ----------------------------------------
Checker criterion1() {
    Checker c;
    const auto t0 = std::chrono::steady_clock::now();
    const RMatrixCertificate cc = certify(example_c(), 2);
    const RMatrixCertificate cd = certify(example_d(), 2);
    c.expect(cc.residual <= 1e-12, "c residual > 1e-12");
    c.expect(cd.residual <= 1e-12, "d residual > 1e-12");
    c.expect(cc.unitary, "c not reported unitary");
    c.expect(!cd.unitary, "d wrongly reported unitary");
    c.expect(seconds_since(t0) < 0.1, "runtime >= 0.1 s");
    return c;
}

// ---- criterion 2: Kronecker counterexample ---------------------------------
Checker criterion2() {
    Checker c;
    const DenseMatrix cc = kronecker(example_c(), example_c());
    c.expect(ybe_residual(cc, 4) >= 0.49, "residual < 0.49");
    const DenseMatrix l = lift12(cc, 4), m = lift23(cc, 4);
    const DenseMatrix rhs = matmul(matmul(m, l), m);  // c23 c12 c23
    const DenseMatrix lhs = matmul(matmul(l, m), l);
    c.expect(std::abs(rhs(0, 3) - Complex{-0.5, 0.0}) <= 1e-12, "(c23 c12 c23)[1,4] != -0.5");
    c.expect(std::abs(lhs(0, 3)) <= 1e-12, "(c12 c23 c12)[1,4] != 0");
    return c;
}

// ---- criterion 3: closure theorem at desk scale ----------------------------
Checker criterion3() {
    Checker c;
    const auto t0 = std::chrono::steady_clock::now();
    struct Fixture {
        const char* name;
        RMatrixCertificate cert;
    };
    const std::vector<Fixture> fixtures = {
        {"c", certify(example_c(), 2)},
        {"d", certify(example_d(), 2)},
        {"c21", certify(swap_gate(2), 2)},
        {"c22", certify(extreme_swap(), 2)},
        {"cyclic3", certify(to_matrix(cyclic_prime(3)), 3)},
        {"squarefree3", certify(to_matrix(square_free_prime(3)), 3)},
    };
    for (const Fixture& a : fixtures)
        for (const Fixture& b : fixtures) {
            const RMatrixCertificate prod = box_r(a.cert, b.cert);
            const std::string pair = std::string(a.name) + " box " + b.name;
            c.expect(prod.residual <= 1e-10, pair + ": residual > 1e-10");
            if (a.cert.unitary && b.cert.unitary)
                c.expect(prod.unitary, pair + ": unitary box unitary not unitary");
        }
    c.expect(seconds_since(t0) < 30.0, "runtime >= 30 s");
    return c;
}

// ---- criterion 4: non-canonical partition counterexample -------------------
Checker criterion4() {
    Checker c;
    const PartitionedMatrix p(extreme_swap(), BlockPartition{{2, 2}, {1, 2, 1}});
    const NoncanonicalBoxResult r = noncanonical_box(p, p);
    c.expect(r.residual >= 1.0, "residual < 1");
    const DenseMatrix l = lift12(r.product.matrix, 4), m = lift23(r.product.matrix, 4);
    const DenseMatrix rhs = matmul(matmul(m, l), m);
    const DenseMatrix lhs = matmul(matmul(l, m), l);
    c.expect(rhs(0, 17) == Complex{1.0, 0.0}, "entry (1,18) != 1");
    c.expect(rhs(0, 25) == Complex{1.0, 0.0}, "entry (1,26) != 1");
    bool row_zero = true;
    for (std::size_t j = 0; j < lhs.cols(); ++j)
        if (lhs(0, j) != Complex{0.0, 0.0}) row_zero = false;
    c.expect(row_zero, "row 1 of the other side is not zero");
    return c;
}

// ---- criterion 5: census ----------------------------------------------------
Checker criterion5() {
    Checker c;
    const auto t0 = std::chrono::steady_clock::now();
    const std::vector<StSolution> two = enumerate_involutive(2);
    const std::vector<StSolution> three = enumerate_involutive(3);
    c.expect(two.size() == 2, "n=2 count != 2");
    c.expect(three.size() == 5, "n=3 count != 5");
    auto contains_iso = [&](const StSolution& target) {
        std::vector<std::size_t> mu{0, 1, 2};
        do {
            const StSolution relabeled = ybg::detail::relabel(target, mu);
            for (const StSolution& s : three)
                if (s == relabeled) return true;
        } while (std::next_permutation(mu.begin(), mu.end()));
        return false;
    };
    c.expect(contains_iso(cyclic_prime(3)), "cyclic solution missing from census");
    c.expect(contains_iso(square_free_prime(3)), "square-free solution missing from census");
    c.expect(seconds_since(t0) < 10.0, "runtime >= 10 s");
    return c;
}

// ---- criterion 6: classification fixtures ----------------------------------
Checker criterion6() {
    Checker c;
    const GateClassification gc = classify_gate(example_c());
    c.expect(gc.verdict == GateVerdict::Entangling, "c not entangling");
    c.expect(gc.witness.has_value() && gc.witness->amplitudes[0] == Complex{1.0, 0.0},
             "c witness is not |00>");
    c.expect(classify_gate(cnot()).verdict == GateVerdict::Entangling, "CNOT not entangling");
    c.expect(classify_gate(swap_gate(2)).verdict == GateVerdict::Primitive,
             "swap / c21 not primitive");
    c.expect(classify_gate(extreme_swap()).verdict == GateVerdict::Primitive,
             "c22 not primitive");
    for (std::size_t p : {2, 3, 5})
        c.expect(classify_gate(to_matrix(cyclic_prime(p))).verdict == GateVerdict::Primitive,
                 "cyclic_prime(" + std::to_string(p) + ") not primitive");
    for (std::size_t p : {3, 5})
        c.expect(
            classify_gate(to_matrix(square_free_prime(p))).verdict == GateVerdict::Entangling,
            "square_free_prime(" + std::to_string(p) + ") not entangling");
    return c;
}

// ---- criterion 7: Theorem A factory ----------------------------------------
Checker criterion7() {
    Checker c;
    const auto t0 = std::chrono::steady_clock::now();
    for (std::size_t d = 2; d <= 10; ++d) {
        const GateCertificate e = entangling_gate(d);
        c.expect(e.r_certificate.unitary, "entangling d=" + std::to_string(d) + " not unitary");
        c.expect(e.r_certificate.fully_verified && e.r_certificate.residual <= 1e-10,
                 "entangling d=" + std::to_string(d) + " residual > 1e-10");
        c.expect(e.classification.verdict == GateVerdict::Entangling,
                 "entangling d=" + std::to_string(d) + " wrong verdict");
        const GateCertificate p = primitive_gate(d);
        c.expect(p.r_certificate.unitary, "primitive d=" + std::to_string(d) + " not unitary");
        c.expect(p.r_certificate.fully_verified && p.r_certificate.residual <= 1e-10,
                 "primitive d=" + std::to_string(d) + " residual > 1e-10");
        c.expect(p.classification.verdict == GateVerdict::Primitive,
                 "primitive d=" + std::to_string(d) + " wrong verdict");
    }
    c.expect(seconds_since(t0) < 300.0, "runtime >= 5 min");
    return c;
}

// ---- criterion 8: property suites ------------------------------------------
struct Gen {
    std::mt19937_64 rng;
    std::normal_distribution<double> gauss{0.0, 1.0};
    explicit Gen(std::uint64_t seed) : rng(seed) {}
    std::size_t pick(std::size_t lo, std::size_t hi) { return lo + rng() % (hi - lo + 1); }
    DenseMatrix matrix(std::size_t rows, std::size_t cols) {
        DenseMatrix m(rows, cols);
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = Complex{gauss(rng), gauss(rng)};
        return m;
    }
    std::vector<std::size_t> partition_of(std::size_t total) {
        std::vector<std::size_t> blocks;
        while (total > 0) {
            const std::size_t b = pick(1, total);
            blocks.push_back(b);
            total -= b;
        }
        return blocks;
    }
    std::vector<Complex> vec(std::size_t d, bool unit) {
        std::vector<Complex> v(d);
        double norm = 0.0;
        for (Complex& z : v) {
            z = Complex{gauss(rng), gauss(rng)};
            norm += std::norm(z);
        }
        if (unit) {
            norm = std::sqrt(norm);
            for (Complex& z : v) z /= norm;
        }
        return v;
    }
    TwoQuditState product_state(std::size_t d) {
        const std::vector<Complex> a = vec(d, true), b = vec(d, true);
        std::vector<Complex> amps(d * d);
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j) amps[i * d + j] = a[i] * b[j];
        return TwoQuditState(d, std::move(amps));
    }
};

Checker criterion8() {
    Checker c;
    constexpr int kCases = 200;

    {  // Theorem 2.1 (iii)-(ix)
        Gen g(201);
        bool assoc = true, bilin = true, mixed = true, scalar = true, inv = true,
             transp = true, ident = true;
        for (int t = 0; t < kCases; ++t) {
            // associativity, transpose, identity
            auto pm = [&](std::size_t r, std::size_t cc_) {
                return PartitionedMatrix(g.matrix(r, cc_),
                                         BlockPartition{g.partition_of(r), g.partition_of(cc_)});
            };
            const PartitionedMatrix a = pm(g.pick(1, 3), g.pick(1, 3));
            const PartitionedMatrix b = pm(g.pick(1, 3), g.pick(1, 3));
            const PartitionedMatrix cc = pm(g.pick(1, 3), g.pick(1, 3));
            if (max_abs_diff(tracy_singh(tracy_singh(a, b), cc).matrix,
                             tracy_singh(a, tracy_singh(b, cc)).matrix) >= 1e-12)
                assoc = false;
            const BlockPartition pa = a.partition, pb = b.partition;
            const DenseMatrix a2 = g.matrix(a.matrix.rows(), a.matrix.cols());
            const DenseMatrix b2 = g.matrix(b.matrix.rows(), b.matrix.cols());
            if (max_abs_diff(
                    tracy_singh({a.matrix + a2, pa}, {b.matrix + b2, pb}).matrix,
                    tracy_singh(a, b).matrix + tracy_singh({a.matrix, pa}, {b2, pb}).matrix +
                        tracy_singh({a2, pa}, {b.matrix, pb}).matrix +
                        tracy_singh({a2, pa}, {b2, pb}).matrix) >= 1e-12)
                bilin = false;
            const Complex lam{g.gauss(g.rng), g.gauss(g.rng)};
            if (max_abs_diff(tracy_singh({a.matrix * lam, pa}, b).matrix,
                             tracy_singh(a, b).matrix * lam) >= 1e-12 ||
                max_abs_diff(tracy_singh(a, {b.matrix * lam, pb}).matrix,
                             tracy_singh(a, b).matrix * lam) >= 1e-12)
                scalar = false;
            if (tracy_singh(a, b).matrix.transpose() !=
                tracy_singh({a.matrix.transpose(), {pa.col_blocks, pa.row_blocks}},
                            {b.matrix.transpose(), {pb.col_blocks, pb.row_blocks}})
                    .matrix)
                transp = false;
            // mixed product
            const std::size_t mid_a = g.pick(1, 3), mid_b = g.pick(1, 3);
            const auto pm_a = g.partition_of(mid_a), pm_b = g.partition_of(mid_b);
            const DenseMatrix ca = g.matrix(mid_a, g.pick(1, 3));
            const DenseMatrix cb = g.matrix(mid_b, g.pick(1, 3));
            const auto pc_a = g.partition_of(ca.cols()), pc_b = g.partition_of(cb.cols());
            const DenseMatrix aa = g.matrix(a.matrix.rows(), mid_a);
            const DenseMatrix bb = g.matrix(b.matrix.rows(), mid_b);
            if (max_abs_diff(
                    matmul(tracy_singh({aa, {pa.row_blocks, pm_a}}, {bb, {pb.row_blocks, pm_b}})
                               .matrix,
                           tracy_singh({ca, {pm_a, pc_a}}, {cb, {pm_b, pc_b}}).matrix),
                    tracy_singh({matmul(aa, ca), {pa.row_blocks, pc_a}},
                                {matmul(bb, cb), {pb.row_blocks, pc_b}})
                        .matrix) >= 1e-10)
                mixed = false;
            // inverse
            const std::size_t n = g.pick(2, 4), m = g.pick(2, 4);
            const auto pn = g.partition_of(n), pmm = g.partition_of(m);
            const DenseMatrix ia =
                g.matrix(n, n) + DenseMatrix::identity(n) * Complex{3.0, 0.0};
            const DenseMatrix ib =
                g.matrix(m, m) + DenseMatrix::identity(m) * Complex{3.0, 0.0};
            if (max_abs_diff(inverse(tracy_singh({ia, {pn, pn}}, {ib, {pmm, pmm}}).matrix),
                             tracy_singh({inverse(ia), {pn, pn}}, {inverse(ib), {pmm, pmm}})
                                 .matrix) >= 1e-8)
                inv = false;
            if (tracy_singh({DenseMatrix::identity(n), {pn, pn}},
                            {DenseMatrix::identity(m), {pmm, pmm}})
                    .matrix != DenseMatrix::identity(n * m))
                ident = false;
        }
        c.expect(assoc, "Thm 2.1(iii) associativity failed");
        c.expect(bilin, "Thm 2.1(iv) bilinearity failed");
        c.expect(mixed, "Thm 2.1(v) mixed product failed");
        c.expect(scalar, "Thm 2.1(vi) scalar failed");
        c.expect(inv, "Thm 2.1(vii) inverse failed");
        c.expect(transp, "Thm 2.1(viii) transpose failed");
        c.expect(ident, "Thm 2.1(ix) identity failed");
    }

    {  // Theorem 2.3(i) and Prop 4.1(ii)-(iii), exact
        Gen g(202);
        bool commut = true, conj = true, exchange = true;
        for (int t = 0; t < kCases; ++t) {
            const std::size_t n = g.pick(1, 4), s = g.pick(1, 4);
            const std::size_t m = g.pick(1, 4), tt = g.pick(1, 4);
            const DenseMatrix a = g.matrix(n, s), b = g.matrix(m, tt);
            if (kronecker(b, a) !=
                matmul(matmul(commutation_matrix(m, n), kronecker(a, b)),
                       commutation_matrix(s, tt)))
                commut = false;
            const std::size_t p = g.pick(1, 3), q = g.pick(1, 3);
            const std::size_t np = g.pick(1, 2), sp = g.pick(1, 2);
            const std::size_t u = g.pick(1, 3), v = g.pick(1, 3);
            const std::size_t mp = g.pick(1, 2), tp = g.pick(1, 2);
            const DenseMatrix ua = g.matrix(p * np, q * sp), ub = g.matrix(u * mp, v * tp);
            const BlockPartition pa{std::vector<std::size_t>(p, np),
                                    std::vector<std::size_t>(q, sp)};
            const BlockPartition pb{std::vector<std::size_t>(u, mp),
                                    std::vector<std::size_t>(v, tp)};
            const DenseMatrix box = tracy_singh({ua, pa}, {ub, pb}).matrix;
            const DenseMatrix left =
                kronecker(kronecker(DenseMatrix::identity(p), commutation_matrix(u, np)),
                          DenseMatrix::identity(mp));
            const DenseMatrix right =
                kronecker(kronecker(DenseMatrix::identity(q), commutation_matrix(sp, v)),
                          DenseMatrix::identity(tp));
            if (matmul(matmul(left, kronecker(ua, ub)), right) != box) conj = false;
            const DenseMatrix boxba = tracy_singh({ub, pb}, {ua, pa}).matrix;
            const std::size_t N = p * np, S = q * sp, M = u * mp, T = v * tp;
            const DenseMatrix P = matmul(
                matmul(kronecker(kronecker(DenseMatrix::identity(u), commutation_matrix(p, mp)),
                                 DenseMatrix::identity(np)),
                       commutation_matrix(M, N)),
                kronecker(kronecker(DenseMatrix::identity(p), commutation_matrix(np, u)),
                          DenseMatrix::identity(mp)));
            const DenseMatrix Q = matmul(
                matmul(kronecker(kronecker(DenseMatrix::identity(q), commutation_matrix(v, sp)),
                                 DenseMatrix::identity(tp)),
                       commutation_matrix(S, T)),
                kronecker(kronecker(DenseMatrix::identity(v), commutation_matrix(tp, q)),
                          DenseMatrix::identity(sp)));
            if (matmul(matmul(P, box), Q) != boxba) exchange = false;
        }
        c.expect(commut, "Thm 2.3(i) commutation identity failed");
        c.expect(conj, "Prop 4.1(ii) conjugation identity failed");
        c.expect(exchange, "Prop 4.1(iii) exchange identity failed");
    }

    {  // Lemma 3.5, exact
        Gen g(203);
        bool lifted = true;
        for (int t = 0; t < kCases; ++t) {
            const std::size_t n = g.pick(2, 3), m = g.pick(2, 3);
            const DenseMatrix a = g.matrix(n, n), b = g.matrix(m, m);
            if (tracy_singh(
                    {kronecker(a, DenseMatrix::identity(n)), canonical_partition(n * n)},
                    {kronecker(b, DenseMatrix::identity(m)), canonical_partition(m * m)})
                    .matrix != kronecker(kronecker(a, b), DenseMatrix::identity(n * m)))
                lifted = false;
        }
        c.expect(lifted, "Lemma 3.5 lifted kron identity failed");
    }

    {  // Lemma 6.1(i)-(iii) and Lemma 6.2
        Gen g(204);
        bool dist = true, regroup = true, norms = true, equiv = true;
        for (int t = 0; t < kCases; ++t) {
            const std::size_t n = g.pick(2, 3), m = g.pick(2, 3);
            const DenseMatrix cm = g.matrix(n * n, n * n), dm = g.matrix(m * m, m * m);
            const TwoQuditState phi(n, g.vec(n * n, false));
            const TwoQuditState psi(m, g.vec(m * m, false));
            const TwoQuditState lhs =
                apply_gate(tracy_singh({cm, canonical_partition(n * n)},
                                       {dm, canonical_partition(m * m)})
                               .matrix,
                           state_tracy_singh(phi, psi));
            const TwoQuditState rhs =
                state_tracy_singh(apply_gate(cm, phi), apply_gate(dm, psi));
            for (std::size_t i = 0; i < lhs.amplitudes.size(); ++i)
                if (std::abs(lhs.amplitudes[i] - rhs.amplitudes[i]) >= 1e-10) dist = false;
            const TwoQuditState pp = g.product_state(n), qq = g.product_state(m);
            const TwoQuditState box = state_tracy_singh(pp, qq);
            if (!is_decomposable_state(box)) equiv = false;
            if (std::abs(box.norm() - 1.0) >= 1e-12) norms = false;
            // regroup formula on explicit product factors
            const std::vector<Complex> al = g.vec(n, true), be = g.vec(n, true);
            const std::vector<Complex> ga = g.vec(m, true), de = g.vec(m, true);
            auto prod = [](const std::vector<Complex>& x, const std::vector<Complex>& y) {
                std::vector<Complex> out(x.size() * y.size());
                for (std::size_t i = 0; i < x.size(); ++i)
                    for (std::size_t j = 0; j < y.size(); ++j)
                        out[i * y.size() + j] = x[i] * y[j];
                return out;
            };
            const TwoQuditState boxed =
                state_tracy_singh(TwoQuditState(n, prod(al, be)), TwoQuditState(m, prod(ga, de)));
            const std::vector<Complex> expect = prod(prod(al, ga), prod(be, de));
            for (std::size_t i = 0; i < expect.size(); ++i)
                if (std::abs(boxed.amplitudes[i] - expect[i]) >= 1e-12) regroup = false;
            // entangled inputs stay entangled through the box (Lemma 6.2, reverse)
            std::vector<Complex> bell(n * n, Complex{0.0, 0.0});
            const double r = 1.0 / std::sqrt(2.0);
            bell[0] = r;
            bell[1 * n + 1] = r;
            if (is_decomposable_state(state_tracy_singh(TwoQuditState(n, bell), qq)))
                equiv = false;
        }
        c.expect(dist, "Lemma 6.1(i) distribution failed");
        c.expect(regroup, "Lemma 6.1(ii) regroup failed");
        c.expect(norms, "Lemma 6.1(iii) unit norm failed");
        c.expect(equiv, "Lemma 6.2 equivalence failed");
    }

    {  // d = 2 determinant-vs-rank agreement on 1000 random states
        Gen g(205);
        bool agree = true;
        for (int t = 0; t < 1000; ++t) {
            const TwoQuditState s =
                (t % 2 == 0) ? g.product_state(2) : TwoQuditState(2, g.vec(4, true));
            const DenseMatrix cm = coefficient_matrix(s);
            const Complex det = cm(0, 0) * cm(1, 1) - cm(0, 1) * cm(1, 0);
            if ((std::abs(det) <= 1e-10) != (numerical_rank(cm) == 1)) agree = false;
        }
        c.expect(agree, "d=2 determinant-vs-rank disagreement");
    }

    return c;
}

// ---- criterion 9: brute-force oracle equivalence ---------------------------
Checker criterion9() {
    Checker c;
    std::vector<StSolution> all;
    for (std::size_t n = 1; n <= 5; ++n) all.push_back(trivial_solution(n));
    all.push_back(permutation_solution({1, 0}));
    all.push_back(permutation_solution({1, 2, 0}));
    all.push_back(permutation_solution({1, 0, 3, 2}));
    all.push_back(permutation_solution({4, 0, 1, 2, 3}));
    for (std::size_t p : {2, 3, 5}) all.push_back(cyclic_prime(p));
    for (std::size_t p : {3, 5}) all.push_back(square_free_prime(p));
    for (std::size_t n : {2, 3})
        for (const StSolution& s : enumerate_involutive(n)) all.push_back(s);
    for (const StSolution& s : all) {
        const bool braided = validate(s).braided;
        const double res = ybe_residual(to_matrix(s), s.n);
        c.expect(braided, "builder produced a non-braided solution (n=" +
                              std::to_string(s.n) + ")");
        c.expect(res == 0.0, "matrix residual not exactly 0 (n=" + std::to_string(s.n) + ")");
        c.expect((res == 0.0) == braided, "matrix and set-level verdicts disagree");
    }
    return c;
}

}  // namespace

int main(int argc, char** argv) {
    const std::vector<std::pair<const char*, std::function<Checker()>>> criteria = {
        {"golden R-matrices", criterion1},
        {"Kronecker counterexample", criterion2},
        {"closure theorem at desk scale", criterion3},
        {"non-canonical partition counterexample", criterion4},
        {"census", criterion5},
        {"classification fixtures", criterion6},
        {"Theorem A factory", criterion7},
        {"property suites", criterion8},
        {"brute-force oracle equivalence", criterion9},
    };
    int only = 0;
    if (argc > 1) only = std::atoi(argv[1]);
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        if (only != 0 && static_cast<int>(i + 1) != only) continue;
        Checker result;
        try {
            result = criteria[i].second();
        } catch (const std::exception& e) {
            result.ok = false;
            result.detail = std::string("exception: ") + e.what();
        }
        std::printf("criterion %zu (%s): %s%s%s\n", i + 1, criteria[i].first,
                    result.ok ? "PASS" : "FAIL", result.detail.empty() ? "" : " — ",
                    result.detail.c_str());
        if (!result.ok) ++failures;
    }
    return failures;
}
