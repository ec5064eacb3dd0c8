#pragma once

#include <algorithm>
#include <array>
#include <set>
#include <vector>

#include "ybg/matrix.hpp"

namespace ybg {

/// Set-theoretic solution data on X = {0, ..., n-1}:
/// r(x, y) = (sigma[x][y], gamma[y][x]).
struct StSolution {
    std::size_t n = 0;
    std::vector<std::vector<std::size_t>> sigma;  // sigma[x] is the map y -> sigma_x(y)
    std::vector<std::vector<std::size_t>> gamma;  // gamma[y] is the map x -> gamma_y(x)

    std::pair<std::size_t, std::size_t> r(std::size_t x, std::size_t y) const {
        return {sigma[x][y], gamma[y][x]};
    }

    bool operator==(const StSolution& o) const {
        return n == o.n && sigma == o.sigma && gamma == o.gamma;
    }
    bool operator<(const StSolution& o) const {
        return std::tie(sigma, gamma) < std::tie(o.sigma, o.gamma);
    }
};

struct StValidation {
    bool well_formed = false;     // tables are total maps into X
    bool braided = false;         // r12 r23 r12 = r23 r12 r23 on X^3
    bool involutive = false;      // r o r = id on X^2
    bool nondegenerate = false;   // all sigma_x and gamma_y bijective
    bool square_free = false;     // r(x, x) = (x, x) for all x
};

inline bool tables_well_formed(const StSolution& s) {
    if (s.n == 0 || s.sigma.size() != s.n || s.gamma.size() != s.n) return false;
    for (const auto& row : s.sigma)
        if (row.size() != s.n || std::any_of(row.begin(), row.end(),
                                             [&](std::size_t v) { return v >= s.n; }))
            return false;
    for (const auto& row : s.gamma)
        if (row.size() != s.n || std::any_of(row.begin(), row.end(),
                                             [&](std::size_t v) { return v >= s.n; }))
            return false;
    return true;
}

inline StValidation validate(const StSolution& s) {
    StValidation v;
    v.well_formed = tables_well_formed(s);
    if (!v.well_formed) return v;
    const std::size_t n = s.n;

    auto bijective = [n](const std::vector<std::size_t>& map) {
        std::vector<bool> hit(n, false);
        for (std::size_t t : map) {
            if (hit[t]) return false;
            hit[t] = true;
        }
        return true;
    };
    v.nondegenerate = true;
    for (std::size_t i = 0; i < n; ++i)
        if (!bijective(s.sigma[i]) || !bijective(s.gamma[i])) v.nondegenerate = false;

    using Triple = std::array<std::size_t, 3>;
    auto r12 = [&](Triple t) {
        auto [a, b] = s.r(t[0], t[1]);
        return Triple{a, b, t[2]};
    };
    auto r23 = [&](Triple t) {
        auto [a, b] = s.r(t[1], t[2]);
        return Triple{t[0], a, b};
    };
    v.braided = true;
    for (std::size_t x = 0; x < n && v.braided; ++x)
        for (std::size_t y = 0; y < n && v.braided; ++y)
            for (std::size_t z = 0; z < n; ++z) {
                const Triple t{x, y, z};
                if (r12(r23(r12(t))) != r23(r12(r23(t)))) {
                    v.braided = false;
                    break;
                }
            }

    v.involutive = true;
    for (std::size_t x = 0; x < n && v.involutive; ++x)
        for (std::size_t y = 0; y < n; ++y) {
            auto [a, b] = s.r(x, y);
            if (s.r(a, b) != std::make_pair(x, y)) {
                v.involutive = false;
                break;
            }
        }

    v.square_free = true;
    for (std::size_t x = 0; x < n; ++x)
        if (s.r(x, x) != std::make_pair(x, x)) {
            v.square_free = false;
            break;
        }
    return v;
}

/// Matrix lift: the n^2 x n^2 0/1 matrix sending e_x (x) e_y to
/// e_{sigma_x(y)} (x) e_{gamma_y(x)} in the lexicographic product basis.
inline DenseMatrix to_matrix(const StSolution& s) {
    if (!tables_well_formed(s)) throw std::invalid_argument("to_matrix: malformed tables");
    const std::size_t n = s.n;
    DenseMatrix m(n * n, n * n);
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y) {
            auto [a, b] = s.r(x, y);
            m.at(a * n + b, x * n + y) = 1.0;
        }
    return m;
}

/// Trivial (flip) solution: r(x, y) = (y, x).
inline StSolution trivial_solution(std::size_t n) {
    if (n == 0) throw std::invalid_argument("trivial_solution: n must be positive");
    StSolution s;
    s.n = n;
    std::vector<std::size_t> id(n);
    for (std::size_t i = 0; i < n; ++i) id[i] = i;
    s.sigma.assign(n, id);
    s.gamma.assign(n, id);
    return s;
}

/// Permutation solution: r(x, y) = (f(y), f^{-1}(x)) for a bijection f.
inline StSolution permutation_solution(const std::vector<std::size_t>& f) {
    const std::size_t n = f.size();
    std::vector<std::size_t> finv(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        if (f[i] >= n || finv[f[i]] != n)
            throw std::invalid_argument("permutation_solution: table is not a bijection");
        finv[f[i]] = i;
    }
    StSolution s;
    s.n = n;
    s.sigma.assign(n, f);
    s.gamma.assign(n, finv);
    return s;
}

inline bool is_prime(std::size_t p) {
    if (p < 2) return false;
    for (std::size_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

/// Cyclic permutation solution on Z/p: sigma_x(y) = y + 1, gamma_y(x) = x - 1.
inline StSolution cyclic_prime(std::size_t p) {
    if (!is_prime(p)) throw std::invalid_argument("cyclic_prime: p must be prime");
    std::vector<std::size_t> shift(p);
    for (std::size_t i = 0; i < p; ++i) shift[i] = (i + 1) % p;
    return permutation_solution(shift);
}

/// Square-free involutive solution on Z/p (odd prime): sigma_x = gamma_x = id
/// for x < p - 1, and sigma_{p-1} = gamma_{p-1} = the transposition (0 1).
inline StSolution square_free_prime(std::size_t p) {
    if (!is_prime(p) || p == 2)
        throw std::invalid_argument("square_free_prime: p must be an odd prime");
    StSolution s;
    s.n = p;
    std::vector<std::size_t> id(p), t01(p);
    for (std::size_t i = 0; i < p; ++i) id[i] = t01[i] = i;
    std::swap(t01[0], t01[1]);
    s.sigma.assign(p, id);
    s.gamma.assign(p, id);
    s.sigma[p - 1] = t01;
    s.gamma[p - 1] = t01;
    return s;
}

namespace detail {

inline StSolution relabel(const StSolution& s, const std::vector<std::size_t>& mu) {
    const std::size_t n = s.n;
    std::vector<std::size_t> mui(n);
    for (std::size_t i = 0; i < n; ++i) mui[mu[i]] = i;
    StSolution out;
    out.n = n;
    out.sigma.assign(n, std::vector<std::size_t>(n));
    out.gamma.assign(n, std::vector<std::size_t>(n));
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y) {
            out.sigma[x][y] = mu[s.sigma[mui[x]][mui[y]]];
            out.gamma[x][y] = mu[s.gamma[mui[x]][mui[y]]];
        }
    return out;
}

}  // namespace detail

/// Exhaustive enumeration of braided, involutive, nondegenerate solutions on
/// |X| = n, deduplicated up to isomorphism (relabelings mu of X). Returns the
/// lexicographically smallest representative of each class, in sorted order.
inline std::vector<StSolution> enumerate_involutive(std::size_t n) {
    if (n == 0 || n > 4)
        throw std::invalid_argument("enumerate_involutive: n must lie in [1,4]");
    std::vector<std::vector<std::size_t>> perms;
    {
        std::vector<std::size_t> p(n);
        for (std::size_t i = 0; i < n; ++i) p[i] = i;
        do perms.push_back(p);
        while (std::next_permutation(p.begin(), p.end()));
    }
    // All assignments of a permutation to each sigma_x and gamma_y.
    std::vector<StSolution> found;
    std::vector<std::size_t> sidx(n, 0), gidx(n, 0);
    auto advance = [&](std::vector<std::size_t>& idx) {
        for (std::size_t pos = 0; pos < n; ++pos) {
            if (++idx[pos] < perms.size()) return true;
            idx[pos] = 0;
        }
        return false;
    };
    do {
        std::fill(gidx.begin(), gidx.end(), 0);
        do {
            StSolution s;
            s.n = n;
            for (std::size_t i = 0; i < n; ++i) {
                s.sigma.push_back(perms[sidx[i]]);
                s.gamma.push_back(perms[gidx[i]]);
            }
            const StValidation v = validate(s);
            if (v.braided && v.involutive && v.nondegenerate) found.push_back(std::move(s));
        } while (advance(gidx));
    } while (advance(sidx));

    std::sort(found.begin(), found.end());
    std::vector<StSolution> classes;
    std::set<StSolution> seen;
    for (const StSolution& s : found) {
        if (seen.count(s)) continue;
        for (const auto& mu : perms) seen.insert(detail::relabel(s, mu));
        classes.push_back(s);  // lexicographically smallest in its orbit, since sorted
    }
    return classes;
}

}  // namespace ybg
