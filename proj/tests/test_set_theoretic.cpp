#include <catch2/catch_amalgamated.hpp>

#include <algorithm>

#include "ybg/set_theoretic.hpp"
#include "ybg/ybe.hpp"

using namespace ybg;

TEST_CASE("trivial solution is braided, involutive, square-free") {
    const StSolution s = trivial_solution(4);
    const StValidation v = validate(s);
    CHECK(v.well_formed);
    CHECK(v.braided);
    CHECK(v.involutive);
    CHECK(v.nondegenerate);
    CHECK(v.square_free);
    CHECK(s.r(1, 3) == std::make_pair<std::size_t, std::size_t>(3, 1));
}

TEST_CASE("permutation solutions") {
    const StSolution s = permutation_solution({1, 2, 0});
    const StValidation v = validate(s);
    CHECK(v.braided);
    CHECK(v.involutive);
    CHECK(v.nondegenerate);
    CHECK_FALSE(v.square_free);
    CHECK_THROWS_AS(permutation_solution({0, 0, 2}), std::invalid_argument);
}

TEST_CASE("cyclic_prime maps e1 x e1 to e2 x e3 for p = 3") {
    const StSolution s = cyclic_prime(3);
    CHECK(s.r(0, 0) == std::make_pair<std::size_t, std::size_t>(1, 2));
    const DenseMatrix m = to_matrix(s);
    CHECK(m(1 * 3 + 2, 0) == Complex{1.0, 0.0});
    CHECK(ybe_residual(m, 3) == 0.0);
    CHECK_THROWS_AS(cyclic_prime(4), std::invalid_argument);
}

TEST_CASE("square_free_prime family is square-free and valid for p in {3,5,7}") {
    for (std::size_t p : {3, 5, 7}) {
        const StSolution s = square_free_prime(p);
        const StValidation v = validate(s);
        CHECK(v.braided);
        CHECK(v.involutive);
        CHECK(v.nondegenerate);
        CHECK(v.square_free);
        CHECK(ybe_residual(to_matrix(s), p) == 0.0);
    }
    CHECK_THROWS_AS(square_free_prime(2), std::invalid_argument);
    CHECK_THROWS_AS(square_free_prime(9), std::invalid_argument);
}

TEST_CASE("validate flags malformed and degenerate tables") {
    StSolution bad;
    bad.n = 2;
    bad.sigma = {{0, 1}};  // ragged
    bad.gamma = {{0, 1}, {1, 0}};
    CHECK_FALSE(validate(bad).well_formed);
    StSolution degen = trivial_solution(2);
    degen.sigma[0] = {0, 0};  // sigma_0 not bijective
    CHECK_FALSE(validate(degen).nondegenerate);
}

TEST_CASE("to_matrix lift is a permutation matrix with exact YBE residual") {
    for (const StSolution& s :
         {trivial_solution(3), cyclic_prime(5), square_free_prime(5)}) {
        const DenseMatrix m = to_matrix(s);
        const std::size_t n = s.n;
        CHECK(max_abs_diff(matmul(m, m.transpose()), DenseMatrix::identity(n * n)) == 0.0);
        CHECK(ybe_residual(m, n) == 0.0);
    }
}

TEST_CASE("enumeration counts up to isomorphism") {
    const std::vector<StSolution> two = enumerate_involutive(2);
    CHECK(two.size() == 2);
    const std::vector<StSolution> three = enumerate_involutive(3);
    CHECK(three.size() == 5);
    // every returned class representative is itself valid
    for (const StSolution& s : three) {
        const StValidation v = validate(s);
        CHECK(v.braided);
        CHECK(v.involutive);
        CHECK(v.nondegenerate);
    }
    // the cyclic and square-free solutions appear, up to relabeling
    auto contains_iso = [&](const StSolution& target) {
        std::vector<std::size_t> mu(target.n);
        for (std::size_t i = 0; i < target.n; ++i) mu[i] = i;
        do {
            const StSolution relabeled = ybg::detail::relabel(target, mu);
            if (std::find(three.begin(), three.end(), relabeled) != three.end()) return true;
        } while (std::next_permutation(mu.begin(), mu.end()));
        return false;
    };
    CHECK(contains_iso(cyclic_prime(3)));
    CHECK(contains_iso(square_free_prime(3)));
    CHECK_THROWS_AS(enumerate_involutive(0), std::invalid_argument);
    CHECK_THROWS_AS(enumerate_involutive(5), std::invalid_argument);
}

TEST_CASE("literal pre-dedup counts stay visible") {
    // The raw census (before isomorphism dedup) has 2 solutions for n = 2 and
    // 12 for n = 3; the published class counts are 2 and 5. Pin the n = 2
    // coincidence: both classes are their own orbits.
    const std::vector<StSolution> two = enumerate_involutive(2);
    for (const StSolution& s : two) {
        std::vector<std::size_t> mu{1, 0};
        CHECK(ybg::detail::relabel(s, mu) == s);
    }
}
