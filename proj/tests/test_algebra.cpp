#include <doctest.h>

#include <random>

#include "schub/algebra.hpp"

using namespace schub;

namespace {

Polynomial x(int n, int i) { return Polynomial::variable(n, i); }

// Sparse polynomial with a few terms of total degree <= 4 and small
// nonzero coefficients, from a seeded generator.
Polynomial random_sparse(std::mt19937_64& rng, int n) {
    Polynomial f(n);
    int terms = 1 + static_cast<int>(rng() % 6);
    for (int t = 0; t < terms; ++t) {
        Exponents e(n, 0);
        int budget = static_cast<int>(rng() % 5);
        for (int b = 0; b < budget; ++b) ++e[rng() % n];
        long c = static_cast<long>(rng() % 19) - 9;
        if (c == 0) c = 1;
        f.add_term(e, Int(c));
    }
    return f;
}

}  // namespace

TEST_CASE("divided difference on hand-checked inputs") {
    int n = 3;
    Polynomial staircase = Polynomial::monomial(n, {2, 1, 0}, 1);  // x1^2 x2

    // (x1^2 x2 - x1^2 x3) / (x2 - x3) = x1^2
    CHECK(divided_difference(staircase, 2) == Polynomial::monomial(n, {2, 0, 0}, 1));

    // symmetric in x1, x2: antisymmetrization vanishes
    Polynomial sym = x(n, 1) * x(n, 2);
    CHECK(divided_difference(sym, 1).is_zero());

    // (x1 - x2) / (x1 - x2) = 1
    CHECK(divided_difference(x(2, 1), 1) == Polynomial::constant(2, 1));

    CHECK_THROWS_AS(divided_difference(x(2, 1), 2), std::invalid_argument);
}

TEST_CASE("Demazure operator on hand-checked inputs") {
    // d_1(x1^2) = x1 + x2
    CHECK(demazure(x(2, 1), 1) == x(2, 1) + x(2, 2));
    // d_1(x1) = 1
    CHECK(demazure(Polynomial::constant(2, 1), 1) == Polynomial::constant(2, 1));
    // x1 x2 symmetric, so d_1 kills it
    CHECK(demazure(x(2, 2), 1).is_zero());
}

TEST_CASE("Schubert polynomials at the anchors") {
    CHECK(schubert_polynomial(Permutation({3, 2, 1})) ==
          Polynomial::monomial(3, {2, 1, 0}, 1));
    CHECK(schubert_polynomial(Permutation::identity(3)) == Polynomial::constant(3, 1));
    CHECK(schubert_polynomial(Permutation({1, 3, 2})) == x(3, 1) + x(3, 2));
    CHECK(schubert_polynomial(Permutation({1})) == Polynomial::constant(1, 1));
}

TEST_CASE("key polynomials at the anchors") {
    CHECK(key_polynomial(Composition({2, 1})) == Polynomial::monomial(2, {2, 1}, 1));
    CHECK(key_polynomial(Composition({0, 1})) == x(2, 1) + x(2, 2));
    CHECK(key_polynomial(Composition({0, 0, 0})) == Polynomial::constant(0, 1));
    // weakly decreasing base case keeps trailing zeros in the ambient size
    CHECK(key_polynomial(Composition({3, 1})) == Polynomial::monomial(3, {3, 1, 0}, 1));
}

TEST_CASE("support of a Schubert polynomial") {
    Polynomial f = schubert_polynomial(Permutation({1, 3, 2}));
    CHECK(f.support() == std::set<WeightVector>{{1, 0, 0}, {0, 1, 0}});
}

TEST_CASE("divided difference squares to zero") {
    std::mt19937_64 rng(7001);
    for (int trial = 0; trial < 200; ++trial) {
        int n = 2 + static_cast<int>(rng() % 3);
        Polynomial f = random_sparse(rng, n);
        for (int i = 1; i < n; ++i)
            CHECK(divided_difference(divided_difference(f, i), i).is_zero());
    }
}

TEST_CASE("braid relation on random sparse polynomials") {
    std::mt19937_64 rng(7002);
    for (int trial = 0; trial < 200; ++trial) {
        int n = 3 + static_cast<int>(rng() % 2);
        Polynomial f = random_sparse(rng, n);
        for (int i = 1; i + 1 < n; ++i) {
            Polynomial lhs = divided_difference(
                divided_difference(divided_difference(f, i), i + 1), i);
            Polynomial rhs = divided_difference(
                divided_difference(divided_difference(f, i + 1), i), i + 1);
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("descent choice does not change the Schubert polynomial") {
    for (const Permutation& w : all_permutations(4)) {
        CHECK(schubert_polynomial(w, ChoicePolicy::SmallestIndex) ==
              schubert_polynomial(w, ChoicePolicy::LargestIndex));
    }
}

TEST_CASE("ascent choice does not change the key polynomial") {
    for (const Composition& alpha : all_compositions(3, 3)) {
        CHECK(key_polynomial(alpha, ChoicePolicy::SmallestIndex) ==
              key_polynomial(alpha, ChoicePolicy::LargestIndex));
    }
}

TEST_CASE("Schubert and key coefficients are positive") {
    for (const Permutation& w : all_permutations(4))
        CHECK(schubert_polynomial(w).all_coefficients_positive());
    for (const Composition& alpha : all_compositions(3, 3))
        CHECK(key_polynomial(alpha).all_coefficients_positive());
}
