#include <doctest.h>

#include "schub/polynomial.hpp"

using namespace schub;

namespace {

Polynomial x(int n, int i) { return Polynomial::variable(n, i); }

}  // namespace

TEST_CASE("graded lex orders by total degree first") {
    GrlexLess less;
    CHECK(less({1, 0}, {0, 2}));       // degree 1 < 2
    CHECK(less({0, 2}, {1, 1}));       // same degree, lex
    CHECK(!less({1, 1}, {1, 1}));
    CHECK(less({}, {}) == false);      // zero-variable vectors compare equal
}

TEST_CASE("term bookkeeping drops zeros and rejects bad exponents") {
    Polynomial f(2);
    f.add_term({1, 0}, 2);
    f.add_term({1, 0}, -2);
    CHECK(f.is_zero());
    f.add_term({0, 1}, 0);
    CHECK(f.is_zero());
    CHECK_THROWS_AS(f.add_term({1}, 1), std::invalid_argument);
    CHECK_THROWS_AS(f.add_term({-1, 0}, 1), std::invalid_argument);
}

TEST_CASE("arithmetic matches hand expansion") {
    int n = 2;
    Polynomial f = x(n, 1) + x(n, 2);
    Polynomial g = x(n, 1) - x(n, 2);
    Polynomial product = f * g;  // x1^2 - x2^2
    Polynomial expected(n);
    expected.add_term({2, 0}, 1);
    expected.add_term({0, 2}, -1);
    CHECK(product == expected);
    CHECK((product - product).is_zero());
    CHECK(-product + product == Polynomial(n));
}

TEST_CASE("zero-variable polynomials behave as constants") {
    Polynomial one = Polynomial::constant(0, 1);
    CHECK(one.term_count() == 1);
    CHECK(one * one == one);
    CHECK(one.support() == std::set<WeightVector>{{}});
}

TEST_CASE("swap_variables is the adjacent transposition action") {
    int n = 3;
    Polynomial f = x(n, 1) * x(n, 1) * x(n, 2);  // x1^2 x2
    Polynomial swapped = f.swap_variables(1);
    Polynomial expected(n);
    expected.add_term({1, 2, 0}, 1);
    CHECK(swapped == expected);
    CHECK(f.swap_variables(2).swap_variables(2) == f);
    CHECK_THROWS_AS(f.swap_variables(3), std::invalid_argument);
}

TEST_CASE("support reads off exponent vectors") {
    int n = 2;
    Polynomial f = x(n, 1) + x(n, 2);
    CHECK(f.support() == std::set<WeightVector>{{1, 0}, {0, 1}});
    CHECK(Polynomial(2).support().empty());
}

TEST_CASE("pretty printing") {
    int n = 3;
    Polynomial f = x(n, 1) * x(n, 1) * x(n, 2);
    CHECK(f.to_pretty_string() == "x1^2*x2");
    Polynomial g = Polynomial::constant(n, -2) * f + Polynomial::constant(n, 1);
    CHECK(g.to_pretty_string() == "1 - 2*x1^2*x2");
    CHECK(Polynomial(n).to_pretty_string() == "0");
}

TEST_CASE("coefficients may exceed 64 bits") {
    Polynomial f = Polynomial::constant(1, Int("123456789012345678901234567890"));
    Polynomial g = f * f;
    CHECK(g.coeff({0}) == Int("15241578753238836750495351562536198787501905199875019052100"));
}
