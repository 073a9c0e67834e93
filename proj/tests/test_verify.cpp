#include <doctest.h>

#include "schub/algebra.hpp"
#include "schub/json_io.hpp"
#include "schub/verify.hpp"

using namespace schub;

namespace {

Subset mask(std::initializer_list<int> elems) {
    Subset s = 0;
    for (int k : elems) s |= (1u << (k - 1));
    return s;
}

}  // namespace

TEST_CASE("verify_snp accepts a matching pair") {
    Permutation w({1, 3, 2});
    SnpReport r = verify_snp(schubert_polynomial(w), schubitope(rothe_diagram(w)));
    CHECK(r.ok());
    CHECK(r.missing_from_polytope.empty());
    CHECK(r.missing_from_support.empty());
}

TEST_CASE("verify_snp accepts the constant against the origin") {
    GeneralizedPermutahedron origin = matroid_polytope(SchubertMatroid(3, {}));
    SnpReport r = verify_snp(Polynomial::constant(3, 1), origin);
    CHECK(r.ok());
}

TEST_CASE("verify_snp reports a support vector outside the polytope") {
    Polynomial f = Polynomial::variable(3, 1) + Polynomial::variable(3, 3);
    SnpReport r = verify_snp(f, schubitope(Diagram(3, {0, mask({2}), 0})));
    CHECK(!r.support_in_polytope);
    REQUIRE(!r.missing_from_polytope.empty());
    CHECK(r.missing_from_polytope.front() == WeightVector{0, 0, 1});
    // e_2 is a lattice point but x_2 has coefficient zero in f
    CHECK(!r.polytope_in_support);
    CHECK(r.coefficients_positive);
}

TEST_CASE("verify_snp flags nonpositive coefficients") {
    Polynomial f = schubert_polynomial(Permutation({1, 3, 2}));
    f.add_term({1, 0, 0}, -2);  // turn a coefficient negative
    SnpReport r = verify_snp(f, schubitope(rothe_diagram(Permutation({1, 3, 2}))));
    CHECK(!r.coefficients_positive);
    CHECK(r.nonpositive_terms == std::vector<WeightVector>{{1, 0, 0}});
}

TEST_CASE("Schubert sweep at small sizes") {
    SweepReport r1 = sweep_schubert(1);
    CHECK(r1.total == 1);
    CHECK(r1.passed == 1);
    SweepReport r2 = sweep_schubert(2);
    CHECK(r2.total == 2);
    CHECK(r2.all_passed());
    SweepReport r4 = sweep_schubert(4);
    CHECK(r4.total == 24);
    CHECK(r4.all_passed());
}

TEST_CASE("key sweep at small sizes") {
    SweepReport r = sweep_key(2, 2);
    CHECK(r.total == 9);
    CHECK(r.all_passed());
}

TEST_CASE("theta sweep over one-column diagrams and Rothe diagrams") {
    std::vector<Diagram> corpus;
    for (Subset col = 0; col <= full_set(4); ++col) {
        std::vector<Subset> cols(4, 0);
        cols[0] = col;
        corpus.push_back(Diagram(4, std::move(cols)));
    }
    for (const Permutation& w : all_permutations(4)) corpus.push_back(rothe_diagram(w));
    SweepReport r = sweep_theta_rank(corpus);
    CHECK(r.total == corpus.size());
    CHECK(r.all_passed());
}

TEST_CASE("random corpus is reproducible from its seed") {
    std::vector<Diagram> a = random_diagram_corpus(99);
    std::vector<Diagram> b = random_diagram_corpus(99);
    REQUIRE(a.size() == 400);
    CHECK(a == b);
    std::vector<Diagram> c = random_diagram_corpus(100);
    CHECK(a != c);
}

TEST_CASE("sweep reports serialize with stable fields") {
    SweepReport r = sweep_schubert(3);
    Json j = report_to_json(r);
    CHECK(j["sweep"] == "schubert");
    CHECK(j["total"] == 6);
    CHECK(j["passed"] == 6);
    CHECK(j["failed"].is_array());
    CHECK(j["failed"].empty());
    CHECK(j.contains("seed"));
    CHECK(j.contains("elapsed_ms"));
}

TEST_CASE("parallel sweep matches the sequential one") {
    SweepOptions sequential;
    SweepOptions parallel;
    parallel.jobs = 4;
    SweepReport a = sweep_schubert(4, sequential);
    SweepReport b = sweep_schubert(4, parallel);
    CHECK(a.total == b.total);
    CHECK(a.passed == b.passed);
    CHECK(a.failures.size() == b.failures.size());
}
