#ifndef SCHUB_VERIFY_HPP
#define SCHUB_VERIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "schub/diagram.hpp"
#include "schub/polynomial.hpp"
#include "schub/polytope.hpp"
#include "schub/weyl.hpp"

namespace schub {

inline constexpr std::uint64_t kDefaultSweepSeed = 20180417;

// Outcome of checking that f is the positively weighted integer point
// transform of P.  All three booleans passing is the SNP statement
// with Newton polytope P.
struct SnpReport {
    bool support_in_polytope = false;
    bool polytope_in_support = false;
    bool coefficients_positive = false;
    std::vector<WeightVector> missing_from_polytope;  // support points outside P
    std::vector<WeightVector> missing_from_support;   // lattice points without a term
    std::vector<WeightVector> nonpositive_terms;

    bool ok() const {
        return support_in_polytope && polytope_in_support && coefficients_positive;
    }
};

SnpReport verify_snp(const Polynomial& f, const GeneralizedPermutahedron& p,
                     std::uint64_t point_cap = kDefaultPointCap);

struct SweepFailure {
    std::string item;
    std::string check;
    std::string detail;
};

struct SweepReport {
    std::string sweep;
    std::uint64_t total = 0;
    std::uint64_t passed = 0;
    std::vector<SweepFailure> failures;
    std::uint64_t seed = 0;
    std::int64_t elapsed_ms = 0;

    bool all_passed() const { return failures.empty() && passed == total; }
};

struct SweepOptions {
    bool fail_fast = false;  // sequential; stop at the first failing item
    int jobs = 1;
    std::uint64_t seed = kDefaultSweepSeed;
    std::uint64_t basis_cap = kDefaultBasisCap;
    std::uint64_t point_cap = kDefaultPointCap;
    std::uint64_t product_cap = kDefaultProductCap;
};

// For every w in S_n: the support of the Schubert polynomial, the
// lattice points of the Schubitope of the Rothe diagram, and the dual
// character support all coincide, and the coefficients are positive.
SweepReport sweep_schubert(int n, const SweepOptions& opts = {});

// The same triple equality for every composition with the given
// bounds, through key polynomials and skyline diagrams.
SweepReport sweep_key(int max_part, int max_len, const SweepOptions& opts = {});

// theta_column equals rank_bruteforce for every diagram in the corpus,
// every column, and every subset of [n].
SweepReport sweep_theta_rank(const std::vector<Diagram>& corpus,
                             const SweepOptions& opts = {});

// 100 diagrams for each n in {3,...,6}, each cell included
// independently with probability 1/2, from a seeded generator.
std::vector<Diagram> random_diagram_corpus(std::uint64_t seed);

// Corpus for the default theta sweep: all one-column diagrams with
// n <= 5, Rothe diagrams of S_5, skyline diagrams with parts <= 3 and
// length <= 3, and the seeded random corpus.
std::vector<Diagram> theta_default_corpus(std::uint64_t seed);

}  // namespace schub

#endif
