#ifndef SCHUB_POLYTOPE_HPP
#define SCHUB_POLYTOPE_HPP

#include <cstdint>
#include <set>
#include <vector>

#include "schub/diagram.hpp"
#include "schub/matroid.hpp"
#include "schub/types.hpp"

namespace schub {

inline constexpr std::uint64_t kDefaultPointCap = 10'000'000;

// Generalized permutahedron in upper-bound form:
//
//   { t in R^n, t >= 0 :  sum_{i in I} t_i <= z_I  for I != [n],
//                         sum_{i in [n]} t_i  = z_{[n]} }
//
// with one integer z_I per nonempty I, indexed by bitmask.  Rank and
// theta constructors produce monotone submodular z; that is checked at
// construction time.
class GeneralizedPermutahedron {
  public:
    // z[mask] for mask in [1, 2^n - 1]; z[0] is ignored and forced to 0.
    GeneralizedPermutahedron(int n, std::vector<long long> z);

    int n() const { return n_; }
    long long z(Subset i_set) const { return z_[i_set]; }
    long long total() const { return z_[full_set(n_)]; }

    bool is_monotone() const;
    bool is_submodular() const;

    bool operator==(const GeneralizedPermutahedron& other) const {
        return n_ == other.n_ && z_ == other.z_;
    }

  private:
    int n_;
    std::vector<long long> z_;
};

struct LatticePointSet {
    int n = 0;
    std::set<WeightVector> points;

    bool operator==(const LatticePointSet& other) const {
        return n == other.n && points == other.points;
    }
};

// z_I = rank of I, computed through theta_rank and spot-checked against
// rank_bruteforce at a few subsets.
GeneralizedPermutahedron matroid_polytope(const SchubertMatroid& m);

// Indicator vectors of the bases.
LatticePointSet vertices_from_bases(const SchubertMatroid& m,
                                    std::uint64_t cap = kDefaultBasisCap);

// Pointwise z-addition.
GeneralizedPermutahedron minkowski_sum(const GeneralizedPermutahedron& p,
                                       const GeneralizedPermutahedron& q);

// z_I = theta_D(I) for proper I, z_{[n]} = box count.  theta of the
// full set always equals the box count; that is asserted here.
GeneralizedPermutahedron schubitope(const Diagram& d);

// All nonnegative integer points t with sum = z_{[n]} and every subset
// bound satisfied, by depth-first search with prefix pruning.
LatticePointSet lattice_points(const GeneralizedPermutahedron& p,
                               std::uint64_t cap = kDefaultPointCap);

// { sum_j indicator(B_j) : B_j a basis of the j-th matroid }, by direct
// product enumeration with deduplication.  The cap bounds the product
// of the basis counts.
LatticePointSet minkowski_lattice_points(const std::vector<SchubertMatroid>& ms,
                                         std::uint64_t cap = kDefaultPointCap);

}  // namespace schub

#endif
