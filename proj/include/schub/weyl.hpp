#ifndef SCHUB_WEYL_HPP
#define SCHUB_WEYL_HPP

#include <cstdint>
#include <set>
#include <vector>

#include "schub/diagram.hpp"
#include "schub/polynomial.hpp"
#include "schub/types.hpp"

namespace schub {

inline constexpr std::uint64_t kDefaultProductCap = 1'000'000;
inline constexpr std::uint64_t kDefaultMatrixCap = 25'000'000;

// Index of y_{ij}, i <= j, among the n(n+1)/2 upper-triangular
// indeterminates in row-major order (1-based i, j; 1-based variable
// index for Polynomial).
int y_variable_index(int n, int i, int j);

// Number of upper-triangular positions.
inline int y_variable_count(int n) { return n * (n + 1) / 2; }

// The product of minors prod_j det(Y_{D_j}^{C_j}) attached to a
// diagram C <= D, expanded over the upper-triangular indeterminates:
// the submatrix for column j takes rows C_j and columns D_j of the
// matrix with y_{ij} above the diagonal and zeros below.
struct DetProduct {
    Diagram shape;          // C
    Polynomial expansion;   // in y_variable_count(n) variables
};

// Rejects C with columns not dominated by (or not matching the sizes
// of) the columns of D.
DetProduct det_product(const Diagram& d, const Diagram& c);

// xi^C: entry i counts the columns of C containing row i.
WeightVector xi_weight(const Diagram& c);

// { xi^C : C <= D }, enumerated by choosing a basis of the column
// matroid SM_n(D_j) for every j.  This is the support of the dual
// character.
std::set<WeightVector> chi_support(const Diagram& d,
                                   std::uint64_t cap = kDefaultProductCap);

// Dual character of the flagged Weyl module of D, with multiplicities:
// the coefficient of x^xi is the rank of the span of the determinant
// products of weight xi, computed exactly over the rationals.
Polynomial chi_character(const Diagram& d,
                         std::uint64_t product_cap = kDefaultProductCap,
                         std::uint64_t matrix_cap = kDefaultMatrixCap);

}  // namespace schub

#endif
