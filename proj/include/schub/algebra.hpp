#ifndef SCHUB_ALGEBRA_HPP
#define SCHUB_ALGEBRA_HPP

#include "schub/composition.hpp"
#include "schub/permutation.hpp"
#include "schub/polynomial.hpp"

namespace schub {

// Which ascent/descent position to take at each recursion step.  Both
// policies must produce the same polynomial; the pair exists so that
// well-definedness is testable.
enum class ChoicePolicy { SmallestIndex, LargestIndex };

// (f - s_i f) / (x_i - x_{i+1}).  The numerator is antisymmetric in
// x_i, x_{i+1}, so the division is exact; the quotient is multiplied
// back and checked against the numerator, and a mismatch throws
// std::logic_error.
Polynomial divided_difference(const Polynomial& f, int i);

// The Demazure operator f -> divided_difference(x_i * f, i).
Polynomial demazure(const Polynomial& f, int i);

// Schubert polynomial of w in S_n, in n variables.  Computed by the
// divided-difference chain descending from the longest permutation,
// taking the ascent position given by the policy at each step.
Polynomial schubert_polynomial(const Permutation& w,
                               ChoicePolicy policy = ChoicePolicy::SmallestIndex);

// Key polynomial of a composition, in ambient_size() variables
// (1 with zero variables for the zero composition).  Weakly decreasing
// compositions give the monomial x^alpha; otherwise recurse through
// the Demazure operator on the ascent given by the policy.
Polynomial key_polynomial(const Composition& alpha,
                          ChoicePolicy policy = ChoicePolicy::SmallestIndex);

}  // namespace schub

#endif
