#ifndef SCHUB_LINALG_HPP
#define SCHUB_LINALG_HPP

#include <vector>

#include "schub/types.hpp"

namespace schub {

// Quotient a/b for exact divisions only; throws std::logic_error on a
// nonzero remainder.
Int divide_exact(const Int& a, const Int& b);

// Rank over the rationals of an integer matrix, by fraction-free
// (Bareiss) elimination with full pivoting.  The matrix is consumed.
int bareiss_rank(std::vector<std::vector<Int>> a);

}  // namespace schub

#endif
