#ifndef SCHUB_TYPES_HPP
#define SCHUB_TYPES_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace schub {

// Exact integer type used for all coefficients and rank arithmetic.
using Int = mpz_class;

// Subsets of the ground set [n] as bitmasks, element k <-> bit k-1.
// All-subsets sweeps are 2^n, so ground sets are capped.
using Subset = std::uint32_t;

inline constexpr int kMaxGroundSet = 20;

// Nonnegative integer vector of length n: exponent vectors, lattice
// points, basis indicator sums.
using WeightVector = std::vector<int>;

// An instance is beyond desk scale (basis count, lattice point count,
// product enumeration, ...). Maps to CLI exit code 3.
struct CapExceeded : std::runtime_error {
    explicit CapExceeded(const std::string& what) : std::runtime_error(what) {}
};

// Unparseable or inconsistent user input. Maps to CLI exit code 2.
struct MalformedInput : std::runtime_error {
    explicit MalformedInput(const std::string& what) : std::runtime_error(what) {}
};

inline int popcount(Subset s) { return __builtin_popcount(s); }

inline Subset full_set(int n) {
    return n == 0 ? 0u : ((1u << n) - 1u);
}

// {k : bit k-1 set}, ascending.
std::vector<int> subset_elements(Subset s);

// Inverse of subset_elements; validates 1 <= k <= n.
Subset subset_from_elements(const std::vector<int>& elems, int n);

}  // namespace schub

#endif
