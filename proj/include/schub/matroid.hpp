#ifndef SCHUB_MATROID_HPP
#define SCHUB_MATROID_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "schub/diagram.hpp"
#include "schub/types.hpp"

namespace schub {

inline constexpr std::uint64_t kDefaultBasisCap = 10'000'000;

// Matroid on [n] whose bases are the r-sets {a_1 < ... < a_r} with
// a_k <= s_k for a fixed strictly increasing defining set
// s_1 < ... < s_r.  r = 0 gives the matroid whose single basis is the
// empty set.
class SchubertMatroid {
  public:
    SchubertMatroid(int n, std::vector<int> defining_set);

    // Defining set read off a column of a diagram.
    static SchubertMatroid from_column(const Diagram& d, int j);

    int ground_size() const { return n_; }
    int rank() const { return static_cast<int>(defining_); }
    const std::vector<int>& defining_set() const { return elements_; }
    Subset defining_mask() const { return mask_; }

    bool is_basis(Subset b) const;

    // All bases in ascending bitmask order.  Throws CapExceeded if the
    // count would pass the cap.
    std::vector<Subset> bases(std::uint64_t cap = kDefaultBasisCap) const;

  private:
    int n_;
    std::size_t defining_;  // r
    std::vector<int> elements_;
    Subset mask_;
};

// Exact rank by maximizing |S ∩ B| over all enumerated bases.  This is
// the definitional oracle; theta_rank is the fast route.
int rank_bruteforce(const SchubertMatroid& m, Subset s,
                    std::uint64_t cap = kDefaultBasisCap);

// Reading column j of the grid from top to bottom: '(' for a box-free
// row in I, ')' for a box outside I, '*' for a box in I.
struct ColumnWord {
    std::string symbols;
    std::vector<int> rows;  // grid row of each symbol, increasing
};

ColumnWord column_word(const Diagram& d, int j, Subset i_set);

// Matched "()" pairs of the column word plus its '*' count, matching a
// '(' with the earliest later unmatched ')' in a single stack pass.
int theta_column(const Diagram& d, int j, Subset i_set);

// Sum of theta_column over all n columns.
int theta(const Diagram& d, Subset i_set);

// Rank oracle through the one-column diagram whose column set is the
// defining set; agrees with rank_bruteforce on every input.
int theta_rank(const SchubertMatroid& m, Subset i_set);

}  // namespace schub

#endif
