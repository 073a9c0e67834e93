#ifndef SCHUB_DIAGRAM_HPP
#define SCHUB_DIAGRAM_HPP

#include <utility>
#include <vector>

#include "schub/composition.hpp"
#include "schub/permutation.hpp"
#include "schub/types.hpp"

namespace schub {

// A subset of the n x n grid, stored as an ordered list of column
// sets: column j holds the row indices of the boxes in column j.
// Boxes are labeled (i,j) like entries of an n x n matrix.
class Diagram {
  public:
    Diagram() : n_(0) {}
    // columns.size() must equal n; every row index must lie in [n].
    Diagram(int n, std::vector<Subset> columns);

    int n() const { return n_; }
    // 1-based column index.
    Subset column(int j) const { return columns_[j - 1]; }
    const std::vector<Subset>& columns() const { return columns_; }

    int box_count() const;
    bool empty() const { return box_count() == 0; }
    bool contains(int i, int j) const { return (columns_[j - 1] >> (i - 1)) & 1u; }

    // Boxes as (row, column) pairs in row-major order.
    std::vector<std::pair<int, int>> cells() const;

    bool operator==(const Diagram& other) const {
        return n_ == other.n_ && columns_ == other.columns_;
    }

  private:
    int n_;
    std::vector<Subset> columns_;
};

// Rothe diagram D(w) = {(i,j) : w(i) > j, w^{-1}(j) > i}.
Diagram rothe_diagram(const Permutation& w);

// Skyline diagram of a composition: the first alpha_i boxes of row i,
// inside the ambient_size() x ambient_size() grid.  The zero
// composition gives the empty diagram on a 0 x 0 grid.
Diagram skyline_diagram(const Composition& alpha);

// R <= S: same cardinality and the k-th least element of R does not
// exceed the k-th least element of S, for every k.
bool set_dominance_leq(Subset r, Subset s);

// C <= D columnwise; requires equal grid size.
bool diagram_dominance_leq(const Diagram& c, const Diagram& d);

}  // namespace schub

#endif
