#include "schub/diagram.hpp"

#include <stdexcept>

namespace schub {

Diagram::Diagram(int n, std::vector<Subset> columns) : n_(n), columns_(std::move(columns)) {
    if (n < 0 || n > kMaxGroundSet)
        throw CapExceeded("grid size must be between 0 and " + std::to_string(kMaxGroundSet));
    if (static_cast<int>(columns_.size()) != n)
        throw MalformedInput("diagram needs exactly n columns");
    for (Subset col : columns_)
        if (col & ~full_set(n)) throw MalformedInput("diagram row index out of range");
}

int Diagram::box_count() const {
    int total = 0;
    for (Subset col : columns_) total += popcount(col);
    return total;
}

std::vector<std::pair<int, int>> Diagram::cells() const {
    std::vector<std::pair<int, int>> out;
    for (int i = 1; i <= n_; ++i)
        for (int j = 1; j <= n_; ++j)
            if (contains(i, j)) out.emplace_back(i, j);
    return out;
}

Diagram rothe_diagram(const Permutation& w) {
    int n = w.size();
    Permutation winv = w.inverse();
    std::vector<Subset> columns(n, 0);
    for (int j = 1; j <= n; ++j)
        for (int i = 1; i < winv(j); ++i)
            if (w(i) > j) columns[j - 1] |= (1u << (i - 1));
    return Diagram(n, std::move(columns));
}

Diagram skyline_diagram(const Composition& alpha) {
    int n = alpha.ambient_size();
    std::vector<Subset> columns(n, 0);
    int l = alpha.last_nonzero();
    for (int i = 1; i <= l; ++i)
        for (int j = 1; j <= alpha.parts()[i - 1]; ++j)
            columns[j - 1] |= (1u << (i - 1));
    return Diagram(n, std::move(columns));
}

bool set_dominance_leq(Subset r, Subset s) {
    if (popcount(r) != popcount(s)) return false;
    // Equivalent prefix form: every initial segment [1..m] holds at
    // least as many elements of R as of S.
    int count_r = 0, count_s = 0;
    while (r != 0 || s != 0) {
        count_r += r & 1u;
        count_s += s & 1u;
        if (count_r < count_s) return false;
        r >>= 1;
        s >>= 1;
    }
    return true;
}

bool diagram_dominance_leq(const Diagram& c, const Diagram& d) {
    if (c.n() != d.n()) throw std::invalid_argument("grid size mismatch");
    for (int j = 1; j <= c.n(); ++j)
        if (!set_dominance_leq(c.column(j), d.column(j))) return false;
    return true;
}

}  // namespace schub
