#include "schub/matroid.hpp"

#include <algorithm>

namespace schub {

SchubertMatroid::SchubertMatroid(int n, std::vector<int> defining_set)
    : n_(n), defining_(defining_set.size()), elements_(std::move(defining_set)), mask_(0) {
    if (n < 0 || n > kMaxGroundSet)
        throw CapExceeded("ground set size must be between 0 and " + std::to_string(kMaxGroundSet));
    int prev = 0;
    for (int s : elements_) {
        if (s <= prev || s > n)
            throw MalformedInput("defining set must be strictly increasing within [n]");
        mask_ |= (1u << (s - 1));
        prev = s;
    }
}

SchubertMatroid SchubertMatroid::from_column(const Diagram& d, int j) {
    return SchubertMatroid(d.n(), subset_elements(d.column(j)));
}

bool SchubertMatroid::is_basis(Subset b) const {
    return static_cast<std::size_t>(popcount(b)) == defining_ && set_dominance_leq(b, mask_);
}

std::vector<Subset> SchubertMatroid::bases(std::uint64_t cap) const {
    std::vector<Subset> out;
    // DFS over a_1 < a_2 < ... < a_r with a_k <= s_k.
    auto extend = [&](auto&& self, std::size_t k, int least, Subset current) -> void {
        if (k == defining_) {
            if (out.size() >= cap)
                throw CapExceeded("basis count exceeds cap " + std::to_string(cap));
            out.push_back(current);
            return;
        }
        for (int a = least; a <= elements_[k]; ++a)
            self(self, k + 1, a + 1, current | (1u << (a - 1)));
    };
    extend(extend, 0, 1, 0);
    std::sort(out.begin(), out.end());
    return out;
}

int rank_bruteforce(const SchubertMatroid& m, Subset s, std::uint64_t cap) {
    if (s & ~full_set(m.ground_size()))
        throw MalformedInput("subset element out of range");
    int best = 0;
    for (Subset b : m.bases(cap)) best = std::max(best, popcount(s & b));
    return best;
}

ColumnWord column_word(const Diagram& d, int j, Subset i_set) {
    if (j < 1 || j > d.n()) throw std::invalid_argument("column index out of range");
    if (i_set & ~full_set(d.n())) throw MalformedInput("subset element out of range");
    ColumnWord w;
    for (int i = 1; i <= d.n(); ++i) {
        bool box = d.contains(i, j);
        bool in_i = (i_set >> (i - 1)) & 1u;
        char sym;
        if (!box && in_i)
            sym = '(';
        else if (box && !in_i)
            sym = ')';
        else if (box && in_i)
            sym = '*';
        else
            continue;
        w.symbols.push_back(sym);
        w.rows.push_back(i);
    }
    return w;
}

int theta_column(const Diagram& d, int j, Subset i_set) {
    ColumnWord w = column_word(d, j, i_set);
    int open = 0, pairs = 0, stars = 0;
    for (char sym : w.symbols) {
        switch (sym) {
            case '(': ++open; break;
            case ')':
                if (open > 0) {
                    --open;
                    ++pairs;
                }
                break;
            default: ++stars; break;
        }
    }
    return pairs + stars;
}

int theta(const Diagram& d, Subset i_set) {
    int total = 0;
    for (int j = 1; j <= d.n(); ++j) total += theta_column(d, j, i_set);
    return total;
}

int theta_rank(const SchubertMatroid& m, Subset i_set) {
    int n = m.ground_size();
    if (n == 0) return 0;
    std::vector<Subset> columns(n, 0);
    columns[0] = m.defining_mask();
    return theta_column(Diagram(n, std::move(columns)), 1, i_set);
}

}  // namespace schub
