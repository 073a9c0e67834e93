#include "schub/weyl.hpp"

#include <map>
#include <stdexcept>

#include "schub/linalg.hpp"
#include "schub/matroid.hpp"

namespace schub {

int y_variable_index(int n, int i, int j) {
    if (i < 1 || j < i || j > n) throw std::invalid_argument("need 1 <= i <= j <= n");
    // Rows 1..i-1 contribute n-r+1 entries each.
    int before = (i - 1) * n - (i - 1) * (i - 2) / 2;
    return before + (j - i) + 1;
}

namespace {

// det of the k x k submatrix with rows `rows`, columns `cols` of the
// upper-triangular indeterminate matrix, by DFS over column
// assignments with zero-entry skipping.
Polynomial minor_det(int n, const std::vector<int>& rows, const std::vector<int>& cols) {
    int vars = y_variable_count(n);
    std::size_t k = rows.size();
    Polynomial result(vars);
    std::vector<bool> used(k, false);
    std::vector<int> choice(k, 0);

    auto expand = [&](auto&& self, std::size_t col, int sign) -> void {
        if (col == k) {
            Exponents e(vars, 0);
            for (std::size_t q = 0; q < k; ++q)
                ++e[y_variable_index(n, rows[choice[q]], cols[q]) - 1];
            result.add_term(e, sign);
            return;
        }
        for (std::size_t p = 0; p < k; ++p) {
            if (used[p] || rows[p] > cols[col]) continue;  // below diagonal: zero
            // Crossing the already-placed rows above p flips the sign once each.
            int flips = 0;
            for (std::size_t q = p + 1; q < k; ++q)
                if (used[q]) ++flips;
            used[p] = true;
            choice[col] = static_cast<int>(p);
            self(self, col + 1, (flips % 2 == 0) ? sign : -sign);
            used[p] = false;
        }
    };
    expand(expand, 0, 1);
    return result;
}

}  // namespace

DetProduct det_product(const Diagram& d, const Diagram& c) {
    if (c.n() != d.n()) throw std::invalid_argument("grid size mismatch");
    for (int j = 1; j <= d.n(); ++j) {
        if (popcount(c.column(j)) != popcount(d.column(j)))
            throw MalformedInput("column sizes of C must match D");
        if (!set_dominance_leq(c.column(j), d.column(j)))
            throw MalformedInput("C must be dominated by D columnwise");
    }
    int vars = y_variable_count(d.n());
    Polynomial expansion = Polynomial::constant(vars, 1);
    for (int j = 1; j <= d.n(); ++j) {
        if (d.column(j) == 0) continue;  // empty minor contributes 1
        expansion = expansion * minor_det(d.n(), subset_elements(c.column(j)),
                                          subset_elements(d.column(j)));
    }
    return DetProduct{c, std::move(expansion)};
}

WeightVector xi_weight(const Diagram& c) {
    WeightVector xi(c.n(), 0);
    for (int j = 1; j <= c.n(); ++j)
        for (int i : subset_elements(c.column(j))) ++xi[i - 1];
    return xi;
}

namespace {

// Visits every diagram C <= D exactly once, one column-matroid basis
// per column.  The visited Diagram is reused between calls.
template <typename Visitor>
void for_each_dominated(const Diagram& d, std::uint64_t cap, Visitor&& visit) {
    int n = d.n();
    std::vector<std::vector<Subset>> column_bases;
    column_bases.reserve(n);
    std::uint64_t product = 1;
    for (int j = 1; j <= n; ++j) {
        column_bases.push_back(SchubertMatroid::from_column(d, j).bases());
        std::uint64_t count = column_bases.back().size();
        if (count != 0 && product > cap / count)
            throw CapExceeded("dominated diagram count exceeds cap " + std::to_string(cap));
        product *= count;
    }
    std::vector<Subset> columns(n, 0);
    auto walk = [&](auto&& self, int j) -> void {
        if (j == n) {
            visit(Diagram(n, columns));
            return;
        }
        for (Subset b : column_bases[j]) {
            columns[j] = b;
            self(self, j + 1);
        }
    };
    walk(walk, 0);
}

}  // namespace

std::set<WeightVector> chi_support(const Diagram& d, std::uint64_t cap) {
    std::set<WeightVector> out;
    for_each_dominated(d, cap, [&](const Diagram& c) { out.insert(xi_weight(c)); });
    return out;
}

Polynomial chi_character(const Diagram& d, std::uint64_t product_cap,
                         std::uint64_t matrix_cap) {
    int n = d.n();

    // Distinct eigenvalues make weight spaces independent, so the
    // character splits as one exact rank computation per weight.
    std::map<WeightVector, std::vector<Polynomial>> by_weight;
    for_each_dominated(d, product_cap, [&](const Diagram& c) {
        DetProduct dp = det_product(d, c);
        by_weight[xi_weight(dp.shape)].push_back(std::move(dp.expansion));
    });

    Polynomial chi(n);
    for (const auto& [weight, expansions] : by_weight) {
        std::map<Exponents, std::size_t, GrlexLess> monomial_column;
        for (const Polynomial& f : expansions)
            for (const auto& [exp, coeff] : f.terms())
                monomial_column.emplace(exp, monomial_column.size());

        std::uint64_t cells = static_cast<std::uint64_t>(expansions.size()) *
                              monomial_column.size();
        if (cells > matrix_cap)
            throw CapExceeded("weight space matrix exceeds cap " + std::to_string(matrix_cap));

        std::vector<std::vector<Int>> matrix(
            expansions.size(), std::vector<Int>(monomial_column.size(), 0));
        for (std::size_t r = 0; r < expansions.size(); ++r)
            for (const auto& [exp, coeff] : expansions[r].terms())
                matrix[r][monomial_column.at(exp)] = coeff;

        chi.add_term(weight, bareiss_rank(std::move(matrix)));
    }
    return chi;
}

}  // namespace schub
