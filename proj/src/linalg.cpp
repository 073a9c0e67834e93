#include "schub/linalg.hpp"

#include <stdexcept>
#include <utility>

namespace schub {

Int divide_exact(const Int& a, const Int& b) {
    Int q, r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    if (r != 0) throw std::logic_error("inexact division in fraction-free elimination");
    return q;
}

int bareiss_rank(std::vector<std::vector<Int>> a) {
    std::size_t rows = a.size();
    std::size_t cols = rows == 0 ? 0 : a[0].size();
    for (const auto& row : a)
        if (row.size() != cols) throw std::invalid_argument("ragged matrix");

    std::size_t rank = 0;
    Int prev = 1;
    while (rank < rows && rank < cols) {
        // Full pivot search over the untouched lower-right block.
        std::size_t pr = rank, pc = rank;
        bool found = false;
        for (std::size_t r = rank; r < rows && !found; ++r)
            for (std::size_t c = rank; c < cols && !found; ++c)
                if (a[r][c] != 0) {
                    pr = r;
                    pc = c;
                    found = true;
                }
        if (!found) break;
        if (pr != rank) std::swap(a[pr], a[rank]);
        if (pc != rank)
            for (std::size_t r = 0; r < rows; ++r) std::swap(a[r][pc], a[r][rank]);

        const Int& pivot = a[rank][rank];
        for (std::size_t r = rank + 1; r < rows; ++r)
            for (std::size_t c = rank + 1; c < cols; ++c)
                a[r][c] = divide_exact(pivot * a[r][c] - a[r][rank] * a[rank][c], prev);
        prev = pivot;
        ++rank;
    }
    return static_cast<int>(rank);
}

}  // namespace schub
