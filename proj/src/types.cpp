#include "schub/types.hpp"

namespace schub {

std::vector<int> subset_elements(Subset s) {
    std::vector<int> out;
    for (int k = 1; s != 0; ++k, s >>= 1)
        if (s & 1u) out.push_back(k);
    return out;
}

Subset subset_from_elements(const std::vector<int>& elems, int n) {
    Subset s = 0;
    for (int k : elems) {
        if (k < 1 || k > n)
            throw MalformedInput("set element out of range [1," + std::to_string(n) + "]");
        s |= (1u << (k - 1));
    }
    return s;
}

}  // namespace schub
