#include "schub/algebra.hpp"

#include <algorithm>
#include <stdexcept>

namespace schub {

namespace {

// (x_i - x_{i+1}) * h, used to verify exact division.
Polynomial times_difference(const Polynomial& h, int i) {
    Polynomial r(h.num_vars());
    for (const auto& [exp, c] : h.terms()) {
        Exponents e = exp;
        ++e[i - 1];
        r.add_term(e, c);
        --e[i - 1];
        ++e[i];
        r.add_term(e, -c);
    }
    return r;
}

}  // namespace

Polynomial divided_difference(const Polynomial& f, int i) {
    if (i < 1 || i + 1 > f.num_vars())
        throw std::invalid_argument("divided difference index needs num_vars >= i+1");

    Polynomial numerator = f - f.swap_variables(i);

    // numerator is antisymmetric in u = x_i, v = x_{i+1}: its terms pair
    // up as c*u^a*v^b - c*u^b*v^a with a > b, and
    //   (u^a v^b - u^b v^a) / (u - v) = sum_{m=0}^{a-b-1} u^{b+m} v^{a-1-m}.
    Polynomial quotient(f.num_vars());
    for (const auto& [exp, c] : numerator.terms()) {
        int a = exp[i - 1];
        int b = exp[i];
        if (a <= b) continue;  // handled by the paired term
        Exponents e = exp;
        for (int m = 0; m < a - b; ++m) {
            e[i - 1] = b + m;
            e[i] = a - 1 - m;
            quotient.add_term(e, c);
        }
    }

    if (times_difference(quotient, i) != numerator)
        throw std::logic_error("divided difference: exact division left a remainder");
    return quotient;
}

Polynomial demazure(const Polynomial& f, int i) {
    if (i < 1 || i + 1 > f.num_vars())
        throw std::invalid_argument("Demazure operator index needs num_vars >= i+1");
    return divided_difference(f.times_variable(i), i);
}

namespace {

int pick(const std::vector<int>& positions, ChoicePolicy policy) {
    return policy == ChoicePolicy::SmallestIndex ? positions.front() : positions.back();
}

Polynomial staircase(int n) {
    Exponents e(n);
    for (int k = 0; k < n; ++k) e[k] = n - 1 - k;
    return Polynomial::monomial(n, std::move(e), 1);
}

}  // namespace

Polynomial schubert_polynomial(const Permutation& w, ChoicePolicy policy) {
    int n = w.size();
    if (n == 0) throw MalformedInput("empty permutation");
    std::vector<int> asc = w.ascents();
    if (asc.empty()) return staircase(n);  // w is the longest permutation
    int i = pick(asc, policy);
    return divided_difference(schubert_polynomial(w.swap_adjacent(i), policy), i);
}

namespace {

Polynomial key_recursive(std::vector<int>& parts, int n, ChoicePolicy policy) {
    std::vector<int> ascent_positions;
    for (int i = 1; i < n; ++i)
        if (parts[i - 1] < parts[i]) ascent_positions.push_back(i);

    if (ascent_positions.empty()) {
        Exponents e(parts.begin(), parts.end());
        return Polynomial::monomial(n, std::move(e), 1);
    }

    int i = pick(ascent_positions, policy);
    std::swap(parts[i - 1], parts[i]);
    Polynomial inner = key_recursive(parts, n, policy);
    std::swap(parts[i - 1], parts[i]);
    return demazure(inner, i);
}

}  // namespace

Polynomial key_polynomial(const Composition& alpha, ChoicePolicy policy) {
    int n = alpha.ambient_size();
    if (n == 0) return Polynomial::constant(0, 1);
    std::vector<int> parts(alpha.parts().begin(),
                           alpha.parts().begin() + alpha.last_nonzero());
    parts.resize(n, 0);
    return key_recursive(parts, n, policy);
}

}  // namespace schub
