#ifndef SCHUB_POLYNOMIAL_HPP
#define SCHUB_POLYNOMIAL_HPP

#include <map>
#include <set>
#include <string>
#include <vector>

#include "schub/types.hpp"

namespace schub {

// Exponent vector of a monomial x_1^{e_1} ... x_n^{e_n}.  Trailing zero
// exponents are kept so every vector in a polynomial has length n.
using Exponents = std::vector<int>;

// Graded lexicographic order: smaller total degree first, ties broken
// lexicographically.  This is the canonical term order used for
// serialization, so equal polynomials always print identically.
struct GrlexLess {
    bool operator()(const Exponents& a, const Exponents& b) const;
};

// Sparse multivariate polynomial over exact integers.  Invariants: no
// stored coefficient is zero, and every exponent vector has length
// exactly num_vars().  num_vars() == 0 is allowed (constants only).
class Polynomial {
  public:
    using TermMap = std::map<Exponents, Int, GrlexLess>;

    explicit Polynomial(int num_vars = 0);

    static Polynomial constant(int num_vars, Int value);
    static Polynomial monomial(int num_vars, Exponents exp, Int coeff = 1);
    // x_i in n variables, 1-based.
    static Polynomial variable(int num_vars, int i);

    int num_vars() const { return num_vars_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    // Coefficient of the given exponent vector (zero if absent).
    Int coeff(const Exponents& exp) const;

    // Adds c * x^exp, merging with an existing term and dropping the
    // term if the sum vanishes.
    void add_term(const Exponents& exp, const Int& c);

    Polynomial& operator+=(const Polynomial& other);
    Polynomial& operator-=(const Polynomial& other);
    Polynomial operator+(const Polynomial& other) const;
    Polynomial operator-(const Polynomial& other) const;
    Polynomial operator*(const Polynomial& other) const;
    Polynomial operator-() const;

    bool operator==(const Polynomial& other) const;
    bool operator!=(const Polynomial& other) const { return !(*this == other); }

    // Action of the transposition s_i = (i, i+1) on the variables,
    // 1-based: x_i <-> x_{i+1}.
    Polynomial swap_variables(int i) const;

    // Multiplication by the single variable x_i.
    Polynomial times_variable(int i) const;

    int total_degree() const;

    // All coefficients strictly positive (vacuously true for zero).
    bool all_coefficients_positive() const;

    // Exponent vectors of the nonzero terms.
    std::set<WeightVector> support() const;

    // Human notation, e.g. "x1^2*x2 + 3*x2^3"; "0" for the zero
    // polynomial.  Terms in graded-lex order.
    std::string to_pretty_string() const;

  private:
    int num_vars_;
    TermMap terms_;

    void check_exponents(const Exponents& exp) const;
};

inline std::set<WeightVector> support(const Polynomial& f) { return f.support(); }

}  // namespace schub

#endif
