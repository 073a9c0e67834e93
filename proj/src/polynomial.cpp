#include "schub/polynomial.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace schub {

bool GrlexLess::operator()(const Exponents& a, const Exponents& b) const {
    int da = std::accumulate(a.begin(), a.end(), 0);
    int db = std::accumulate(b.begin(), b.end(), 0);
    if (da != db) return da < db;
    return a < b;
}

Polynomial::Polynomial(int num_vars) : num_vars_(num_vars) {
    if (num_vars < 0) throw std::invalid_argument("negative variable count");
}

Polynomial Polynomial::constant(int num_vars, Int value) {
    Polynomial p(num_vars);
    p.add_term(Exponents(num_vars, 0), value);
    return p;
}

Polynomial Polynomial::monomial(int num_vars, Exponents exp, Int coeff) {
    Polynomial p(num_vars);
    p.add_term(exp, coeff);
    return p;
}

Polynomial Polynomial::variable(int num_vars, int i) {
    if (i < 1 || i > num_vars) throw std::invalid_argument("variable index out of range");
    Exponents e(num_vars, 0);
    e[i - 1] = 1;
    return monomial(num_vars, std::move(e), 1);
}

void Polynomial::check_exponents(const Exponents& exp) const {
    if (static_cast<int>(exp.size()) != num_vars_)
        throw std::invalid_argument("exponent vector length does not match variable count");
    for (int e : exp)
        if (e < 0) throw std::invalid_argument("negative exponent");
}

Int Polynomial::coeff(const Exponents& exp) const {
    auto it = terms_.find(exp);
    return it == terms_.end() ? Int(0) : it->second;
}

void Polynomial::add_term(const Exponents& exp, const Int& c) {
    check_exponents(exp);
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(exp, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
    if (other.num_vars_ != num_vars_)
        throw std::invalid_argument("variable count mismatch");
    for (const auto& [exp, c] : other.terms_) add_term(exp, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
    if (other.num_vars_ != num_vars_)
        throw std::invalid_argument("variable count mismatch");
    for (const auto& [exp, c] : other.terms_) add_term(exp, -c);
    return *this;
}

Polynomial Polynomial::operator+(const Polynomial& other) const {
    Polynomial r = *this;
    r += other;
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& other) const {
    Polynomial r = *this;
    r -= other;
    return r;
}

Polynomial Polynomial::operator*(const Polynomial& other) const {
    if (other.num_vars_ != num_vars_)
        throw std::invalid_argument("variable count mismatch");
    Polynomial r(num_vars_);
    for (const auto& [ea, ca] : terms_) {
        for (const auto& [eb, cb] : other.terms_) {
            Exponents e(num_vars_);
            for (int k = 0; k < num_vars_; ++k) e[k] = ea[k] + eb[k];
            r.add_term(e, ca * cb);
        }
    }
    return r;
}

Polynomial Polynomial::operator-() const {
    Polynomial r(num_vars_);
    for (const auto& [exp, c] : terms_) r.terms_.emplace(exp, -c);
    return r;
}

bool Polynomial::operator==(const Polynomial& other) const {
    return num_vars_ == other.num_vars_ && terms_ == other.terms_;
}

Polynomial Polynomial::swap_variables(int i) const {
    if (i < 1 || i + 1 > num_vars_)
        throw std::invalid_argument("transposition index out of range");
    Polynomial r(num_vars_);
    for (const auto& [exp, c] : terms_) {
        Exponents e = exp;
        std::swap(e[i - 1], e[i]);
        r.terms_.emplace(std::move(e), c);
    }
    return r;
}

Polynomial Polynomial::times_variable(int i) const {
    if (i < 1 || i > num_vars_)
        throw std::invalid_argument("variable index out of range");
    Polynomial r(num_vars_);
    for (const auto& [exp, c] : terms_) {
        Exponents e = exp;
        ++e[i - 1];
        r.terms_.emplace(std::move(e), c);
    }
    return r;
}

int Polynomial::total_degree() const {
    int d = 0;
    for (const auto& [exp, c] : terms_)
        d = std::max(d, std::accumulate(exp.begin(), exp.end(), 0));
    return d;
}

bool Polynomial::all_coefficients_positive() const {
    for (const auto& [exp, c] : terms_)
        if (c <= 0) return false;
    return true;
}

std::set<WeightVector> Polynomial::support() const {
    std::set<WeightVector> s;
    for (const auto& [exp, c] : terms_) s.insert(exp);
    return s;
}

std::string Polynomial::to_pretty_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [exp, c] : terms_) {
        Int a = c > 0 ? Int(c) : Int(-c);
        if (first) {
            if (c < 0) out << "-";
            first = false;
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        std::string factors;
        for (int k = 0; k < num_vars_; ++k) {
            if (exp[k] == 0) continue;
            if (!factors.empty()) factors += "*";
            factors += "x" + std::to_string(k + 1);
            if (exp[k] > 1) factors += "^" + std::to_string(exp[k]);
        }
        if (factors.empty()) {
            out << a.get_str();
        } else if (a == 1) {
            out << factors;
        } else {
            out << a.get_str() << "*" << factors;
        }
    }
    return out.str();
}

}  // namespace schub
