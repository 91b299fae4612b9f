#pragma once

#include <boost/container/small_vector.hpp>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qca/rational.hpp"

namespace qca {

// Exponent vector of a Laurent monomial. Trailing zeros are trimmed so that
// equal monomials have equal keys.
using Exp = boost::container::small_vector<Rational, 4>;

Exp exp_add(const Exp& a, const Exp& b);
Exp exp_neg(const Exp& a);
Exp exp_unit(size_t var, Rational e = Rational(1));
const Rational& exp_at(const Exp& e, size_t i);
void exp_trim(Exp& e);
// lexicographic order with implicit zero padding (used for display)
bool exp_lex_less(const Exp& a, const Exp& b);

// Sparse multivariate Laurent polynomial with integer coefficients and
// rational exponents.
class Poly {
public:
    using Terms = std::map<Exp, int64_t>;

    Poly() = default;
    Poly(int64_t c);  // NOLINT constant
    static Poly monomial(const Exp& e, int64_t c = 1);
    static Poly var(size_t i, Rational e = Rational(1));

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;
    bool is_constant() const;
    bool is_monomial() const { return terms_.size() == 1; }
    int64_t constant_term() const;
    size_t nvars() const;  // 1 + highest variable index used
    bool uses_var(size_t i) const;

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const Poly& o);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    Poly scaled(int64_t c) const;
    Poly shifted(const Exp& e) const;  // multiply by x^e
    Poly pow(unsigned n) const;

    // substitute x_i = 1
    Poly at_one(size_t i) const;
    // x_i^a -> x_i^{a*f}
    Poly scale_var(size_t i, const Rational& f) const;
    // renumber variables: new index of old var i is map[i]
    Poly remap(const std::vector<size_t>& map) const;
    // d/dx_i (exponents of x_i must be integral)
    Poly derivative(size_t i) const;
    Exp min_exponents() const;
    int64_t content() const;
    // coefficient of the leading term in display order
    int64_t leading_coeff() const;

    void add_term(const Exp& e, int64_t c);

    std::string str(const std::function<std::string(size_t)>& name) const;

private:
    Terms terms_;
};

// Greatest common divisor up to units (Laurent monomials and sign); the
// result has positive leading coefficient and no monomial factor.
Poly gcd(const Poly& a, const Poly& b);
// Exact quotient a/b if b divides a in the Laurent ring.
std::optional<Poly> divide_exact(const Poly& a, const Poly& b);
// Multiplicity of the factor (x_i - 1) counted in x_i^{1/L} for the
// common denominator L (equivalently of x_i - 1).
int root_one_order(const Poly& p, size_t i);
// bring num/den to lowest terms: den has no monomial factor and a positive
// leading coefficient, den = 1 for Laurent polynomials; den must be nonzero
void normalize_fraction(Poly& num, Poly& den);

}  // namespace qca
