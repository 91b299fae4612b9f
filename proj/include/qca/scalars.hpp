#pragma once

#include <stdexcept>
#include <string>

#include "qca/poly.hpp"

namespace qca {

// Variable 0 is q; variable i >= 1 is the coefficient t_i.
constexpr size_t kQVar = 0;

struct PoleError : std::domain_error {
    int order;
    explicit PoleError(int ord)
        : std::domain_error("pole of order " + std::to_string(ord) + " at q=1"), order(ord) {}
};

struct DivisionByZero : std::domain_error {
    DivisionByZero() : std::domain_error("division by zero scalar") {}
};

// Element of the fraction field of Z[q^{±1/D}, t_1, ..., t_r] kept in lowest
// terms: gcd(num, den) = 1, den has no monomial factor and a positive
// leading coefficient. Laurent polynomials have den = 1.
class QScalar {
public:
    QScalar() = default;
    QScalar(int64_t c) : num_(c) {}  // NOLINT
    explicit QScalar(Poly num) : num_(std::move(num)) {}
    QScalar(Poly num, Poly den);

    static QScalar q(Rational e = Rational(1));
    static QScalar t(size_t i, int64_t e = 1);  // i is 1-based
    static QScalar t_monomial(const std::vector<int64_t>& exps);  // exps[j] is the power of t_{j+1}

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_polynomial() const { return den_.is_one(); }
    bool depends_on_q() const { return num_.uses_var(kQVar) || den_.uses_var(kQVar); }

    QScalar operator-() const;
    QScalar& operator+=(const QScalar& o);
    QScalar& operator-=(const QScalar& o);
    QScalar& operator*=(const QScalar& o);
    QScalar& operator/=(const QScalar& o);
    friend QScalar operator+(QScalar a, const QScalar& b) { return a += b; }
    friend QScalar operator-(QScalar a, const QScalar& b) { return a -= b; }
    friend QScalar operator*(QScalar a, const QScalar& b) { return a *= b; }
    friend QScalar operator/(QScalar a, const QScalar& b) { return a /= b; }
    friend bool operator==(const QScalar& a, const QScalar& b);
    friend bool operator!=(const QScalar& a, const QScalar& b) { return !(a == b); }

    QScalar inverse() const;
    QScalar pow(int n) const;
    // multiply by q^e
    QScalar times_q(const Rational& e) const;

    std::string str(const std::string& qname = "q") const;

private:
    void normalize();
    Poly num_;
    Poly den_{1};
};

QScalar bar(const QScalar& a);
// exact value at q = 1; the result does not depend on q
QScalar limit_q1(const QScalar& a);
QScalar divide_exact_qminus1(const QScalar& a);
// q^{a} -> q^{a*f}
QScalar scale_q(const QScalar& a, const Rational& f);
// t_i -> 1 for all i
QScalar t_to_one(const QScalar& a);
// order of vanishing at q=1 (negative for a pole)
int q1_order(const QScalar& a);

}  // namespace qca
