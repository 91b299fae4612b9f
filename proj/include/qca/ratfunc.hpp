#pragma once

#include <string>
#include <vector>

#include "qca/scalars.hpp"

namespace qca {

// Commutative rational function in cluster variables X_1..X_n with
// coefficients in Z(q, t). Variable layout: 0 = q, 1..n = X_i, n+j = t_j.
class CommutativeRational {
public:
    CommutativeRational() = default;
    CommutativeRational(size_t nx, const QScalar& c);
    static CommutativeRational variable(size_t nx, size_t i, int64_t power = 1);  // i is 0-based
    static CommutativeRational monomial(size_t nx, const std::vector<int64_t>& n, const QScalar& c = QScalar(1));

    size_t nx() const { return nx_; }
    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_laurent() const { return den_.is_constant(); }
    // denominator is a monomial in the X_i up to a coefficient factor
    bool denominator_is_monomial() const;

    CommutativeRational operator-() const;
    CommutativeRational& operator+=(const CommutativeRational& o);
    CommutativeRational& operator-=(const CommutativeRational& o);
    CommutativeRational& operator*=(const CommutativeRational& o);
    CommutativeRational& operator/=(const CommutativeRational& o);
    friend CommutativeRational operator+(CommutativeRational a, const CommutativeRational& b) { return a += b; }
    friend CommutativeRational operator-(CommutativeRational a, const CommutativeRational& b) { return a -= b; }
    friend CommutativeRational operator*(CommutativeRational a, const CommutativeRational& b) { return a *= b; }
    friend CommutativeRational operator/(CommutativeRational a, const CommutativeRational& b) { return a /= b; }
    friend bool operator==(const CommutativeRational& a, const CommutativeRational& b);
    friend bool operator!=(const CommutativeRational& a, const CommutativeRational& b) { return !(a == b); }

    CommutativeRational inverse() const;
    CommutativeRational pow(int64_t n) const;
    // partial derivative in X_i (0-based)
    CommutativeRational derivative(size_t i) const;
    // t_j -> 1 for all j
    CommutativeRational t_to_one() const;
    // q -> 1
    CommutativeRational at_q1() const;

    std::string str(const std::vector<std::string>& labels = {}) const;

private:
    void normalize();
    size_t nx_ = 0;
    Poly num_;
    Poly den_{1};
};

// the scalar embedded with the variable layout above
Poly embed_scalar_poly(const Poly& p, size_t nx);

}  // namespace qca
