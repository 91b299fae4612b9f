#pragma once

#include <optional>
#include <vector>

#include "qca/qtorus.hpp"

namespace qca {

// Positive rational weights on the lattice; deg(n) = sum w_i n_i.
struct Grading {
    std::vector<Rational> w;
    Rational deg(const LVec& n) const;
    static Grading standard(size_t rank);
};

struct ExpansionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Truncated expansion of a skew-field element along a grading. Every stored
// term has degree <= exact_to and all terms of degree <= exact_to are known;
// an empty exact_to means the series is a finite, complete sum.
class Series {
public:
    Series() = default;
    Series(Algebra alg, Grading g) : alg_(std::move(alg)), g_(std::move(g)) {}
    static Series from_element(const QTorusElement& e, Grading g, std::optional<Rational> cap = std::nullopt);
    static Series one(Algebra alg, Grading g);

    const Algebra& algebra() const { return alg_; }
    const Grading& grading() const { return g_; }
    const QTorusElement::Terms& terms() const { return terms_; }
    const std::optional<Rational>& exact_to() const { return exact_to_; }
    bool known_to(const Rational& k) const { return !exact_to_ || *exact_to_ >= k; }

    // lowest degree of a stored term; nullopt if no terms
    std::optional<Rational> valuation() const;
    // valuation, or exact_to when every known term vanishes
    std::optional<Rational> valuation_bound() const;
    QScalar coeff(const LVec& n) const;

    Series truncated(const Rational& cap) const;
    QTorusElement to_element() const;

    void add_term(const LVec& n, const QScalar& c);
    void set_exact_to(std::optional<Rational> e);

    friend Series operator+(const Series& a, const Series& b);
    friend Series operator-(const Series& a, const Series& b);
    Series operator-() const;
    Series scaled(const QScalar& c) const;

    // true when every term of degree <= k vanishes and the series is known to k
    bool zero_to(const Rational& k) const;

private:
    Algebra alg_;
    Grading g_;
    QTorusElement::Terms terms_;
    std::optional<Rational> exact_to_;
};

Series series_mul(const Series& a, const Series& b, std::optional<Rational> cap = std::nullopt);
Series series_inverse(const Series& a, const Rational& cap);
// exp(s) for s with positive valuation
Series series_exp(const Series& s, const Rational& cap);

// Psi_q(x) = prod_{l>=1} (1 + q^{2l-1} x)^{-1} with x = X^{dir}, where q = q^{qk}
Series dilog_series(Algebra alg, const LVec& dir, const Rational& qk, int order, const Grading& g);
// the same series computed as exp(-Li_2(-x; q))
Series dilog_series_exp(Algebra alg, const LVec& dir, const Rational& qk, int order, const Grading& g);

}  // namespace qca
