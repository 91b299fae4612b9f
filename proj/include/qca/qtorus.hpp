#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "qca/scalars.hpp"

namespace qca {

using LVec = std::vector<int64_t>;
using RMat = std::vector<std::vector<Rational>>;

LVec lv_add(const LVec& a, const LVec& b);
LVec lv_sub(const LVec& a, const LVec& b);
LVec lv_neg(const LVec& a);
LVec lv_scale(const LVec& a, int64_t k);
LVec lv_unit(size_t rank, size_t i);
bool lv_is_zero(const LVec& a);
std::string lv_str(const LVec& a);

// Lattice with a skew form omega; X^a X^b = q^{omega(a,b)} X^{a+b}.
struct SkewLattice {
    size_t rank = 0;
    RMat skew;
    std::vector<std::string> labels;
    std::string qname = "q";

    SkewLattice() = default;
    SkewLattice(RMat form, std::vector<std::string> names = {}, std::string q = "q");

    Rational omega(const LVec& a, const LVec& b) const;
    bool is_central(const LVec& n) const;
    bool commutative() const;
    // the scalar c with X^{n} = c * X_1^{n_1} ... X_r^{n_r}
    Rational ordering_exponent(const LVec& n) const;
};

using Algebra = std::shared_ptr<const SkewLattice>;
Algebra make_algebra(RMat form, std::vector<std::string> names = {}, std::string q = "q");
// same lattice with the zero form
Algebra commutative_shadow(const Algebra& a);

class QTorusElement {
public:
    using Terms = std::map<LVec, QScalar>;

    QTorusElement() = default;
    explicit QTorusElement(Algebra alg) : alg_(std::move(alg)) {}
    QTorusElement(Algebra alg, const QScalar& c);
    static QTorusElement monomial(Algebra alg, const LVec& n, const QScalar& c = QScalar(1));
    static QTorusElement generator(Algebra alg, size_t i, int64_t power = 1);

    const Algebra& algebra() const { return alg_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_monomial() const { return terms_.size() == 1; }
    bool is_scalar() const;
    QScalar coeff(const LVec& n) const;

    void add_term(const LVec& n, const QScalar& c);

    QTorusElement operator-() const;
    QTorusElement& operator+=(const QTorusElement& o);
    QTorusElement& operator-=(const QTorusElement& o);
    friend QTorusElement operator+(QTorusElement a, const QTorusElement& b) { return a += b; }
    friend QTorusElement operator-(QTorusElement a, const QTorusElement& b) { return a -= b; }
    friend QTorusElement operator*(const QTorusElement& a, const QTorusElement& b);
    friend QTorusElement operator*(const QScalar& c, const QTorusElement& a);
    friend bool operator==(const QTorusElement& a, const QTorusElement& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const QTorusElement& a, const QTorusElement& b) { return !(a == b); }

    QTorusElement map_coeffs(const std::function<QScalar(const QScalar&)>& f) const;
    std::string str() const;

private:
    Algebra alg_;
    Terms terms_;
};

QTorusElement qt_mul(const QTorusElement& a, const QTorusElement& b);
QTorusElement qt_star(const QTorusElement& a);
// render c * X^n as generator powers with the ordering scalar folded in
std::string render_term(const SkewLattice& alg, const LVec& n, const QScalar& c);

}  // namespace qca
