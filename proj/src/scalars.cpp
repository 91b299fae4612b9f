#include "qca/scalars.hpp"

namespace qca {

QScalar::QScalar(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) { normalize(); }

QScalar QScalar::q(Rational e) { return QScalar(Poly::var(kQVar, e)); }

QScalar QScalar::t(size_t i, int64_t e) {
    if (i == 0) throw std::invalid_argument("coefficient index is 1-based");
    return QScalar(Poly::var(i, Rational(e)));
}

QScalar QScalar::t_monomial(const std::vector<int64_t>& exps) {
    Exp e(exps.size() + 1);
    for (size_t j = 0; j < exps.size(); ++j) e[j + 1] = Rational(exps[j]);
    exp_trim(e);
    return QScalar(Poly::monomial(e));
}

void QScalar::normalize() {
    if (den_.is_zero()) throw DivisionByZero();
    normalize_fraction(num_, den_);
}

QScalar QScalar::operator-() const {
    QScalar r = *this;
    r.num_ = -r.num_;
    return r;
}

QScalar& QScalar::operator+=(const QScalar& o) {
    if (o.num_.is_zero()) return *this;
    if (den_ == o.den_) {
        num_ += o.num_;
        if (!den_.is_one()) normalize();
        return *this;
    }
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ = den_ * o.den_;
    normalize();
    return *this;
}

QScalar& QScalar::operator-=(const QScalar& o) { return *this += -o; }

QScalar& QScalar::operator*=(const QScalar& o) {
    if (den_.is_one() && o.den_.is_one()) {
        num_ *= o.num_;
        return *this;
    }
    num_ *= o.num_;
    den_ *= o.den_;
    normalize();
    return *this;
}

QScalar QScalar::inverse() const {
    if (num_.is_zero()) throw DivisionByZero();
    return QScalar(den_, num_);
}

QScalar& QScalar::operator/=(const QScalar& o) { return *this *= o.inverse(); }

bool operator==(const QScalar& a, const QScalar& b) { return a.num_ == b.num_ && a.den_ == b.den_; }

QScalar QScalar::pow(int n) const {
    if (n < 0) return inverse().pow(-n);
    QScalar r(1), b = *this;
    auto k = static_cast<unsigned>(n);
    while (k) {
        if (k & 1u) r *= b;
        k >>= 1u;
        if (k) b *= b;
    }
    return r;
}

QScalar QScalar::times_q(const Rational& e) const {
    if (e.is_zero()) return *this;
    QScalar r = *this;
    r.num_ = r.num_.shifted(exp_unit(kQVar, e));
    return r;
}

std::string QScalar::str(const std::string& qname) const {
    auto name = [&](size_t i) { return i == kQVar ? qname : "t" + std::to_string(i); };
    if (den_.is_one()) return num_.str(name);
    return "(" + num_.str(name) + ")/(" + den_.str(name) + ")";
}

QScalar bar(const QScalar& a) { return scale_q(a, Rational(-1)); }

QScalar scale_q(const QScalar& a, const Rational& f) {
    return QScalar(a.num().scale_var(kQVar, f), a.den().scale_var(kQVar, f));
}

QScalar t_to_one(const QScalar& a) {
    Poly n = a.num(), d = a.den();
    size_t nv = std::max(n.nvars(), d.nvars());
    for (size_t i = 1; i < nv; ++i) {
        n = n.at_one(i);
        d = d.at_one(i);
    }
    return QScalar(n, d);
}

int q1_order(const QScalar& a) {
    if (a.is_zero()) throw std::domain_error("order of zero at q=1");
    return root_one_order(a.num(), kQVar) - root_one_order(a.den(), kQVar);
}

QScalar limit_q1(const QScalar& a) {
    Poly d1 = a.den().at_one(kQVar);
    if (d1.is_zero()) throw PoleError(-q1_order(a));
    return QScalar(a.num().at_one(kQVar), d1);
}

QScalar divide_exact_qminus1(const QScalar& a) {
    if (a.is_zero()) return a;
    if (q1_order(a) < 1) throw std::domain_error("divide_exact_qminus1: value does not vanish at q=1");
    return a * QScalar(Poly(1), Poly::var(kQVar) - Poly(1));
}

}  // namespace qca
