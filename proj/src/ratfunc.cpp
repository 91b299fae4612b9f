#include "qca/ratfunc.hpp"

namespace qca {

Poly embed_scalar_poly(const Poly& p, size_t nx) {
    size_t nv = p.nvars();
    std::vector<size_t> map(std::max<size_t>(nv, 1));
    map[0] = 0;
    for (size_t j = 1; j < nv; ++j) map[j] = nx + j;
    return p.remap(map);
}

CommutativeRational::CommutativeRational(size_t nx, const QScalar& c)
    : nx_(nx), num_(embed_scalar_poly(c.num(), nx)), den_(embed_scalar_poly(c.den(), nx)) {}

CommutativeRational CommutativeRational::variable(size_t nx, size_t i, int64_t power) {
    CommutativeRational r(nx, QScalar(1));
    r.num_ = Poly::var(1 + i, Rational(power));
    return r;
}

CommutativeRational CommutativeRational::monomial(size_t nx, const std::vector<int64_t>& n, const QScalar& c) {
    CommutativeRational r(nx, c);
    Exp e(nx + 1);
    for (size_t i = 0; i < n.size(); ++i) e[1 + i] = Rational(n[i]);
    exp_trim(e);
    r.num_ = r.num_.shifted(e);
    r.normalize();
    return r;
}

void CommutativeRational::normalize() {
    if (den_.is_zero()) throw DivisionByZero();
    normalize_fraction(num_, den_);
}

bool CommutativeRational::denominator_is_monomial() const {
    for (size_t i = 1; i <= nx_; ++i)
        if (den_.uses_var(i)) return false;
    return true;
}

CommutativeRational CommutativeRational::operator-() const {
    CommutativeRational r = *this;
    r.num_ = -r.num_;
    return r;
}

CommutativeRational& CommutativeRational::operator+=(const CommutativeRational& o) {
    if (nx_ == 0) nx_ = o.nx_;
    if (den_ == o.den_) {
        num_ += o.num_;
    } else {
        num_ = num_ * o.den_ + o.num_ * den_;
        den_ = den_ * o.den_;
    }
    normalize();
    return *this;
}

CommutativeRational& CommutativeRational::operator-=(const CommutativeRational& o) { return *this += -o; }

CommutativeRational& CommutativeRational::operator*=(const CommutativeRational& o) {
    if (nx_ == 0) nx_ = o.nx_;
    num_ *= o.num_;
    den_ *= o.den_;
    normalize();
    return *this;
}

CommutativeRational CommutativeRational::inverse() const {
    if (num_.is_zero()) throw DivisionByZero();
    CommutativeRational r = *this;
    std::swap(r.num_, r.den_);
    r.normalize();
    return r;
}

CommutativeRational& CommutativeRational::operator/=(const CommutativeRational& o) { return *this *= o.inverse(); }

bool operator==(const CommutativeRational& a, const CommutativeRational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
}

CommutativeRational CommutativeRational::pow(int64_t n) const {
    if (n < 0) return inverse().pow(-n);
    CommutativeRational r(nx_, QScalar(1)), b = *this;
    while (n) {
        if (n & 1) r *= b;
        n >>= 1;
        if (n) b *= b;
    }
    return r;
}

CommutativeRational CommutativeRational::derivative(size_t i) const {
    size_t v = 1 + i;
    CommutativeRational r = *this;
    r.num_ = num_.derivative(v) * den_ - num_ * den_.derivative(v);
    r.den_ = den_ * den_;
    r.normalize();
    return r;
}

CommutativeRational CommutativeRational::t_to_one() const {
    CommutativeRational r = *this;
    size_t nv = std::max(num_.nvars(), den_.nvars());
    for (size_t j = nx_ + 1; j < nv; ++j) {
        r.num_ = r.num_.at_one(j);
        r.den_ = r.den_.at_one(j);
    }
    r.normalize();
    return r;
}

CommutativeRational CommutativeRational::at_q1() const {
    CommutativeRational r = *this;
    r.num_ = num_.at_one(0);
    r.den_ = den_.at_one(0);
    r.normalize();
    return r;
}

std::string CommutativeRational::str(const std::vector<std::string>& labels) const {
    auto name = [&](size_t v) -> std::string {
        if (v == 0) return "q";
        if (v <= nx_) return v - 1 < labels.size() ? labels[v - 1] : "X" + std::to_string(v);
        return "t" + std::to_string(v - nx_);
    };
    if (den_.is_one()) return num_.str(name);
    return "(" + num_.str(name) + ")/(" + den_.str(name) + ")";
}

}  // namespace qca
