#include "qca/qtorus.hpp"

#include <sstream>

namespace qca {

LVec lv_add(const LVec& a, const LVec& b) {
    LVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = ck_add(a[i], b[i]);
    return r;
}

LVec lv_sub(const LVec& a, const LVec& b) {
    LVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = ck_sub(a[i], b[i]);
    return r;
}

LVec lv_neg(const LVec& a) { return lv_scale(a, -1); }

LVec lv_scale(const LVec& a, int64_t k) {
    LVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = ck_mul(a[i], k);
    return r;
}

LVec lv_unit(size_t rank, size_t i) {
    LVec r(rank, 0);
    r.at(i) = 1;
    return r;
}

bool lv_is_zero(const LVec& a) {
    for (auto x : a)
        if (x != 0) return false;
    return true;
}

std::string lv_str(const LVec& a) {
    std::string s = "(";
    for (size_t i = 0; i < a.size(); ++i) s += (i ? "," : "") + std::to_string(a[i]);
    return s + ")";
}

SkewLattice::SkewLattice(RMat form, std::vector<std::string> names, std::string q)
    : rank(form.size()), skew(std::move(form)), labels(std::move(names)), qname(std::move(q)) {
    for (size_t i = 0; i < rank; ++i) {
        if (skew[i].size() != rank) throw std::invalid_argument("skew form is not square");
        for (size_t j = 0; j < rank; ++j)
            if (skew[i][j] != -skew[j][i]) throw std::invalid_argument("skew form is not antisymmetric");
    }
    if (labels.empty())
        for (size_t i = 0; i < rank; ++i) labels.push_back("X" + std::to_string(i + 1));
    if (labels.size() != rank) throw std::invalid_argument("label count does not match rank");
}

Rational SkewLattice::omega(const LVec& a, const LVec& b) const {
    Rational s;
    for (size_t i = 0; i < rank; ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < rank; ++j) {
            if (b[j] == 0 || skew[i][j].is_zero()) continue;
            s += skew[i][j] * Rational(ck_mul(a[i], b[j]));
        }
    }
    return s;
}

bool SkewLattice::is_central(const LVec& n) const {
    for (size_t i = 0; i < rank; ++i)
        if (!omega(lv_unit(rank, i), n).is_zero()) return false;
    return true;
}

bool SkewLattice::commutative() const {
    for (const auto& row : skew)
        for (const auto& x : row)
            if (!x.is_zero()) return false;
    return true;
}

Rational SkewLattice::ordering_exponent(const LVec& n) const {
    // X_1^{n_1}...X_r^{n_r} = q^{sum_{i<j} n_i n_j omega_ij} X^n
    Rational s;
    for (size_t i = 0; i < rank; ++i)
        for (size_t j = i + 1; j < rank; ++j) s += skew[i][j] * Rational(ck_mul(n[i], n[j]));
    return -s;
}

Algebra make_algebra(RMat form, std::vector<std::string> names, std::string q) {
    return std::make_shared<const SkewLattice>(std::move(form), std::move(names), std::move(q));
}

Algebra commutative_shadow(const Algebra& a) {
    RMat z(a->rank, std::vector<Rational>(a->rank));
    return make_algebra(z, a->labels, a->qname);
}

QTorusElement::QTorusElement(Algebra alg, const QScalar& c) : alg_(std::move(alg)) {
    add_term(LVec(alg_->rank, 0), c);
}

QTorusElement QTorusElement::monomial(Algebra alg, const LVec& n, const QScalar& c) {
    if (n.size() != alg->rank) throw std::invalid_argument("lattice vector has wrong rank");
    QTorusElement r(std::move(alg));
    r.add_term(n, c);
    return r;
}

QTorusElement QTorusElement::generator(Algebra alg, size_t i, int64_t power) {
    size_t r = alg->rank;
    return monomial(std::move(alg), lv_scale(lv_unit(r, i), power));
}

bool QTorusElement::is_scalar() const {
    return terms_.empty() || (terms_.size() == 1 && lv_is_zero(terms_.begin()->first));
}

QScalar QTorusElement::coeff(const LVec& n) const {
    auto it = terms_.find(n);
    return it == terms_.end() ? QScalar() : it->second;
}

void QTorusElement::add_term(const LVec& n, const QScalar& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(n);
    if (it == terms_.end()) {
        terms_.emplace(n, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

QTorusElement QTorusElement::operator-() const {
    QTorusElement r = *this;
    for (auto& [n, c] : r.terms_) c = -c;
    return r;
}

QTorusElement& QTorusElement::operator+=(const QTorusElement& o) {
    if (!alg_) alg_ = o.alg_;
    if (o.alg_ && alg_ != o.alg_ && alg_->skew != o.alg_->skew) throw std::invalid_argument("mismatched algebras");
    for (const auto& [n, c] : o.terms_) add_term(n, c);
    return *this;
}

QTorusElement& QTorusElement::operator-=(const QTorusElement& o) { return *this += -o; }

QTorusElement operator*(const QTorusElement& a, const QTorusElement& b) { return qt_mul(a, b); }

QTorusElement operator*(const QScalar& c, const QTorusElement& a) {
    QTorusElement r(a.alg_);
    if (c.is_zero()) return r;
    for (const auto& [n, x] : a.terms_) r.terms_.emplace(n, c * x);
    return r;
}

QTorusElement qt_mul(const QTorusElement& a, const QTorusElement& b) {
    if (a.algebra() != b.algebra() && a.algebra()->skew != b.algebra()->skew)
        throw std::invalid_argument("qt_mul: mismatched algebras");
    const SkewLattice& L = *a.algebra();
    QTorusElement r(a.algebra());
    for (const auto& [na, ca] : a.terms())
        for (const auto& [nb, cb] : b.terms()) r.add_term(lv_add(na, nb), (ca * cb).times_q(L.omega(na, nb)));
    return r;
}

QTorusElement qt_star(const QTorusElement& a) {
    return a.map_coeffs([](const QScalar& c) { return bar(c); });
}

QTorusElement QTorusElement::map_coeffs(const std::function<QScalar(const QScalar&)>& f) const {
    QTorusElement r(alg_);
    for (const auto& [n, c] : terms_) r.add_term(n, f(c));
    return r;
}

std::string render_term(const SkewLattice& alg, const LVec& n, const QScalar& c0) {
    QScalar c = c0.times_q(alg.ordering_exponent(n));
    std::string mono;
    for (size_t i = 0; i < alg.rank; ++i) {
        if (n[i] == 0) continue;
        if (!mono.empty()) mono += "*";
        mono += alg.labels[i];
        if (n[i] != 1) mono += "^" + std::to_string(n[i]);
    }
    if (mono.empty()) return c.str(alg.qname);
    if (c.is_one()) return mono;
    if ((-c).is_one()) return "-" + mono;
    std::string cs = c.str(alg.qname);
    bool simple = c.is_polynomial() && c.num().is_monomial();
    if (simple) return cs + "*" + mono;
    return "(" + cs + ")*" + mono;
}

std::string QTorusElement::str() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [n, c] : terms_) {
        std::string t = render_term(*alg_, n, c);
        if (s.empty()) {
            s = t;
        } else if (t[0] == '-') {
            s += " - " + t.substr(1);
        } else {
            s += " + " + t;
        }
    }
    return s;
}

}  // namespace qca
