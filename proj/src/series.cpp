#include "qca/series.hpp"

#include <algorithm>

namespace qca {

Rational Grading::deg(const LVec& n) const {
    Rational s;
    for (size_t i = 0; i < n.size(); ++i)
        if (n[i] != 0) s += w.at(i) * Rational(n[i]);
    return s;
}

Grading Grading::standard(size_t rank) { return Grading{std::vector<Rational>(rank, Rational(1))}; }

namespace {

std::optional<Rational> opt_min(std::optional<Rational> a, std::optional<Rational> b) {
    if (!a) return b;
    if (!b) return a;
    return std::min(*a, *b);
}

struct DegTerm {
    Rational deg;
    const LVec* n;
    const QScalar* c;
};

std::vector<DegTerm> by_degree(const Series& s) {
    std::vector<DegTerm> v;
    v.reserve(s.terms().size());
    for (const auto& [n, c] : s.terms()) v.push_back({s.grading().deg(n), &n, &c});
    std::stable_sort(v.begin(), v.end(), [](const DegTerm& a, const DegTerm& b) { return a.deg < b.deg; });
    return v;
}

}  // namespace

Series Series::from_element(const QTorusElement& e, Grading g, std::optional<Rational> cap) {
    Series s(e.algebra(), std::move(g));
    bool cut = false;
    for (const auto& [n, c] : e.terms()) {
        if (cap && s.g_.deg(n) > *cap) {
            cut = true;
            continue;
        }
        s.terms_.emplace(n, c);
    }
    if (cut) s.exact_to_ = cap;
    return s;
}

Series Series::one(Algebra alg, Grading g) {
    Series s(alg, std::move(g));
    s.terms_.emplace(LVec(alg->rank, 0), QScalar(1));
    return s;
}

std::optional<Rational> Series::valuation() const {
    std::optional<Rational> v;
    for (const auto& [n, c] : terms_) {
        Rational d = g_.deg(n);
        if (!v || d < *v) v = d;
    }
    return v;
}

std::optional<Rational> Series::valuation_bound() const {
    auto v = valuation();
    return v ? v : exact_to_;
}

QScalar Series::coeff(const LVec& n) const {
    auto it = terms_.find(n);
    return it == terms_.end() ? QScalar() : it->second;
}

Series Series::truncated(const Rational& cap) const {
    Series r(alg_, g_);
    for (const auto& [n, c] : terms_)
        if (g_.deg(n) <= cap) r.terms_.emplace(n, c);
    r.exact_to_ = opt_min(exact_to_, cap);
    if (!exact_to_ && r.terms_.size() == terms_.size()) r.exact_to_ = std::nullopt;
    return r;
}

QTorusElement Series::to_element() const {
    QTorusElement e(alg_);
    for (const auto& [n, c] : terms_) e.add_term(n, c);
    return e;
}

void Series::add_term(const LVec& n, const QScalar& c) {
    if (c.is_zero()) return;
    if (exact_to_ && g_.deg(n) > *exact_to_) return;
    auto it = terms_.find(n);
    if (it == terms_.end()) {
        terms_.emplace(n, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

void Series::set_exact_to(std::optional<Rational> e) {
    exact_to_ = e;
    if (!e) return;
    for (auto it = terms_.begin(); it != terms_.end();) {
        if (g_.deg(it->first) > *e)
            it = terms_.erase(it);
        else
            ++it;
    }
}

Series operator+(const Series& a, const Series& b) {
    Series r(a.alg_ ? a.alg_ : b.alg_, a.alg_ ? a.g_ : b.g_);
    r.exact_to_ = opt_min(a.exact_to_, b.exact_to_);
    for (const auto& [n, c] : a.terms_) r.add_term(n, c);
    for (const auto& [n, c] : b.terms_) r.add_term(n, c);
    return r;
}

Series Series::operator-() const { return scaled(QScalar(-1)); }

Series operator-(const Series& a, const Series& b) { return a + (-b); }

Series Series::scaled(const QScalar& c) const {
    Series r(alg_, g_);
    r.exact_to_ = exact_to_;
    if (c.is_zero()) return r;
    for (const auto& [n, x] : terms_) r.terms_.emplace(n, c * x);
    return r;
}

bool Series::zero_to(const Rational& k) const {
    if (!known_to(k)) return false;
    for (const auto& [n, c] : terms_)
        if (g_.deg(n) <= k) return false;
    return true;
}

Series series_mul(const Series& a, const Series& b, std::optional<Rational> cap) {
    const SkewLattice& L = *a.algebra();
    Series r(a.algebra(), a.grading());
    auto va = a.valuation_bound(), vb = b.valuation_bound();
    // an exactly-zero factor gives an exactly-zero product
    if ((!va && !a.exact_to()) || (!vb && !b.exact_to())) return r;
    std::optional<Rational> lim = cap;
    if (a.exact_to()) lim = opt_min(lim, *a.exact_to() + *vb);
    if (b.exact_to()) lim = opt_min(lim, *b.exact_to() + *va);
    auto ta = by_degree(a), tb = by_degree(b);
    if (lim) r.set_exact_to(lim);
    for (const auto& x : ta) {
        if (lim && !tb.empty() && x.deg + tb.front().deg > *lim) break;
        for (const auto& y : tb) {
            if (lim && x.deg + y.deg > *lim) break;
            r.add_term(lv_add(*x.n, *y.n), (*x.c * *y.c).times_q(L.omega(*x.n, *y.n)));
        }
    }
    if (!a.exact_to() && !b.exact_to() && cap) {
        // a finite product cut at cap is exact to cap only if something was dropped
        bool dropped = !ta.empty() && !tb.empty() && ta.back().deg + tb.back().deg > *cap;
        if (!dropped) r.set_exact_to(std::nullopt);
    }
    return r;
}

Series series_inverse(const Series& a, const Rational& cap) {
    auto v = a.valuation();
    if (!v || (a.exact_to() && *a.exact_to() < *v))
        throw ExpansionError("cannot invert a series with no known leading term");
    const LVec* lead = nullptr;
    QScalar lc;
    int count = 0;
    for (const auto& [n, c] : a.terms()) {
        if (a.grading().deg(n) == *v) {
            lead = &n;
            lc = c;
            ++count;
        }
    }
    if (count != 1) throw ExpansionError("leading part is not a single monomial");
    Algebra alg = a.algebra();
    const Grading& g = a.grading();
    Series linv = Series::from_element(QTorusElement::monomial(alg, lv_neg(*lead), lc.inverse()), g);
    // a = L (1 + u); a^{-1} = (sum (-u)^j) L^{-1}
    Rational inner_cap = cap + *v;
    Series u = series_mul(linv, a) - Series::one(alg, g);
    u = u.truncated(inner_cap);
    std::optional<Rational> lim = inner_cap;
    if (u.exact_to()) lim = std::min(inner_cap, *u.exact_to());
    Series neg_u = -u;
    Series sum = Series::one(alg, g);
    Series pw = Series::one(alg, g);
    for (;;) {
        pw = series_mul(pw, neg_u, lim);
        auto pv = pw.valuation();
        if (!pv || *pv > *lim) break;
        sum = sum + pw;
    }
    sum.set_exact_to(lim);
    Series r = series_mul(sum, linv);
    r.set_exact_to(*lim - *v);
    return r;
}

Series series_exp(const Series& s, const Rational& cap) {
    auto v = s.valuation_bound();
    Algebra alg = s.algebra();
    Series sum = Series::one(alg, s.grading());
    if (!v) return sum;
    if (*v <= Rational(0)) throw ExpansionError("exp of a series without positive valuation");
    Series pw = Series::one(alg, s.grading());
    for (int64_t j = 1;; ++j) {
        pw = series_mul(pw, s, cap).scaled(QScalar(1) / QScalar(j));
        auto pv = pw.valuation();
        if (!pv || *pv > cap) break;
        sum = sum + pw;
    }
    return sum.truncated(cap);
}

Series dilog_series(Algebra alg, const LVec& dir, const Rational& qk, int order, const Grading& g) {
    Rational step = g.deg(dir);
    if (step <= Rational(0)) throw ExpansionError("dilogarithm direction must have positive degree");
    Rational cap = step * Rational(order);
    Series r = Series::one(alg, g);
    // q-binomial theorem: coefficient of x^j is (-q)^j / prod_{i=1}^{j} (1 - q^{2i})
    for (int j = 1; j <= order; ++j) {
        QScalar den(1);
        for (int i = 1; i <= j; ++i) den *= QScalar(1) - QScalar::q(qk * Rational(2 * i));
        QScalar c = QScalar::q(qk * Rational(j)) / den;
        if (j % 2) c = -c;
        r.add_term(lv_scale(dir, j), c);
    }
    r.set_exact_to(cap);
    return r;
}

Series dilog_series_exp(Algebra alg, const LVec& dir, const Rational& qk, int order, const Grading& g) {
    Rational cap = g.deg(dir) * Rational(order);
    Series li(alg, g);
    // -Li_2(-x; q) = sum_l (-1)^{l+1} x^l / (l (q^l - q^{-l}))
    for (int l = 1; l <= order; ++l) {
        QScalar c = QScalar(1) / (QScalar(l) * (QScalar::q(qk * Rational(l)) - QScalar::q(-qk * Rational(l))));
        if (l % 2 == 0) c = -c;
        li.add_term(lv_scale(dir, l), c);
    }
    li.set_exact_to(cap);
    return series_exp(li, cap);
}

}  // namespace qca
