#include "qca/poly.hpp"

#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>
#include <sstream>

namespace qca {

namespace {
const Rational kZero{};
}

const Rational& exp_at(const Exp& e, size_t i) { return i < e.size() ? e[i] : kZero; }

void exp_trim(Exp& e) {
    while (!e.empty() && e.back().is_zero()) e.pop_back();
}

Exp exp_add(const Exp& a, const Exp& b) {
    Exp r(std::max(a.size(), b.size()));
    for (size_t i = 0; i < r.size(); ++i) r[i] = exp_at(a, i) + exp_at(b, i);
    exp_trim(r);
    return r;
}

Exp exp_neg(const Exp& a) {
    Exp r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
    return r;
}

Exp exp_unit(size_t var, Rational e) {
    Exp r;
    if (e.is_zero()) return r;
    r.resize(var + 1);
    r[var] = e;
    return r;
}

bool exp_lex_less(const Exp& a, const Exp& b) {
    size_t n = std::max(a.size(), b.size());
    for (size_t i = 0; i < n; ++i) {
        const Rational& x = exp_at(a, i);
        const Rational& y = exp_at(b, i);
        if (x != y) return x < y;
    }
    return false;
}

Poly::Poly(int64_t c) {
    if (c != 0) terms_.emplace(Exp{}, c);
}

Poly Poly::monomial(const Exp& e, int64_t c) {
    Poly p;
    if (c != 0) {
        Exp k = e;
        exp_trim(k);
        p.terms_.emplace(std::move(k), c);
    }
    return p;
}

Poly Poly::var(size_t i, Rational e) { return monomial(exp_unit(i, e), 1); }

bool Poly::is_one() const { return terms_.size() == 1 && terms_.begin()->first.empty() && terms_.begin()->second == 1; }

bool Poly::is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty()); }

int64_t Poly::constant_term() const {
    auto it = terms_.find(Exp{});
    return it == terms_.end() ? 0 : it->second;
}

size_t Poly::nvars() const {
    size_t n = 0;
    for (const auto& [e, c] : terms_) n = std::max(n, e.size());
    return n;
}

bool Poly::uses_var(size_t i) const {
    for (const auto& [e, c] : terms_)
        if (!exp_at(e, i).is_zero()) return true;
    return false;
}

void Poly::add_term(const Exp& e, int64_t c) {
    if (c == 0) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
        return;
    }
    it->second = ck_add(it->second, c);
    if (it->second == 0) terms_.erase(it);
}

Poly Poly::operator-() const {
    Poly r = *this;
    for (auto& [e, c] : r.terms_) c = ck_sub(0, c);
    return r;
}

Poly& Poly::operator+=(const Poly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, ck_sub(0, c));
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    Poly r;
    if (a.is_zero() || b.is_zero()) return r;
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) r.add_term(exp_add(ea, eb), ck_mul(ca, cb));
    return r;
}

Poly& Poly::operator*=(const Poly& o) {
    *this = *this * o;
    return *this;
}

Poly Poly::scaled(int64_t c) const {
    if (c == 0) return Poly();
    Poly r = *this;
    for (auto& [e, x] : r.terms_) x = ck_mul(x, c);
    return r;
}

Poly Poly::shifted(const Exp& s) const {
    Poly r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(exp_add(e, s), c);
    return r;
}

Poly Poly::pow(unsigned n) const {
    Poly r(1), b = *this;
    while (n) {
        if (n & 1u) r *= b;
        n >>= 1u;
        if (n) b *= b;
    }
    return r;
}

Poly Poly::at_one(size_t i) const {
    Poly r;
    for (const auto& [e, c] : terms_) {
        Exp k = e;
        if (i < k.size()) {
            k[i] = Rational(0);
            exp_trim(k);
        }
        r.add_term(k, c);
    }
    return r;
}

Poly Poly::scale_var(size_t i, const Rational& f) const {
    Poly r;
    for (const auto& [e, c] : terms_) {
        Exp k = e;
        if (i < k.size()) {
            k[i] *= f;
            exp_trim(k);
        }
        r.add_term(k, c);
    }
    return r;
}

Poly Poly::remap(const std::vector<size_t>& map) const {
    Poly r;
    for (const auto& [e, c] : terms_) {
        Exp k;
        for (size_t i = 0; i < e.size(); ++i) {
            if (e[i].is_zero()) continue;
            size_t j = map.at(i);
            if (k.size() <= j) k.resize(j + 1);
            k[j] += e[i];
        }
        exp_trim(k);
        r.add_term(k, c);
    }
    return r;
}

Poly Poly::derivative(size_t i) const {
    Poly r;
    for (const auto& [e, c] : terms_) {
        const Rational& a = exp_at(e, i);
        if (a.is_zero()) continue;
        if (!a.is_integer()) throw std::domain_error("derivative of a fractional power");
        Exp k = e;
        k[i] -= Rational(1);
        exp_trim(k);
        r.add_term(k, ck_mul(c, a.num()));
    }
    return r;
}

Exp Poly::min_exponents() const {
    Exp m;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (first) {
            m = e;
            first = false;
            continue;
        }
        size_t n = std::max(m.size(), e.size());
        m.resize(n);
        for (size_t i = 0; i < n; ++i) m[i] = std::min(m[i], exp_at(e, i));
    }
    exp_trim(m);
    return m;
}

int64_t Poly::content() const {
    int64_t g = 0;
    for (const auto& [e, c] : terms_) g = gcd64(g, c);
    return g;
}

int64_t Poly::leading_coeff() const {
    if (terms_.empty()) return 0;
    const std::pair<const Exp, int64_t>* best = nullptr;
    for (const auto& t : terms_)
        if (!best || exp_lex_less(best->first, t.first)) best = &t;
    return best->second;
}

std::string Poly::str(const std::function<std::string(size_t)>& name) const {
    if (terms_.empty()) return "0";
    std::vector<const std::pair<const Exp, int64_t>*> ts;
    for (const auto& t : terms_) ts.push_back(&t);
    std::sort(ts.begin(), ts.end(), [](auto* a, auto* b) { return exp_lex_less(a->first, b->first); });
    std::ostringstream os;
    bool first = true;
    for (auto* t : ts) {
        int64_t c = t->second;
        std::string mono;
        for (size_t i = 0; i < t->first.size(); ++i) {
            const Rational& a = t->first[i];
            if (a.is_zero()) continue;
            if (!mono.empty()) mono += "*";
            std::string nm = name(i);
            mono += nm;
            if (a != Rational(1)) {
                if (nm.size() == 1)
                    mono += "^{" + a.str() + "}";
                else
                    mono += a.is_integer() && a.sign() > 0 ? "^" + a.str() : "^{" + a.str() + "}";
            }
        }
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        int64_t ac = c < 0 ? -c : c;
        if (mono.empty())
            os << ac;
        else if (ac == 1)
            os << mono;
        else
            os << ac << "*" << mono;
        first = false;
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// gcd and exact division over big-integer polynomials

namespace {

using BI = boost::multiprecision::cpp_int;
using IExp = std::vector<int64_t>;
using IPoly = std::map<IExp, BI>;

struct IntForm {
    size_t nv = 0;
    std::vector<int64_t> scale;  // exponent of x_v is stored multiplied by scale[v]
};

IntForm common_form(std::initializer_list<const Poly*> ps) {
    IntForm f;
    for (auto* p : ps) f.nv = std::max(f.nv, p->nvars());
    f.scale.assign(f.nv, 1);
    for (auto* p : ps)
        for (const auto& [e, c] : p->terms())
            for (size_t i = 0; i < e.size(); ++i) f.scale[i] = lcm64(f.scale[i], e[i].den());
    return f;
}

// returns integer polynomial with nonneg exponents and the applied shift
IPoly to_ipoly(const Poly& p, const IntForm& f, IExp* shift) {
    IExp sh(f.nv, 0);
    bool first = true;
    for (const auto& [e, c] : p.terms()) {
        for (size_t i = 0; i < f.nv; ++i) {
            Rational v = exp_at(e, i) * Rational(f.scale[i]);
            int64_t x = v.num();
            sh[i] = first ? x : std::min(sh[i], x);
        }
        first = false;
    }
    IPoly r;
    for (const auto& [e, c] : p.terms()) {
        IExp k(f.nv);
        for (size_t i = 0; i < f.nv; ++i) k[i] = (exp_at(e, i) * Rational(f.scale[i])).num() - sh[i];
        r.emplace(std::move(k), BI(c));
    }
    if (shift) *shift = sh;
    return r;
}

Poly from_ipoly(const IPoly& p, const IntForm& f, const IExp& shift) {
    Poly r;
    for (const auto& [k, c] : p) {
        Exp e(f.nv);
        for (size_t i = 0; i < f.nv; ++i) e[i] = Rational(k[i] + shift[i], f.scale[i]);
        exp_trim(e);
        if (c > BI(INT64_MAX) || c < BI(INT64_MIN)) throw OverflowError("polynomial coefficient exceeds int64");
        r.add_term(e, static_cast<int64_t>(c));
    }
    return r;
}

void iadd(IPoly& a, const IExp& e, const BI& c) {
    if (c == 0) return;
    auto it = a.find(e);
    if (it == a.end()) {
        a.emplace(e, c);
        return;
    }
    it->second += c;
    if (it->second == 0) a.erase(it);
}

IPoly imul(const IPoly& a, const IPoly& b) {
    IPoly r;
    for (const auto& [ea, ca] : a)
        for (const auto& [eb, cb] : b) {
            IExp e(ea.size());
            for (size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            iadd(r, e, ca * cb);
        }
    return r;
}

IPoly isub(IPoly a, const IPoly& b) {
    for (const auto& [e, c] : b) iadd(a, e, -c);
    return a;
}

std::optional<IPoly> idivexact(IPoly a, const IPoly& b) {
    if (b.empty()) throw std::domain_error("division by zero polynomial");
    IPoly q;
    const auto& [lb, cb] = *b.rbegin();
    while (!a.empty()) {
        const auto [la, ca] = *a.rbegin();
        IExp e(la.size());
        for (size_t i = 0; i < e.size(); ++i) {
            e[i] = la[i] - lb[i];
            if (e[i] < 0) return std::nullopt;
        }
        if (ca % cb != 0) return std::nullopt;
        BI c = ca / cb;
        iadd(q, e, c);
        for (const auto& [eb, x] : b) {
            IExp k(eb.size());
            for (size_t i = 0; i < k.size(); ++i) k[i] = eb[i] + e[i];
            iadd(a, k, -c * x);
        }
    }
    return q;
}

int main_var(const IPoly& p) {
    int v = -1;
    for (const auto& [e, c] : p)
        for (int i = static_cast<int>(e.size()) - 1; i > v; --i)
            if (e[i] != 0) {
                v = i;
                break;
            }
    return v;
}

std::map<int64_t, IPoly> split(const IPoly& p, int v) {
    std::map<int64_t, IPoly> r;
    for (const auto& [e, c] : p) {
        IExp k = e;
        int64_t d = k[v];
        k[v] = 0;
        r[d].emplace(std::move(k), c);
    }
    return r;
}

IPoly shift_var(const IPoly& p, int v, int64_t d) {
    IPoly r;
    for (const auto& [e, c] : p) {
        IExp k = e;
        k[v] += d;
        r.emplace(std::move(k), c);
    }
    return r;
}

void inormalize(IPoly& p) {
    if (!p.empty() && p.rbegin()->second < 0)
        for (auto& [e, c] : p) c = -c;
}

IPoly igcd(const IPoly& a, const IPoly& b, size_t nv);

IPoly content_v(const IPoly& p, int v, size_t nv) {
    IPoly g;
    for (auto& [d, c] : split(p, v)) {
        g = igcd(g, c, nv);
        if (g.size() == 1 && g.begin()->second == 1 && main_var(g) < 0) break;
    }
    return g;
}

IPoly prem(IPoly a, const IPoly& b, int v) {
    auto bs = split(b, v);
    int64_t db = bs.rbegin()->first;
    const IPoly& lb = bs.rbegin()->second;
    while (!a.empty()) {
        auto as = split(a, v);
        int64_t da = as.rbegin()->first;
        if (da < db) break;
        IPoly la = as.rbegin()->second;
        a = isub(imul(lb, a), imul(shift_var(la, v, da - db), b));
    }
    return a;
}

IPoly igcd(const IPoly& a, const IPoly& b, size_t nv) {
    if (a.empty()) {
        IPoly r = b;
        inormalize(r);
        return r;
    }
    if (b.empty()) {
        IPoly r = a;
        inormalize(r);
        return r;
    }
    int v = std::max(main_var(a), main_var(b));
    if (v < 0) {
        BI g = boost::multiprecision::gcd(a.begin()->second, b.begin()->second);
        if (g < 0) g = -g;
        return IPoly{{IExp(nv, 0), g}};
    }
    IPoly ca = content_v(a, v, nv);
    IPoly cb = content_v(b, v, nv);
    IPoly c = igcd(ca, cb, nv);
    IPoly pa = *idivexact(a, ca);
    IPoly pb = *idivexact(b, cb);
    auto degv = [v](const IPoly& p) {
        int64_t d = 0;
        for (const auto& [e, x] : p) d = std::max(d, e[v]);
        return d;
    };
    if (degv(pa) < degv(pb)) std::swap(pa, pb);
    while (!pb.empty()) {
        if (degv(pb) == 0) {
            pa = IPoly{{IExp(nv, 0), BI(1)}};
            break;
        }
        IPoly r = prem(pa, pb, v);
        pa = pb;
        if (r.empty()) {
            pb.clear();
        } else {
            IPoly cr = content_v(r, v, nv);
            pb = *idivexact(r, cr);
        }
    }
    IPoly cpa = content_v(pa, v, nv);
    IPoly g = imul(c, *idivexact(pa, cpa));
    inormalize(g);
    return g;
}

}  // namespace

Poly gcd(const Poly& a, const Poly& b) {
    if (a.is_zero() && b.is_zero()) return Poly();
    IntForm f = common_form({&a, &b});
    IPoly ia = to_ipoly(a, f, nullptr);
    IPoly ib = to_ipoly(b, f, nullptr);
    IPoly g = igcd(ia, ib, f.nv);
    Poly r = from_ipoly(g, f, IExp(f.nv, 0));
    // strip monomial factor, fix sign
    Exp m = r.min_exponents();
    r = r.shifted(exp_neg(m));
    if (r.leading_coeff() < 0) r = -r;
    return r;
}

std::optional<Poly> divide_exact(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw std::domain_error("division by zero polynomial");
    if (a.is_zero()) return Poly();
    if (b.is_monomial()) {
        const auto& [e, c] = *b.terms().begin();
        Poly r;
        for (const auto& [ea, ca] : a.terms()) {
            if (ca % c != 0) return std::nullopt;
            r.add_term(exp_add(ea, exp_neg(e)), ca / c);
        }
        return r;
    }
    IntForm f = common_form({&a, &b});
    IExp sa, sb;
    IPoly ia = to_ipoly(a, f, &sa);
    IPoly ib = to_ipoly(b, f, &sb);
    auto q = idivexact(ia, ib);
    if (!q) return std::nullopt;
    IExp sh(f.nv);
    for (size_t i = 0; i < f.nv; ++i) sh[i] = sa[i] - sb[i];
    return from_ipoly(*q, f, sh);
}

int root_one_order(const Poly& p, size_t i) {
    if (p.is_zero()) throw std::domain_error("order of zero polynomial");
    IntForm f = common_form({&p});
    if (f.nv <= i) return 0;
    IPoly ip = to_ipoly(p, f, nullptr);
    IPoly lin;  // x_i - 1
    IExp one(f.nv, 0);
    lin.emplace(one, BI(-1));
    one[i] = 1;
    lin.emplace(one, BI(1));
    int k = 0;
    while (true) {
        auto q = idivexact(ip, lin);
        if (!q) break;
        ip = std::move(*q);
        ++k;
    }
    return k;
}

void normalize_fraction(Poly& num_, Poly& den_) {
    if (num_.is_zero()) {
        den_ = Poly(1);
        return;
    }
    if (den_.is_one()) return;
    if (!den_.is_monomial()) {
        Poly g = gcd(num_, den_);
        if (!g.is_one()) {
            num_ = *divide_exact(num_, g);
            den_ = *divide_exact(den_, g);
        }
    }
    if (den_.is_monomial()) {
        const auto [e, c] = *den_.terms().begin();
        int64_t g = gcd64(num_.content(), c);
        if (c < 0) g = -g;
        num_ = *divide_exact(num_, Poly::monomial(e, g));
        den_ = Poly(c / g);
        return;
    }
    Exp m = den_.min_exponents();
    if (!m.empty()) {
        Exp nm = exp_neg(m);
        den_ = den_.shifted(nm);
        num_ = num_.shifted(nm);
    }
    if (den_.leading_coeff() < 0) {
        den_ = -den_;
        num_ = -num_;
    }
    int64_t c = gcd64(num_.content(), den_.content());
    if (c > 1) {
        num_ = *divide_exact(num_, Poly(c));
        den_ = *divide_exact(den_, Poly(c));
    }
}

}  // namespace qca
