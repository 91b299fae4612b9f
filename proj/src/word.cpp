#include "qca/word.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <unordered_map>

namespace qca {

using Node = FactoredWord::Node;
using NodePtr = FactoredWord::NodePtr;
using Kind = FactoredWord::Kind;

namespace {

NodePtr poly_node(const QTorusElement& p) { return std::make_shared<const Node>(Node{Kind::Poly, p, {}}); }

bool is_scalar_poly(const NodePtr& n) { return n->kind == Kind::Poly && n->poly.is_scalar(); }

QScalar scalar_of(const NodePtr& n) { return n->poly.coeff(LVec(n->poly.algebra()->rank, 0)); }

}  // namespace

FactoredWord::FactoredWord(const QTorusElement& p) : alg_(p.algebra()), root_(poly_node(p)) {}

FactoredWord::FactoredWord(Algebra alg, const QScalar& c) : alg_(alg), root_(poly_node(QTorusElement(alg, c))) {}

FactoredWord FactoredWord::monomial(Algebra alg, const LVec& n, const QScalar& c) {
    return FactoredWord(QTorusElement::monomial(std::move(alg), n, c));
}

FactoredWord FactoredWord::generator(Algebra alg, size_t i, int64_t power) {
    return FactoredWord(QTorusElement::generator(std::move(alg), i, power));
}

FactoredWord FactoredWord::make_product(Algebra alg, std::vector<NodePtr> kids) {
    std::vector<NodePtr> flat;
    for (auto& k : kids) {
        if (k->kind == Kind::Product)
            flat.insert(flat.end(), k->kids.begin(), k->kids.end());
        else
            flat.push_back(k);
    }
    QScalar scalar(1);
    std::vector<NodePtr> merged;
    for (auto& k : flat) {
        if (is_scalar_poly(k)) {
            scalar *= scalar_of(k);
            continue;
        }
        if (k->kind == Kind::Poly && !merged.empty() && merged.back()->kind == Kind::Poly) {
            merged.back() = poly_node(qt_mul(merged.back()->poly, k->poly));
            if (merged.back()->poly.is_zero()) scalar = QScalar(0);
            continue;
        }
        merged.push_back(k);
    }
    if (scalar.is_zero()) return FactoredWord(alg, QScalar(0));
    if (merged.empty()) return FactoredWord(alg, scalar);
    if (!scalar.is_one()) {
        if (merged.front()->kind == Kind::Poly)
            merged.front() = poly_node(scalar * merged.front()->poly);
        else
            merged.insert(merged.begin(), poly_node(QTorusElement(alg, scalar)));
    }
    if (merged.size() == 1) return FactoredWord(alg, merged.front());
    return FactoredWord(alg, std::make_shared<const Node>(Node{Kind::Product, QTorusElement(alg), std::move(merged)}));
}

FactoredWord FactoredWord::make_sum(Algebra alg, std::vector<NodePtr> kids) {
    QTorusElement acc(alg);
    std::vector<NodePtr> rest;
    for (auto& k : kids) {
        if (k->kind == Kind::Sum) {
            for (const auto& kk : k->kids) {
                if (kk->kind == Kind::Poly)
                    acc += kk->poly;
                else
                    rest.push_back(kk);
            }
        } else if (k->kind == Kind::Poly) {
            acc += k->poly;
        } else {
            rest.push_back(k);
        }
    }
    if (rest.empty()) return FactoredWord(acc);
    if (!acc.is_zero()) rest.push_back(poly_node(acc));
    if (rest.size() == 1) return FactoredWord(alg, rest.front());
    return FactoredWord(alg, std::make_shared<const Node>(Node{Kind::Sum, QTorusElement(alg), std::move(rest)}));
}

FactoredWord operator*(const FactoredWord& a, const FactoredWord& b) {
    return FactoredWord::make_product(a.alg_, {a.root_, b.root_});
}

FactoredWord operator+(const FactoredWord& a, const FactoredWord& b) {
    return FactoredWord::make_sum(a.alg_, {a.root_, b.root_});
}

FactoredWord operator-(const FactoredWord& a, const FactoredWord& b) { return a + (-b); }

FactoredWord operator*(const QScalar& c, const FactoredWord& a) { return FactoredWord(a.alg_, c) * a; }

FactoredWord FactoredWord::operator-() const { return QScalar(-1) * *this; }

FactoredWord FactoredWord::inverse() const {
    const Node& n = *root_;
    switch (n.kind) {
        case Kind::Poly:
            if (n.poly.is_zero()) throw DivisionByZero();
            if (n.poly.is_monomial()) {
                const auto& [e, c] = *n.poly.terms().begin();
                return monomial(alg_, lv_neg(e), c.inverse());
            }
            break;
        case Kind::Inverse:
            return FactoredWord(alg_, n.kids.front());
        case Kind::Product: {
            std::vector<NodePtr> inv;
            for (auto it = n.kids.rbegin(); it != n.kids.rend(); ++it) inv.push_back(FactoredWord(alg_, *it).inverse().root_);
            return make_product(alg_, inv);
        }
        case Kind::Sum:
            break;
    }
    return FactoredWord(alg_, std::make_shared<const Node>(Node{Kind::Inverse, QTorusElement(alg_), {root_}}));
}

FactoredWord FactoredWord::pow(int64_t n) const {
    if (n < 0) return inverse().pow(-n);
    FactoredWord r(alg_, QScalar(1));
    for (int64_t i = 0; i < n; ++i) r = r * *this;
    return r;
}

namespace {

bool needs_parens(const NodePtr& n) {
    return n->kind == Kind::Sum || (n->kind == Kind::Poly && n->poly.terms().size() > 1);
}

std::string render(const NodePtr& n) {
    switch (n->kind) {
        case Kind::Poly:
            return n->poly.str();
        case Kind::Sum: {
            std::string s;
            for (const auto& k : n->kids) {
                std::string t = render(k);
                if (s.empty())
                    s = t;
                else if (t[0] == '-')
                    s += " - " + t.substr(1);
                else
                    s += " + " + t;
            }
            return s;
        }
        case Kind::Inverse:
            return "(" + render(n->kids.front()) + ")^-1";
        case Kind::Product: {
            std::string s;
            for (const auto& k : n->kids) {
                if (!s.empty()) s += "*";
                std::string t = render(k);
                if (needs_parens(k))
                    s += "(" + t + ")";
                else
                    s += t;
            }
            return s;
        }
    }
    return "";
}

}  // namespace

std::string FactoredWord::str() const { return render(root_); }

FactoredWord substitute(const FactoredWord& w, const Algebra& target, const std::vector<FactoredWord>& images,
                        const ScalarMap& smap) {
    const SkewLattice& src = *w.algebra();
    if (images.size() != src.rank) throw std::invalid_argument("substitute: image count does not match rank");
    std::unordered_map<const Node*, FactoredWord> memo;
    std::map<std::pair<size_t, int64_t>, FactoredWord> powers;
    auto image_pow = [&](size_t i, int64_t e) {
        auto key = std::make_pair(i, e);
        auto it = powers.find(key);
        if (it != powers.end()) return it->second;
        FactoredWord p = images[i].pow(e);
        powers.emplace(key, p);
        return p;
    };
    std::function<FactoredWord(const NodePtr&)> go = [&](const NodePtr& n) -> FactoredWord {
        auto it = memo.find(n.get());
        if (it != memo.end()) return it->second;
        FactoredWord r(target, QScalar(0));
        switch (n->kind) {
            case Kind::Poly:
                for (const auto& [e, c] : n->poly.terms()) {
                    QScalar s = c.times_q(src.ordering_exponent(e));
                    if (smap) s = smap(s);
                    FactoredWord term(target, s);
                    for (size_t i = 0; i < src.rank; ++i)
                        if (e[i] != 0) term = term * image_pow(i, e[i]);
                    r = r + term;
                }
                break;
            case Kind::Product:
                r = FactoredWord(target, QScalar(1));
                for (const auto& k : n->kids) r = r * go(k);
                break;
            case Kind::Sum:
                for (const auto& k : n->kids) r = r + go(k);
                break;
            case Kind::Inverse:
                r = go(n->kids.front()).inverse();
                break;
        }
        memo.emplace(n.get(), r);
        return r;
    };
    return go(w.root());
}

FactoredWord map_scalars(const FactoredWord& w, const ScalarMap& smap, Algebra target) {
    if (!target) target = w.algebra();
    std::vector<FactoredWord> gens;
    for (size_t i = 0; i < target->rank; ++i) gens.push_back(FactoredWord::generator(target, i));
    return substitute(w, target, gens, smap);
}

FactoredWord word_star(const FactoredWord& w) {
    Algebra alg = w.algebra();
    std::function<FactoredWord(const NodePtr&)> go = [&](const NodePtr& n) -> FactoredWord {
        switch (n->kind) {
            case Kind::Poly:
                return FactoredWord(qt_star(n->poly));
            case Kind::Product: {
                FactoredWord r(alg, QScalar(1));
                for (auto it = n->kids.rbegin(); it != n->kids.rend(); ++it) r = r * go(*it);
                return r;
            }
            case Kind::Sum: {
                FactoredWord r(alg, QScalar(0));
                for (const auto& k : n->kids) r = r + go(k);
                return r;
            }
            case Kind::Inverse:
                return go(n->kids.front()).inverse();
        }
        return FactoredWord(alg, QScalar(0));
    };
    return go(w.root());
}

// ---------------------------------------------------------------- parsing

namespace {

class Parser {
public:
    Parser(const Algebra& alg, const std::string& text) : alg_(alg) {
        for (char ch : text)
            if (ch != '_' && !std::isspace(static_cast<unsigned char>(ch))) s_ += ch;
        for (size_t i = 0; i < alg->rank; ++i) {
            std::string l;
            for (char ch : alg->labels[i])
                if (ch != '_') l += ch;
            labels_.emplace_back(l, i);
        }
        std::sort(labels_.begin(), labels_.end(),
                  [](const auto& a, const auto& b) { return a.first.size() > b.first.size(); });
    }

    FactoredWord parse() {
        FactoredWord w = expr();
        if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
        return w;
    }

private:
    [[noreturn]] void fail(const std::string& msg) const {
        throw std::invalid_argument("parse error at " + std::to_string(pos_) + ": " + msg);
    }

    bool peek(char c) const { return pos_ < s_.size() && s_[pos_] == c; }
    bool eat(char c) {
        if (!peek(c)) return false;
        ++pos_;
        return true;
    }

    FactoredWord expr() {
        bool neg = eat('-');
        if (!neg) eat('+');
        FactoredWord w = term();
        if (neg) w = -w;
        for (;;) {
            if (eat('+'))
                w = w + term();
            else if (eat('-'))
                w = w - term();
            else
                return w;
        }
    }

    bool starts_factor() const {
        if (pos_ >= s_.size()) return false;
        char c = s_[pos_];
        return c == '(' || std::isalnum(static_cast<unsigned char>(c));
    }

    FactoredWord term() {
        FactoredWord w = factor();
        for (;;) {
            if (eat('*'))
                w = w * factor();
            else if (eat('/'))
                w = w * factor().inverse();
            else if (starts_factor())
                w = w * factor();
            else
                return w;
        }
    }

    Rational exponent() {
        bool brace = eat('{'), paren = !brace && eat('(');
        size_t start = pos_;
        if (peek('-') || peek('+')) ++pos_;
        while (pos_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '/')) {
            if (s_[pos_] == '/' && !(brace || paren)) break;
            ++pos_;
        }
        std::string tok = s_.substr(start, pos_ - start);
        if (tok.empty() || tok == "-" || tok == "+") fail("expected exponent");
        if (brace && !eat('}')) fail("expected '}'");
        if (paren && !eat(')')) fail("expected ')'");
        return Rational::parse(tok);
    }

    FactoredWord factor() {
        FactoredWord base = atom();
        bool is_q = last_was_q_;
        if (eat('^')) {
            Rational e = exponent();
            if (is_q) return FactoredWord(alg_, QScalar::q(e));
            if (!e.is_integer()) fail("fractional power of a non-q factor");
            return base.pow(e.num());
        }
        return base;
    }

    FactoredWord atom() {
        last_was_q_ = false;
        if (eat('(')) {
            FactoredWord w = expr();
            if (!eat(')')) fail("expected ')'");
            return w;
        }
        if (pos_ >= s_.size()) fail("unexpected end of input");
        if (std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            return FactoredWord(alg_, QScalar(std::stoll(s_.substr(start, pos_ - start))));
        }
        for (const auto& [l, i] : labels_) {
            if (s_.compare(pos_, l.size(), l) == 0) {
                pos_ += l.size();
                return FactoredWord::generator(alg_, i);
            }
        }
        const std::string& qn = alg_->qname;
        if (s_.compare(pos_, qn.size(), qn) == 0) {
            pos_ += qn.size();
            last_was_q_ = true;
            return FactoredWord(alg_, QScalar::q());
        }
        if (s_[pos_] == 't' && pos_ + 1 < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_ + 1]))) {
            ++pos_;
            size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            return FactoredWord(alg_, QScalar::t(std::stoul(s_.substr(start, pos_ - start))));
        }
        fail("unknown symbol");
    }

    Algebra alg_;
    std::string s_;
    size_t pos_ = 0;
    bool last_was_q_ = false;
    std::vector<std::pair<std::string, size_t>> labels_;
};

}  // namespace

FactoredWord parse_word(const Algebra& alg, const std::string& text) { return Parser(alg, text).parse(); }

// ---------------------------------------------------------------- expansion

namespace {

class Expander {
public:
    explicit Expander(const Grading& g) : g_(g) {}

    Series expand(const NodePtr& n, const Rational& target) {
        auto it = cache_.find(n.get());
        if (it != cache_.end() && it->second.known_to(target)) return it->second.truncated(target);
        Series s = compute(n, target);
        auto& slot = cache_[n.get()];
        if (it == cache_.end() || !slot.exact_to() || (s.exact_to() && *s.exact_to() > *slot.exact_to()) ||
            !s.exact_to())
            slot = s;
        return s;
    }

private:
    Series compute(const NodePtr& n, const Rational& target) {
        switch (n->kind) {
            case Kind::Poly:
                return Series::from_element(n->poly, g_, target);
            case Kind::Sum: {
                Series r(n->kids.front()->poly.algebra(), g_);
                bool first = true;
                for (const auto& k : n->kids) {
                    Series s = expand(k, target);
                    r = first ? s : r + s;
                    first = false;
                }
                return r;
            }
            case Kind::Product:
                return product(n, target);
            case Kind::Inverse:
                return inverse(n, target);
        }
        throw ExpansionError("bad node");
    }

    Series product(const NodePtr& n, const Rational& target) {
        size_t m = n->kids.size();
        std::vector<Series> s(m);
        std::vector<Rational> v(m);
        for (size_t i = 0; i < m; ++i) {
            s[i] = expand(n->kids[i], target);
            auto vb = s[i].valuation_bound();
            if (!vb) return Series(s[i].algebra(), g_);
            v[i] = *vb;
        }
        for (int round = 0; round < 6; ++round) {
            bool changed = false;
            Rational total;
            for (const auto& x : v) total += x;
            for (size_t i = 0; i < m; ++i) {
                Rational need = target - (total - v[i]);
                if (!s[i].known_to(need)) {
                    s[i] = expand(n->kids[i], need);
                    auto vb = s[i].valuation_bound();
                    if (!vb) return Series(s[i].algebra(), g_);
                    if (*vb != v[i]) changed = true;
                    v[i] = *vb;
                }
            }
            if (!changed) break;
        }
        Rational rest;
        for (const auto& x : v) rest += x;
        Series acc = s[0];
        rest -= v[0];
        for (size_t i = 1; i < m; ++i) {
            rest -= v[i];
            acc = series_mul(acc, s[i], target - rest);
        }
        return acc;
    }

    Series inverse(const NodePtr& n, const Rational& target) {
        const NodePtr& kid = n->kids.front();
        Rational probe = target;
        Series s = expand(kid, probe);
        for (int tries = 0; !s.valuation() && tries < 8; ++tries) {
            Rational step = abs(probe) + Rational(1);
            probe += step;
            s = expand(kid, probe);
        }
        auto v = s.valuation();
        if (!v) throw ExpansionError("inverse of an element with no visible leading term");
        Rational need = target + *v * Rational(2);
        if (!s.known_to(need)) s = expand(kid, need);
        return series_inverse(s, target);
    }

    Grading g_;
    std::unordered_map<const Node*, Series> cache_;
};

std::vector<Grading> candidate_gradings(size_t rank) {
    std::vector<Grading> out;
    out.push_back(Grading::standard(rank));
    const int64_t primes[] = {7, 11, 13, 17, 19, 23};
    for (int64_t p : primes) {
        Grading g;
        for (size_t i = 0; i < rank; ++i) g.w.push_back(Rational(1) + Rational(static_cast<int64_t>(i) * 3, p));
        out.push_back(g);
    }
    for (int64_t p : primes) {
        Grading g;
        for (size_t i = 0; i < rank; ++i) {
            Rational x = Rational(1) + Rational(static_cast<int64_t>(i) * 2, p);
            g.w.push_back(i % 2 ? -x : x);
        }
        out.push_back(g);
    }
    return out;
}

}  // namespace

Series expand_word(const FactoredWord& w, const Grading& g, const Rational& order) {
    Rational target = order;
    for (int tries = 0; tries < 6; ++tries) {
        Expander ex(g);
        Series s = ex.expand(w.root(), target);
        if (s.known_to(order)) return s.truncated(order);
        target += Rational(1) + abs(order);
    }
    throw ExpansionError("could not reach the requested order");
}

bool words_equal_along(const FactoredWord& w1, const FactoredWord& w2, const Grading& g, const Rational& order) {
    FactoredWord d = w1 * w2.inverse() - FactoredWord(w1.algebra(), QScalar(1));
    return expand_word(d, g, order).zero_to(order);
}

bool words_equal(const FactoredWord& w1, const FactoredWord& w2, int order) {
    std::string last;
    for (const auto& g : candidate_gradings(w1.algebra()->rank)) {
        try {
            return words_equal_along(w1, w2, g, Rational(order));
        } catch (const ExpansionError& e) {
            last = e.what();
        }
    }
    throw ExpansionError("no admissible grading: " + last);
}

}  // namespace qca
