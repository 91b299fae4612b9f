#include "qca/scatter.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "json.hpp"
#include "qca/duality.hpp"
#include "qca/mutation.hpp"

namespace qca {

namespace {

using USeries = std::vector<QScalar>;

USeries u_mul(const USeries& a, const USeries& b, int64_t J) {
    USeries r(J + 1, QScalar(0));
    for (int64_t i = 0; i <= J && i < static_cast<int64_t>(a.size()); ++i) {
        if (a[i].is_zero()) continue;
        for (int64_t j = 0; i + j <= J && j < static_cast<int64_t>(b.size()); ++j)
            if (!b[j].is_zero()) r[i + j] += a[i] * b[j];
    }
    return r;
}

// a[0] = 1
USeries u_inv(const USeries& a, int64_t J) {
    USeries b(J + 1, QScalar(0));
    b[0] = QScalar(1);
    for (int64_t n = 1; n <= J; ++n) {
        QScalar s(0);
        for (int64_t k = 1; k <= n && k < static_cast<int64_t>(a.size()); ++k)
            if (!a[k].is_zero()) s += a[k] * b[n - k];
        b[n] = -s;
    }
    return b;
}

USeries u_pow(const USeries& a, int64_t e, int64_t J) {
    USeries base = e < 0 ? u_inv(a, J) : a;
    base.resize(J + 1, QScalar(0));
    USeries r(J + 1, QScalar(0));
    r[0] = QScalar(1);
    for (int64_t i = 0; i < std::abs(e); ++i) r = u_mul(r, base, J);
    return r;
}

// a[0] = 0
USeries u_exp(const USeries& a, int64_t J) {
    USeries e(J + 1, QScalar(0));
    e[0] = QScalar(1);
    for (int64_t n = 1; n <= J; ++n) {
        QScalar s(0);
        for (int64_t k = 1; k <= n && k < static_cast<int64_t>(a.size()); ++k)
            if (!a[k].is_zero()) s += QScalar(k) * a[k] * e[n - k];
        e[n] = s / QScalar(n);
    }
    return e;
}

QScalar vpow(const Rational& e) { return QScalar::q(e); }

QScalar v_minus_vinv() { return vpow(Rational(1)) - vpow(Rational(-1)); }

// log coefficients of Psi_{v^s}
QScalar dilog_log_coeff(int64_t s, int64_t j) {
    QScalar den = QScalar(j) * (vpow(Rational(s * j)) - vpow(Rational(-s * j)));
    return QScalar(j % 2 ? 1 : -1) * v_minus_vinv() / den;
}

std::vector<Rational> to_rvec(const LVec& v) {
    std::vector<Rational> r;
    for (auto x : v) r.emplace_back(x);
    return r;
}

Rational cross(const std::vector<Rational>& a, const std::vector<Rational>& b) { return a[0] * b[1] - a[1] * b[0]; }

Rational dot(const std::vector<Rational>& a, const std::vector<Rational>& b) { return a[0] * b[0] + a[1] * b[1]; }

int half(const std::vector<Rational>& v) {
    return (v[1] > Rational(0) || (v[1].is_zero() && v[0] > Rational(0))) ? 0 : 1;
}

bool angle_less(const std::vector<Rational>& a, const std::vector<Rational>& b) {
    int ha = half(a), hb = half(b);
    if (ha != hb) return ha < hb;
    return cross(a, b) > Rational(0);
}

int64_t gcd_vec(const LVec& v) {
    int64_t g = 0;
    for (auto x : v) g = gcd64(g, std::abs(x));
    return g;
}

void add_into(Terms& acc, const LVec& m, const QScalar& c) {
    if (c.is_zero()) return;
    auto it = acc.find(m);
    if (it == acc.end()) {
        acc.emplace(m, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) acc.erase(it);
}

}  // namespace

Rational ScatterData::degree(const LVec& m) const {
    Rational r;
    for (size_t i = 0; i < m.size(); ++i) r += weights[i] * Rational(m[i]);
    return r;
}

Rational ScatterData::pairing(const LVec& n, const LVec& m) const {
    Rational r;
    for (size_t i = 0; i < n.size(); ++i) r += Rational(n[i] * m[i], fixed->d[i]);
    return r;
}

LVec ScatterData::mono(const LVec& n) const {
    LVec m(2, 0);
    for (size_t i = 0; i < n.size(); ++i) m = lv_add(m, lv_scale(pstar[i], n[i]));
    return m;
}

std::optional<LVec> ScatterData::preimage(const LVec& m) const {
    Rational det = Rational(pstar[0][0] * pstar[1][1] - pstar[0][1] * pstar[1][0]);
    if (det.is_zero()) return std::nullopt;
    // m = n1 p1 + n2 p2
    Rational n1 = Rational(m[0] * pstar[1][1] - m[1] * pstar[1][0]) / det;
    Rational n2 = Rational(pstar[0][0] * m[1] - pstar[0][1] * m[0]) / det;
    if (!n1.is_integer() || !n2.is_integer()) return std::nullopt;
    return LVec{n1.num(), n2.num()};
}

LVec ScatterData::ncirc(const LVec& n) const {
    int64_t lam = 1;
    for (size_t i = 0; i < n.size(); ++i) {
        if (n[i] == 0) continue;
        int64_t di = fixed->d[i];
        lam = lcm64(lam, di / gcd64(di, std::abs(n[i])));
    }
    return lv_scale(n, lam);
}

ScatterDataPtr make_scatter_data(const Seed& s, bool quantum, const std::optional<RMat>& lambda,
                                 const std::optional<std::vector<Rational>>& grading) {
    if (s.rank() != 2) throw std::invalid_argument("scattering diagrams are implemented in rank 2 only");
    auto data = std::make_shared<ScatterData>();
    data->fixed = s.fixed_ptr();
    data->quantum = quantum;
    data->lcm = s.fixed().lcm_d_unfrozen();
    std::vector<size_t> uf;
    for (size_t i = 0; i < 2; ++i)
        if (s.fixed().is_unfrozen(i)) uf.push_back(i);
    for (size_t i = 0; i < 2; ++i) {
        LVec row(2);
        for (size_t j = 0; j < 2; ++j) {
            const Rational& e = s.epsilon()[i][j];
            if (!e.is_integer()) throw std::domain_error("p1* is not integral");
            row[j] = e.num();
        }
        data->pstar.push_back(row);
    }
    if (!uf.empty() && !p1_star_injective_on_unfrozen(s))
        throw std::domain_error("p1* is not injective on the unfrozen sublattice (known as the injectivity assumption)");
    if (grading) {
        if (grading->size() != 2) throw std::invalid_argument("grading must have two entries");
        for (size_t i = 0; i < 2; ++i) data->weights.push_back((*grading)[i] / Rational(s.fixed().d[i]));
    } else if (uf.size() == 2) {
        // d(p1*(n)) = n_1 + n_2
        const auto& p = data->pstar;
        Rational det = Rational(p[0][0] * p[1][1] - p[0][1] * p[1][0]);
        data->weights = {Rational(p[1][1] - p[0][1]) / det, Rational(p[0][0] - p[1][0]) / det};
    } else if (uf.size() == 1) {
        const LVec& p = data->pstar[uf[0]];
        Rational nn = Rational(p[0] * p[0] + p[1] * p[1]);
        data->weights = {Rational(p[0]) / nn, Rational(p[1]) / nn};
    } else {
        data->weights = {Rational(0), Rational(0)};
    }
    for (size_t i : uf)
        if (data->degree(data->pstar[i]) <= Rational(0))
            throw std::domain_error("grading is not positive on p1*(e_" + std::to_string(i + 1) + ")");
    auto labels = a_labels(2);
    if (quantum) {
        data->lambda = lambda ? *lambda : synthesize_lambda(s);
        auto c = check_compatible_pair(data->lambda, s);
        if (!c.ok) throw std::domain_error("no compatible pair: " + c.message);
        data->alg = a_algebra(data->lambda, labels);
    } else {
        data->alg = make_algebra(RMat(2, std::vector<Rational>(2)), labels, "v");
    }
    return data;
}

Diagram initial_diagram(ScatterDataPtr data, int order) {
    Diagram d;
    d.data = data;
    d.order = order;
    for (size_t i = 0; i < 2; ++i) {
        if (!data->fixed->is_unfrozen(i)) continue;
        Wall w;
        w.normal = lv_unit(2, i);
        w.mdir = data->pstar[i];
        w.ray = lv_unit(2, 1 - i);
        w.line = true;
        w.incoming = true;
        w.quantum = data->quantum;
        if (data->quantum) {
            int64_t s = data->lcm / data->fixed->d[i];
            w.dilog = s;
            w.coeffs.assign(std::max(order, 1) + 1, QScalar(0));
            for (int64_t j = 1; j < static_cast<int64_t>(w.coeffs.size()); ++j) w.coeffs[j] = dilog_log_coeff(s, j);
        } else {
            w.coeffs = {QScalar(0), QScalar(1)};
        }
        d.walls.push_back(w);
    }
    return d;
}

std::vector<QScalar> wall_factor(const ScatterData& data, const Wall& w, const LVec& m, int sign, int64_t J) {
    USeries f(J + 1, QScalar(0));
    f[0] = QScalar(1);
    if (J == 0) return f;
    if (!w.quantum) {
        Rational e = Rational(sign) * data.pairing(data.ncirc(w.normal), m);
        if (!e.is_integer()) throw std::logic_error("non-integral classical wall exponent");
        USeries base(J + 1, QScalar(0));
        base[0] = QScalar(1);
        for (size_t j = 1; j < w.coeffs.size() && static_cast<int64_t>(j) <= J; ++j) base[j] = w.coeffs[j];
        return u_pow(base, e.num(), J);
    }
    Rational om = data.alg->omega(w.mdir, m);
    if (w.dilog && (om / Rational(*w.dilog)).is_integer()) {
        int64_t s = *w.dilog;
        int64_t kappa = (om / Rational(s)).num();
        int64_t sk = kappa > 0 ? 1 : -1;
        int64_t power = -sk * sign;
        for (int64_t l = 1; l <= std::abs(kappa); ++l) {
            USeries b(J + 1, QScalar(0));
            b[0] = QScalar(1);
            b[1] = vpow(Rational(s * sk * (2 * l - 1)));
            f = u_mul(f, power > 0 ? b : u_inv(b, J), J);
        }
        return f;
    }
    USeries lg(J + 1, QScalar(0));
    QScalar den = v_minus_vinv();
    for (int64_t j = 1; j <= J; ++j) {
        QScalar a = w.dilog ? dilog_log_coeff(*w.dilog, j)
                            : (j < static_cast<int64_t>(w.coeffs.size()) ? w.coeffs[j] : QScalar(0));
        if (a.is_zero()) continue;
        QScalar phi = (QScalar(1) - vpow(Rational(2 * j) * om)) / den;
        lg[j] = QScalar(sign) * a * phi;
    }
    return u_exp(lg, J);
}

Terms wall_action(const ScatterData& data, const Wall& w, const LVec& m, const QScalar& c, int sign,
                  const Rational& cap) {
    Terms out;
    Rational d0 = data.degree(m);
    if (d0 > cap) return out;
    Rational dm = data.degree(w.mdir);
    int64_t J = ((cap - d0) / dm).floor();
    auto F = wall_factor(data, w, m, sign, J);
    Rational om = data.quantum ? data.alg->omega(m, w.mdir) : Rational(0);
    for (int64_t j = 0; j <= J; ++j) {
        if (F[j].is_zero()) continue;
        QScalar coef = c * F[j];
        if (data.quantum && !om.is_zero()) coef = coef.times_q(om * Rational(j));
        add_into(out, lv_add(m, lv_scale(w.mdir, j)), coef);
    }
    return out;
}

int crossing_sign(const ScatterData& data, const LVec& normal, const std::vector<Rational>& vel) {
    Rational p;
    for (size_t i = 0; i < 2; ++i) p -= Rational(normal[i]) * vel[i] / Rational(data.fixed->d[i]);
    int s = p.sign();
    if (s == 0) throw std::logic_error("path is tangent to a wall");
    return s;
}

std::vector<Crossing> loop_crossings(const Diagram& d, const LoopPath& loop) {
    const auto& s = loop.start;
    struct Item {
        std::vector<Rational> dir;
        size_t wall;
        LVec ray;
    };
    std::vector<Item> items;
    for (size_t i = 0; i < d.walls.size(); ++i) {
        const Wall& w = d.walls[i];
        std::vector<LVec> rays = {w.ray};
        if (w.line) rays.push_back(lv_neg(w.ray));
        for (const auto& r : rays) {
            auto rv = to_rvec(r);
            if (cross(s, rv).is_zero() && dot(s, rv) > Rational(0))
                throw std::invalid_argument("loop starts on a wall");
            items.push_back({rv, i, r});
        }
    }
    auto key = [&](const Item& it) { return angle_less(it.dir, s) ? 1 : 0; };
    std::stable_sort(items.begin(), items.end(), [&](const Item& a, const Item& b) {
        int ka = key(a), kb = key(b);
        if (ka != kb) return ka < kb;
        if (angle_less(a.dir, b.dir)) return true;
        if (angle_less(b.dir, a.dir)) return false;
        return a.wall < b.wall;
    });
    if (!loop.ccw) std::reverse(items.begin(), items.end());
    std::vector<Crossing> out;
    for (const auto& it : items) {
        std::vector<Rational> vel = loop.ccw ? std::vector<Rational>{-it.dir[1], it.dir[0]}
                                             : std::vector<Rational>{it.dir[1], -it.dir[0]};
        out.push_back({it.wall, crossing_sign(*d.data, d.walls[it.wall].normal, vel), it.ray});
    }
    return out;
}

Terms path_ordered_product(const Diagram& d, const LoopPath& loop, const LVec& u, const Rational& k) {
    const ScatterData& data = *d.data;
    Rational cap = data.degree(u) + k;
    Terms cur;
    cur.emplace(u, QScalar(1));
    for (const auto& c : loop_crossings(d, loop)) {
        Terms next;
        for (const auto& [m, coef] : cur)
            for (const auto& [m2, c2] : wall_action(data, d.walls[c.wall], m, coef, c.sign, cap)) add_into(next, m2, c2);
        cur = std::move(next);
    }
    return cur;
}

Diagram complete_to_order(const Diagram& d0, int order, const LoopPath& loop) {
    Diagram d = d0;
    const ScatterData& data = *d.data;
    const std::vector<LVec> tests = {{1, 0}, {0, 1}, {1, 1}};
    for (int k = 1; k <= order; ++k) {
        // relative discrepancy A^u (1 + sum R_m A^m) at degree k
        std::map<LVec, std::vector<QScalar>> disc;
        for (size_t ti = 0; ti < tests.size(); ++ti) {
            const LVec& u = tests[ti];
            Terms p = path_ordered_product(d, loop, u, Rational(k));
            for (const auto& [mu, c] : p) {
                LVec m = lv_sub(mu, u);
                if (lv_is_zero(m)) {
                    if (!c.is_one()) throw std::logic_error("loop product changes the leading term");
                    continue;
                }
                Rational dm = data.degree(m);
                if (dm < Rational(k)) throw std::logic_error("discrepancy below the current degree");
                if (dm != Rational(k)) continue;
                auto& slot = disc[m];
                slot.resize(tests.size(), QScalar(0));
                slot[ti] = data.quantum ? c.times_q(-data.alg->omega(u, m)) : c;
            }
        }
        for (const auto& [m, rs] : disc) {
            auto n = data.preimage(m);
            if (!n || (*n)[0] < 0 || (*n)[1] < 0) throw std::logic_error("discrepancy outside p1*(N+): " + lv_str(m));
            int64_t j = gcd_vec(*n);
            LVec n0 = {(*n)[0] / j, (*n)[1] / j};
            LVec mdir = data.mono(n0);
            LVec ray = lv_neg(mdir);
            std::vector<Rational> rv = to_rvec(ray);
            std::vector<Rational> vel = loop.ccw ? std::vector<Rational>{-rv[1], rv[0]} : std::vector<Rational>{rv[1], -rv[0]};
            int sigma = crossing_sign(data, n0, vel);
            std::optional<QScalar> a;
            for (size_t ti = 0; ti < tests.size(); ++ti) {
                QScalar phi;
                if (data.quantum) {
                    Rational om = data.alg->omega(mdir, tests[ti]);
                    phi = (QScalar(1) - vpow(Rational(2 * j) * om)) / v_minus_vinv();
                } else {
                    phi = QScalar(data.pairing(data.ncirc(n0), tests[ti]).num());
                }
                if (phi.is_zero()) {
                    if (!rs[ti].is_zero()) throw std::logic_error("discrepancy not cancellable by a wall");
                    continue;
                }
                QScalar cand = -rs[ti] / (QScalar(sigma) * phi);
                if (a && *a != cand) throw std::logic_error("inconsistent wall coefficient for " + lv_str(m));
                a = cand;
            }
            if (!a || a->is_zero()) continue;
            Wall* target = nullptr;
            for (auto& w : d.walls)
                if (!w.incoming && w.normal == n0) target = &w;
            if (!target) {
                Wall w;
                w.normal = n0;
                w.mdir = mdir;
                w.ray = ray;
                w.quantum = data.quantum;
                w.coeffs.assign(1, QScalar(0));
                d.walls.push_back(w);
                target = &d.walls.back();
            }
            if (static_cast<int64_t>(target->coeffs.size()) <= j) target->coeffs.resize(j + 1, QScalar(0));
            if (data.quantum) {
                target->coeffs[j] += *a;
            } else {
                int64_t J = std::max<int64_t>(static_cast<int64_t>(target->coeffs.size()) - 1, order);
                USeries f(J + 1, QScalar(0));
                f[0] = QScalar(1);
                for (size_t i = 1; i < target->coeffs.size(); ++i) f[i] = target->coeffs[i];
                USeries b(J + 1, QScalar(0));
                b[0] = QScalar(1);
                b[j] = *a;
                f = u_mul(f, b, J);
                Rational dm = data.degree(mdir);
                int64_t keep = (Rational(order) / dm).floor();
                f.resize(keep + 1, QScalar(0));
                target->coeffs = f;
                target->coeffs[0] = QScalar(0);
            }
        }
    }
    d.order = std::max(order, d0.order);
    if (data.quantum)
        for (auto& w : d.walls)
            if (w.dilog && static_cast<int>(w.coeffs.size()) < d.order + 1) {
                int64_t s = *w.dilog;
                size_t old = w.coeffs.size();
                w.coeffs.resize(d.order + 1, QScalar(0));
                for (size_t jj = std::max<size_t>(old, 1); jj < w.coeffs.size(); ++jj)
                    w.coeffs[jj] = dilog_log_coeff(s, static_cast<int64_t>(jj));
            }
    return d;
}

bool loop_is_identity(const Diagram& d, const LoopPath& loop, int64_t bound) {
    for (int64_t a = -bound; a <= bound; ++a)
        for (int64_t b = -bound; b <= bound; ++b) {
            LVec u = {a, b};
            Terms p = path_ordered_product(d, loop, u, Rational(d.order));
            if (p.size() != 1 || p.begin()->first != u || !p.begin()->second.is_one()) return false;
        }
    return true;
}

QScalar left_coefficient(const ScatterData& data, const Terms& t, const LVec& u, const LVec& m) {
    auto it = t.find(lv_add(u, m));
    if (it == t.end()) return QScalar(0);
    if (!data.quantum) return it->second;
    return it->second.times_q(-data.alg->omega(m, u));
}

QScalar a23_loop_closed_form(int64_t u1, int64_t u2) {
    auto sgn = [](int64_t x) { return x > 0 ? 1 : (x < 0 ? -1 : 0); };
    int64_t s1 = sgn(u1), s2 = sgn(u2);
    QScalar sum1(0), sum2(0), sum12(0);
    for (int64_t l = 1; l <= std::abs(u1); ++l) sum1 += vpow(Rational(s1 * 3 * (2 * l - 1)));
    for (int64_t l = 1; l <= std::abs(u2); ++l) sum2 += vpow(Rational(s2 * 2 * (2 * l - 1)));
    for (int64_t a = 1; a <= std::abs(u1); ++a)
        for (int64_t b = 1; b <= std::abs(u2); ++b) sum12 += vpow(Rational(s1 * 3 * (2 * a - 1) + s2 * 2 * (2 * b - 1)));
    QScalar g1 = vpow(Rational(-4)) + QScalar(1) + vpow(Rational(4));
    QScalar g2 = vpow(Rational(-3)) + vpow(Rational(3));
    QScalar g12 = vpow(Rational(6)) - vpow(Rational(-6));
    return QScalar(s1) * g1 * sum1 + QScalar(s2) * g2 * sum2 + QScalar(s1 * s2) * g12 * sum12;
}

std::string weyl_term_str(const ScatterData& data, const LVec& m, const QScalar& c) {
    std::string mono = render_term(*commutative_shadow(data.alg), m, QScalar(1));
    if (!data.quantum) return render_term(*data.alg, m, c);
    if (!lv_is_zero(m)) mono = "[" + mono + "]";
    if (lv_is_zero(m)) return c.str("v");
    if (c.is_one()) return mono;
    if ((-c).is_one()) return "-" + mono;
    if (c.is_polynomial() && c.num().is_monomial()) return c.str("v") + "*" + mono;
    return "(" + c.str("v") + ")*" + mono;
}

std::string wall_function_str(const ScatterData& data, const Wall& w, int terms) {
    const SkewLattice& alg = *data.alg;
    if (w.quantum && w.dilog) {
        return "Psi[v^" + std::to_string(*w.dilog) + "](" + render_term(alg, w.mdir, QScalar(1)) + ")";
    }
    std::string s;
    int shown = 0;
    bool more = false;
    for (size_t j = 1; j < w.coeffs.size(); ++j) {
        if (w.coeffs[j].is_zero()) continue;
        if (shown == terms) {
            more = true;
            break;
        }
        LVec mj = lv_scale(w.mdir, static_cast<int64_t>(j));
        std::string t = w.quantum ? weyl_term_str(data, mj, w.coeffs[j]) : render_term(alg, mj, w.coeffs[j]);
        if (s.empty())
            s = t;
        else if (t[0] == '-')
            s += " - " + t.substr(1);
        else
            s += " + " + t;
        ++shown;
    }
    if (more) s += " + ...";
    if (!w.quantum) return s.empty() ? "1" : "1 + " + s;
    return "exp((" + s + ")/(v - v^-1))";
}

namespace {

nlohmann::json poly_json(const Poly& p) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& [e, c] : p.terms()) {
        if (e.size() > 1) throw std::invalid_argument("wall coefficients must not involve t");
        out.push_back({exp_at(e, 0).str(), c});
    }
    return out;
}

Poly poly_from_json(const nlohmann::json& j) {
    Poly p;
    for (const auto& t : j) {
        Exp e{Rational::parse(t.at(0).get<std::string>())};
        exp_trim(e);
        p.add_term(e, t.at(1).get<int64_t>());
    }
    return p;
}

nlohmann::json scalar_json(const QScalar& c) { return {{"num", poly_json(c.num())}, {"den", poly_json(c.den())}}; }

QScalar scalar_from_json(const nlohmann::json& j) { return QScalar(poly_from_json(j.at("num")), poly_from_json(j.at("den"))); }

}  // namespace

std::string diagram_json(const Diagram& d) {
    const ScatterData& data = *d.data;
    nlohmann::json j;
    j["order"] = d.order;
    j["quantum"] = data.quantum;
    j["walls"] = nlohmann::json::array();
    for (const auto& w : d.walls) {
        nlohmann::json wj;
        wj["normal"] = w.normal;
        wj["ray"] = w.ray;
        wj["line"] = w.line;
        wj["incoming"] = w.incoming;
        wj["kind"] = w.quantum ? "quantum" : "classical";
        wj["dilog"] = w.dilog ? nlohmann::json(*w.dilog) : nlohmann::json(nullptr);
        wj["function"] = wall_function_str(data, w, 1000);
        nlohmann::json rendered = nlohmann::json::array(), exact = nlohmann::json::array();
        for (size_t i = 1; i < w.coeffs.size(); ++i) {
            rendered.push_back(w.coeffs[i].str("v"));
            exact.push_back(scalar_json(w.coeffs[i]));
        }
        if (w.quantum) {
            wj["log_coeffs"] = rendered;
        } else {
            nlohmann::json ft = nlohmann::json::array({"1"});
            for (size_t i = 1; i < w.coeffs.size(); ++i)
                if (!w.coeffs[i].is_zero())
                    ft.push_back(render_term(*data.alg, lv_scale(w.mdir, static_cast<int64_t>(i)), w.coeffs[i]));
            wj["function_terms"] = ft;
        }
        wj["coeffs_exact"] = exact;
        j["walls"].push_back(wj);
    }
    return j.dump(2);
}

Diagram diagram_from_json(ScatterDataPtr data, const std::string& text) {
    auto j = nlohmann::json::parse(text);
    Diagram d;
    d.data = data;
    d.order = j.at("order").get<int>();
    if (j.at("quantum").get<bool>() != data->quantum) throw std::invalid_argument("diagram kind does not match the seed data");
    for (const auto& wj : j.at("walls")) {
        Wall w;
        w.normal = wj.at("normal").get<LVec>();
        w.ray = wj.at("ray").get<LVec>();
        w.line = wj.at("line").get<bool>();
        w.incoming = wj.at("incoming").get<bool>();
        w.quantum = wj.at("kind").get<std::string>() == "quantum";
        if (!wj.at("dilog").is_null()) w.dilog = wj.at("dilog").get<int64_t>();
        w.mdir = data->mono(w.normal);
        w.coeffs.assign(1, QScalar(0));
        for (const auto& c : wj.at("coeffs_exact")) w.coeffs.push_back(scalar_from_json(c));
        d.walls.push_back(w);
    }
    return d;
}

bool diagrams_equal(const Diagram& a, const Diagram& b) {
    if (a.order != b.order || a.walls.size() != b.walls.size()) return false;
    for (size_t i = 0; i < a.walls.size(); ++i) {
        const Wall &x = a.walls[i], &y = b.walls[i];
        if (x.normal != y.normal || x.ray != y.ray || x.line != y.line || x.incoming != y.incoming ||
            x.quantum != y.quantum || x.dilog != y.dilog || x.coeffs.size() != y.coeffs.size())
            return false;
        for (size_t j = 1; j < x.coeffs.size(); ++j)
            if (x.coeffs[j] != y.coeffs[j]) return false;
    }
    return true;
}

namespace {

std::string fmt(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", std::abs(x) < 0.005 ? 0.0 : x);
    return buf;
}

std::string xml_escape(const std::string& s) {
    std::string o;
    for (char c : s) {
        if (c == '<')
            o += "&lt;";
        else if (c == '>')
            o += "&gt;";
        else if (c == '&')
            o += "&amp;";
        else
            o += c;
    }
    return o;
}

double to_double(const Rational& r) { return static_cast<double>(r.num()) / static_cast<double>(r.den()); }

}  // namespace

std::string diagram_svg(const Diagram& d, const SvgOptions& opt, const std::vector<PolyLine>& overlay) {
    double half_px = opt.size / 2.0;
    double scale = half_px / opt.extent;
    auto px = [&](double x) { return fmt(half_px + x * scale); };
    auto py = [&](double y) { return fmt(half_px - y * scale); };
    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << opt.size << "\" height=\"" << opt.size
       << "\" viewBox=\"0 0 " << opt.size << " " << opt.size << "\">\n";
    os << "<rect class=\"frame\" x=\"0\" y=\"0\" width=\"" << opt.size << "\" height=\"" << opt.size
       << "\" fill=\"white\" stroke=\"black\"/>\n";
    if (d.walls.empty()) {
        os << "<line class=\"axis\" x1=\"0\" y1=\"" << fmt(half_px) << "\" x2=\"" << opt.size << "\" y2=\"" << fmt(half_px)
           << "\" stroke=\"#bbbbbb\"/>\n";
        os << "<line class=\"axis\" x1=\"" << fmt(half_px) << "\" y1=\"0\" x2=\"" << fmt(half_px) << "\" y2=\"" << opt.size
           << "\" stroke=\"#bbbbbb\"/>\n";
    }
    for (const auto& w : d.walls) {
        std::vector<LVec> rays = {w.ray};
        if (w.line) rays.push_back(lv_neg(w.ray));
        std::string label = xml_escape(wall_function_str(*d.data, w, 3));
        for (const auto& r : rays) {
            double len = std::sqrt(double(r[0]) * r[0] + double(r[1]) * r[1]);
            double ux = r[0] / len, uy = r[1] / len;
            double L = opt.extent * 0.95;
            os << "<line class=\"wall\" x1=\"" << px(0) << "\" y1=\"" << py(0) << "\" x2=\"" << px(ux * L) << "\" y2=\""
               << py(uy * L) << "\" stroke=\"black\" stroke-width=\"1.5\"/>\n";
            os << "<text class=\"wall-label\" x=\"" << px(ux * L * 0.8) << "\" y=\"" << py(uy * L * 0.8)
               << "\" font-size=\"11\">" << label << "</text>\n";
        }
    }
    for (const auto& pl : overlay) {
        os << "<polyline class=\"broken-line\" fill=\"none\" stroke=\"blue\" stroke-width=\"1.5\" points=\"";
        for (size_t i = 0; i < pl.points.size(); ++i)
            os << (i ? " " : "") << px(to_double(pl.points[i].first)) << "," << py(to_double(pl.points[i].second));
        os << "\"/>\n";
        if (!pl.label.empty() && !pl.points.empty())
            os << "<text class=\"broken-line-label\" x=\"" << px(to_double(pl.points.back().first)) << "\" y=\""
               << py(to_double(pl.points.back().second)) << "\" font-size=\"11\" fill=\"blue\">" << xml_escape(pl.label)
               << "</text>\n";
    }
    os << "</svg>\n";
    return os.str();
}

}  // namespace qca
