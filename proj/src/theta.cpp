#include "qca/theta.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "json.hpp"

namespace qca {

namespace {

using RV = std::vector<Rational>;

Rational cross2(const RV& a, const RV& b) { return a[0] * b[1] - a[1] * b[0]; }

RV rv(const LVec& v) { return {Rational(v[0]), Rational(v[1])}; }

RV rv(const Point& p) { return {p.first, p.second}; }

struct Hit {
    Rational s;
    size_t wall;
    Point at;
};

// walls met by p + s*dir for s > 0, nearest first (several when collinear)
std::vector<Hit> next_hits(const Diagram& d, const RV& p, const LVec& dir) {
    RV m = rv(dir);
    if (cross2(p, m).is_zero() && (p[0] * m[0] + p[1] * m[1]) < Rational(0))
        throw std::domain_error("a broken line passes through the origin; choose a generic basepoint");
    std::vector<Hit> hits;
    for (size_t i = 0; i < d.walls.size(); ++i) {
        const Wall& w = d.walls[i];
        std::vector<LVec> rays = {w.ray};
        if (w.line) rays.push_back(lv_neg(w.ray));
        for (const auto& r0 : rays) {
            RV r = rv(r0);
            Rational den = cross2(m, r);
            if (den.is_zero()) continue;
            Rational s = cross2(r, p) / den;
            Rational t = cross2(p, m) / cross2(r, m);
            if (s <= Rational(0) || t <= Rational(0)) continue;
            hits.push_back({s, i, {t * r[0], t * r[1]}});
        }
    }
    std::sort(hits.begin(), hits.end(), [](const Hit& a, const Hit& b) {
        if (a.s != b.s) return a.s < b.s;
        return a.wall < b.wall;
    });
    std::vector<Hit> out;
    for (const auto& h : hits)
        if (out.empty() || h.s == out.front().s) out.push_back(h);
    return out;
}

bool on_wall(const Diagram& d, const RV& q) {
    for (const auto& w : d.walls) {
        std::vector<LVec> rays = {w.ray};
        if (w.line) rays.push_back(lv_neg(w.ray));
        for (const auto& r0 : rays) {
            RV r = rv(r0);
            if (cross2(q, r).is_zero() && q[0] * r[0] + q[1] * r[1] >= Rational(0)) return true;
        }
    }
    return false;
}

struct Backward {
    LVec exponent;  // exponent before the crossing, in travel order
    BrokenLineCrossing crossing;
};

}  // namespace

size_t BrokenLine::bends() const {
    size_t n = 0;
    for (const auto& c : crossings)
        if (c.power > 0) ++n;
    return n;
}

Rational broken_line_budget(const ScatterData& data, const LVec& m0, int order, const std::optional<LVec>& filter) {
    if (filter) return data.degree(lv_sub(*filter, m0));
    return Rational(order);
}

std::vector<BrokenLine> enumerate_broken_lines(const LVec& m0, const Point& Q, const Diagram& d, const Rational& budget,
                                               const std::optional<LVec>& filter) {
    const ScatterData& data = *d.data;
    RV q = rv(Q);
    if (on_wall(d, q)) throw std::invalid_argument("basepoint lies on a wall");
    std::vector<LVec> finals;
    if (filter) {
        finals.push_back(*filter);
    } else {
        // m0 + p1*(n) with n >= 0 and degree within budget
        int64_t amax[2];
        for (size_t i = 0; i < 2; ++i)
            amax[i] = data.fixed->is_unfrozen(i) ? (budget / data.degree(data.pstar[i])).floor() : 0;
        for (int64_t a = 0; a <= amax[0]; ++a)
            for (int64_t b = 0; b <= amax[1]; ++b)
                if (data.degree(data.mono({a, b})) <= budget) finals.push_back(lv_add(m0, data.mono({a, b})));
        std::sort(finals.begin(), finals.end());
        finals.erase(std::unique(finals.begin(), finals.end()), finals.end());
    }
    std::vector<BrokenLine> out;
    std::vector<Backward> stack;
    // trace backward in time from p with current exponent m and accumulated coefficient c
    std::function<void(const RV&, const LVec&, const QScalar&)> trace = [&](const RV& p, const LVec& m,
                                                                            const QScalar& c) {
        Rational remaining = data.degree(lv_sub(m, m0));
        if (remaining < Rational(0)) return;
        auto hits = next_hits(d, p, m);
        if (hits.empty()) {
            if (m != m0) return;
            BrokenLine bl;
            bl.m0 = m0;
            bl.endpoint = Q;
            for (auto it = stack.rbegin(); it != stack.rend(); ++it) bl.crossings.push_back(it->crossing);
            // rebuild decorated segments forward
            LVec cur = m0;
            QScalar coef(1);
            std::optional<Point> start;
            for (size_t i = 0; i < bl.crossings.size(); ++i) {
                const auto& cr = bl.crossings[i];
                if (cr.power == 0) continue;
                const Wall& w = d.walls[cr.wall];
                auto F = wall_factor(data, w, cur, cr.sign, cr.power);
                QScalar f = F[cr.power];
                if (data.quantum) f = f.times_q(data.alg->omega(cur, w.mdir) * Rational(cr.power));
                bl.segments.push_back({cur, coef, start, cr.at});
                coef *= f;
                cur = lv_add(cur, lv_scale(w.mdir, cr.power));
                start = cr.at;
            }
            bl.segments.push_back({cur, coef, start, Q});
            out.push_back(std::move(bl));
            return;
        }
        Point at = hits.front().at;
        RV x = rv(at);
        // process the collinear group one wall at a time
        std::function<void(size_t, const LVec&, const QScalar&)> group = [&](size_t gi, const LVec& mm,
                                                                             const QScalar& cc) {
            if (gi == hits.size()) {
                trace(x, mm, cc);
                return;
            }
            const Wall& w = d.walls[hits[gi].wall];
            int sign = data.pairing(w.normal, mm).sign();
            if (sign == 0) throw std::logic_error("broken line runs along a wall");
            Rational dm = data.degree(w.mdir);
            Rational rem = data.degree(lv_sub(mm, m0));
            int64_t J = rem < Rational(0) ? -1 : (rem / dm).floor();
            for (int64_t j = 0; j <= J; ++j) {
                LVec prev = lv_sub(mm, lv_scale(w.mdir, j));
                QScalar f(1);
                if (j > 0) {
                    auto F = wall_factor(data, w, prev, sign, j);
                    f = F[j];
                    if (f.is_zero()) continue;
                    if (data.quantum) f = f.times_q(data.alg->omega(prev, w.mdir) * Rational(j));
                }
                stack.push_back({prev, {hits[gi].wall, at, sign, j}});
                group(gi + 1, prev, cc * f);
                stack.pop_back();
            }
        };
        group(0, m, c);
    };
    for (const auto& mf : finals) {
        if (data.degree(lv_sub(mf, m0)) > budget) continue;
        trace(q, mf, QScalar(1));
    }
    std::sort(out.begin(), out.end(), [](const BrokenLine& a, const BrokenLine& b) {
        auto key = [](const BrokenLine& l) {
            std::vector<int64_t> k;
            for (const auto& c : l.crossings) {
                k.push_back(static_cast<int64_t>(c.wall));
                k.push_back(c.power);
            }
            return std::make_pair(l.final_exponent(), k);
        };
        return key(a) < key(b);
    });
    return out;
}

Terms theta_function(const LVec& m0, const Point& Q, const Diagram& d, const Rational& budget) {
    Terms t;
    for (const auto& bl : enumerate_broken_lines(m0, Q, d, budget)) {
        auto it = t.find(bl.final_exponent());
        if (it == t.end()) {
            t.emplace(bl.final_exponent(), bl.final_coeff());
        } else {
            it->second += bl.final_coeff();
            if (it->second.is_zero()) t.erase(it);
        }
    }
    return t;
}

LVec greedy_T(const LVec& m, int64_t c) {
    if (m[0] >= 0) return m;
    return {m[0], m[1] + c * m[0]};
}

std::string theta_str(const ScatterData& data, const Terms& t) {
    if (t.empty()) return "0";
    std::string s;
    for (const auto& [m, c] : t) {
        std::string term = weyl_term_str(data, m, c);
        if (s.empty())
            s = term;
        else if (term[0] == '-')
            s += " - " + term.substr(1);
        else
            s += " + " + term;
    }
    return s;
}

namespace {

nlohmann::json point_json(const Point& p) { return {p.first.str(), p.second.str()}; }

}  // namespace

std::string broken_lines_json(const Diagram& d, const std::vector<BrokenLine>& lines) {
    const ScatterData& data = *d.data;
    nlohmann::json j = nlohmann::json::array();
    for (const auto& bl : lines) {
        nlohmann::json lj;
        lj["initial_exponent"] = bl.m0;
        lj["endpoint"] = point_json(bl.endpoint);
        lj["final_exponent"] = bl.final_exponent();
        lj["final_decoration"] = weyl_term_str(data, bl.final_exponent(), bl.final_coeff());
        lj["segments"] = nlohmann::json::array();
        for (const auto& s : bl.segments)
            lj["segments"].push_back({{"exponent", s.exponent},
                                      {"decoration", weyl_term_str(data, s.exponent, s.coeff)},
                                      {"start", s.start ? point_json(*s.start) : nlohmann::json(nullptr)},
                                      {"end", point_json(s.end)}});
        lj["crossings"] = nlohmann::json::array();
        for (const auto& c : bl.crossings)
            lj["crossings"].push_back({{"wall_normal", d.walls[c.wall].normal},
                                       {"at", point_json(c.at)},
                                       {"sign", c.sign},
                                       {"power", c.power}});
        j.push_back(lj);
    }
    return j.dump(2);
}

std::vector<PolyLine> broken_line_polylines(const Diagram& d, const std::vector<BrokenLine>& lines, double extent) {
    std::vector<PolyLine> out;
    for (const auto& bl : lines) {
        PolyLine pl;
        const auto& first = bl.segments.front();
        // the unbounded segment arrives from the direction +m0
        Rational far(static_cast<int64_t>(std::ceil(extent)) * 2);
        pl.points.push_back({first.end.first + far * Rational(bl.m0[0]), first.end.second + far * Rational(bl.m0[1])});
        for (const auto& s : bl.segments) pl.points.push_back(s.end);
        pl.label = weyl_term_str(*d.data, bl.final_exponent(), bl.final_coeff());
        out.push_back(pl);
    }
    return out;
}

}  // namespace qca
