#include "qca/mutation.hpp"

#include <map>
#include <sstream>

#include "json.hpp"

namespace qca {

MutationMode parse_mode(const std::string& s) {
    static const std::map<std::string, MutationMode> modes = {
        {"x-classical", MutationMode::XClassical}, {"x-family", MutationMode::XFamily},
        {"x-quantum", MutationMode::XQuantum},     {"x-quantum-coeff", MutationMode::XQuantumCoeff},
        {"a-classical", MutationMode::AClassical}, {"a-prin", MutationMode::APrin},
        {"a-quantum", MutationMode::AQuantum}};
    auto it = modes.find(s);
    if (it == modes.end()) throw std::invalid_argument("unknown mode '" + s + "'");
    return it->second;
}

std::string mode_name(MutationMode m) {
    switch (m) {
        case MutationMode::XClassical: return "x-classical";
        case MutationMode::XFamily: return "x-family";
        case MutationMode::XQuantum: return "x-quantum";
        case MutationMode::XQuantumCoeff: return "x-quantum-coeff";
        case MutationMode::AClassical: return "a-classical";
        case MutationMode::APrin: return "a-prin";
        case MutationMode::AQuantum: return "a-quantum";
    }
    return "";
}

bool mode_is_quantum(MutationMode m) {
    return m == MutationMode::XQuantum || m == MutationMode::XQuantumCoeff || m == MutationMode::AQuantum;
}

bool mode_has_coefficients(MutationMode m) {
    return m == MutationMode::XFamily || m == MutationMode::XQuantumCoeff || m == MutationMode::APrin ||
           m == MutationMode::AQuantum;
}

bool mode_is_a_side(MutationMode m) {
    return m == MutationMode::AClassical || m == MutationMode::APrin || m == MutationMode::AQuantum;
}

QScalar t_power(const LVec& v) { return QScalar::t_monomial(v); }

LVec positive_part(const LVec& v) {
    LVec r(v.size());
    for (size_t i = 0; i < v.size(); ++i) r[i] = std::max<int64_t>(v[i], 0);
    return r;
}

Algebra x_algebra(const Seed& s, const std::string& qname) {
    return make_algebra(s.epsilon_hat(), s.fixed().labels, qname);
}

Algebra a_algebra(const RMat& lambda, const std::vector<std::string>& labels, const std::string& vname) {
    RMat f = lambda;
    for (auto& row : f)
        for (auto& x : row) x = -x;
    return make_algebra(f, labels, vname);
}

namespace {

void check_k(const Seed& s, size_t k) {
    if (k >= s.rank()) throw std::invalid_argument("mutation index out of range");
    if (!s.fixed().is_unfrozen(k)) throw std::invalid_argument("cannot mutate at frozen index " + std::to_string(k + 1));
}

int64_t sgn(int64_t x) { return x > 0 ? 1 : (x < 0 ? -1 : 0); }

std::vector<CommutativeRational> x_classical_impl(const Seed& s, size_t k, bool coeff) {
    check_k(s, k);
    size_t n = s.rank();
    const LVec& ck = s.cvectors()[k];
    std::vector<CommutativeRational> out;
    for (size_t i = 0; i < n; ++i) {
        if (i == k) {
            out.push_back(CommutativeRational::variable(n, k, -1));
            continue;
        }
        int64_t e = s.eps(i, k);
        CommutativeRational xi = CommutativeRational::variable(n, i);
        if (e == 0) {
            out.push_back(xi);
            continue;
        }
        int64_t sg = sgn(e);
        QScalar a = coeff ? t_power(positive_part(lv_scale(ck, sg))) : QScalar(1);
        QScalar b = coeff ? t_power(positive_part(lv_scale(ck, -sg))) : QScalar(1);
        CommutativeRational f = CommutativeRational(n, a) + CommutativeRational::variable(n, k, -sg) *
                                                               CommutativeRational(n, b);
        out.push_back(xi * f.pow(-e));
    }
    return out;
}

}  // namespace

std::vector<CommutativeRational> mutate_x_classical(const Seed& s, size_t k) { return x_classical_impl(s, k, false); }

std::vector<CommutativeRational> mutate_x_family(const Seed& s, size_t k) { return x_classical_impl(s, k, true); }

std::vector<CommutativeRational> mutate_a_classical(const Seed& s, size_t k, bool principal) {
    check_k(s, k);
    size_t n = s.rank();
    const LVec& ck = s.cvectors()[k];
    std::vector<CommutativeRational> out;
    for (size_t i = 0; i < n; ++i) out.push_back(CommutativeRational::variable(n, i));
    LVec plus(n, 0), minus(n, 0);
    for (size_t j = 0; j < n; ++j) {
        int64_t e = s.eps(k, j);
        if (e > 0) plus[j] = e;
        if (e < 0) minus[j] = -e;
    }
    QScalar a = principal ? t_power(positive_part(ck)) : QScalar(1);
    QScalar b = principal ? t_power(positive_part(lv_neg(ck))) : QScalar(1);
    out[k] = CommutativeRational::variable(n, k, -1) *
             (CommutativeRational::monomial(n, plus, a) + CommutativeRational::monomial(n, minus, b));
    return out;
}

std::vector<FactoredWord> mutate_x_quantum(const Seed& s, size_t k, bool with_coefficients) {
    check_k(s, k);
    Algebra alg = x_algebra(s);
    size_t n = s.rank();
    const LVec& ck = s.cvectors()[k];
    Rational qk(1, s.fixed().d[k]);
    std::vector<FactoredWord> out;
    for (size_t i = 0; i < n; ++i) {
        if (i == k) {
            out.push_back(FactoredWord::generator(alg, k, -1));
            continue;
        }
        int64_t e = s.eps(i, k);
        FactoredWord xi = FactoredWord::generator(alg, i);
        if (e == 0) {
            out.push_back(xi);
            continue;
        }
        int64_t sg = sgn(e);
        QScalar a = with_coefficients ? t_power(positive_part(lv_scale(ck, sg))) : QScalar(1);
        QScalar b = with_coefficients ? t_power(positive_part(lv_scale(ck, -sg))) : QScalar(1);
        QTorusElement prod(alg, QScalar(1));
        for (int64_t l = 1; l <= std::abs(e); ++l) {
            QTorusElement f(alg, a);
            f.add_term(lv_scale(lv_unit(n, k), -sg), b * QScalar::q(qk * Rational(2 * l - 1)));
            prod = prod * f;
        }
        out.push_back(xi * FactoredWord(prod).pow(-sg));
    }
    return out;
}

std::vector<FactoredWord> mu_sharp(const Seed& s, size_t k, bool with_coefficients) {
    check_k(s, k);
    Algebra alg = x_algebra(s);
    size_t n = s.rank();
    QScalar tau = with_coefficients ? t_power(s.cvectors()[k]) : QScalar(1);
    Rational qk(1, s.fixed().d[k]);
    std::vector<FactoredWord> out;
    for (size_t i = 0; i < n; ++i) {
        FactoredWord xi = FactoredWord::generator(alg, i);
        int64_t e = i == k ? 0 : s.eps(i, k);
        if (e == 0) {
            out.push_back(xi);
            continue;
        }
        QTorusElement prod(alg, QScalar(1));
        for (int64_t l = 1; l <= std::abs(e); ++l) {
            int64_t p = e < 0 ? 2 * l - 1 : 1 - 2 * l;
            QTorusElement f(alg, QScalar(1));
            f.add_term(lv_unit(n, k), tau * QScalar::q(qk * Rational(p)));
            prod = prod * f;
        }
        out.push_back(e < 0 ? xi * FactoredWord(prod) : xi * FactoredWord(prod).inverse());
    }
    return out;
}

std::vector<FactoredWord> mu_prime(const Seed& s, size_t k, bool with_coefficients) {
    check_k(s, k);
    Algebra alg = x_algebra(s);
    size_t n = s.rank();
    LVec neg_c = positive_part(lv_neg(s.cvectors()[k]));
    std::vector<FactoredWord> out;
    for (size_t i = 0; i < n; ++i) {
        if (i == k) {
            out.push_back(FactoredWord::generator(alg, k, -1));
            continue;
        }
        int64_t e = s.eps(i, k);
        int64_t ep = std::max<int64_t>(e, 0);
        QScalar c = with_coefficients ? t_power(lv_scale(neg_c, -e)) : QScalar(1);
        c = c.times_q(-s.epsilon_hat()[i][k] * Rational(ep));
        out.push_back(c * FactoredWord::generator(alg, i) * FactoredWord::generator(alg, k, ep));
    }
    return out;
}

std::vector<FactoredWord> mutate_a_quantum(const Seed& s, const RMat& lambda, size_t k, bool with_coefficients) {
    check_k(s, k);
    size_t n = s.rank();
    std::vector<std::string> labels;
    for (size_t i = 0; i < n; ++i) labels.push_back("A" + std::to_string(i + 1));
    Algebra alg = a_algebra(lambda, labels);
    const LVec& ck = s.cvectors()[k];
    std::vector<FactoredWord> out;
    for (size_t i = 0; i < n; ++i) out.push_back(FactoredWord::generator(alg, i));
    LVec plus(n, 0), minus(n, 0);
    plus[k] = minus[k] = -1;
    for (size_t j = 0; j < n; ++j) {
        int64_t e = s.eps(k, j);
        if (e > 0) plus[j] += e;
        if (e < 0) minus[j] -= e;
    }
    QScalar a = with_coefficients ? t_power(positive_part(ck)) : QScalar(1);
    QScalar b = with_coefficients ? t_power(positive_part(lv_neg(ck))) : QScalar(1);
    QTorusElement img = QTorusElement::monomial(alg, plus, a) + QTorusElement::monomial(alg, minus, b);
    out[k] = FactoredWord(img);
    return out;
}

RMat mutate_lambda(const RMat& lambda, const Seed& s, size_t k) {
    size_t n = s.rank();
    RMat e(n, std::vector<Rational>(n));
    for (size_t i = 0; i < n; ++i) e[i][i] = Rational(1);
    e[k][k] = Rational(-1);
    for (size_t i = 0; i < n; ++i)
        if (i != k) e[i][k] = Rational(std::max<int64_t>(-s.eps(k, i), 0));
    RMat le(n, std::vector<Rational>(n)), out(n, std::vector<Rational>(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            for (size_t m = 0; m < n; ++m) le[i][j] += lambda[i][m] * e[m][j];
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            for (size_t m = 0; m < n; ++m) out[i][j] += e[m][i] * le[m][j];
    return out;
}

namespace {

using PowCache = std::map<std::pair<size_t, int64_t>, CommutativeRational>;

CommutativeRational evaluate_poly(const Poly& p, size_t nx, const std::vector<CommutativeRational>& vals,
                                  PowCache& cache) {
    size_t nt = vals.empty() ? 0 : vals[0].nx();
    CommutativeRational acc(nt, QScalar(0));
    for (const auto& [e, c] : p.terms()) {
        CommutativeRational term(nt, QScalar(1));
        for (size_t v = 1; v <= nx && v < e.size(); ++v) {
            if (e[v].is_zero()) continue;
            if (!e[v].is_integer()) throw std::domain_error("fractional power of a cluster variable");
            auto key = std::make_pair(v - 1, e[v].num());
            auto it = cache.find(key);
            if (it == cache.end()) it = cache.emplace(key, vals[v - 1].pow(e[v].num())).first;
            term *= it->second;
        }
        Exp sc(1);
        sc[0] = exp_at(e, 0);
        for (size_t j = nx + 1; j < e.size(); ++j) {
            sc.resize(j - nx + 1);
            sc[j - nx] = e[j];
        }
        exp_trim(sc);
        acc += term * CommutativeRational(nt, QScalar(Poly::monomial(sc, c)));
    }
    return acc;
}

}  // namespace

std::vector<CommutativeRational> compose_classical(const std::vector<CommutativeRational>& images,
                                                   const std::vector<CommutativeRational>& current) {
    std::vector<CommutativeRational> out;
    PowCache cache;
    for (const auto& im : images) {
        size_t nx = im.nx();
        out.push_back(evaluate_poly(im.num(), nx, current, cache) / evaluate_poly(im.den(), nx, current, cache));
    }
    return out;
}

namespace {

std::vector<std::string> side_labels(const Seed& s, bool a_side) {
    std::vector<std::string> labels;
    for (size_t i = 0; i < s.rank(); ++i) {
        if (a_side)
            labels.push_back("A" + std::to_string(i + 1));
        else
            labels.push_back(i < s.fixed().labels.size() ? s.fixed().labels[i] : "X" + std::to_string(i + 1));
    }
    return labels;
}

}  // namespace

MutationTable apply_mutation_sequence(const Seed& s0, const std::vector<size_t>& seq, MutationMode mode,
                                      const std::optional<RMat>& lambda) {
    MutationTable t;
    t.mode = mode;
    bool a_side = mode_is_a_side(mode);
    t.labels = side_labels(s0, a_side);
    size_t n = s0.rank();
    bool quantum = mode_is_quantum(mode);
    bool coeff = mode_has_coefficients(mode);
    if (mode == MutationMode::AQuantum && !lambda) throw std::invalid_argument("a-quantum mode needs a compatible Lambda");

    Algebra init_alg;
    std::vector<FactoredWord> qcur;
    std::vector<CommutativeRational> ccur;
    std::optional<RMat> lam = lambda;
    if (quantum) {
        init_alg = a_side ? a_algebra(*lam, t.labels) : x_algebra(s0);
        for (size_t i = 0; i < n; ++i) qcur.push_back(FactoredWord::generator(init_alg, i));
    } else {
        for (size_t i = 0; i < n; ++i) ccur.push_back(CommutativeRational::variable(n, i));
    }

    auto record = [&](size_t step, std::optional<size_t> k, const Seed& s) {
        TableRow row{step, k, s, {}};
        if (quantum) {
            for (const auto& w : qcur) row.variables.push_back(w.str());
            t.quantum.push_back(qcur);
        } else {
            for (const auto& c : ccur) row.variables.push_back(c.str(t.labels));
            t.classical.push_back(ccur);
        }
        t.rows.push_back(std::move(row));
    };

    Seed s = s0;
    record(0, std::nullopt, s);
    for (size_t step = 0; step < seq.size(); ++step) {
        size_t k = seq[step];
        check_k(s, k);
        if (quantum) {
            std::vector<FactoredWord> imgs = a_side ? mutate_a_quantum(s, *lam, k, coeff) : mutate_x_quantum(s, k, coeff);
            std::vector<FactoredWord> next;
            for (const auto& w : imgs) next.push_back(substitute(w, init_alg, qcur));
            qcur = std::move(next);
            if (a_side) lam = mutate_lambda(*lam, s, k);
        } else {
            std::vector<CommutativeRational> imgs;
            switch (mode) {
                case MutationMode::XClassical: imgs = mutate_x_classical(s, k); break;
                case MutationMode::XFamily: imgs = mutate_x_family(s, k); break;
                case MutationMode::AClassical: imgs = mutate_a_classical(s, k, false); break;
                default: imgs = mutate_a_classical(s, k, true); break;
            }
            ccur = compose_classical(imgs, ccur);
        }
        s = s.mutate(k);
        record(step + 1, k, s);
    }
    return t;
}

namespace {

nlohmann::json rmat_json(const RMat& m) {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& row : m) {
        nlohmann::json r = nlohmann::json::array();
        for (const auto& x : row) {
            if (x.is_integer())
                r.push_back(x.num());
            else
                r.push_back(x.str());
        }
        j.push_back(r);
    }
    return j;
}

std::string rmat_str(const RMat& m) {
    std::ostringstream os;
    os << "[";
    for (size_t i = 0; i < m.size(); ++i) {
        os << (i ? "," : "") << "[";
        for (size_t j = 0; j < m[i].size(); ++j) os << (j ? "," : "") << m[i][j].str();
        os << "]";
    }
    os << "]";
    return os.str();
}

std::string lmat_str(const std::vector<LVec>& m) {
    std::ostringstream os;
    os << "[";
    for (size_t i = 0; i < m.size(); ++i) os << (i ? "," : "") << lv_str(m[i]);
    os << "]";
    return os.str();
}

}  // namespace

std::string render_table_text(const MutationTable& t) {
    std::ostringstream os;
    os << "mode " << mode_name(t.mode) << "\n";
    for (const auto& row : t.rows) {
        os << "s" << row.step;
        if (row.mutated) os << "  mu_" << (*row.mutated + 1);
        os << "  eps=" << rmat_str(row.seed.epsilon()) << "  C=" << lmat_str(row.seed.cvectors()) << "\n";
        for (size_t i = 0; i < row.variables.size(); ++i)
            os << "  " << t.labels[i] << ";s" << row.step << " = " << row.variables[i] << "\n";
    }
    return os.str();
}

std::string render_table_json(const MutationTable& t) {
    nlohmann::json j;
    j["mode"] = mode_name(t.mode);
    j["labels"] = t.labels;
    j["rows"] = nlohmann::json::array();
    for (const auto& row : t.rows) {
        nlohmann::json r;
        r["step"] = row.step;
        r["mutated"] = row.mutated ? nlohmann::json(*row.mutated + 1) : nlohmann::json(nullptr);
        r["epsilon"] = rmat_json(row.seed.epsilon());
        r["cvectors"] = row.seed.cvectors();
        r["variables"] = row.variables;
        j["rows"].push_back(r);
    }
    return j.dump(2);
}

}  // namespace qca
