#include "qca/poisson.hpp"

#include <stdexcept>

namespace qca {

CommutativeRational classical_image(const QTorusElement& a) {
    size_t n = a.algebra()->rank;
    CommutativeRational out(n, QScalar(0));
    for (const auto& [m, c] : a.terms()) out += CommutativeRational::monomial(n, m, limit_q1(c));
    return out;
}

namespace {

CommutativeRational word_image(const FactoredWord::NodePtr& node, size_t n) {
    switch (node->kind) {
        case FactoredWord::Kind::Poly:
            return classical_image(node->poly);
        case FactoredWord::Kind::Product: {
            CommutativeRational out(n, QScalar(1));
            for (const auto& k : node->kids) out *= word_image(k, n);
            return out;
        }
        case FactoredWord::Kind::Sum: {
            CommutativeRational out(n, QScalar(0));
            for (const auto& k : node->kids) out += word_image(k, n);
            return out;
        }
        case FactoredWord::Kind::Inverse:
            return word_image(node->kids.at(0), n).inverse();
    }
    throw std::logic_error("unknown word node");
}

}  // namespace

CommutativeRational classical_image(const FactoredWord& w) { return word_image(w.root(), w.algebra()->rank); }

CommutativeRational semiclassical_bracket(const QTorusElement& a, const QTorusElement& b) {
    QTorusElement comm = a * b - b * a;
    size_t n = a.algebra()->rank;
    CommutativeRational out(n, QScalar(0));
    for (const auto& [m, c] : comm.terms())
        out += CommutativeRational::monomial(n, m, limit_q1(divide_exact_qminus1(c)));
    return out;
}

CommutativeRational poisson_bracket(const CommutativeRational& f, const CommutativeRational& g, const RMat& form) {
    size_t n = f.nx();
    CommutativeRational out(n, QScalar(0));
    std::vector<CommutativeRational> df, dg;
    for (size_t i = 0; i < n; ++i) {
        df.push_back(f.derivative(i));
        dg.push_back(g.derivative(i));
    }
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            if (form[i][j].is_zero()) continue;
            CommutativeRational w = df[i] * dg[j] - df[j] * dg[i];
            if (w.is_zero()) continue;
            QScalar c(Poly(form[i][j].num()), Poly(form[i][j].den()));
            out += CommutativeRational::variable(n, i) * CommutativeRational::variable(n, j) * CommutativeRational(n, c) * w;
        }
    return out;
}

std::vector<PoissonCheck> check_poisson_map(const Seed& s, size_t k) {
    std::vector<PoissonCheck> out;
    size_t n = s.rank();
    auto img = mutate_x_family(s, k);
    Seed s2 = s.mutate(k);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j) {
            CommutativeRational xi = CommutativeRational::variable(n, i), xj = CommutativeRational::variable(n, j);
            CommutativeRational br = poisson_bracket(xi, xj, s2.epsilon_hat());
            CommutativeRational lhs = compose_classical({br}, img)[0];
            CommutativeRational rhs = poisson_bracket(img[i], img[j], s.epsilon_hat());
            PoissonCheck c;
            c.k = k;
            c.i = i;
            c.j = j;
            c.ok = lhs == rhs;
            c.lhs = lhs.str(s.fixed().labels);
            c.rhs = rhs.str(s.fixed().labels);
            out.push_back(c);
        }
    return out;
}

std::vector<PoissonCheck> check_poisson_map(const Seed& s) {
    std::vector<PoissonCheck> out;
    for (size_t k = 0; k < s.rank(); ++k) {
        if (!s.fixed().is_unfrozen(k)) continue;
        auto part = check_poisson_map(s, k);
        out.insert(out.end(), part.begin(), part.end());
    }
    return out;
}

}  // namespace qca
