#include "qca/duality.hpp"

#include <sstream>

namespace qca {

std::vector<std::string> a_labels(size_t rank) {
    std::vector<std::string> out;
    for (size_t i = 0; i < rank; ++i) out.push_back("A" + std::to_string(i + 1));
    return out;
}

RMat p1_star(const Seed& s) { return s.epsilon(); }

namespace {

// rank of a rational matrix by elimination
size_t rmat_rank(RMat m) {
    size_t rows = m.size(), cols = rows ? m[0].size() : 0, r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t p = r;
        while (p < rows && m[p][c].is_zero()) ++p;
        if (p == rows) continue;
        std::swap(m[p], m[r]);
        for (size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c].is_zero()) continue;
            Rational f = m[i][c] / m[r][c];
            for (size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        ++r;
    }
    return r;
}

std::vector<size_t> unfrozen_indices(const FixedData& fd) {
    std::vector<size_t> out;
    for (size_t i = 0; i < fd.rank; ++i)
        if (fd.is_unfrozen(i)) out.push_back(i);
    return out;
}

}  // namespace

bool p1_star_injective_on_unfrozen(const Seed& s) {
    RMat rows;
    for (size_t i : unfrozen_indices(s.fixed())) rows.push_back(s.epsilon()[i]);
    return rmat_rank(rows) == rows.size();
}

RMat exchange_btilde(const Seed& s) {
    auto uf = unfrozen_indices(s.fixed());
    RMat b(s.rank(), std::vector<Rational>(uf.size()));
    for (size_t i = 0; i < s.rank(); ++i)
        for (size_t c = 0; c < uf.size(); ++c) b[i][c] = s.epsilon()[uf[c]][i];
    return b;
}

Compatibility check_compatible_pair(const RMat& lambda, const RMat& btilde, const std::vector<size_t>& unfrozen) {
    Compatibility res;
    size_t n = lambda.size();
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            if (lambda[i][j] != -lambda[j][i]) {
                res.message = "Lambda is not skew-symmetric at (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
                return res;
            }
    size_t u = unfrozen.size();
    if (btilde.size() != n || (n && btilde[0].size() != u)) {
        res.message = "shape mismatch";
        return res;
    }
    for (size_t c = 0; c < u; ++c) {
        for (size_t j = 0; j < n; ++j) {
            Rational v;
            for (size_t m = 0; m < n; ++m) v += btilde[m][c] * lambda[m][j];
            bool diag = j == unfrozen[c];
            if (diag && v <= Rational(0)) {
                res.message = "entry (" + std::to_string(c + 1) + "," + std::to_string(j + 1) + ") of B^T Lambda is " +
                              v.str() + ", expected a positive value";
                return res;
            }
            if (!diag && !v.is_zero()) {
                res.message = "entry (" + std::to_string(c + 1) + "," + std::to_string(j + 1) + ") of B^T Lambda is " +
                              v.str() + ", expected 0";
                return res;
            }
            if (diag) res.dprime.push_back(v);
        }
    }
    // D B = B^T Lambda B is skew-symmetric
    for (size_t a = 0; a < u; ++a)
        for (size_t b = 0; b < u; ++b) {
            Rational x = res.dprime[a] * btilde[unfrozen[a]][b];
            Rational y = res.dprime[b] * btilde[unfrozen[b]][a];
            if (x != -y) {
                res.message = "D'B is not skew-symmetric";
                res.dprime.clear();
                return res;
            }
        }
    res.ok = true;
    return res;
}

Compatibility check_compatible_pair(const RMat& lambda, const Seed& s) {
    return check_compatible_pair(lambda, exchange_btilde(s), unfrozen_indices(s.fixed()));
}

std::vector<Rational> fg_dprime(const FixedData& fd) {
    std::vector<Rational> out;
    int64_t l = fd.lcm_d_unfrozen();
    for (size_t i = 0; i < fd.rank; ++i)
        if (fd.is_unfrozen(i)) out.push_back(Rational(l, fd.d[i]));
    return out;
}

RMat synthesize_lambda(const Seed& s) {
    size_t n = s.rank();
    auto uf = unfrozen_indices(s.fixed());
    auto dp = fg_dprime(s.fixed());
    // unknowns x_(a,b), a < b
    std::vector<std::pair<size_t, size_t>> vars;
    for (size_t a = 0; a < n; ++a)
        for (size_t b = a + 1; b < n; ++b) vars.emplace_back(a, b);
    size_t nv = vars.size();
    RMat sys;
    for (size_t c = 0; c < uf.size(); ++c) {
        size_t k = uf[c];
        for (size_t j = 0; j < n; ++j) {
            std::vector<Rational> row(nv + 1);
            for (size_t m = 0; m < n; ++m) {
                if (m == j) continue;
                size_t a = std::min(m, j), b = std::max(m, j);
                size_t idx = 0;
                while (vars[idx] != std::make_pair(a, b)) ++idx;
                row[idx] += m < j ? s.epsilon()[k][m] : -s.epsilon()[k][m];
            }
            row[nv] = j == k ? dp[c] : Rational(0);
            sys.push_back(row);
        }
    }
    std::vector<size_t> pivots;
    size_t r = 0;
    for (size_t c = 0; c < nv && r < sys.size(); ++c) {
        size_t p = r;
        while (p < sys.size() && sys[p][c].is_zero()) ++p;
        if (p == sys.size()) continue;
        std::swap(sys[p], sys[r]);
        Rational inv = Rational(1) / sys[r][c];
        for (auto& x : sys[r]) x *= inv;
        for (size_t i = 0; i < sys.size(); ++i) {
            if (i == r || sys[i][c].is_zero()) continue;
            Rational f = sys[i][c];
            for (size_t j = 0; j <= nv; ++j) sys[i][j] -= f * sys[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    for (size_t i = r; i < sys.size(); ++i)
        if (!sys[i][nv].is_zero()) throw std::domain_error("no compatible Lambda exists for this seed");
    RMat lambda(n, std::vector<Rational>(n));
    for (size_t i = 0; i < r; ++i) {
        auto [a, b] = vars[pivots[i]];
        lambda[a][b] = sys[i][nv];
        lambda[b][a] = -sys[i][nv];
    }
    return lambda;
}

FactoredWord pstar_hom(const FactoredWord& w, const Seed& s, const Algebra& target) {
    int64_t l = s.fixed().lcm_d_unfrozen();
    std::vector<FactoredWord> images;
    for (size_t i = 0; i < s.rank(); ++i) {
        LVec m(s.rank());
        for (size_t j = 0; j < s.rank(); ++j) {
            const Rational& e = s.epsilon()[i][j];
            if (!e.is_integer()) throw std::domain_error("p*(e_" + std::to_string(i + 1) + ") is not integral");
            m[j] = e.num();
        }
        images.push_back(FactoredWord::monomial(target, m));
    }
    return substitute(w, target, images, [l](const QScalar& c) { return scale_q(c, Rational(l)); });
}

std::vector<IntertwiningResult> check_intertwining(const Seed& s, const RMat& lambda, int order,
                                                   bool with_coefficients) {
    std::vector<IntertwiningResult> out;
    auto labels = a_labels(s.rank());
    Algebra a_s = a_algebra(lambda, labels);
    for (size_t k : unfrozen_indices(s.fixed())) {
        Seed s2 = s.mutate(k);
        RMat lambda2 = mutate_lambda(lambda, s, k);
        Algebra a_s2 = a_algebra(lambda2, labels);
        Algebra x_s2 = x_algebra(s2);
        auto xq = mutate_x_quantum(s, k, with_coefficients);
        auto aq = mutate_a_quantum(s, lambda, k, with_coefficients);
        for (size_t i = 0; i < s.rank(); ++i) {
            FactoredWord lhs = pstar_hom(xq[i], s, a_s);
            FactoredWord pre = pstar_hom(FactoredWord::generator(x_s2, i), s2, a_s2);
            FactoredWord rhs = substitute(pre, a_s, aq);
            IntertwiningResult r;
            r.k = k;
            r.i = i;
            r.ok = words_equal(lhs, rhs, order);
            r.lhs = lhs.str();
            r.rhs = rhs.str();
            out.push_back(r);
        }
    }
    return out;
}

}  // namespace qca
