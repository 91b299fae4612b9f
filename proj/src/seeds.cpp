#include "qca/seeds.hpp"

#include <algorithm>
#include <numeric>

namespace qca {

int64_t sign_of(const Rational& r) { return r.sign(); }

int64_t to_int(const Rational& r) {
    if (!r.is_integer()) throw std::domain_error("expected an integer, got " + r.str());
    return r.num();
}

size_t FixedData::n_unfrozen() const { return static_cast<size_t>(std::count(unfrozen.begin(), unfrozen.end(), true)); }

int64_t FixedData::lcm_d() const {
    int64_t l = 1;
    for (auto x : d) l = lcm64(l, x);
    return l;
}

int64_t FixedData::lcm_d_unfrozen() const {
    int64_t l = 1;
    for (size_t i = 0; i < rank; ++i)
        if (unfrozen[i]) l = lcm64(l, d[i]);
    return l;
}

Rational FixedData::form(const LVec& a, const LVec& b) const {
    Rational s;
    for (size_t i = 0; i < rank; ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < rank; ++j)
            if (b[j] != 0) s += skew[i][j] * Rational(ck_mul(a[i], b[j]));
    }
    return s;
}

FixedDataPtr make_fixed_data(size_t rank, std::vector<size_t> unfrozen, RMat skew, std::vector<int64_t> d,
                             std::vector<std::string> labels) {
    auto fd = std::make_shared<FixedData>();
    fd->rank = rank;
    fd->unfrozen.assign(rank, false);
    for (auto k : unfrozen) {
        if (k >= rank) throw std::invalid_argument("unfrozen index out of range");
        fd->unfrozen[k] = true;
    }
    if (skew.size() != rank || d.size() != rank) throw std::invalid_argument("fixed data has inconsistent sizes");
    int64_t g = 0;
    for (auto x : d) {
        if (x <= 0) throw std::invalid_argument("multipliers d_i must be positive");
        g = gcd64(g, x);
    }
    if (rank > 0 && g != 1) throw std::invalid_argument("gcd of the multipliers d_i must be 1");
    for (size_t i = 0; i < rank; ++i) {
        if (skew[i].size() != rank) throw std::invalid_argument("skew form is not square");
        for (size_t j = 0; j < rank; ++j) {
            if (skew[i][j] != -skew[j][i]) throw std::invalid_argument("skew form is not antisymmetric");
            if ((fd->unfrozen[i] || fd->unfrozen[j]) && !(skew[i][j] * Rational(d[j])).is_integer())
                throw std::invalid_argument("integrality fails for the pair (" + std::to_string(i + 1) + "," +
                                            std::to_string(j + 1) + ")");
        }
    }
    fd->skew = std::move(skew);
    fd->d = std::move(d);
    if (labels.empty())
        for (size_t i = 0; i < rank; ++i) labels.push_back("X" + std::to_string(i + 1));
    fd->labels = std::move(labels);
    return fd;
}

FixedDataPtr langlands_dual(const FixedData& fd) {
    int64_t l = fd.lcm_d();
    RMat skew = fd.skew;
    for (auto& row : skew)
        for (auto& x : row) x = x / Rational(l);
    std::vector<int64_t> d;
    for (auto x : fd.d) d.push_back(l / x);
    auto out = std::make_shared<FixedData>(fd);
    out->skew = std::move(skew);
    out->d = std::move(d);
    return out;
}

Seed::Seed(FixedDataPtr fd) : fd_(std::move(fd)) {
    size_t n = fd_->rank;
    for (size_t i = 0; i < n; ++i) basis_.push_back(lv_unit(n, i));
    for (size_t i = 0; i < 2 * n; ++i) ext_.push_back(lv_unit(2 * n, i));
    recompute();
}

namespace {

// {(n1,m1),(n2,m2)} = {n1,n2} + <n1,m2> - <n2,m1>, with <e_i, f_j> = delta_ij / d_i
Rational prin_form(const FixedData& fd, const LVec& a, const LVec& b) {
    size_t n = fd.rank;
    LVec na(a.begin(), a.begin() + n), nb(b.begin(), b.begin() + n);
    Rational s = fd.form(na, nb);
    for (size_t i = 0; i < n; ++i) {
        s += Rational(ck_mul(a[i], b[n + i]), fd.d[i]);
        s -= Rational(ck_mul(b[i], a[n + i]), fd.d[i]);
    }
    return s;
}

}  // namespace

void Seed::recompute() {
    size_t n = fd_->rank;
    eps_hat_.assign(n, std::vector<Rational>(n));
    eps_.assign(n, std::vector<Rational>(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            eps_hat_[i][j] = fd_->form(basis_[i], basis_[j]);
            eps_[i][j] = eps_hat_[i][j] * Rational(fd_->d[j]);
        }
    cvec_.assign(n, LVec(n, 0));
    for (size_t k = 0; k < n; ++k)
        for (size_t j = 0; j < n; ++j) {
            Rational e = prin_form(*fd_, ext_[k], ext_[n + j]) * Rational(fd_->d[j]);
            if (fd_->unfrozen[k])
                cvec_[k][j] = to_int(e);
            else if (e.is_integer())
                cvec_[k][j] = e.num();
        }
}

int64_t Seed::eps(size_t i, size_t j) const { return to_int(eps_[i][j]); }

Seed Seed::mutate(size_t k) const {
    size_t n = fd_->rank;
    if (k >= n) throw std::invalid_argument("mutation index out of range");
    if (!fd_->unfrozen[k]) throw std::invalid_argument("cannot mutate at frozen index " + std::to_string(k + 1));
    Seed s = *this;
    for (size_t i = 0; i < n; ++i) {
        if (i == k) continue;
        int64_t e = to_int(eps_[i][k]);
        if (e > 0) s.basis_[i] = lv_add(basis_[i], lv_scale(basis_[k], e));
    }
    s.basis_[k] = lv_neg(basis_[k]);
    for (size_t i = 0; i < 2 * n; ++i) {
        if (i == k) continue;
        Rational e = prin_form(*fd_, ext_[i], ext_[k]) * Rational(fd_->d[k]);
        int64_t ei = to_int(e);
        if (ei > 0) s.ext_[i] = lv_add(ext_[i], lv_scale(ext_[k], ei));
    }
    s.ext_[k] = lv_neg(ext_[k]);
    s.history_.push_back(k);
    s.recompute();
    return s;
}

bool Seed::same_cluster(const Seed& o) const {
    auto a = basis_, b = o.basis_;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    return a == b;
}

Seed mutate_seed(const Seed& s, size_t k) { return s.mutate(k); }

Seed mutate_sequence(const Seed& s, const std::vector<size_t>& ks) {
    Seed r = s;
    for (auto k : ks) r = r.mutate(k);
    return r;
}

std::vector<LVec> dual_cone_rank2(const LVec& c1, const LVec& c2) {
    int64_t det = ck_sub(ck_mul(c1[0], c2[1]), ck_mul(c1[1], c2[0]));
    if (det == 0) throw std::invalid_argument("collinear c-vectors do not span a chamber");
    auto prim = [](LVec v) {
        int64_t g = gcd64(v[0], v[1]);
        return LVec{v[0] / g, v[1] / g};
    };
    // g1 orthogonal to c2 and positive on c1; g2 orthogonal to c1 and positive on c2
    LVec g1 = prim({c2[1], -c2[0]});
    if (g1[0] * c1[0] + g1[1] * c1[1] < 0) g1 = lv_neg(g1);
    LVec g2 = prim({c1[1], -c1[0]});
    if (g2[0] * c2[0] + g2[1] * c2[1] < 0) g2 = lv_neg(g2);
    return {g1, g2};
}

Chamber cluster_chamber(const Seed& s) {
    if (s.rank() != 2) throw std::invalid_argument("chambers are supported in rank 2 only");
    if (s.fixed().n_unfrozen() != 2) throw std::invalid_argument("chambers need both directions unfrozen");
    Chamber c;
    c.dual_generators = {s.cvectors()[0], s.cvectors()[1]};
    c.gvectors = dual_cone_rank2(c.dual_generators[0], c.dual_generators[1]);
    return c;
}

}  // namespace qca
