#pragma once

#include <memory>
#include <string>
#include <vector>

#include "qca/qtorus.hpp"

namespace qca {

struct FixedData {
    size_t rank = 0;
    std::vector<bool> unfrozen;
    RMat skew;  // {e_i, e_j} in the initial basis
    std::vector<int64_t> d;
    std::vector<std::string> labels;

    bool is_unfrozen(size_t i) const { return unfrozen.at(i); }
    size_t n_unfrozen() const;
    int64_t lcm_d() const;
    int64_t lcm_d_unfrozen() const;
    // {n1, n2} for vectors in initial coordinates
    Rational form(const LVec& a, const LVec& b) const;
};

using FixedDataPtr = std::shared_ptr<const FixedData>;

// Validates the integrality conditions and gcd(d) = 1.
FixedDataPtr make_fixed_data(size_t rank, std::vector<size_t> unfrozen, RMat skew, std::vector<int64_t> d,
                             std::vector<std::string> labels = {});
FixedDataPtr langlands_dual(const FixedData& fd);

class Seed {
public:
    explicit Seed(FixedDataPtr fd);

    const FixedData& fixed() const { return *fd_; }
    const FixedDataPtr& fixed_ptr() const { return fd_; }
    size_t rank() const { return fd_->rank; }
    // e_{i;s} in initial coordinates
    const std::vector<LVec>& basis() const { return basis_; }
    const RMat& epsilon() const { return eps_; }
    const RMat& epsilon_hat() const { return eps_hat_; }
    int64_t eps(size_t i, size_t j) const;
    // rows c_{k;s} for every k in I (rows of frozen k are still defined)
    const std::vector<LVec>& cvectors() const { return cvec_; }
    const std::vector<size_t>& history() const { return history_; }
    // basis of the principal extension, in (N, M-circ) coordinates
    const std::vector<LVec>& extended_basis() const { return ext_; }

    Seed mutate(size_t k) const;
    bool same_cluster(const Seed& o) const;

private:
    void recompute();
    FixedDataPtr fd_;
    std::vector<LVec> basis_;
    std::vector<LVec> ext_;
    RMat eps_hat_, eps_;
    std::vector<LVec> cvec_;
    std::vector<size_t> history_;
};

Seed mutate_seed(const Seed& s, size_t k);
Seed mutate_sequence(const Seed& s, const std::vector<size_t>& ks);

struct Chamber {
    std::vector<LVec> gvectors;
    std::vector<LVec> dual_generators;
};

Chamber cluster_chamber(const Seed& s);
// generators of the dual cone of the cone spanned by two vectors in Z^2
std::vector<LVec> dual_cone_rank2(const LVec& c1, const LVec& c2);

int64_t sign_of(const Rational& r);
int64_t to_int(const Rational& r);

}  // namespace qca
