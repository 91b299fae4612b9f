#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qca/mutation.hpp"

namespace qca {

// Row i is p*(e_i) = {e_i, .} in the basis f_j of M-circ, i.e. row i of epsilon.
RMat p1_star(const Seed& s);
bool p1_star_injective_on_unfrozen(const Seed& s);

// B-tilde with b_ik = epsilon_ki (|I| x |I_uf|)
RMat exchange_btilde(const Seed& s);

struct Compatibility {
    bool ok = false;
    std::vector<Rational> dprime;  // diagonal of D'
    std::string message;
};

// B-tilde^T Lambda = (D' 0) with D' positive diagonal
Compatibility check_compatible_pair(const RMat& lambda, const RMat& btilde, const std::vector<size_t>& unfrozen);
Compatibility check_compatible_pair(const RMat& lambda, const Seed& s);

// D' = lcm(d_uf) D_uf^{-1}
std::vector<Rational> fg_dprime(const FixedData& fd);

// Solves epsilon_{uf x I} Lambda = (D' 0) for skew Lambda, free entries zero.
RMat synthesize_lambda(const Seed& s);

// X^n -> A^{p*(n)}, q_FG^a -> v^{a lcm(d_uf)} (that is q_BZ^{-a lcm / 2}); t fixed.
FactoredWord pstar_hom(const FactoredWord& w, const Seed& s, const Algebra& target);

struct IntertwiningResult {
    size_t k = 0;
    size_t i = 0;
    bool ok = false;
    std::string lhs;
    std::string rhs;
};

// p* o mu^q_k = mu^q_k o p* on every generator of s', for every unfrozen k.
std::vector<IntertwiningResult> check_intertwining(const Seed& s, const RMat& lambda, int order,
                                                   bool with_coefficients = true);

std::vector<std::string> a_labels(size_t rank);

}  // namespace qca
