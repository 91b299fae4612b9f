#pragma once

#include <string>
#include <vector>

#include "qca/mutation.hpp"

namespace qca {

// lim_{q->1} (ab - ba)/(q - 1) as a commutative function of X_1..X_n
CommutativeRational semiclassical_bracket(const QTorusElement& a, const QTorusElement& b);

// q = 1 image of a quantum torus element
CommutativeRational classical_image(const QTorusElement& a);
CommutativeRational classical_image(const FactoredWord& w);

// {f,g} = sum over ordered (i,j) of w_ij X_i X_j (d_i f d_j g - d_j f d_i g)
CommutativeRational poisson_bracket(const CommutativeRational& f, const CommutativeRational& g, const RMat& form);

struct PoissonCheck {
    size_t k = 0;
    size_t i = 0;
    size_t j = 0;
    bool ok = false;
    std::string lhs;
    std::string rhs;
};

// mu*{X'_i, X'_j}_{s'} = {mu* X'_i, mu* X'_j}_s for the family mutation at k
std::vector<PoissonCheck> check_poisson_map(const Seed& s, size_t k);
std::vector<PoissonCheck> check_poisson_map(const Seed& s);

}  // namespace qca
