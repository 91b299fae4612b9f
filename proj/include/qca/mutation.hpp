#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qca/ratfunc.hpp"
#include "qca/seeds.hpp"
#include "qca/word.hpp"

namespace qca {

enum class MutationMode { XClassical, XFamily, XQuantum, XQuantumCoeff, AClassical, APrin, AQuantum };

MutationMode parse_mode(const std::string& s);
std::string mode_name(MutationMode m);
bool mode_is_quantum(MutationMode m);
bool mode_has_coefficients(MutationMode m);
bool mode_is_a_side(MutationMode m);

// t^{v} for an integer exponent vector over t_1..t_r
QScalar t_power(const LVec& v);
LVec positive_part(const LVec& v);

// Quantum X-torus of a seed: generators X_{i;s}, form {e_i;s, e_j;s}.
Algebra x_algebra(const Seed& s, const std::string& qname = "q");
// Quantum A-torus of a seed in the variable v with q_BZ = v^{-2}: skew form -Lambda.
Algebra a_algebra(const RMat& lambda, const std::vector<std::string>& labels, const std::string& vname = "v");

// Each formula returns the images of the generators of the mutated seed s'
// expressed in the torus (or function field) of s.
std::vector<CommutativeRational> mutate_x_classical(const Seed& s, size_t k);
std::vector<CommutativeRational> mutate_x_family(const Seed& s, size_t k);
std::vector<CommutativeRational> mutate_a_classical(const Seed& s, size_t k, bool principal);
std::vector<FactoredWord> mutate_x_quantum(const Seed& s, size_t k, bool with_coefficients);
std::vector<FactoredWord> mu_sharp(const Seed& s, size_t k, bool with_coefficients);
std::vector<FactoredWord> mu_prime(const Seed& s, size_t k, bool with_coefficients);
// Berenstein-Zelevinsky mutation with principal coefficients in the A-torus of s
std::vector<FactoredWord> mutate_a_quantum(const Seed& s, const RMat& lambda, size_t k, bool with_coefficients);

// Lambda' = E^T Lambda E with E_ik = [-eps_ki]_+ (i != k), E_kk = -1
RMat mutate_lambda(const RMat& lambda, const Seed& s, size_t k);

// evaluation of a classical image list on current expressions
std::vector<CommutativeRational> compose_classical(const std::vector<CommutativeRational>& images,
                                                   const std::vector<CommutativeRational>& current);

struct TableRow {
    size_t step = 0;
    std::optional<size_t> mutated;
    Seed seed;
    std::vector<std::string> variables;
};

struct MutationTable {
    MutationMode mode;
    std::vector<TableRow> rows;
    std::vector<std::vector<FactoredWord>> quantum;            // quantum modes
    std::vector<std::vector<CommutativeRational>> classical;   // classical modes
    std::vector<std::string> labels;
};

// Run a mutation sequence from s and record every intermediate row in the
// initial-seed coordinates. lambda is required for AQuantum.
MutationTable apply_mutation_sequence(const Seed& s, const std::vector<size_t>& seq, MutationMode mode,
                                      const std::optional<RMat>& lambda = std::nullopt);

std::string render_table_text(const MutationTable& t);
std::string render_table_json(const MutationTable& t);

}  // namespace qca
