#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "qca/seeds.hpp"

namespace qca {

using Terms = QTorusElement::Terms;

// Rank-2 A-side data shared by a diagram and its broken lines. Positions and
// monomial exponents use the basis f_i of M-circ.
struct ScatterData {
    FixedDataPtr fixed;
    bool quantum = false;
    Algebra alg;                  // A-torus in v (skew -Lambda), or commutative
    RMat lambda;                  // quantum only
    std::vector<LVec> pstar;      // p1*(e_i)
    std::vector<Rational> weights;  // d(m) = sum w_i m_i
    int64_t lcm = 1;              // lcm of the unfrozen d_i

    Rational degree(const LVec& m) const;
    // <n, m> for n in N (e-coordinates), m in M-circ (f-coordinates)
    Rational pairing(const LVec& n, const LVec& m) const;
    LVec mono(const LVec& n) const;  // p1*(n)
    // n with p1*(n) = m, if integral
    std::optional<LVec> preimage(const LVec& m) const;
    // generator of R_{>=0} n intersected with N-circ
    LVec ncirc(const LVec& n) const;
};

using ScatterDataPtr = std::shared_ptr<const ScatterData>;

ScatterDataPtr make_scatter_data(const Seed& s, bool quantum, const std::optional<RMat>& lambda = std::nullopt,
                                 const std::optional<std::vector<Rational>>& grading = std::nullopt);

struct Wall {
    LVec normal;  // primitive n in N+
    LVec mdir;    // p1*(normal)
    LVec ray;     // support direction
    bool line = false;
    bool incoming = false;
    bool quantum = false;
    // classical: f = 1 + sum_j coeffs[j] Y^j; quantum: exp(sum_j coeffs[j] Yhat^j)
    std::vector<QScalar> coeffs;
    // wall element is exactly Psi_{v^s}(Y)
    std::optional<int64_t> dilog;
};

struct Diagram {
    ScatterDataPtr data;
    int order = 1;
    std::vector<Wall> walls;
};

Diagram initial_diagram(ScatterDataPtr data, int order = 1);

// g^sign(c A^m), Weyl terms of degree <= cap
Terms wall_action(const ScatterData& data, const Wall& w, const LVec& m, const QScalar& c, int sign,
                  const Rational& cap);
// coefficients of F in g^sign(A^m) = A^m F(Y), powers 0..J
std::vector<QScalar> wall_factor(const ScatterData& data, const Wall& w, const LVec& m, int sign, int64_t J);

struct LoopPath {
    std::vector<Rational> start{Rational(1), Rational(1)};
    bool ccw = true;
};

struct Crossing {
    size_t wall = 0;
    int sign = 1;
    LVec ray;
};

std::vector<Crossing> loop_crossings(const Diagram& d, const LoopPath& loop);
// crossing sign sgn<n, -gamma'> for a path moving with velocity vel
int crossing_sign(const ScatterData& data, const LVec& normal, const std::vector<Rational>& vel);

// path-ordered product applied to A^u, relative order k
Terms path_ordered_product(const Diagram& d, const LoopPath& loop, const LVec& u, const Rational& k);

Diagram complete_to_order(const Diagram& d, int order, const LoopPath& loop = LoopPath());

// consistency to the diagram order on all u with |u_i| <= bound
bool loop_is_identity(const Diagram& d, const LoopPath& loop, int64_t bound);

// coefficient c with c A^m A^u equal to the A^{m+u} term
QScalar left_coefficient(const ScatterData& data, const Terms& t, const LVec& u, const LVec& m);

// closed-form coefficient of A^{2f1-3f2} in the inverse loop automorphism for A(2,3)
QScalar a23_loop_closed_form(int64_t u1, int64_t u2);

// c times the Weyl-ordered monomial, written [A^m] in the quantum case
std::string weyl_term_str(const ScatterData& data, const LVec& m, const QScalar& c);
std::string wall_function_str(const ScatterData& data, const Wall& w, int terms = 3);
std::string diagram_json(const Diagram& d);
Diagram diagram_from_json(ScatterDataPtr data, const std::string& text);
bool diagrams_equal(const Diagram& a, const Diagram& b);

struct SvgOptions {
    double extent = 6.0;
    int size = 480;
};

struct PolyLine {
    std::vector<std::pair<Rational, Rational>> points;
    std::string label;
};

std::string diagram_svg(const Diagram& d, const SvgOptions& opt = SvgOptions(), const std::vector<PolyLine>& overlay = {});

}  // namespace qca
