#include <string>

#include "doctest.h"
#include "qca/duality.hpp"
#include "qca/io.hpp"
#include "qca/poisson.hpp"

using namespace qca;

namespace {

Seed fixture(const std::string& name) { return Seed(load_seed_file(std::string(QCA_TEST_DATA) + "/" + name).fixed); }

RMat rm(std::vector<std::vector<int64_t>> m) {
    RMat r;
    for (auto& row : m) {
        std::vector<Rational> rr;
        for (auto x : row) rr.emplace_back(x);
        r.push_back(rr);
    }
    return r;
}

}  // namespace

TEST_CASE("p1-star on the A(2,3) and A2 data") {
    Seed s = fixture("a23.json");
    CHECK(s.epsilon() == rm({{0, -3}, {2, 0}}));
    CHECK(p1_star(s) == rm({{0, -3}, {2, 0}}));
    CHECK(p1_star_injective_on_unfrozen(s));
    Seed a2(make_fixed_data(2, {0, 1}, rm({{0, 1}, {-1, 0}}), {1, 1}));
    CHECK(p1_star(a2) == rm({{0, 1}, {-1, 0}}));
    Seed z(make_fixed_data(2, {0, 1}, rm({{0, 0}, {0, 0}}), {1, 1}));
    CHECK_FALSE(p1_star_injective_on_unfrozen(z));
}

TEST_CASE("compatible pairs") {
    auto c = check_compatible_pair(rm({{0, 1}, {-1, 0}}), rm({{0, 2}, {-3, 0}}), {0, 1});
    REQUIRE(c.ok);
    CHECK(c.dprime == std::vector<Rational>{3, 2});
    auto bad = check_compatible_pair(rm({{0, 0}, {0, 0}}), rm({{0, 2}, {-3, 0}}), {0, 1});
    CHECK_FALSE(bad.ok);
    CHECK(bad.message.find("entry (1,1)") != std::string::npos);
    Seed s = fixture("a23.json");
    CHECK(fg_dprime(s.fixed()) == std::vector<Rational>{3, 2});
    CHECK(synthesize_lambda(s) == rm({{0, 1}, {-1, 0}}));
    auto dual = langlands_dual(s.fixed());
    CHECK(dual->d == std::vector<int64_t>{3, 2});
    CHECK(dual->skew[0][1] == Rational(-1, 6));
}

TEST_CASE("synthesized Lambda stays compatible under mutation") {
    for (const char* name : {"a23.json", "rank3_frozen.json", "b2_frozen.json", "a2.json"}) {
        Seed s = fixture(name);
        RMat lambda = synthesize_lambda(s);
        auto c0 = check_compatible_pair(lambda, s);
        INFO(name << ": " << c0.message);
        REQUIRE(c0.ok);
        CHECK(c0.dprime == fg_dprime(s.fixed()));
        for (size_t k1 = 0; k1 < s.rank(); ++k1) {
            if (!s.fixed().is_unfrozen(k1)) continue;
            for (size_t k2 = 0; k2 < s.rank(); ++k2) {
                if (!s.fixed().is_unfrozen(k2)) continue;
                Seed s1 = s.mutate(k1);
                RMat l1 = mutate_lambda(lambda, s, k1);
                Seed s2 = s1.mutate(k2);
                RMat l2 = mutate_lambda(l1, s1, k2);
                CHECK(check_compatible_pair(l1, s1).ok);
                CHECK(check_compatible_pair(l2, s2).ok);
            }
        }
    }
}

TEST_CASE("quantum A mutation with principal coefficients on A(2,3)") {
    Seed s = fixture("a23.json");
    RMat lambda = synthesize_lambda(s);
    Algebra a = a_algebra(lambda, a_labels(2));
    auto img = mutate_a_quantum(s, lambda, 0, true);
    QTorusElement expect = QTorusElement::monomial(a, {-1, 0}, QScalar::t(1)) + QTorusElement::monomial(a, {-1, 3});
    CHECK(words_equal(img[0], FactoredWord(expect), 6));
    CHECK(words_equal(img[1], FactoredWord::generator(a, 1), 6));
    // A2 A1 = v^2 A1 A2
    QTorusElement a1 = QTorusElement::generator(a, 0), a2 = QTorusElement::generator(a, 1);
    CHECK(a2 * a1 == (a1 * a2).map_coeffs([](const QScalar& c) { return c.times_q(Rational(2)); }));
}

TEST_CASE("p-star is multiplicative and commutes with star") {
    Seed s = fixture("a23.json");
    RMat lambda = synthesize_lambda(s);
    Algebra a = a_algebra(lambda, a_labels(2));
    Algebra x = x_algebra(s);
    for (int64_t i = -2; i <= 2; ++i)
        for (int64_t j = -2; j <= 2; ++j)
            for (int64_t k = -2; k <= 2; ++k)
                for (int64_t l = -2; l <= 2; ++l) {
                    FactoredWord m1 = FactoredWord::monomial(x, {i, j}), m2 = FactoredWord::monomial(x, {k, l});
                    FactoredWord lhs = pstar_hom(m1 * m2, s, a);
                    FactoredWord rhs = pstar_hom(m1, s, a) * pstar_hom(m2, s, a);
                    CHECK(words_equal(lhs, rhs, 2));
                    FactoredWord w = FactoredWord(x, QScalar::q(Rational(1, 2))) * m1 * m2;
                    CHECK(words_equal(pstar_hom(word_star(w), s, a), word_star(pstar_hom(w, s, a)), 2));
                }
    // q_FG^{1/d_k} -> v^{lcm/d_k}
    FactoredWord qk = FactoredWord(x, QScalar::q(Rational(1, 3)));
    CHECK(pstar_hom(qk, s, a).str() == FactoredWord(a, QScalar::q(Rational(2))).str());
}

TEST_CASE("p-star intertwines quantum mutation") {
    for (const char* name : {"a23.json", "rank3_frozen.json", "b2_frozen.json"}) {
        Seed s = fixture(name);
        RMat lambda = synthesize_lambda(s);
        for (bool coeff : {true, false}) {
            for (const auto& r : check_intertwining(s, lambda, 8, coeff)) {
                INFO(name << " k=" << r.k + 1 << " i=" << r.i + 1 << " lhs=" << r.lhs << " rhs=" << r.rhs);
                CHECK(r.ok);
            }
        }
    }
}

TEST_CASE("semiclassical bracket agrees with the bivector bracket") {
    Seed s = fixture("a2.json");
    Algebra x = x_algebra(s);
    QTorusElement x1 = QTorusElement::generator(x, 0), x2 = QTorusElement::generator(x, 1);
    auto b = semiclassical_bracket(x1, x2);
    CHECK(b == CommutativeRational::monomial(2, {1, 1}, QScalar(-2)));
    CHECK(semiclassical_bracket(x1, x1).is_zero());
    for (int64_t a1 = -2; a1 <= 2; ++a1)
        for (int64_t a2 = -2; a2 <= 2; ++a2)
            for (int64_t b1 = -2; b1 <= 2; ++b1)
                for (int64_t b2 = -2; b2 <= 2; ++b2) {
                    QTorusElement m1 = QTorusElement::monomial(x, {a1, a2}), m2 = QTorusElement::monomial(x, {b1, b2});
                    CHECK(semiclassical_bracket(m1, m2) ==
                          poisson_bracket(classical_image(m1), classical_image(m2), s.epsilon_hat()));
                }
}

TEST_CASE("family mutation is a Poisson map") {
    for (const char* name : {"a2.json", "a23.json", "a3.json", "rank3_frozen.json", "b2_frozen.json"}) {
        Seed s = fixture(name);
        for (int depth = 0; depth < 2; ++depth) {
            for (const auto& c : check_poisson_map(s)) {
                INFO(name << " k=" << c.k + 1 << " pair " << c.i + 1 << "," << c.j + 1);
                CHECK(c.ok);
            }
            s = s.mutate(0);
        }
    }
}
