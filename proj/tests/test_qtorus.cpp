#include "doctest.h"
#include "qca/word.hpp"

using namespace qca;

namespace {

Algebra rank2(int64_t w12) { return make_algebra({{Rational(0), Rational(w12)}, {Rational(-w12), Rational(0)}}); }

QScalar q(int64_t e = 1) { return QScalar::q(Rational(e)); }

QTorusElement X(const Algebra& a, LVec n, QScalar c = QScalar(1)) { return QTorusElement::monomial(a, n, c); }

}  // namespace

TEST_CASE("defining relation and q-commutation") {
    auto a = rank2(1);
    CHECK(X(a, {1, 0}) * X(a, {0, 1}) == X(a, {1, 1}, q()));
    CHECK(X(a, {0, 1}) * X(a, {1, 0}) == X(a, {1, 1}, q(-1)));
    for (int64_t i = -2; i <= 2; ++i)
        for (int64_t j = -2; j <= 2; ++j) {
            LVec n{i, j}, m{j, 1 - i};
            auto lhs = X(a, n) * X(a, m);
            auto rhs = QScalar::q(a->omega(n, m) * Rational(2)) * (X(a, m) * X(a, n));
            CHECK(lhs == rhs);
        }
}

TEST_CASE("A(2,3) torus in v") {
    // A^m A^m' = v^{-Lambda(m,m')} A^{m+m'} with Lambda = ((0,1),(-1,0))
    auto a = make_algebra({{Rational(0), Rational(-1)}, {Rational(1), Rational(0)}}, {"A1", "A2"}, "v");
    auto A1 = X(a, {1, 0}), A2 = X(a, {0, 1});
    CHECK(A2 * A1 == QScalar::q(Rational(2)) * (A1 * A2));
}

TEST_CASE("associativity and star") {
    auto a = make_algebra({{Rational(0), Rational(1), Rational(-1, 2)},
                           {Rational(-1), Rational(0), Rational(2)},
                           {Rational(1, 2), Rational(-2), Rational(0)}});
    QTorusElement x = X(a, {1, 0, 0}) + X(a, {0, -1, 2}, q(2)) + X(a, {1, 1, 1}, QScalar::t(1));
    QTorusElement y = X(a, {0, 1, 0}, q() - 1) + X(a, {2, 0, -1});
    QTorusElement z = X(a, {0, 0, 1}) + X(a, {-1, 1, 0}, q(-1) + q(3));
    CHECK((x * y) * z == x * (y * z));
    CHECK(qt_star(x * y) == qt_star(y) * qt_star(x));
    CHECK(qt_star(qt_star(z)) == z);
    CHECK(qt_star(X(a, {1, 1, 0}, q())) == X(a, {1, 1, 0}, q(-1)));
}

TEST_CASE("centrality") {
    auto a = rank2(1);
    CHECK_FALSE(a->is_central({1, 1}));
    CHECK(a->is_central({0, 0}));
    auto b = make_algebra({{Rational(0), Rational(1), Rational(0)},
                           {Rational(-1), Rational(0), Rational(0)},
                           {Rational(0), Rational(0), Rational(0)}});
    CHECK(b->is_central({0, 0, 1}));
    auto c = X(b, {0, 0, 1});
    for (size_t i = 0; i < 3; ++i) {
        auto g = QTorusElement::generator(b, i);
        CHECK(g * c == c * g);
    }
}

TEST_CASE("rendering folds the ordering scalar") {
    auto a = rank2(1);
    CHECK(X(a, {1, 1}).str() == "q^{-1}*X1*X2");
    CHECK((X(a, {1, 0}) * X(a, {0, 1})).str() == "X1*X2");
}

TEST_CASE("dilogarithm identities") {
    auto a = rank2(1);
    Grading g = Grading::standard(2);
    const int K = 6;
    LVec dir{0, 1};
    Series psi = dilog_series(a, dir, Rational(1), K, g);
    CHECK(psi.coeff({0, 1}) == QScalar(1) / (q() - q(-1)));
    CHECK(dilog_series(a, dir, Rational(1), 0, g).terms().size() == 1);
    // Psi_{q^{-1}} = Psi_q^{-1}
    Series inv = series_inverse(psi, Rational(K));
    Series psi_bar = dilog_series(a, dir, Rational(-1), K, g);
    CHECK((inv - psi_bar).zero_to(Rational(K)));
    // exp(-Li2(-x;q))
    CHECK((dilog_series_exp(a, dir, Rational(1), K, g) - psi).zero_to(Rational(K)));
    // Psi(q^2 x) = (1 + q x) Psi(x)
    Series shifted(a, g);
    for (const auto& [n, c] : psi.terms()) shifted.add_term(n, c * q(2 * n[1]));
    shifted.set_exact_to(Rational(K));
    Series rhs = series_mul(Series::from_element(X(a, {0, 0}) + X(a, dir, q()), g), psi, Rational(K));
    CHECK((shifted - rhs).zero_to(Rational(K)));
}

TEST_CASE("dilogarithm coefficients against a truncated product") {
    // with q a formal variable, prod_{l<=L} (1+q^{2l-1}x)^{-1} agrees with Psi_q
    // in each x-coefficient up to q-degree 2L; compare after clearing denominators
    auto a = rank2(1);
    Grading g = Grading::standard(2);
    const int K = 4, L = 12;
    Series psi = dilog_series(a, {0, 1}, Rational(1), K, g);
    Series prod = Series::one(a, g);
    for (int l = 1; l <= L; ++l) {
        Series f = Series::from_element(X(a, {0, 0}) + X(a, {0, 1}, q(2 * l - 1)), g);
        prod = series_mul(prod, series_inverse(f, Rational(K)), Rational(K));
    }
    for (int j = 1; j <= K; ++j) {
        QScalar diff = psi.coeff({0, j}) - prod.coeff({0, j});
        // diff = O(q^{2L+1}) as a power series in q
        QScalar den(1);
        for (int i = 1; i <= j; ++i) den *= QScalar(1) - q(2 * i);
        QScalar num = diff * den;
        REQUIRE(num.is_polynomial());
        for (const auto& [e, c] : num.num().terms()) CHECK(exp_at(e, 0) > Rational(2 * L));
    }
}

TEST_CASE("expand_word and words_equal") {
    auto a = rank2(1);
    auto w = parse_word(a, "(1+q*X2)^-1");
    Series s = expand_word(w, Grading{{Rational(1), Rational(1)}}, Rational(2));
    CHECK(s.coeff({0, 0}) == QScalar(1));
    CHECK(s.coeff({0, 1}) == -q());
    CHECK(s.coeff({0, 2}) == q(2));
    CHECK(s.terms().size() == 3);
    auto lhs = parse_word(a, "(1+q*X2)^-1*X1^-1");
    auto rhs = parse_word(a, "X1^-1*(1+q^3*X2)^-1");
    CHECK(words_equal(lhs, rhs, 8));
    CHECK(words_equal(lhs, lhs));
    CHECK_FALSE(words_equal(parse_word(a, "X1"), parse_word(a, "q*X1")));
    CHECK(words_equal(parse_word(a, "X_1 X_2"), parse_word(a, "q X1*X2 q^{-1}")));
}

TEST_CASE("parser and rendering round trip") {
    auto a = rank2(-1);
    auto w = parse_word(a, "(X_1^{-1}X_2)^{-1}(X_1^{-1}+t_1q(1+t_2qX_2))");
    auto back = parse_word(a, w.str());
    CHECK(words_equal(w, back));
    CHECK_THROWS(parse_word(a, "X3"));
    CHECK_THROWS(parse_word(a, "(X1"));
}
