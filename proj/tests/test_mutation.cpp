#include "doctest.h"
#include "qca/mutation.hpp"

using namespace qca;

namespace {

RMat rm(std::vector<std::vector<int64_t>> m) {
    RMat r;
    for (auto& row : m) {
        std::vector<Rational> rr;
        for (auto x : row) rr.emplace_back(x);
        r.push_back(rr);
    }
    return r;
}

Seed a2_seed() { return Seed(make_fixed_data(2, {0, 1}, rm({{0, -1}, {1, 0}}), {1, 1}, {"X1", "X2"})); }

const std::vector<size_t> kA2Seq = {1, 0, 1, 0, 1};

using CR = CommutativeRational;
CR X(size_t i) { return CR::variable(2, i); }
CR one() { return CR(2, QScalar(1)); }
CR T(size_t j) { return CR(2, QScalar::t(j)); }

}  // namespace

TEST_CASE("c-vectors along the A2 pentagon") {
    // c-vectors listed as rows; the s3 entry for c_2 follows from c'_k = -c_k at s2
    std::vector<std::vector<LVec>> expected = {{{1, 0}, {0, 1}},   {{1, 0}, {0, -1}}, {{-1, 0}, {0, -1}},
                                               {{-1, -1}, {0, 1}}, {{1, 1}, {-1, 0}}, {{0, 1}, {1, 0}}};
    Seed s = a2_seed();
    CHECK(s.cvectors() == expected[0]);
    for (size_t i = 0; i < kA2Seq.size(); ++i) {
        s = s.mutate(kA2Seq[i]);
        CHECK(s.cvectors() == expected[i + 1]);
        int64_t sign = (i % 2 == 0) ? 1 : -1;
        CHECK(s.eps(0, 1) == sign);
    }
}

TEST_CASE("seed mutation is an involution") {
    Seed s = a2_seed();
    for (size_t k = 0; k < 2; ++k) {
        Seed r = s.mutate(k).mutate(k);
        CHECK(r.cvectors() == s.cvectors());
        CHECK(r.epsilon() == s.epsilon());
    }
    CHECK_THROWS(make_fixed_data(2, {0, 1}, rm({{0, 1}, {1, 0}}), {1, 1}));
    CHECK_THROWS(make_fixed_data(2, {0, 1}, rm({{0, -1}, {1, 0}}), {2, 2}));
}

TEST_CASE("classical X pentagon") {
    MutationTable t = apply_mutation_sequence(a2_seed(), kA2Seq, MutationMode::XClassical);
    std::vector<std::vector<CR>> rows = {
        {X(0), X(1)},
        {X(0) * (one() + X(1)), X(1).inverse()},
        {(X(0) * (one() + X(1))).inverse(), (X(0) * X(1) + X(0) + one()) / X(1)},
        {(X(0) + one()) / (X(0) * X(1)), X(1) / (X(0) * X(1) + X(0) + one())},
        {X(0) * X(1) / (X(0) + one()), X(0).inverse()},
        {X(1), X(0)}};
    REQUIRE(t.classical.size() == rows.size());
    for (size_t r = 0; r < rows.size(); ++r)
        for (size_t i = 0; i < 2; ++i) CHECK(t.classical[r][i] == rows[r][i]);
}

TEST_CASE("X family pentagon with coefficients") {
    MutationTable t = apply_mutation_sequence(a2_seed(), kA2Seq, MutationMode::XFamily);
    std::vector<std::vector<CR>> rows = {
        {X(0), X(1)},
        {X(0) * (one() + T(2) * X(1)), X(1).inverse()},
        {(X(0) * (one() + T(2) * X(1))).inverse(), (T(1) * T(2) * X(0) * X(1) + T(1) * X(0) + one()) / X(1)},
        {(T(1) * X(0) + one()) / (X(0) * X(1)), X(1) / (T(1) * T(2) * X(0) * X(1) + T(1) * X(0) + one())},
        {X(0) * X(1) / (T(1) * X(0) + one()), X(0).inverse()},
        {X(1), X(0)}};
    REQUIRE(t.classical.size() == rows.size());
    for (size_t r = 0; r < rows.size(); ++r)
        for (size_t i = 0; i < 2; ++i) CHECK(t.classical[r][i] == rows[r][i]);
}

TEST_CASE("quantum X pentagon") {
    Seed s0 = a2_seed();
    Algebra alg = x_algebra(s0);
    std::vector<std::vector<std::string>> rows = {
        {"X1", "X2"},
        {"X1(1+qX2)", "X2^-1"},
        {"(1+qX2)^-1X1^-1", "(X1^-1X2)^-1(X1^-1+q(1+qX2))"},
        {"X2^-1(1+q^-1X1^-1)", "(X1^-1+q(1+qX2))^-1(X1^-1X2)"},
        {"(1+q^-1X1^-1)^-1X2", "X1^-1"},
        {"X2", "X1"}};
    MutationTable t = apply_mutation_sequence(s0, kA2Seq, MutationMode::XQuantum);
    REQUIRE(t.quantum.size() == rows.size());
    for (size_t r = 0; r < rows.size(); ++r)
        for (size_t i = 0; i < 2; ++i) {
            INFO("row " << r << " var " << i << ": " << t.quantum[r][i].str());
            CHECK(words_equal(t.quantum[r][i], parse_word(alg, rows[r][i]), 12));
        }
}

TEST_CASE("quantum X pentagon with coefficients") {
    Seed s0 = a2_seed();
    Algebra alg = x_algebra(s0);
    std::vector<std::vector<std::string>> rows = {
        {"X1", "X2"},
        {"X1(1+t2qX2)", "X2^-1"},
        {"(1+t2qX2)^-1X1^-1", "(X1^-1X2)^-1(X1^-1+t1q(1+t2qX2))"},
        {"X2^-1(t1+q^-1X1^-1)", "(X1^-1+t1q(1+t2qX2))^-1(X1^-1X2)"},
        {"(t1+q^-1X1^-1)^-1X2", "X1^-1"},
        {"X2", "X1"}};
    MutationTable t = apply_mutation_sequence(s0, kA2Seq, MutationMode::XQuantumCoeff);
    REQUIRE(t.quantum.size() == rows.size());
    for (size_t r = 0; r < rows.size(); ++r)
        for (size_t i = 0; i < 2; ++i) {
            INFO("row " << r << " var " << i << ": " << t.quantum[r][i].str());
            CHECK(words_equal(t.quantum[r][i], parse_word(alg, rows[r][i]), 12));
        }
}

TEST_CASE("quantum mutation factors as mu-sharp after mu-prime") {
    Seed s = a2_seed();
    for (int round = 0; round < 4; ++round) {
        for (size_t k = 0; k < 2; ++k) {
            for (bool coeff : {false, true}) {
                Algebra alg = x_algebra(s);
                auto full = mutate_x_quantum(s, k, coeff);
                auto sharp = mu_sharp(s, k, coeff);
                auto prime = mu_prime(s, k, coeff);
                for (size_t i = 0; i < 2; ++i)
                    CHECK(words_equal(substitute(prime[i], alg, sharp), full[i], 10));
            }
        }
        s = s.mutate(round % 2);
    }
}

TEST_CASE("quantum mutation twice is the identity") {
    Seed s0 = a2_seed();
    Algebra alg = x_algebra(s0);
    for (size_t k = 0; k < 2; ++k) {
        MutationTable t = apply_mutation_sequence(s0, {k, k}, MutationMode::XQuantumCoeff);
        for (size_t i = 0; i < 2; ++i) CHECK(words_equal(t.quantum[2][i], FactoredWord::generator(alg, i), 12));
    }
}

TEST_CASE("table rendering") {
    MutationTable t = apply_mutation_sequence(a2_seed(), {1}, MutationMode::XClassical);
    std::string text = render_table_text(t);
    CHECK(text.find("mu_2") != std::string::npos);
    std::string js = render_table_json(t);
    CHECK(js.find("\"cvectors\"") != std::string::npos);
}
