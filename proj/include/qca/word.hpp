#pragma once

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "qca/series.hpp"

namespace qca {

// Element of the skew field of a quantum torus, kept as an expression tree
// over polynomial leaves.
class FactoredWord {
public:
    enum class Kind { Poly, Product, Sum, Inverse };
    struct Node;
    using NodePtr = std::shared_ptr<const Node>;
    struct Node {
        Kind kind;
        QTorusElement poly;
        std::vector<NodePtr> kids;
    };

    FactoredWord() = default;
    explicit FactoredWord(const QTorusElement& p);
    FactoredWord(Algebra alg, const QScalar& c);
    static FactoredWord monomial(Algebra alg, const LVec& n, const QScalar& c = QScalar(1));
    static FactoredWord generator(Algebra alg, size_t i, int64_t power = 1);

    const Algebra& algebra() const { return alg_; }
    const NodePtr& root() const { return root_; }
    Kind kind() const { return root_->kind; }
    bool is_poly() const { return root_->kind == Kind::Poly; }
    const QTorusElement& poly() const { return root_->poly; }

    friend FactoredWord operator*(const FactoredWord& a, const FactoredWord& b);
    friend FactoredWord operator+(const FactoredWord& a, const FactoredWord& b);
    friend FactoredWord operator-(const FactoredWord& a, const FactoredWord& b);
    friend FactoredWord operator*(const QScalar& c, const FactoredWord& a);
    FactoredWord operator-() const;
    FactoredWord inverse() const;
    FactoredWord pow(int64_t n) const;

    std::string str() const;

private:
    FactoredWord(Algebra alg, NodePtr root) : alg_(std::move(alg)), root_(std::move(root)) {}
    static FactoredWord make_product(Algebra alg, std::vector<NodePtr> kids);
    static FactoredWord make_sum(Algebra alg, std::vector<NodePtr> kids);

    Algebra alg_;
    NodePtr root_;
};

using ScalarMap = std::function<QScalar(const QScalar&)>;

// Homomorphism defined on generators: X_i -> images[i], scalars -> smap.
FactoredWord substitute(const FactoredWord& w, const Algebra& target, const std::vector<FactoredWord>& images,
                        const ScalarMap& smap = nullptr);
FactoredWord map_scalars(const FactoredWord& w, const ScalarMap& smap, Algebra target = nullptr);
// anti-automorphism: reverses products and bars every scalar
FactoredWord word_star(const FactoredWord& w);

// Parse an expression in generator labels, the q name, t1..tr, integers,
// + - * / ^ and parentheses; juxtaposition multiplies.
FactoredWord parse_word(const Algebra& alg, const std::string& text);

Series expand_word(const FactoredWord& w, const Grading& g, const Rational& order);
// w1 = w2 to order K: expansion of w1 * w2^{-1} - 1 vanishes through degree K
bool words_equal(const FactoredWord& w1, const FactoredWord& w2, int order = 12);
// same, along one fixed grading
bool words_equal_along(const FactoredWord& w1, const FactoredWord& w2, const Grading& g, const Rational& order);

}  // namespace qca
