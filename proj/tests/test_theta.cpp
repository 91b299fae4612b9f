#include <string>

#include "doctest.h"
#include "qca/io.hpp"
#include "qca/theta.hpp"

using namespace qca;

namespace {

QScalar v(int64_t e) { return QScalar::q(Rational(e)); }

ScatterDataPtr a23_data(bool quantum) {
    auto f = load_seed_file(std::string(QCA_TEST_DATA) + "/a23.json");
    return make_scatter_data(Seed(f.fixed), quantum, f.lambda, f.grading);
}

const Point kQ{Rational(1, 3), Rational(1, 7)};

}  // namespace

TEST_CASE("the broken line from (-3,5) to (1,-1) is unique and carries v^-2 - 1 + v^2") {
    auto data = a23_data(true);
    const LVec m0 = {-3, 5};
    const LVec target = {1, -1};
    Rational budget = broken_line_budget(*data, m0, 2, target);
    CHECK(budget == Rational(4));
    for (int k = 2; k <= 6; ++k) {
        Diagram d = complete_to_order(initial_diagram(data), k);
        auto lines = enumerate_broken_lines(m0, kQ, d, budget, target);
        REQUIRE(lines.size() == 1);
        const BrokenLine& bl = lines[0];
        CHECK(bl.final_coeff() == v(-2) - QScalar(1) + v(2));
        CHECK(bar(bl.final_coeff()) == bl.final_coeff());
        REQUIRE(bl.segments.size() == 4);
        std::vector<LVec> exps;
        for (const auto& s : bl.segments) exps.push_back(s.exponent);
        CHECK(exps == std::vector<LVec>{{-3, 5}, {-1, 2}, {-1, -1}, {1, -1}});
        // bends at the new wall, the vertical axis, then the horizontal axis
        std::vector<LVec> bent;
        for (const auto& c : bl.crossings)
            if (c.power > 0) bent.push_back(d.walls[c.wall].normal);
        CHECK(bent == std::vector<LVec>{{1, 1}, {1, 0}, {0, 1}});
        CHECK(bl.bends() == 3);
        if (k == 2) CHECK(bl.crossings.size() == 4);
        // segment geometry: each segment has direction -m
        for (const auto& s : bl.segments) {
            if (!s.start) continue;
            Rational dx = s.end.first - s.start->first, dy = s.end.second - s.start->second;
            CHECK(dx * Rational(s.exponent[1]) == dy * Rational(s.exponent[0]));
            CHECK((dx * Rational(-s.exponent[0]) + dy * Rational(-s.exponent[1])) > Rational(0));
        }
    }
}

TEST_CASE("theta coefficient and the greedy comparison") {
    auto data = a23_data(true);
    Diagram d = complete_to_order(initial_diagram(data), 4);
    Terms th = theta_function({-3, 5}, kQ, d, Rational(4));
    auto it = th.find({1, -1});
    REQUIRE(it != th.end());
    QScalar greedy_e21 = v(2) - QScalar(1) + v(-2);
    CHECK(it->second == greedy_e21);
    CHECK(bar(it->second) == greedy_e21);
    CHECK(th.at({-3, 5}).is_one());
}

TEST_CASE("endpoint chamber stability") {
    auto data = a23_data(true);
    Diagram d = complete_to_order(initial_diagram(data), 4);
    Terms a = theta_function({-3, 5}, kQ, d, Rational(4));
    Terms b = theta_function({-3, 5}, {Rational(5, 2), Rational(2, 11)}, d, Rational(4));
    CHECK(a == b);
    Terms c = theta_function({-1, 1}, kQ, d, Rational(3));
    Terms e = theta_function({-1, 1}, {Rational(7), Rational(3, 5)}, d, Rational(3));
    CHECK(c == e);
}

TEST_CASE("trivial broken lines") {
    auto data = a23_data(true);
    Diagram d = complete_to_order(initial_diagram(data), 3);
    // m0 in the positive chamber with Q there: only the straight line
    auto lines = enumerate_broken_lines({2, 1}, kQ, d, Rational(3));
    REQUIRE(lines.size() == 1);
    CHECK(lines[0].crossings.empty());
    CHECK(lines[0].final_coeff().is_one());
    Terms th = theta_function({2, 1}, kQ, d, Rational(3));
    CHECK(th.size() == 1);
    // budget 0: straight lines only
    for (const auto& bl : enumerate_broken_lines({-3, 5}, kQ, d, Rational(0))) CHECK(bl.bends() == 0);
    CHECK_THROWS_AS(enumerate_broken_lines({-3, 5}, {Rational(1), Rational(0)}, d, Rational(2)), std::invalid_argument);
}

TEST_CASE("classical limit of theta coefficients") {
    auto qd = a23_data(true);
    auto cd = a23_data(false);
    Diagram dq = complete_to_order(initial_diagram(qd), 4);
    Diagram dc = complete_to_order(initial_diagram(cd), 4);
    for (const LVec& m0 : {LVec{-3, 5}, LVec{-1, 2}, LVec{-2, 1}, LVec{-1, -1}, LVec{1, -2}}) {
        Terms tq = theta_function(m0, kQ, dq, Rational(2));
        Terms tc = theta_function(m0, kQ, dc, Rational(2));
        REQUIRE(tq.size() == tc.size());
        for (const auto& [m, c] : tq) CHECK(limit_q1(c) == tc.at(m));
    }
    // the classical coefficient counts the same one line with weight 1
    auto lines = enumerate_broken_lines({-3, 5}, kQ, dc, Rational(4), LVec{1, -1});
    REQUIRE(lines.size() == 1);
    CHECK(lines[0].final_coeff().is_one());
}

TEST_CASE("greedy T map") {
    CHECK(greedy_T({-3, 5}, 3) == LVec{-3, -4});
    CHECK(greedy_T({2, 7}, 3) == LVec{2, 7});
    CHECK(greedy_T({-1, 0}, 3) == LVec{-1, -3});
}

TEST_CASE("broken line export") {
    auto data = a23_data(true);
    Diagram d = complete_to_order(initial_diagram(data), 2);
    auto lines = enumerate_broken_lines({-3, 5}, kQ, d, Rational(4), LVec{1, -1});
    std::string js = broken_lines_json(d, lines);
    CHECK(js.find("\"final_exponent\"") != std::string::npos);
    CHECK(js.find("1/3") != std::string::npos);
    auto pls = broken_line_polylines(d, lines, 6.0);
    REQUIRE(pls.size() == 1);
    CHECK(pls[0].points.size() == 5);
    std::string svg = diagram_svg(d, SvgOptions(), pls);
    CHECK(svg.find("class=\"broken-line\"") != std::string::npos);
    CHECK(svg == diagram_svg(d, SvgOptions(), pls));
}
