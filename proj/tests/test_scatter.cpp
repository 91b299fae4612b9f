#include <string>

#include "doctest.h"
#include "qca/io.hpp"
#include "qca/scatter.hpp"

using namespace qca;

namespace {

SeedFile fixture_file(const std::string& name) { return load_seed_file(std::string(QCA_TEST_DATA) + "/" + name); }

RMat rm(std::vector<std::vector<int64_t>> m) {
    RMat r;
    for (auto& row : m) {
        std::vector<Rational> rr;
        for (auto x : row) rr.emplace_back(x);
        r.push_back(rr);
    }
    return r;
}

QScalar v(int64_t e) { return QScalar::q(Rational(e)); }

Seed a2_plus() { return Seed(make_fixed_data(2, {0, 1}, rm({{0, 1}, {-1, 0}}), {1, 1})); }

ScatterDataPtr a23_data(bool quantum) {
    auto f = fixture_file("a23.json");
    return make_scatter_data(Seed(f.fixed), quantum, f.lambda, f.grading);
}

std::vector<const Wall*> outgoing(const Diagram& d) {
    std::vector<const Wall*> r;
    for (const auto& w : d.walls)
        if (!w.incoming) r.push_back(&w);
    return r;
}

}  // namespace

TEST_CASE("initial walls of A(2,3)") {
    auto data = a23_data(true);
    CHECK(data->pstar == std::vector<LVec>{{0, -3}, {2, 0}});
    CHECK(data->degree({2, -3}) == Rational(2));
    CHECK(data->degree({0, -3}) == Rational(1));
    Diagram d = initial_diagram(data, 3);
    REQUIRE(d.walls.size() == 2);
    CHECK(d.walls[0].ray == LVec{0, 1});
    CHECK(d.walls[1].ray == LVec{1, 0});
    CHECK(*d.walls[0].dilog == 3);
    CHECK(*d.walls[1].dilog == 2);
    CHECK(wall_function_str(*data, d.walls[0]) == "Psi[v^3](A2^-3)");
}

TEST_CASE("dilogarithm product form agrees with the log form") {
    auto data = a23_data(true);
    Diagram d = initial_diagram(data, 6);
    for (auto& w0 : d.walls) {
        Wall w = w0;
        w.dilog.reset();
        for (int sign : {1, -1})
            for (int64_t a = -3; a <= 3; ++a)
                for (int64_t b = -3; b <= 3; ++b) {
                    auto exact = wall_factor(*data, w0, {a, b}, sign, 6);
                    auto logf = wall_factor(*data, w, {a, b}, sign, 6);
                    for (size_t j = 0; j < exact.size(); ++j) CHECK(exact[j] == logf[j]);
                }
    }
}

TEST_CASE("classical A2 completes with one wall") {
    auto data = make_scatter_data(a2_plus(), false);
    for (int k = 2; k <= 6; ++k) {
        Diagram d = complete_to_order(initial_diagram(data), k);
        auto out = outgoing(d);
        REQUIRE(out.size() == 1);
        CHECK(out[0]->ray == LVec{1, -1});
        CHECK(out[0]->mdir == LVec{-1, 1});
        CHECK(wall_function_str(*data, *out[0]) == "1 + A1^-1*A2");
        CHECK(loop_is_identity(d, LoopPath(), 2));
    }
}

TEST_CASE("quantum A2 completes with one dilogarithm-type wall") {
    auto data = make_scatter_data(a2_plus(), true);
    Diagram d = complete_to_order(initial_diagram(data), 5);
    auto out = outgoing(d);
    REQUIRE(out.size() == 1);
    CHECK(out[0]->ray == LVec{1, -1});
    const Wall& w = *out[0];
    // Psi_v has log coefficients (-1)^{j+1} (v - v^-1) / (j (v^j - v^-j))
    REQUIRE(w.coeffs.size() == 3);
    for (int64_t j = 1; j <= 2; ++j) {
        QScalar expect = QScalar(j % 2 ? 1 : -1) * (v(1) - v(-1)) / (QScalar(j) * (v(j) - v(-j)));
        CHECK(w.coeffs.at(j) == expect);
    }
    CHECK(loop_is_identity(d, LoopPath(), 2));
}

TEST_CASE("A(2,3) gets a single new wall at degree 2 with a negative coefficient") {
    auto data = a23_data(true);
    LoopPath cw;
    cw.ccw = false;
    cw.start = {Rational(-1), Rational(2)};
    for (int k = 2; k <= 4; ++k) {
        Diagram d = complete_to_order(initial_diagram(data), k);
        auto out = outgoing(d);
        if (k == 2) REQUIRE(out.size() == 1);
        REQUIRE(!out.empty());
        CHECK(out[0]->normal == LVec{1, 1});
        CHECK(out[0]->ray == LVec{-2, 3});
        CHECK(out[0]->coeffs.at(1) == v(2) - QScalar(1) + v(-2));
        for (const Wall* w : out) {
            // outgoing walls lie in -p1*(N+) and have bar-invariant log coefficients
            CHECK(w->ray == lv_neg(data->mono(w->normal)));
            for (const auto& c : w->coeffs) CHECK(bar(c) == c);
        }
        CHECK(loop_is_identity(d, LoopPath(), 3));
        CHECK(loop_is_identity(d, cw, 3));
    }
    Diagram d3 = complete_to_order(initial_diagram(data), 3);
    std::vector<LVec> normals;
    for (const Wall* w : outgoing(d3)) normals.push_back(w->normal);
    CHECK(normals == std::vector<LVec>{{1, 1}, {2, 1}, {1, 2}});
}

TEST_CASE("inverse loop on the initial walls matches the closed form") {
    auto data = a23_data(true);
    Diagram d = initial_diagram(data, 2);
    LoopPath cw;
    cw.ccw = false;
    cw.start = {Rational(-1), Rational(2)};
    int checked = 0;
    for (int64_t a = -3; a <= 3; ++a)
        for (int64_t b = -3; b <= 3; ++b) {
            LVec u = {a, b};
            Terms t = path_ordered_product(d, cw, u, Rational(2));
            CHECK(left_coefficient(*data, t, u, {2, -3}) == a23_loop_closed_form(a, b));
            ++checked;
        }
    CHECK(checked == 49);
    CHECK(a23_loop_closed_form(1, -1) == v(-1) + v(3) - v(1));
}

TEST_CASE("classical limit of the quantum completion") {
    // at v = 1 the automorphism of A^m is exp(sum_j -j omega(mdir, m) a_j Y^j), which must equal f^{<n-circ, m>}
    for (bool frozen_grading : {false, true}) {
        auto qdata = frozen_grading ? a23_data(true) : make_scatter_data(a2_plus(), true);
        auto cdata = frozen_grading ? a23_data(false) : make_scatter_data(a2_plus(), false);
        const int K = 4;
        Diagram dq = complete_to_order(initial_diagram(qdata), K);
        Diagram dc = complete_to_order(initial_diagram(cdata), K);
        REQUIRE(outgoing(dq).size() == outgoing(dc).size());
        for (size_t i = 0; i < dq.walls.size(); ++i) {
            const Wall& wq = dq.walls[i];
            const Wall& wc = dc.walls[i];
            REQUIRE(wq.normal == wc.normal);
            LVec m = {1, 0};
            if (cdata->pairing(cdata->ncirc(wc.normal), m).is_zero()) m = {0, 1};
            Rational e = cdata->pairing(cdata->ncirc(wc.normal), m);
            Rational om = qdata->alg->omega(wq.mdir, m);
            int64_t J = (Rational(K) / qdata->degree(wq.mdir)).floor();
            auto fq = wall_factor(*qdata, wq, m, 1, J);
            auto fc = wall_factor(*cdata, wc, m, 1, J);
            for (int64_t j = 0; j <= J; ++j) CHECK(limit_q1(fq[j]) == fc[j]);
            CHECK(e.sign() * om.sign() < 0);
        }
        CHECK(loop_is_identity(dc, LoopPath(), 3));
    }
}

TEST_CASE("diagram json round trip") {
    auto data = a23_data(true);
    Diagram d = complete_to_order(initial_diagram(data), 3);
    Diagram e = diagram_from_json(data, diagram_json(d));
    CHECK(diagrams_equal(d, e));
    auto cdata = make_scatter_data(a2_plus(), false);
    Diagram c = complete_to_order(initial_diagram(cdata), 3);
    CHECK(diagrams_equal(c, diagram_from_json(cdata, diagram_json(c))));
}

TEST_CASE("svg output") {
    auto data = make_scatter_data(a2_plus(), false);
    Diagram d = complete_to_order(initial_diagram(data), 3);
    std::string svg = diagram_svg(d);
    size_t rays = 0, pos = 0;
    while ((pos = svg.find("class=\"wall\"", pos)) != std::string::npos) ++rays, ++pos;
    CHECK(rays == 5);
    CHECK(svg.find("1 + A1^-1*A2") != std::string::npos);
    Seed none(make_fixed_data(2, {}, rm({{0, 1}, {-1, 0}}), {1, 1}));
    Diagram empty = initial_diagram(make_scatter_data(none, false));
    CHECK(empty.walls.empty());
    std::string esvg = diagram_svg(empty);
    CHECK(esvg.find("class=\"wall\"") == std::string::npos);
    CHECK(esvg.find("class=\"axis\"") != std::string::npos);
}

TEST_CASE("errors") {
    Seed z(make_fixed_data(2, {0, 1}, rm({{0, 0}, {0, 0}}), {1, 1}));
    CHECK_THROWS_AS(make_scatter_data(z, false), std::domain_error);
    Seed r3(make_fixed_data(3, {0, 1, 2}, rm({{0, 1, 0}, {-1, 0, 1}, {0, -1, 0}}), {1, 1, 1}));
    CHECK_THROWS_AS(make_scatter_data(r3, false), std::invalid_argument);
    auto data = make_scatter_data(a2_plus(), false);
    LoopPath bad;
    bad.start = {Rational(1), Rational(0)};
    CHECK_THROWS_AS(loop_crossings(initial_diagram(data), bad), std::invalid_argument);
}
