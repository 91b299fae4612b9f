#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "qca/checks.hpp"
#include "qca/duality.hpp"
#include "qca/io.hpp"
#include "qca/mutation.hpp"
#include "qca/poisson.hpp"
#include "qca/scatter.hpp"
#include "qca/theta.hpp"

using namespace qca;

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::vector<std::string> split(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(item);
    return out;
}

std::vector<Rational> parse_rationals(const std::string& s, size_t n, const std::string& what) {
    auto parts = split(s);
    if (parts.size() != n) throw UsageError(what + " needs " + std::to_string(n) + " comma-separated entries");
    std::vector<Rational> out;
    for (const auto& p : parts) {
        try {
            out.push_back(Rational::parse(p));
        } catch (const std::exception&) {
            throw UsageError(what + ": cannot parse '" + p + "'");
        }
    }
    return out;
}

LVec parse_lattice(const std::string& s, size_t n, const std::string& what) {
    LVec out;
    for (const auto& r : parse_rationals(s, n, what)) {
        if (!r.is_integer()) throw UsageError(what + " must be integral");
        out.push_back(r.num());
    }
    return out;
}

std::vector<size_t> parse_sequence(const std::string& s, const Seed& seed) {
    std::vector<size_t> out;
    if (s.empty()) return out;
    for (const auto& p : split(s)) {
        int64_t k = 0;
        try {
            k = std::stoll(p);
        } catch (const std::exception&) {
            throw UsageError("sequence: cannot parse '" + p + "'");
        }
        if (k < 1 || static_cast<size_t>(k) > seed.rank()) throw UsageError("sequence index out of range: " + p);
        if (!seed.fixed().is_unfrozen(k - 1)) throw UsageError("direction " + p + " is frozen");
        out.push_back(static_cast<size_t>(k - 1));
    }
    return out;
}

SeedFile load(const std::string& path) {
    try {
        return load_seed_file(path);
    } catch (const std::exception& e) {
        throw UsageError(path + ": " + e.what());
    }
}

void emit(const std::string& path, const std::string& text) {
    if (!path.empty()) write_text_file(path, text);
}

MutationTable run_table(const SeedFile& sf, const std::string& seq, const std::string& mode_s) {
    Seed s(sf.fixed);
    MutationMode mode;
    try {
        mode = parse_mode(mode_s);
    } catch (const std::exception& e) {
        throw UsageError(e.what());
    }
    if (mode_has_coefficients(mode) && !sf.principal) throw UsageError("mode " + mode_s + " needs principal coefficients");
    std::optional<RMat> lambda = sf.lambda;
    if (mode == MutationMode::AQuantum && !lambda) lambda = synthesize_lambda(s);
    return apply_mutation_sequence(s, parse_sequence(seq, s), mode, lambda);
}

std::string matrix_str(const RMat& m) {
    std::string s = "[";
    for (size_t i = 0; i < m.size(); ++i) {
        s += i ? ", [" : "[";
        for (size_t j = 0; j < m[i].size(); ++j) s += (j ? ", " : "") + m[i][j].str();
        s += "]";
    }
    return s + "]";
}

nlohmann::json matrix_json(const RMat& m) {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& row : m) {
        nlohmann::json r = nlohmann::json::array();
        for (const auto& x : row) r.push_back(x.str());
        j.push_back(r);
    }
    return j;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"qca: exact computations with quantum cluster algebras"};
    app.require_subcommand(1);
    app.fallthrough();
    std::string format = "text";
    app.add_option("--format", format, "output format")->check(CLI::IsMember({"text", "json"}));

    std::string seed_path, sequence, mode = "x-quantum", emit_json, emit_svg;
    auto* mutate = app.add_subcommand("mutate", "mutate along a sequence and print the final seed");
    auto* table = app.add_subcommand("table", "print every seed along a mutation sequence");
    for (auto* sc : {mutate, table}) {
        sc->add_option("--seed", seed_path, "seed file")->required();
        sc->add_option("--sequence", sequence, "1-based directions, e.g. 2,1,2")->required();
        sc->add_option("--mode", mode, "x-classical|x-family|x-quantum|x-quantum-coeff|a-classical|a-prin|a-quantum");
        sc->add_option("--emit-json", emit_json, "write the JSON table");
    }

    int order = 2;
    bool quantum = false, clockwise = false;
    std::string loop_start;
    auto* scatter = app.add_subcommand("scatter", "complete a rank-2 scattering diagram");
    scatter->add_option("--seed", seed_path, "seed file")->required();
    scatter->add_option("--order", order, "degree K")->check(CLI::NonNegativeNumber);
    scatter->add_flag("--quantum", quantum, "quantum diagram");
    scatter->add_option("--loop-start", loop_start, "loop base direction x,y");
    scatter->add_flag("--clockwise", clockwise, "clockwise loop");
    scatter->add_option("--emit-json", emit_json, "write the diagram JSON");
    scatter->add_option("--emit-svg", emit_svg, "write the diagram SVG");

    std::string gvector, basepoint, filter;
    bool classical = false;
    auto* theta = app.add_subcommand("theta", "broken lines and theta functions");
    theta->add_option("--seed", seed_path, "seed file")->required();
    theta->add_option("--gvector", gvector, "initial exponent a,b")->required();
    theta->add_option("--basepoint", basepoint, "endpoint x,y")->required();
    theta->add_option("--order", order, "diagram degree K")->check(CLI::NonNegativeNumber);
    theta->add_option("--filter-exponent", filter, "keep lines ending in p,q");
    theta->add_flag("--classical", classical, "classical diagram");
    theta->add_option("--emit-json", emit_json, "write the broken lines JSON");
    theta->add_option("--emit-svg", emit_svg, "write the diagram with broken lines");

    bool check_inter = false, no_coeff = false;
    int porder = 8;
    auto* pstar = app.add_subcommand("pstar", "p* map, compatible pair and intertwining");
    pstar->add_option("--seed", seed_path, "seed file")->required();
    pstar->add_flag("--check-intertwining", check_inter, "check p* against quantum mutation");
    pstar->add_option("--order", porder, "comparison degree K")->check(CLI::PositiveNumber);
    pstar->add_flag("--no-coefficients", no_coeff, "coefficient-free mutation");
    pstar->add_option("--emit-json", emit_json, "write the JSON report");

    int pk = 0;
    bool rank_check = false;
    auto* poisson = app.add_subcommand("poisson", "Poisson structure checks");
    poisson->add_option("--seed", seed_path, "seed file")->required();
    poisson->add_option("--k", pk, "1-based mutation direction (all if omitted)");
    poisson->add_flag("--rank-check", rank_check, "also compare semiclassical and bivector brackets on generators");
    poisson->add_option("--emit-json", emit_json, "write the JSON report");

    std::string suite = "all";
    auto* check = app.add_subcommand("check", "run the built-in acceptance checks");
    check->add_option("--suite", suite, "all or a list of criteria, e.g. 1,3");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }
    bool json = format == "json";

    try {
        if (*mutate || *table) {
            SeedFile sf = load(seed_path);
            MutationTable t = run_table(sf, sequence, mode);
            if (*mutate) t.rows = {t.rows.back()};
            std::string js = render_table_json(t);
            emit(emit_json, js);
            std::cout << (json ? js + "\n" : render_table_text(t));
            return 0;
        }
        if (*scatter) {
            SeedFile sf = load(seed_path);
            auto data = make_scatter_data(Seed(sf.fixed), quantum, sf.lambda, sf.grading);
            LoopPath loop;
            loop.ccw = !clockwise;
            if (!loop_start.empty()) loop.start = parse_rationals(loop_start, 2, "--loop-start");
            Diagram d = complete_to_order(initial_diagram(data, order), order, loop);
            bool consistent = loop_is_identity(d, loop, 2);
            std::string js = diagram_json(d);
            emit(emit_json, js);
            emit(emit_svg, diagram_svg(d));
            if (json) {
                std::cout << js << "\n";
            } else {
                std::cout << (quantum ? "quantum" : "classical") << " diagram to degree " << order << ", "
                          << d.walls.size() << " walls\n";
                for (const auto& w : d.walls)
                    std::cout << "  " << (w.incoming ? "incoming" : "outgoing") << " n=" << lv_str(w.normal)
                              << " ray=" << lv_str(w.ray) << (w.line ? " (line)" : "") << "  "
                              << wall_function_str(*data, w, 100) << "\n";
                std::cout << "loop product " << (consistent ? "is" : "is NOT") << " the identity to degree " << order
                          << "\n";
            }
            return consistent ? 0 : 1;
        }
        if (*theta) {
            SeedFile sf = load(seed_path);
            auto data = make_scatter_data(Seed(sf.fixed), !classical, sf.lambda, sf.grading);
            LVec m0 = parse_lattice(gvector, 2, "--gvector");
            auto q = parse_rationals(basepoint, 2, "--basepoint");
            std::optional<LVec> target;
            if (!filter.empty()) target = parse_lattice(filter, 2, "--filter-exponent");
            Diagram d = complete_to_order(initial_diagram(data, order), order);
            Rational budget = broken_line_budget(*data, m0, order, target);
            auto lines = enumerate_broken_lines(m0, {q[0], q[1]}, d, budget, target);
            Terms sum;
            for (const auto& bl : lines) {
                auto it = sum.find(bl.final_exponent());
                if (it == sum.end())
                    sum.emplace(bl.final_exponent(), bl.final_coeff());
                else
                    it->second += bl.final_coeff();
            }
            std::erase_if(sum, [](const auto& kv) { return kv.second.is_zero(); });
            std::string js = broken_lines_json(d, lines);
            emit(emit_json, js);
            SvgOptions opt;
            emit(emit_svg, diagram_svg(d, opt, broken_line_polylines(d, lines, opt.extent)));
            if (json) {
                nlohmann::json j;
                j["budget"] = budget.str();
                j["theta"] = theta_str(*data, sum);
                j["lines"] = nlohmann::json::parse(js);
                std::cout << j.dump(2) << "\n";
            } else {
                std::cout << lines.size() << " broken line" << (lines.size() == 1 ? "" : "s") << " (bend degree <= "
                          << budget.str() << ")\n";
                for (const auto& bl : lines) {
                    std::cout << "  ";
                    for (size_t i = 0; i < bl.segments.size(); ++i)
                        std::cout << (i ? " -> " : "") << weyl_term_str(*data, bl.segments[i].exponent, bl.segments[i].coeff);
                    std::cout << "\n";
                }
                std::cout << "theta = " << theta_str(*data, sum) << "\n";
            }
            return 0;
        }
        if (*pstar) {
            SeedFile sf = load(seed_path);
            Seed s(sf.fixed);
            RMat lambda = sf.lambda ? *sf.lambda : synthesize_lambda(s);
            auto comp = check_compatible_pair(lambda, s);
            nlohmann::json rep;
            rep["p1_star"] = matrix_json(p1_star(s));
            rep["lambda"] = matrix_json(lambda);
            rep["compatible"] = comp.ok;
            rep["injective_on_unfrozen"] = p1_star_injective_on_unfrozen(s);
            bool ok = comp.ok;
            std::ostringstream text;
            text << "p1* = " << matrix_str(p1_star(s)) << "\n";
            text << "Lambda = " << matrix_str(lambda) << "\n";
            text << "compatible pair: " << (comp.ok ? "yes" : "no: " + comp.message) << "\n";
            text << "p1* injective on unfrozen directions: " << (p1_star_injective_on_unfrozen(s) ? "yes" : "no")
                 << "\n";
            if (check_inter && comp.ok) {
                rep["intertwining"] = nlohmann::json::array();
                for (const auto& r : check_intertwining(s, lambda, porder, !no_coeff)) {
                    ok = ok && r.ok;
                    rep["intertwining"].push_back({{"k", r.k + 1}, {"i", r.i + 1}, {"ok", r.ok}});
                    text << "  mu_" << r.k + 1 << " generator " << r.i + 1 << ": " << (r.ok ? "PASS" : "FAIL") << "\n";
                    if (!r.ok) text << "    lhs " << r.lhs << "\n    rhs " << r.rhs << "\n";
                }
            }
            rep["ok"] = ok;
            emit(emit_json, rep.dump(2));
            std::cout << (json ? rep.dump(2) + "\n" : text.str());
            return ok ? 0 : 1;
        }
        if (*poisson) {
            SeedFile sf = load(seed_path);
            Seed s(sf.fixed);
            if (pk != 0 && (pk < 1 || static_cast<size_t>(pk) > s.rank() || !s.fixed().is_unfrozen(pk - 1)))
                throw UsageError("--k must name an unfrozen direction");
            auto checks = pk ? check_poisson_map(s, static_cast<size_t>(pk - 1)) : check_poisson_map(s);
            bool ok = true;
            nlohmann::json rep;
            rep["poisson_map"] = nlohmann::json::array();
            std::ostringstream text;
            size_t n = s.rank();
            size_t last_k = SIZE_MAX;
            std::vector<std::string> grid;
            auto flush = [&]() {
                if (last_k == SIZE_MAX) return;
                text << "mu_" << last_k + 1 << "\n";
                for (const auto& row : grid) text << "  " << row << "\n";
            };
            for (const auto& c : checks) {
                if (c.k != last_k) {
                    flush();
                    last_k = c.k;
                    grid.assign(n, std::string(n, '.'));
                }
                grid[c.i][c.j] = c.ok ? 'P' : 'F';
                ok = ok && c.ok;
                rep["poisson_map"].push_back({{"k", c.k + 1}, {"i", c.i + 1}, {"j", c.j + 1}, {"ok", c.ok}});
            }
            flush();
            if (rank_check) {
                Algebra x = x_algebra(s);
                text << "semiclassical bracket\n";
                rep["semiclassical"] = nlohmann::json::array();
                for (size_t i = 0; i < n; ++i) {
                    std::string row;
                    for (size_t j = 0; j < n; ++j) {
                        auto a = QTorusElement::generator(x, i), b = QTorusElement::generator(x, j);
                        bool good = semiclassical_bracket(a, b) ==
                                    poisson_bracket(classical_image(a), classical_image(b), s.epsilon_hat());
                        ok = ok && good;
                        row += good ? 'P' : 'F';
                        rep["semiclassical"].push_back({{"i", i + 1}, {"j", j + 1}, {"ok", good}});
                    }
                    text << "  " << row << "\n";
                }
            }
            rep["ok"] = ok;
            emit(emit_json, rep.dump(2));
            std::cout << (json ? rep.dump(2) + "\n" : text.str());
            return ok ? 0 : 1;
        }
        if (*check) {
            std::vector<int> ids;
            if (suite == "all") {
                ids = {1, 2, 3, 4, 5, 6};
            } else {
                for (const auto& p : split(suite)) {
                    try {
                        ids.push_back(std::stoi(p));
                    } catch (const std::exception&) {
                        throw UsageError("--suite: cannot parse '" + p + "'");
                    }
                    if (ids.back() < 1 || ids.back() > 6) throw UsageError("--suite: criteria are numbered 1 to 6");
                }
            }
            bool ok = true;
            nlohmann::json rep = nlohmann::json::array();
            for (const auto& r : run_criteria(ids)) {
                ok = ok && r.ok;
                if (json)
                    rep.push_back({{"criterion", r.id}, {"title", r.title}, {"ok", r.ok}, {"failures", r.failures}});
                else
                    std::cout << criterion_line(r) << "\n";
            }
            if (json) std::cout << rep.dump(2) << "\n";
            return ok ? 0 : 1;
        }
    } catch (const UsageError& e) {
        std::cerr << "qca: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "qca: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "qca: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "qca: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
