#include "qca/io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace qca {

namespace {

Rational json_rational(const nlohmann::json& j) {
    if (j.is_number_integer()) return Rational(j.get<int64_t>());
    if (j.is_string()) return Rational::parse(j.get<std::string>());
    throw std::invalid_argument("expected an integer or a fraction string");
}

RMat json_matrix(const nlohmann::json& j, size_t n, const char* what) {
    if (!j.is_array() || j.size() != n) throw std::invalid_argument(std::string(what) + " must be a square matrix");
    RMat m;
    for (const auto& row : j) {
        if (!row.is_array() || row.size() != n) throw std::invalid_argument(std::string(what) + " must be a square matrix");
        std::vector<Rational> r;
        for (const auto& x : row) r.push_back(json_rational(x));
        m.push_back(r);
    }
    return m;
}

}  // namespace

SeedFile parse_seed_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument(std::string("seed file: ") + e.what());
    }
    size_t n = j.at("rank").get<size_t>();
    std::vector<size_t> uf;
    if (j.contains("unfrozen")) {
        for (const auto& x : j["unfrozen"]) {
            int64_t i = x.get<int64_t>();
            if (i < 1 || static_cast<size_t>(i) > n) throw std::invalid_argument("unfrozen index out of range");
            uf.push_back(static_cast<size_t>(i - 1));
        }
    } else {
        for (size_t i = 0; i < n; ++i) uf.push_back(i);
    }
    std::vector<int64_t> d(n, 1);
    if (j.contains("d")) d = j["d"].get<std::vector<int64_t>>();
    RMat skew = json_matrix(j.at("skew"), n, "skew");
    std::vector<std::string> labels;
    if (j.contains("labels")) labels = j["labels"].get<std::vector<std::string>>();
    SeedFile sf;
    sf.fixed = make_fixed_data(n, uf, skew, d, labels);
    if (j.contains("coefficients")) {
        std::string c = j["coefficients"].get<std::string>();
        if (c == "principal")
            sf.principal = true;
        else if (c == "none")
            sf.principal = false;
        else
            throw std::invalid_argument("coefficients must be \"principal\" or \"none\"");
    }
    if (j.contains("lambda")) sf.lambda = json_matrix(j["lambda"], n, "lambda");
    if (j.contains("grading")) {
        std::vector<Rational> g;
        for (const auto& x : j["grading"]) g.push_back(json_rational(x));
        if (g.size() != n) throw std::invalid_argument("grading must have one entry per direction");
        sf.grading = g;
    }
    if (j.contains("qname")) sf.qname = j["qname"].get<std::string>();
    return sf;
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << text;
}

SeedFile load_seed_file(const std::string& path) { return parse_seed_json(read_text_file(path)); }

}  // namespace qca
