#pragma once

#include <optional>
#include <string>

#include "qca/seeds.hpp"

namespace qca {

struct SeedFile {
    FixedDataPtr fixed;
    bool principal = true;
    std::optional<RMat> lambda;
    std::optional<std::vector<Rational>> grading;
    std::string qname = "q";
};

SeedFile parse_seed_json(const std::string& text);
SeedFile load_seed_file(const std::string& path);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace qca
