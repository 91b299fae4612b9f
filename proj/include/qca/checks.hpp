#pragma once

#include <string>
#include <vector>

#include "qca/seeds.hpp"

namespace qca {

struct CriterionResult {
    int id = 0;
    std::string title;
    bool ok = false;
    double seconds = 0;
    double limit = 0;
    std::vector<std::string> failures;
};

// built-in seeds used by the acceptance suite
Seed builtin_seed(const std::string& name);

CriterionResult run_criterion(int id);
std::vector<CriterionResult> run_criteria(const std::vector<int>& ids);
std::string criterion_line(const CriterionResult& r);

}  // namespace qca
