#include <iostream>

#include "qca/checks.hpp"

int main() {
    bool ok = true;
    for (const auto& r : qca::run_criteria({1, 2, 3, 4, 5, 6})) {
        std::cout << qca::criterion_line(r) << std::endl;
        ok = ok && r.ok;
    }
    return ok ? 0 : 1;
}
