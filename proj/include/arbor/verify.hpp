#pragma once

#include <string>
#include <vector>

namespace arbor {

struct CriterionResult {
    std::string id;
    std::string detail;
    bool pass = false;
    double seconds = 0.0;
};

const std::vector<std::string>& verify_suites();  // signs, orders, structure, dynamics, padic, all

/// Run one verification suite; errors UnknownSuite for anything else.
std::vector<CriterionResult> run_verify(const std::string& suite);

}  // namespace arbor
