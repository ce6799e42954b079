// Runs the full verification suite and prints one line per criterion.
// Exit code 0 only when every criterion passes.
#include <cstdio>

#include "arbor/verify.hpp"

int main() {
    const auto results = arbor::run_verify("all");
    bool all_pass = true;
    for (const auto& r : results) {
        std::printf("%-28s %s%s%s (%.2fs)\n", r.id.c_str(), r.pass ? "PASS" : "FAIL",
                    r.detail.empty() ? "" : "  -- ", r.detail.c_str(), r.seconds);
        all_pass = all_pass && r.pass;
    }
    std::printf("%s: %zu criteria\n", all_pass ? "ALL PASS" : "FAILURES PRESENT",
                results.size());
    return all_pass ? 0 : 1;
}
