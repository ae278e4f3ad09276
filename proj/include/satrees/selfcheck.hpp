#pragma once

#include <string>
#include <vector>

namespace satrees {

struct CheckResult {
    std::string suite;
    std::string name;
    bool pass;
    std::string detail; // empty on pass
};

/// Runs the named property suite ("ideal", "saturation", "geometry",
/// "asymptotics", "regularity", "cli", or "all"). Deterministic seeds.
std::vector<CheckResult> run_suite(const std::string& suite);

} // namespace satrees
