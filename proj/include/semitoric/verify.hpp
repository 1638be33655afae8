#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace semitoric::verify {

struct CheckResult {
    std::string name;
    bool pass;
    std::string detail;
};

/// Named oracle suites, mirroring the per-module invariants.  Suites are
/// deterministic for a fixed seed.
std::vector<CheckResult> run_suite(const std::string& suite, std::uint64_t seed = 1);

/// Suite names accepted by run_suite (plus "all").
const std::vector<std::string>& suite_names();

}  // namespace semitoric::verify
