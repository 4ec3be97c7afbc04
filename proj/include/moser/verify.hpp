#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace moser {

struct PropertyResult {
    std::string name;
    bool passed = false;
    std::size_t cases = 0;
    std::string counterexample;  // empty when passed
};

struct SuiteReport {
    std::string suite;
    std::vector<PropertyResult> properties;

    bool all_passed() const {
        for (const auto& p : properties)
            if (!p.passed) return false;
        return true;
    }
};

// Property suites over the library's identities and oracles. `trials` scales
// the randomized case counts; the grids are fixed. Deterministic for a given
// (trials, seed).
SuiteReport run_identities_suite(unsigned trials, std::uint64_t seed);
SuiteReport run_oracle_suite(unsigned trials, std::uint64_t seed);
SuiteReport run_recovery_suite(unsigned trials, std::uint64_t seed);

// which: "identities" | "oracle" | "recovery" | "all".
std::vector<SuiteReport> run_suites(const std::string& which, unsigned trials, std::uint64_t seed);

}  // namespace moser
