#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "nckit/planewave.hpp"
#include "nckit/star.hpp"

namespace nckit {

struct SuiteOptions {
    std::uint64_t seed = 42;
    int cases = -1;  // suite default when negative
    int order = 2;   // eps cutoff N for gauge statements
    std::optional<ThetaProfile> theta;  // fixed profile instead of random ones
};

struct PropertyResult {
    std::string name;
    int passed = 0;
    int failed = 0;
    std::vector<std::string> counterexamples;  // reducible expressions, at most a few
};

struct SuiteReport {
    std::string suite;
    std::uint64_t seed = 0;
    int cases = 0;
    int order = 0;
    std::vector<PropertyResult> properties;
    std::vector<Diagnostic> diagnostics;
    double seconds = 0;

    bool passed() const;
};

const std::vector<std::string>& suite_names();
int default_cases(const std::string& suite);

// Throws std::invalid_argument for an unknown suite id.
SuiteReport run_suite(const std::string& name, const SuiteOptions& opts);

// Integer null vectors (omega; k) with omega^2 = |k|^2.
const std::vector<std::array<long, 4>>& integer_null_vectors();

}  // namespace nckit
