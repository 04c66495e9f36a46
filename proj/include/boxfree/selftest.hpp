#ifndef BOXFREE_SELFTEST_HPP
#define BOXFREE_SELFTEST_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "boxfree/common.hpp"

namespace boxfree {

struct SuiteResult {
    std::string name;
    bool passed = true;
    std::uint64_t checks = 0;
    std::string detail;  // first failure, or a short summary
};

struct SelftestOptions {
    std::uint64_t seed = 0;
    std::uint64_t max_field = std::uint64_t{1} << 16;
    std::uint64_t eval_budget = kDefaultEvalBudget;
    std::uint64_t pair_budget = kDefaultPairBudget;
    std::uint32_t trials = 1000;
};

// The invariant battery. Each suite is deterministic given its inputs.
SuiteResult suite_field_axioms();
SuiteResult suite_power_identity();
SuiteResult suite_trace_properties();
SuiteResult suite_trace_fibers(std::uint64_t max_field);
SuiteResult suite_encoding_roundtrip();
SuiteResult suite_modulus_invariance();
SuiteResult suite_lason_nonvanishing(std::uint64_t seed, std::uint32_t trials);
SuiteResult suite_alon_nonvanishing(std::uint64_t seed, std::uint32_t trials);
SuiteResult suite_random_boxfree(std::uint64_t seed, std::uint32_t trials);
SuiteResult suite_zero_set_oracle(std::uint64_t eval_budget);
SuiteResult suite_edge_count_law();
SuiteResult suite_density_law();
SuiteResult suite_exponent_table();

std::vector<SuiteResult> run_selftest(const SelftestOptions& opts);

}  // namespace boxfree

#endif
