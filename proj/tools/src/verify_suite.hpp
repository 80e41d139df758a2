#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

namespace clutterlab::verify {

enum class Scale { Small, Full };

struct SuiteOptions {
    Scale scale = Scale::Full;
    std::string only;  // case-insensitive substring filter on criterion keys
    std::uint64_t seed = 42;
};

struct CriterionResult {
    int number = 0;
    std::string key;
    bool pass = false;
    std::vector<std::string> notes;
    long long millis = 0;
};

/// Runs the acceptance matrix at the chosen scale. Results are deterministic
/// for a fixed seed and scale (timings aside).
std::vector<CriterionResult> run_suite(const SuiteOptions& opts);

/// One line per criterion; returns the process exit code (0 all pass, 1 any
/// fail, 3 when the filter matched nothing).
int print_results(const std::vector<CriterionResult>& results, std::ostream& os,
                  bool verbose_notes = true);

std::vector<std::string> criterion_keys();

}  // namespace clutterlab::verify
