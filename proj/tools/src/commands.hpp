#pragma once

#include <optional>
#include <string>

#include "json.hpp"

namespace clutterlab::cli {

// Exit code contract: 0 pass, 1 fail, 2 bounded/inconclusive from a resource
// budget, 3 parse/usage errors and exceeded limits.
inline constexpr int kExitPass = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitInconclusive = 2;
inline constexpr int kExitError = 3;

struct CommandReport {
    std::string command;
    std::string inputs_digest;
    nlohmann::json verdicts;
    long long timing_ms = 0;

    nlohmann::json to_json() const;
    static CommandReport from_json(const nlohmann::json& j);
    bool operator==(const CommandReport&) const = default;
};

std::string fnv1a_digest(const std::string& bytes);

struct GenOptions {
    int p = 1, q = 1;
    std::string fspec = "none";
    std::string out_path;          // empty: print text to stdout
    std::string json_out_path;     // clutter JSON mirror; empty: out_path + ".json"
    std::string report_json_path;  // machine-readable command report
};

struct CheckOptions {
    std::string which;  // konig | pack | ideal | mengerian | classify | 2part | delta-r
    std::string path;
    long long w_max = 3;
    int balanced_limit = 7;
    bool hypergraph = false;
    std::string json_out_path;
};

struct DecomposeOptions {
    std::string path;
    std::string weights;       // comma-separated, universe order
    std::string weights_file;  // label=value lines
    std::string json_out_path;
};

struct VerifySuiteOptions {
    std::string scale = "small";  // small | full
    std::string only;
    std::uint64_t seed = 42;
    std::string json_out_path;
};

int cmd_gen(const GenOptions& opts);
int cmd_check(const CheckOptions& opts);
int cmd_decompose(const DecomposeOptions& opts);
int cmd_verify_suite(const VerifySuiteOptions& opts);

}  // namespace clutterlab::cli

namespace clutterlab {
class Clutter;
struct WeightVector;
}  // namespace clutterlab

namespace clutterlab::cli {

/// Weights either as a comma list in universe order or as label=value lines
/// (missing labels default to 0). Exactly one source must be given.
WeightVector parse_weights(const Clutter& c, const std::string& inline_csv,
                           const std::string& file_path);

}  // namespace clutterlab::cli
