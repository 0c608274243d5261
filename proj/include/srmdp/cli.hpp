#ifndef SRMDP_CLI_HPP
#define SRMDP_CLI_HPP

#include <cstdint>
#include <optional>
#include <string>

#include "srmdp/field.hpp"

namespace srmdp {

inline constexpr std::uint64_t kDefaultSeed = 42424242;
inline constexpr const char* kVersion = "0.1.0";

// One subcommand invocation.  Unset optionals mean "not provided"; run()
// validates per subcommand.  Budgets/threads may be preloaded from the
// environment by apply_env_overrides before flag parsing.
struct RunConfig {
    std::string subcommand;

    std::optional<std::size_t> n, k, delta;
    std::optional<std::uint32_t> p;
    std::optional<std::size_t> N;
    std::optional<std::string> modulus;  // comma-separated coefficients, low first

    std::string target = "full";         // full | parity | blocks
    std::string method = "superregular"; // superregular | distance | both
    std::string input_path;              // code JSON to verify/measure
    std::string output_path;             // write the report here as well
    std::string format = "json";         // json | csv | text

    std::size_t max_order = 0;           // 0 = full order
    bool collect_all = false;
    bool include_witness = true;
    std::optional<std::size_t> j;        // single column-distance index
    std::size_t n_max = 16;              // search-min-field range
    std::uint64_t search_budget = 1ull << 28;
    std::uint64_t factor_budget = Field::kDefaultFactorBudget;
    unsigned threads = 1;
    std::uint64_t seed = kDefaultSeed;
};

struct RunResult {
    int exit_code = 0;    // 0 affirmative, 1 usage/config, 2 negative verdict, 3 budget
    std::string report;
};

// Reads SRMDP_SEARCH_BUDGET, SRMDP_FACTOR_BUDGET, SRMDP_THREADS.
void apply_env_overrides(RunConfig& config);

// Dispatches, renders the report (and writes it to output_path when set).
// Reports are byte-identical across runs up to the elapsed_ms field.
RunResult run(const RunConfig& config);

}  // namespace srmdp

#endif
