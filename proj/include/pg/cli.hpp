#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace pg {

struct RunRequest {
    std::string graph_path;
    std::vector<std::string> rule_paths;
    std::string strategy_text;  // inline strategy, or
    std::string strategy_path;  // path to a strategy file
    std::uint64_t seed = 0;
    long long max_steps = 1'000'000;
    std::string out_path;
    std::string trace_path;
    std::string export_dir;
    bool validate_only = false;
};

// Exit status: 0 outcome Id, 1 outcome Fail, 2 parse/validation error,
// 3 step-budget exhaustion. Diagnostics go to err.
int run(const RunRequest& req, std::ostream& err);

}  // namespace pg
