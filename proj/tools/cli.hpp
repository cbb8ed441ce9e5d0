#pragma once

#include <string>
#include <vector>

namespace idemca::cli {

struct RunResult {
    int exit_code = 0;
    std::string out;
    std::string err;
};

/// Dispatches one invocation: analyze, eq1, membership, eraser, marker,
/// decompose-finite, oracle, coding-kit, encode, decode. Exit codes:
/// 0 success, 1 analysis infeasible, 2 malformed input.
RunResult run(const std::vector<std::string>& args);

}  // namespace idemca::cli
