#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "hommine/graph.hpp"
#include "hommine/miner.hpp"

namespace hommine {

/// Entry point of the command-line tool. Returns the process exit code:
/// 0 success, 1 runtime failure, 2 usage or configuration error.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Lines describing patterns present in only one of the two sets or with
/// different supports. Empty iff the sets are equal.
std::vector<std::string> diff_patterns(const std::vector<Pattern>& mined, const std::vector<Pattern>& reference,
                                       const Graph& g, bool edge_labels = false);

}  // namespace hommine
