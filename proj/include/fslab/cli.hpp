#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace fslab {

// Entry point behind the fslab binary. `args` excludes the program name.
// Exit codes: 0 success / all pass, 1 counterexample, 2 usage or input error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// name:n[:k|:t] family spec, @file, or a compact literal `n:<hex>`.
class Graph;
Graph parse_graph_spec(const std::string& spec);

}  // namespace fslab
