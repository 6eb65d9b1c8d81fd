// cli.hpp -- command-line entry point, separated from main() for testing
#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace pcl {

// Runs one invocation. Exit codes: 0 affirmative verdict / success,
// 1 negative verdict, 2 usage or parse error, 3 resource limit.
int cli_run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pcl
