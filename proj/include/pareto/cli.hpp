#pragma once

#include <iosfwd>

namespace pareto {

// Runs one CLI invocation; returns the process exit code.
// 0 success, 1 validation failures, 2 usage error, 3 domain or I/O error.
int run_cli(int argc, char** argv, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace pareto
