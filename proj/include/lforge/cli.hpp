#pragma once
#include <iosfwd>
#include <string>
#include <vector>

namespace lforge {

/// Runs the lattice-forge command line: exit code 0 on success, 1 on
/// validation errors, 2 on numerical failures.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lforge
