#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace fo::cli {

/// Dispatches one command line (without argv[0]). Exit codes:
///   0  identity holds / compatible / success
///   1  identity fails / incompatible
///   2  input error (unknown command, parse failure)
///   3  precondition or degeneracy error
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace fo::cli
