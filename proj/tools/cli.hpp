#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace hindrance::cli {

/// Runs one command line (without the program name). Exit codes: 0 success,
/// 1 input or usage error, 2 when the computed answer is "no" (no
/// certificate exists, a certificate fails verification, an invariant fails).
/// Errors are printed to `err` as `error:<code>:<detail>`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hindrance::cli
