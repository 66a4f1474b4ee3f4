#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace ainf::cli {

inline constexpr const char* kToolVersion = "0.1.0";

/// Runs one command; `args` excludes the program name. Exit codes: 0 all
/// checks pass, 1 mathematical finding or failed check, 2 usage or input
/// error. Human-readable lines go to `out`, diagnostics to `err`; the JSON
/// certificate is written to --out when given.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ainf::cli
