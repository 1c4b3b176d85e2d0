#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qrbf::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitSchema = 2;

/// Runs one command line (args excludes the program name). Output files are written only on success.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qrbf::cli
