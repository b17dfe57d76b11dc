#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cn::cli {

// Exit codes: 0 success, 1 semantic failure (invalid map, conversion not
// possible), 2 usage or input error.
inline constexpr int kOk = 0;
inline constexpr int kSemanticFailure = 1;
inline constexpr int kUsageError = 2;

// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cn::cli
