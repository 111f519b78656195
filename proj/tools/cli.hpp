#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sktgc::cli {

// Exit status: 0 success, 1 verification failure or word not in code,
// 2 invalid parameters or input.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailed = 1;
inline constexpr int kExitInvalid = 2;

// `args` excludes the program name.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace sktgc::cli
