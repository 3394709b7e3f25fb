#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace kneser_b::cli {

// Exit codes shared by every subcommand.
inline constexpr int kOk = 0;
inline constexpr int kSemanticFailure = 1;  // not a b-coloring, bound violated
inline constexpr int kInputError = 2;       // bad arguments, malformed files, refused sizes

// Runs the command line `args` (without the program name). File outputs go
// to the paths given; "-" means `out`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace kneser_b::cli
