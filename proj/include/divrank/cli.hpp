#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace divrank::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitInputError = 2;

// Largest graph any exponential solver is run on unless --max-n says otherwise.
inline constexpr std::size_t kDefaultMaxVertices = 25;

// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace divrank::cli
