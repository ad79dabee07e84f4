#pragma once

// Command-line front end.  Every subcommand prints one JSON object on
// standard output.
//
// Exit codes: 0 decided, 2 input error, 3 a witness failed re-verification.

#include "toric/orbit.hpp"

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace toric::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInputError = 2;
inline constexpr int kExitInternalError = 3;

/// Runs one subcommand; args excludes the program name.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Vector JSON: an array of scaled Gaussian rational strings (plain JSON
/// integers are also accepted).
Vector parse_vector_json(std::string_view text);

/// "1,3,4" (1-based) -> {0, 2, 3}; indices must lie in [1, n].
IndexSet parse_support(std::string_view text, std::size_t n);

}  // namespace toric::cli
