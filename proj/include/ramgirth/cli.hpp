#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ramgirth {

inline constexpr int exit_ok = 0;
inline constexpr int exit_input = 1;
inline constexpr int exit_budget = 2;

/// Parses and runs one command line (without the program name). Exit code
/// 0 for definitive results, 2 when a search budget ran out, 1 for usage or
/// input errors.
int run_cli(const std::vector<std::string> & args, std::ostream & out, std::ostream & err);

} // namespace ramgirth
