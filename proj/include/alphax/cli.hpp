#pragma once

#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace alphax::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitParse = 2;
inline constexpr int kExitDomain = 3;

/// Runs one command line (without the program name). Never throws.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// "a:b:step" or "a,b,c" -> decimal strings, generated with integer
/// arithmetic so "0.1:0.9:0.1" yields exactly nine values.
std::vector<std::string> parse_decimal_grid(const std::string& text);
/// "a:b" inclusive.
std::pair<int, int> parse_int_range(const std::string& text);
/// Comma-separated integers.
std::vector<int> parse_int_list(const std::string& text);

}  // namespace alphax::cli
