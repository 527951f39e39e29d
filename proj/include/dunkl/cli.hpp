#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace dunkl::cli {

inline constexpr const char* kVersion = "1.0.0";

/// Runs one experiment. JSON goes to --out (or `out`), CSV curves to --csv.
/// Exit status: 0 ok, 1 verdict differs from --expect, 2 bad input.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// "lo:hi:n" (n evenly spaced values, empty for n = 0), "a,b,c" or a single value.
std::vector<double> parse_range(const std::string& text);

}  // namespace dunkl::cli
