#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace zhegalkin::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kParse = 2,
  kContract = 3,
  kSizeGuard = 4,
  kVerifyFailed = 5,
};

/// Runs one subcommand. `args` excludes the program name. A file argument of
/// "-" reads from `in`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

/// Radians as a decimal number or a multiple of pi: "1.047", "pi/3", "2*pi/3", "-pi".
double parse_angle(std::string_view text);

/// 12 significant digits, locale independent; magnitudes below 5e-13 print as 0.
std::string format_real(double v);

}  // namespace zhegalkin::cli
