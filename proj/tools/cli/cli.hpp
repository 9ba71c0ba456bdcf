#pragma once

#include <complex>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace springer::cli {

inline constexpr const char* kSchemaVersion = "1";

enum ExitCode : int {
  kSuccess = 0,
  kVerificationFailed = 1,
  kUsageError = 2,
  kNotAlmostFaithful = 3,
};

/// Entry point shared by the executable and the tests.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Accepts "a", "bi", "a+bi", "a-bi" (and "i", "-i") with decimal components.
std::complex<double> parse_complex(std::string_view text);
/// Comma-separated list of parse_complex values.
std::vector<std::complex<double>> parse_complex_list(std::string_view text);
/// Comma-separated integers.
std::vector<std::int64_t> parse_int_list(std::string_view text);

}  // namespace springer::cli
