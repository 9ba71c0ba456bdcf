#include "cli/cli.hpp"

#include "springer/errors.hpp"

#include <charconv>
#include <cmath>

namespace springer::cli {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

double parse_real(std::string_view s, std::string_view whole) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  double value = 0.0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size() || !std::isfinite(value)) {
    throw InvalidArgument("malformed complex number '" + std::string(whole) + "'");
  }
  return value;
}

// Coefficient of i: "" and "+" mean 1, "-" means -1.
double parse_imaginary(std::string_view s, std::string_view whole) {
  if (s.empty() || s == "+") return 1.0;
  if (s == "-") return -1.0;
  return parse_real(s, whole);
}

std::vector<std::string_view> split(std::string_view text) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const auto comma = text.find(',', start);
    parts.push_back(trim(text.substr(start, comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return parts;
}

}  // namespace

std::complex<double> parse_complex(std::string_view text) {
  const std::string_view s = trim(text);
  if (s.empty()) throw InvalidArgument("empty complex number");
  if (s.back() != 'i') return {parse_real(s, text), 0.0};

  const std::string_view body = s.substr(0, s.size() - 1);
  // The real/imaginary split is the last sign that is not leading and not an exponent sign.
  std::size_t split_at = std::string_view::npos;
  for (std::size_t k = body.size(); k-- > 1;) {
    if ((body[k] == '+' || body[k] == '-') && body[k - 1] != 'e' && body[k - 1] != 'E') {
      split_at = k;
      break;
    }
  }
  if (split_at == std::string_view::npos) return {0.0, parse_imaginary(body, text)};
  return {parse_real(body.substr(0, split_at), text), parse_imaginary(body.substr(split_at), text)};
}

std::vector<std::complex<double>> parse_complex_list(std::string_view text) {
  std::vector<std::complex<double>> out;
  for (auto part : split(text)) out.push_back(parse_complex(part));
  return out;
}

std::vector<std::int64_t> parse_int_list(std::string_view text) {
  std::vector<std::int64_t> out;
  for (auto part : split(text)) {
    if (!part.empty() && part.front() == '+') part.remove_prefix(1);
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), v);
    if (part.empty() || ec != std::errc() || ptr != part.data() + part.size()) {
      throw InvalidArgument("malformed integer list '" + std::string(text) + "'");
    }
    out.push_back(v);
  }
  return out;
}

}  // namespace springer::cli
