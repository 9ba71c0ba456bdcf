#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>

namespace springer {

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

/// Largest rank the weight storage supports.
inline constexpr std::size_t kMaxRank = 16;

/// A simple Lie type, validated on construction:
/// A_n (n >= 1), B_n and C_n (n >= 2), D_n (n >= 4), E_6..E_8, F_4, G_2.
/// D_2 is not simple and D_3 duplicates A_3, so both are rejected.
class LieType {
 public:
  LieType(Family family, std::size_t rank);

  /// Parses "G2", "E6", ... or a family letter plus separate rank.
  static LieType parse(std::string_view text);
  static LieType from_parts(std::string_view family, std::size_t rank);

  Family family() const { return family_; }
  std::size_t rank() const { return rank_; }
  char letter() const { return static_cast<char>(family_); }

  bool simply_laced() const {
    return family_ == Family::A || family_ == Family::D || family_ == Family::E;
  }

  std::string name() const;  // "G2"

  friend auto operator<=>(const LieType&, const LieType&) = default;

 private:
  Family family_;
  std::size_t rank_;
};

}  // namespace springer
