#pragma once

#include "springer/lie_type.hpp"

#include <algorithm>
#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace springer {

/// An integral weight mu = sum_i mu_i omega_i, stored by its coordinates in
/// the fundamental-weight basis. Simple roots are weights too (rows of the
/// Cartan matrix), as is rho = (1, ..., 1).
class Weight {
 public:
  using Coord = std::int32_t;

  Weight() = default;
  explicit Weight(std::size_t rank);
  Weight(std::initializer_list<Coord> coords);
  explicit Weight(std::span<const Coord> coords);
  static Weight from(std::span<const std::int64_t> coords);

  static Weight zero(std::size_t rank) { return Weight(rank); }
  static Weight rho(std::size_t rank);
  static Weight fundamental(std::size_t rank, std::size_t index);

  std::size_t rank() const { return rank_; }
  std::size_t size() const { return rank_; }

  Coord& operator[](std::size_t i) { return coords_[i]; }
  Coord operator[](std::size_t i) const { return coords_[i]; }

  std::span<const Coord> coords() const { return {coords_.data(), rank_}; }
  const Coord* begin() const { return coords_.data(); }
  const Coord* end() const { return coords_.data() + rank_; }

  bool is_zero() const {
    return std::all_of(begin(), end(), [](Coord c) { return c == 0; });
  }

  Weight& operator+=(const Weight& other);
  Weight& operator-=(const Weight& other);
  friend Weight operator+(Weight a, const Weight& b) { return a += b; }
  friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
  friend Weight operator*(Coord k, Weight a) {
    for (std::size_t i = 0; i < a.rank_; ++i) a.coords_[i] *= k;
    return a;
  }
  friend Weight operator-(Weight a) { return Coord{-1} * std::move(a); }

  friend bool operator==(const Weight& a, const Weight& b) {
    return a.rank_ == b.rank_ && std::equal(a.begin(), a.end(), b.begin());
  }
  /// Lexicographic on coordinates; this is the canonical order of weights.
  friend std::strong_ordering operator<=>(const Weight& a, const Weight& b) {
    if (auto c = a.rank_ <=> b.rank_; c != 0) return c;
    return std::lexicographical_compare_three_way(a.begin(), a.end(), b.begin(), b.end());
  }

  std::string to_string() const;  // "(1,-1,0)"
  std::vector<std::int64_t> to_vector() const { return {begin(), end()}; }

 private:
  std::array<Coord, kMaxRank> coords_{};
  std::size_t rank_ = 0;
};

std::ostream& operator<<(std::ostream& os, const Weight& w);

struct WeightHash {
  std::size_t operator()(const Weight& w) const noexcept;
};

}  // namespace springer
