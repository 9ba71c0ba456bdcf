#include "springer/weight.hpp"

#include "springer/errors.hpp"

#include <limits>
#include <ostream>

namespace springer {

namespace {
void check_rank(std::size_t rank) {
  if (rank > kMaxRank) {
    throw InvalidArgument("weight rank " + std::to_string(rank) + " exceeds the supported maximum " +
                          std::to_string(kMaxRank));
  }
}
}  // namespace

Weight::Weight(std::size_t rank) : rank_(rank) { check_rank(rank); }

Weight::Weight(std::initializer_list<Coord> coords) : rank_(coords.size()) {
  check_rank(rank_);
  std::copy(coords.begin(), coords.end(), coords_.begin());
}

Weight::Weight(std::span<const Coord> coords) : rank_(coords.size()) {
  check_rank(rank_);
  std::copy(coords.begin(), coords.end(), coords_.begin());
}

Weight Weight::from(std::span<const std::int64_t> coords) {
  Weight w(coords.size());
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (coords[i] > std::numeric_limits<Coord>::max() || coords[i] < std::numeric_limits<Coord>::min())
      throw InvalidArgument("weight coordinate out of range");
    w.coords_[i] = static_cast<Coord>(coords[i]);
  }
  return w;
}

Weight Weight::rho(std::size_t rank) {
  Weight w(rank);
  for (std::size_t i = 0; i < rank; ++i) w.coords_[i] = 1;
  return w;
}

Weight Weight::fundamental(std::size_t rank, std::size_t index) {
  if (index >= rank) throw InvalidArgument("fundamental weight index out of range");
  Weight w(rank);
  w.coords_[index] = 1;
  return w;
}

Weight& Weight::operator+=(const Weight& other) {
  if (other.rank_ != rank_) throw InvalidArgument("weight rank mismatch");
  for (std::size_t i = 0; i < rank_; ++i) coords_[i] += other.coords_[i];
  return *this;
}

Weight& Weight::operator-=(const Weight& other) {
  if (other.rank_ != rank_) throw InvalidArgument("weight rank mismatch");
  for (std::size_t i = 0; i < rank_; ++i) coords_[i] -= other.coords_[i];
  return *this;
}

std::string Weight::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < rank_; ++i) {
    if (i) out += ',';
    out += std::to_string(coords_[i]);
  }
  out += ')';
  return out;
}

std::ostream& operator<<(std::ostream& os, const Weight& w) { return os << w.to_string(); }

std::size_t WeightHash::operator()(const Weight& w) const noexcept {
  std::size_t h = 0xcbf29ce484222325ull ^ w.rank();
  for (auto c : w) {
    h ^= static_cast<std::size_t>(static_cast<std::uint32_t>(c));
    h *= 0x100000001b3ull;
  }
  return h;
}

}  // namespace springer
