#include "springer/lie_type.hpp"

#include "springer/errors.hpp"

#include <cctype>
#include <charconv>

namespace springer {

namespace {

bool valid_rank(Family family, std::size_t rank) {
  if (rank > kMaxRank) return false;
  switch (family) {
    case Family::A: return rank >= 1;
    case Family::B:
    case Family::C: return rank >= 2;
    case Family::D: return rank >= 4;
    case Family::E: return rank >= 6 && rank <= 8;
    case Family::F: return rank == 4;
    case Family::G: return rank == 2;
  }
  return false;
}

Family parse_family(std::string_view text) {
  if (text.size() != 1) throw InvalidArgument("unknown Lie family '" + std::string(text) + "'");
  switch (std::toupper(static_cast<unsigned char>(text.front()))) {
    case 'A': return Family::A;
    case 'B': return Family::B;
    case 'C': return Family::C;
    case 'D': return Family::D;
    case 'E': return Family::E;
    case 'F': return Family::F;
    case 'G': return Family::G;
  }
  throw InvalidArgument("unknown Lie family '" + std::string(text) + "'");
}

}  // namespace

LieType::LieType(Family family, std::size_t rank) : family_(family), rank_(rank) {
  if (!valid_rank(family, rank)) {
    throw InvalidArgument("invalid rank " + std::to_string(rank) + " for family " +
                          std::string(1, static_cast<char>(family)));
  }
}

LieType LieType::from_parts(std::string_view family, std::size_t rank) {
  return LieType(parse_family(family), rank);
}

LieType LieType::parse(std::string_view text) {
  if (text.size() < 2) throw InvalidArgument("malformed Lie type '" + std::string(text) + "'");
  std::size_t rank = 0;
  const auto* first = text.data() + 1;
  const auto* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, rank);
  if (ec != std::errc() || ptr != last) {
    throw InvalidArgument("malformed Lie type '" + std::string(text) + "'");
  }
  return from_parts(text.substr(0, 1), rank);
}

std::string LieType::name() const { return std::string(1, letter()) + std::to_string(rank_); }

}  // namespace springer
