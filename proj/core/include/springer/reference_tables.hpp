#pragma once

#include "springer/exact_linear.hpp"
#include "springer/root_system.hpp"

#include <optional>
#include <string>
#include <vector>

namespace springer {

/// Published closed forms for inverse Cartan matrices (types A, D, E) and
/// inverse symmetrizations (types B, C, F, G), transcribed as printed,
/// including the entries known to be misprinted.
struct PublishedInverse {
  enum class Of { Cartan, Symmetrization };

  struct Misprint {
    std::size_t i = 0;  // 0-based
    std::size_t j = 0;
    Rational printed;
    std::string note;
  };

  Of of = Of::Cartan;
  RationalMatrix table;
  std::vector<Misprint> misprints;
};

std::optional<PublishedInverse> published_inverse(const LieType& type);

struct ReferenceComparison {
  struct Mismatch {
    std::size_t i = 0;
    std::size_t j = 0;
    Rational printed;
    Rational computed;
    bool known_misprint = false;
  };

  PublishedInverse::Of of = PublishedInverse::Of::Cartan;
  RationalMatrix computed;
  std::vector<Mismatch> mismatches;
  /// matrix * computed == identity.
  bool computed_is_inverse = false;

  bool literal_match() const { return mismatches.empty(); }
  /// Every disagreement is a documented misprint and the computed inverse is exact.
  bool consistent() const;
};

/// Compares the computed inverse of the Cartan matrix or of S (whichever the
/// published table gives) entry by entry. Empty when no table exists.
std::optional<ReferenceComparison> compare_with_published(const RootSystemData& rs);

}  // namespace springer
