#pragma once

#include "springer/rational.hpp"
#include "springer/root_system.hpp"
#include "springer/weight.hpp"

#include <map>
#include <span>
#include <vector>

namespace springer {

/// The weights of the irreducible representation V_lambda with multiplicity,
/// stored compactly as multiplicities of the dominant weights only. The full
/// multiset is the union of their Weyl orbits (see expand()).
struct WeightMultiset {
  LieType lie_type;
  Weight highest;
  std::map<Weight, BigInt> dominant_mults;
  BigInt total_dim;

  /// Rebuilds a multiset from stored dominant multiplicities (e.g. a cache
  /// file), recomputing total_dim and checking the invariants.
  static WeightMultiset from_dominant(const RootSystemData& rs, const Weight& highest,
                                      std::map<Weight, BigInt> dominant_mults);
};

struct WeightWithMultiplicity {
  Weight weight;
  BigInt multiplicity;

  friend bool operator==(const WeightWithMultiplicity&, const WeightWithMultiplicity&) = default;
};

/// All dominant mu with lambda - mu a nonnegative integer combination of
/// simple roots, by increasing level (lambda first), ties lexicographic.
std::vector<Weight> dominant_weights_below(const RootSystemData& rs, const Weight& lambda);

/// Freudenthal's recursion
///   ((lambda+rho, lambda+rho) - (mu+rho, mu+rho)) m_mu
///       = 2 sum_{alpha > 0} sum_{k >= 1} (mu + k alpha, alpha) m_{mu + k alpha}.
/// Throws InvalidArgument for a non-dominant lambda and InvariantViolation if
/// a multiplicity comes out non-integral or the dimension disagrees with the
/// Weyl dimension formula.
WeightMultiset freudenthal(const RootSystemData& rs, const Weight& lambda);

/// prod_{alpha > 0} (lambda + rho, alpha) / (rho, alpha).
BigInt weyl_dimension(const RootSystemData& rs, const Weight& lambda);

/// Every weight of V_lambda with its multiplicity, in lexicographic order.
std::vector<WeightWithMultiplicity> expand(const RootSystemData& rs, const WeightMultiset& wm);

}  // namespace springer
