#pragma once

#include "springer/root_system.hpp"
#include "springer/weight.hpp"

#include <cstddef>
#include <vector>

namespace springer {

/// A Weyl group orbit: its unique dominant element and all elements in
/// lexicographic order.
struct WeylOrbit {
  Weight representative;
  std::vector<Weight> elements;

  std::size_t size() const { return elements.size(); }
  bool contains(const Weight& w) const;
};

/// s_i(mu) = mu - mu_i * alpha_i. `index` is 0-based.
Weight simple_reflection(const RootSystemData& rs, std::size_t index, const Weight& mu);

bool is_dominant(const Weight& mu);

/// Closure of {mu} under the simple reflections. Never enumerates W itself.
WeylOrbit orbit(const RootSystemData& rs, const Weight& mu);

/// Size of the orbit without materializing it beyond a hash set.
std::size_t orbit_size(const RootSystemData& rs, const Weight& mu);

/// Dominant representative, reached by reflecting at the smallest-index
/// negative coordinate until none is left.
Weight to_dominant(const RootSystemData& rs, Weight mu);

}  // namespace springer
