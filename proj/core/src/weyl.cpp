#include "springer/weyl.hpp"

#include "springer/errors.hpp"

#include <algorithm>
#include <unordered_set>

namespace springer {

namespace {

void check_rank(const RootSystemData& rs, const Weight& mu) {
  if (mu.rank() != rs.rank()) {
    throw InvalidArgument("weight " + mu.to_string() + " does not have rank " +
                          std::to_string(rs.rank()) + " of " + rs.lie_type.name());
  }
}

// In-place s_i for hot loops; rank already checked.
inline void reflect(const RootSystemData& rs, std::size_t i, Weight& mu) {
  const Weight::Coord c = mu[i];
  if (c == 0) return;
  const Weight& root = rs.simple_roots[i];
  for (std::size_t j = 0; j < mu.rank(); ++j) mu[j] -= c * root[j];
}

std::unordered_set<Weight, WeightHash> closure(const RootSystemData& rs, const Weight& mu) {
  std::unordered_set<Weight, WeightHash> seen{mu};
  std::vector<Weight> stack{mu};
  while (!stack.empty()) {
    const Weight current = stack.back();
    stack.pop_back();
    for (std::size_t i = 0; i < rs.rank(); ++i) {
      if (current[i] == 0) continue;
      Weight next = current;
      reflect(rs, i, next);
      if (seen.insert(next).second) stack.push_back(next);
    }
  }
  return seen;
}

}  // namespace

bool WeylOrbit::contains(const Weight& w) const {
  return std::binary_search(elements.begin(), elements.end(), w);
}

Weight simple_reflection(const RootSystemData& rs, std::size_t index, const Weight& mu) {
  check_rank(rs, mu);
  if (index >= rs.rank()) {
    throw InvalidArgument("simple reflection index " + std::to_string(index) + " out of range for " +
                          rs.lie_type.name());
  }
  Weight out = mu;
  reflect(rs, index, out);
  return out;
}

bool is_dominant(const Weight& mu) {
  return std::all_of(mu.begin(), mu.end(), [](Weight::Coord c) { return c >= 0; });
}

WeylOrbit orbit(const RootSystemData& rs, const Weight& mu) {
  check_rank(rs, mu);
  auto seen = closure(rs, mu);
  WeylOrbit result{.representative = to_dominant(rs, mu),
                   .elements = {seen.begin(), seen.end()}};
  std::sort(result.elements.begin(), result.elements.end());
  return result;
}

std::size_t orbit_size(const RootSystemData& rs, const Weight& mu) {
  check_rank(rs, mu);
  return closure(rs, mu).size();
}

Weight to_dominant(const RootSystemData& rs, Weight mu) {
  check_rank(rs, mu);
  // Each step adds -mu_i * alpha_i with mu_i < 0, strictly raising the
  // height of mu, and heights in an orbit are bounded, so this terminates.
  // The explicit cap only guards against a corrupted Cartan matrix.
  const std::size_t cap = 1u << 24;
  for (std::size_t step = 0; step < cap; ++step) {
    std::size_t i = 0;
    while (i < mu.rank() && mu[i] >= 0) ++i;
    if (i == mu.rank()) return mu;
    reflect(rs, i, mu);
  }
  throw InvariantViolation("to_dominant did not terminate for " + mu.to_string());
}

}  // namespace springer
