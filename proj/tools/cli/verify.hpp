#pragma once

#include "cli/weight_cache.hpp"

#include "springer/lie_type.hpp"
#include "springer/weight.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace springer::cli {

enum class WeightSet { Fundamental, Rho, All };

struct VerifyOptions {
  /// A single type, or every valid type of rank <= max_rank when empty.
  std::optional<LieType> type;
  std::size_t max_rank = 4;
  WeightSet weights = WeightSet::All;
};

struct VerifyEntry {
  LieType type;
  std::optional<Weight> lambda;  // empty for per-type checks
  std::string check;
  bool passed = false;
  std::string detail;
};

struct VerifyReport {
  std::vector<VerifyEntry> entries;
  bool passed() const;
  std::size_t failures() const;
};

std::vector<LieType> verification_types(const VerifyOptions& options);
std::vector<Weight> verification_weights(std::size_t rank, WeightSet set);

VerifyReport run_verification(const VerifyOptions& options, const WeightCache* cache);

}  // namespace springer::cli
