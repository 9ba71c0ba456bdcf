#pragma once

#include "springer/rep_weights.hpp"
#include "springer/root_system.hpp"

#include <filesystem>
#include <optional>

namespace springer::cli {

/// One JSON file per (family, rank, lambda) holding the dominant
/// multiplicities. Unreadable, corrupt or outdated files are treated as
/// misses; write failures are ignored.
class WeightCache {
 public:
  static constexpr int kFormatVersion = 1;

  explicit WeightCache(std::filesystem::path dir) : dir_(std::move(dir)) {}

  std::filesystem::path path_for(const LieType& type, const Weight& lambda) const;
  std::optional<WeightMultiset> load(const RootSystemData& rs, const Weight& lambda) const;
  void store(const WeightMultiset& wm) const;

 private:
  std::filesystem::path dir_;
};

/// Freudenthal through the cache when one is given.
WeightMultiset weights_for(const RootSystemData& rs, const Weight& lambda, const WeightCache* cache);

}  // namespace springer::cli
