#include "cli/weight_cache.hpp"

#include "cli/output.hpp"

#include <atomic>
#include <fstream>
#include <sstream>
#include <system_error>
#include <unistd.h>

namespace springer::cli {

std::filesystem::path WeightCache::path_for(const LieType& type, const Weight& lambda) const {
  std::string name = type.name();
  for (auto c : lambda) name += "_" + std::to_string(c);
  return dir_ / (name + ".json");
}

std::optional<WeightMultiset> WeightCache::load(const RootSystemData& rs, const Weight& lambda) const {
  std::ifstream in(path_for(rs.lie_type, lambda));
  if (!in) return std::nullopt;
  try {
    const Json doc = Json::parse(in);
    if (doc.at("cache_version").get<int>() != kFormatVersion) return std::nullopt;
    if (doc.at("lie_type") != lie_type_json(rs.lie_type) || doc.at("lambda") != to_json(lambda)) {
      return std::nullopt;
    }
    std::map<Weight, BigInt> mults;
    for (const auto& entry : doc.at("dominant")) {
      const auto coords = entry.at("weight").get<std::vector<std::int64_t>>();
      if (coords.size() != rs.rank()) return std::nullopt;
      mults[Weight::from(coords)] = BigInt(entry.at("multiplicity").get<std::string>());
    }
    auto wm = WeightMultiset::from_dominant(rs, lambda, std::move(mults));
    if (wm.total_dim != weyl_dimension(rs, lambda)) return std::nullopt;
    return wm;
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

void WeightCache::store(const WeightMultiset& wm) const {
  Json dominant = Json::array();
  for (const auto& [mu, m] : wm.dominant_mults) {
    dominant.push_back({{"weight", to_json(mu)}, {"multiplicity", to_json(m)}});
  }
  const Json doc = {
      {"cache_version", kFormatVersion},
      {"lie_type", lie_type_json(wm.lie_type)},
      {"lambda", to_json(wm.highest)},
      {"dominant", std::move(dominant)},
  };

  std::error_code ec;
  std::filesystem::create_directories(dir_, ec);
  if (ec) return;
  const auto target = path_for(wm.lie_type, wm.highest);
  static std::atomic<unsigned> counter{0};
  auto tmp = target;
  tmp += ".tmp." + std::to_string(::getpid()) + "." + std::to_string(counter++);
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) return;
    out << doc.dump(1) << '\n';
    if (!out.good()) {
      out.close();
      std::filesystem::remove(tmp, ec);
      return;
    }
  }
  std::filesystem::rename(tmp, target, ec);
  if (ec) std::filesystem::remove(tmp, ec);
}

WeightMultiset weights_for(const RootSystemData& rs, const Weight& lambda, const WeightCache* cache) {
  if (cache) {
    if (auto hit = cache->load(rs, lambda)) return std::move(*hit);
  }
  auto wm = freudenthal(rs, lambda);
  if (cache) cache->store(wm);
  return wm;
}

}  // namespace springer::cli
