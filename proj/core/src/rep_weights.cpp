#include "springer/rep_weights.hpp"

#include "springer/errors.hpp"
#include "springer/weyl.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

namespace springer {

namespace {

void check_lambda(const RootSystemData& rs, const Weight& lambda) {
  if (lambda.rank() != rs.rank()) {
    throw InvalidArgument("weight " + lambda.to_string() + " does not have rank " +
                          std::to_string(rs.rank()) + " of " + rs.lie_type.name());
  }
  if (!is_dominant(lambda)) {
    throw InvalidArgument("highest weight " + lambda.to_string() + " is not dominant");
  }
}

struct LevelledWeight {
  Weight weight;
  std::vector<int> depth;  // lambda - weight = sum_i depth[i] alpha_i
  int level = 0;
};

// Dominant weights below lambda are connected to lambda by steps that subtract
// a positive root while staying dominant, so a downward search finds them all.
std::vector<LevelledWeight> search_dominant_below(const RootSystemData& rs, const Weight& lambda) {
  const std::size_t n = rs.rank();
  std::unordered_map<Weight, std::size_t, WeightHash> index;
  std::vector<LevelledWeight> found{{lambda, std::vector<int>(n, 0), 0}};
  index.emplace(lambda, 0);
  for (std::size_t next = 0; next < found.size(); ++next) {
    for (std::size_t r = 0; r < rs.positive_roots.size(); ++r) {
      Weight mu = found[next].weight - rs.positive_roots[r];
      if (!is_dominant(mu) || index.contains(mu)) continue;
      LevelledWeight entry{mu, found[next].depth, 0};
      for (std::size_t i = 0; i < n; ++i) entry.depth[i] += rs.positive_root_coefficients[r][i];
      entry.level = std::accumulate(entry.depth.begin(), entry.depth.end(), 0);
      index.emplace(mu, found.size());
      found.push_back(std::move(entry));
    }
  }
  std::sort(found.begin(), found.end(), [](const LevelledWeight& a, const LevelledWeight& b) {
    if (a.level != b.level) return a.level < b.level;
    return a.weight < b.weight;
  });
  return found;
}

// (alpha_i, alpha_i) / 2 scaled to integers by the lcm of their denominators.
struct ScaledForm {
  std::vector<std::int64_t> d;  // L * D_ii
  std::int64_t scale = 1;       // L
};

ScaledForm scaled_form(const RootSystemData& rs) {
  ScaledForm f;
  for (const auto& di : rs.d_diag) {
    f.scale = std::lcm(f.scale, boost::multiprecision::denominator(di).convert_to<std::int64_t>());
  }
  for (const auto& di : rs.d_diag) f.d.push_back((di * f.scale).convert_to<std::int64_t>());
  return f;
}

}  // namespace

std::vector<Weight> dominant_weights_below(const RootSystemData& rs, const Weight& lambda) {
  check_lambda(rs, lambda);
  std::vector<Weight> out;
  for (auto& entry : search_dominant_below(rs, lambda)) out.push_back(entry.weight);
  return out;
}

WeightMultiset freudenthal(const RootSystemData& rs, const Weight& lambda) {
  check_lambda(rs, lambda);
  const std::size_t n = rs.rank();
  const auto below = search_dominant_below(rs, lambda);
  const ScaledForm form = scaled_form(rs);

  // L * (nu, beta) = sum_i nu_i * pairing[beta][i], since (omega_i, alpha_j) = delta_ij D_jj.
  struct RootData {
    Weight root;
    std::vector<std::int64_t> pairing;
    int height;
  };
  std::vector<RootData> roots;
  for (std::size_t r = 0; r < rs.positive_roots.size(); ++r) {
    const auto& k = rs.positive_root_coefficients[r];
    RootData data{rs.positive_roots[r], std::vector<std::int64_t>(n), 0};
    for (std::size_t i = 0; i < n; ++i) {
      data.pairing[i] = k[i] * form.d[i];
      data.height += k[i];
    }
    roots.push_back(std::move(data));
  }

  std::unordered_map<Weight, BigInt, WeightHash> mult;
  mult.emplace(lambda, BigInt(1));
  for (std::size_t w = 1; w < below.size(); ++w) {
    const Weight& mu = below[w].weight;
    // L * ((lambda+rho)^2 - (mu+rho)^2) = L * (lambda - mu, lambda + mu + 2 rho).
    std::int64_t denominator = 0;
    for (std::size_t i = 0; i < n; ++i) {
      denominator += std::int64_t{below[w].depth[i]} * form.d[i] *
                     (std::int64_t{lambda[i]} + mu[i] + 2 * std::int64_t{rs.rho[i]});
    }
    if (denominator <= 0) {
      throw InvariantViolation("freudenthal: non-positive denominator at " + mu.to_string());
    }

    BigInt sum = 0;
    for (const auto& root : roots) {
      Weight nu = mu;
      for (int k = 1; below[w].level - k * root.height >= 0; ++k) {
        nu += root.root;
        const auto it = mult.find(to_dominant(rs, nu));
        // Weights along an alpha-string form an unbroken interval.
        if (it == mult.end()) break;
        std::int64_t pairing = 0;
        for (std::size_t i = 0; i < n; ++i) pairing += std::int64_t{nu[i]} * root.pairing[i];
        sum += pairing * it->second;
      }
    }
    BigInt numerator = 2 * sum;
    if (numerator % denominator != 0) {
      throw InvariantViolation("freudenthal: non-integral multiplicity at " + mu.to_string());
    }
    BigInt m = numerator / denominator;
    if (m <= 0) {
      throw InvariantViolation("freudenthal: non-positive multiplicity at " + mu.to_string());
    }
    mult.emplace(mu, std::move(m));
  }

  std::map<Weight, BigInt> dominant(mult.begin(), mult.end());
  WeightMultiset wm = WeightMultiset::from_dominant(rs, lambda, std::move(dominant));
  if (wm.total_dim != weyl_dimension(rs, lambda)) {
    throw InvariantViolation("freudenthal: dimension " + wm.total_dim.str() +
                             " disagrees with the Weyl dimension formula for " + lambda.to_string());
  }
  return wm;
}

WeightMultiset WeightMultiset::from_dominant(const RootSystemData& rs, const Weight& highest,
                                             std::map<Weight, BigInt> dominant_mults) {
  check_lambda(rs, highest);
  auto top = dominant_mults.find(highest);
  if (top == dominant_mults.end() || top->second != 1) {
    throw InvariantViolation("weight multiset: highest weight must have multiplicity 1");
  }
  BigInt total = 0;
  for (const auto& [w, m] : dominant_mults) {
    if (w.rank() != rs.rank() || !is_dominant(w) || m <= 0) {
      throw InvariantViolation("weight multiset: bad dominant entry " + w.to_string());
    }
    total += m * orbit_size(rs, w);
  }
  return WeightMultiset{rs.lie_type, highest, std::move(dominant_mults), std::move(total)};
}

BigInt weyl_dimension(const RootSystemData& rs, const Weight& lambda) {
  check_lambda(rs, lambda);
  Rational product = 1;
  for (std::size_t r = 0; r < rs.positive_roots.size(); ++r) {
    const auto& k = rs.positive_root_coefficients[r];
    Rational top = 0;
    Rational bottom = 0;
    for (std::size_t i = 0; i < rs.rank(); ++i) {
      if (k[i] == 0) continue;
      top += (lambda[i] + rs.rho[i]) * k[i] * rs.d_diag[i];
      bottom += rs.rho[i] * k[i] * rs.d_diag[i];
    }
    product *= top / bottom;
  }
  if (!is_integer(product)) {
    throw InvariantViolation("weyl_dimension: non-integral result for " + lambda.to_string());
  }
  return boost::multiprecision::numerator(product);
}

std::vector<WeightWithMultiplicity> expand(const RootSystemData& rs, const WeightMultiset& wm) {
  std::vector<WeightWithMultiplicity> out;
  for (const auto& [dominant, m] : wm.dominant_mults) {
    for (auto& w : orbit(rs, dominant).elements) out.push_back({std::move(w), m});
  }
  std::sort(out.begin(), out.end(),
            [](const WeightWithMultiplicity& a, const WeightWithMultiplicity& b) { return a.weight < b.weight; });
  return out;
}

}  // namespace springer
