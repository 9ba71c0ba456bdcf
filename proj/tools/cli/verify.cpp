#include "cli/verify.hpp"

#include "springer/errors.hpp"
#include "springer/reference_tables.hpp"
#include "springer/springer.hpp"
#include "springer/weyl.hpp"

#include <algorithm>

namespace springer::cli {

bool VerifyReport::passed() const { return failures() == 0; }

std::size_t VerifyReport::failures() const {
  return static_cast<std::size_t>(
      std::count_if(entries.begin(), entries.end(), [](const VerifyEntry& e) { return !e.passed; }));
}

std::vector<LieType> verification_types(const VerifyOptions& options) {
  if (options.type) return {*options.type};
  std::vector<LieType> types;
  for (Family f : {Family::A, Family::B, Family::C, Family::D, Family::E, Family::F, Family::G}) {
    for (std::size_t n = 1; n <= std::min(options.max_rank, kMaxRank); ++n) {
      try {
        types.emplace_back(f, n);
      } catch (const InvalidArgument&) {
        // not a valid (family, rank) pair
      }
    }
  }
  return types;
}

std::vector<Weight> verification_weights(std::size_t rank, WeightSet set) {
  std::vector<Weight> out;
  if (set != WeightSet::Rho) {
    for (std::size_t i = 0; i < rank; ++i) out.push_back(Weight::fundamental(rank, i));
  }
  // For rank 1 rho is omega_1; no point checking it twice.
  if (set != WeightSet::Fundamental && !(set == WeightSet::All && rank == 1)) {
    out.push_back(Weight::rho(rank));
  }
  return out;
}

namespace {

class Recorder {
 public:
  Recorder(VerifyReport& report, const LieType& type, std::optional<Weight> lambda)
      : report_(report), type_(type), lambda_(std::move(lambda)) {}

  void add(std::string check, bool passed, std::string detail = {}) {
    report_.entries.push_back({type_, lambda_, std::move(check), passed, std::move(detail)});
  }

  // Runs `body`, turning any library exception into a failed entry.
  template <typename F>
  void guarded(const std::string& check, F&& body) {
    try {
      body();
    } catch (const std::exception& e) {
      add(check, false, e.what());
    }
  }

 private:
  VerifyReport& report_;
  LieType type_;
  std::optional<Weight> lambda_;
};

void check_type(const RootSystemData& rs, Recorder& rec) {
  rec.guarded("cartan_factorization", [&] {
    const bool ok = mat_mul(RationalMatrix::diagonal(rs.d_diag), rs.s_matrix) == rs.cartan;
    rec.add("cartan_factorization", ok, "A = D S");
  });
  rec.guarded("s_positive_definite", [&] {
    rec.add("s_positive_definite", rs.s_matrix.is_symmetric() && is_positive_definite(rs.s_matrix));
  });
  rec.guarded("positive_root_count", [&] {
    const auto n = rs.positive_roots.size();
    rec.add("positive_root_count", n == expected_positive_root_count(rs.lie_type), std::to_string(n));
  });
  rec.guarded("reference_inverse", [&] {
    const auto cmp = compare_with_published(rs);
    if (!cmp) return;
    std::string detail = cmp->of == PublishedInverse::Of::Cartan ? "inverse Cartan" : "inverse S";
    if (cmp->literal_match()) {
      detail += " matches the published table";
    } else {
      for (const auto& m : cmp->mismatches) {
        detail += "; entry (" + std::to_string(m.i + 1) + "," + std::to_string(m.j + 1) + ") printed " +
                  to_string(m.printed) + ", exact " + to_string(m.computed) +
                  (m.known_misprint ? " (known misprint)" : "");
      }
    }
    rec.add("reference_inverse", cmp->consistent(), detail);
  });
}

void check_weight(const RootSystemData& rs, const Weight& lambda, const WeightCache* cache, Recorder& rec) {
  std::optional<WeightMultiset> loaded;
  try {
    loaded = weights_for(rs, lambda, cache);
  } catch (const std::exception& e) {
    rec.add("weight_system", false, e.what());
    return;
  }
  const WeightMultiset& wm = *loaded;
  const auto weights = expand(rs, wm);

  rec.guarded("dimension", [&] {
    const BigInt weyl = weyl_dimension(rs, lambda);
    rec.add("dimension", wm.total_dim == weyl, to_string(wm.total_dim) + " vs Weyl " + to_string(weyl));
  });

  rec.guarded("weight_sum_vanishes", [&] {
    std::vector<BigInt> sum(rs.rank());
    for (const auto& w : weights) {
      for (std::size_t i = 0; i < rs.rank(); ++i) sum[i] += w.multiplicity * w.weight[i];
    }
    rec.add("weight_sum_vanishes", std::all_of(sum.begin(), sum.end(), [](const BigInt& v) { return v == 0; }));
  });

  rec.guarded("reflection_invariance", [&] {
    bool ok = true;
    for (std::size_t i = 0; i < rs.rank() && ok; ++i) {
      std::vector<WeightWithMultiplicity> reflected;
      reflected.reserve(weights.size());
      for (const auto& w : weights) reflected.push_back({simple_reflection(rs, i, w.weight), w.multiplicity});
      std::sort(reflected.begin(), reflected.end(),
                [](const auto& a, const auto& b) { return a.weight < b.weight; });
      ok = reflected == weights;
    }
    rec.add("reflection_invariance", ok);
  });

  rec.guarded("long_root_independence", [&] {
    const auto s = s_matrix_bruteforce(rs, weights);
    std::string detail;
    bool ok = true;
    for (auto j : rs.long_indices) {
      detail += (detail.empty() ? "" : ", ") + std::string("j=") + std::to_string(j + 1) + ": " + to_string(s(j, j));
      ok = ok && s(j, j) == s(rs.long_indices.front(), rs.long_indices.front());
    }
    // x_long repeats the comparison internally and throws if it fails.
    ok = ok && x_long(rs, weights) == s(rs.long_indices.front(), rs.long_indices.front());
    rec.add("long_root_independence", ok, detail);
  });

  rec.guarded("s_matrix_closed_form", [&] {
    const auto brute = s_matrix_bruteforce(rs, weights);
    const auto closed = s_matrix_closed(rs, weights);
    rec.add("s_matrix_closed_form", brute == closed, "x = " + to_string(x_long(rs, weights)));
    rec.add("s_matrix_positive_definite", brute.is_symmetric() && is_positive_definite(brute));
  });

  rec.guarded("pair_identities", [&] {
    const auto report = identity_report(rs, weights);
    for (const auto& c : report.checks) {
      rec.add("pair(" + std::to_string(c.i + 1) + "," + std::to_string(c.j + 1) + ") " + to_string(c.kind),
              c.passed, c.relation);
    }
  });

  rec.guarded("back_substitution", [&] {
    const auto coeffs = coefficients(rs, wm, weights);
    const auto closed = s_matrix_closed(rs, weights);
    const auto moments = moment_vector(rs, weights);
    bool ok = true;
    for (std::size_t i = 0; i < rs.rank() && ok; ++i) {
      CharacterCombo row;
      for (std::size_t j = 0; j < rs.rank(); ++j) row += closed(i, j) * coeffs[j];
      ok = row == moments[i];
    }
    rec.add("back_substitution", ok, "S(G,lambda) c = moment vector");
    const bool vanish = std::all_of(coeffs.begin(), coeffs.end(),
                                    [](const CharacterCombo& c) { return c.coefficient_sum() == 0; });
    rec.add("identity_vanishing", vanish, "c_i(1) = 0");
  });
}

}  // namespace

VerifyReport run_verification(const VerifyOptions& options, const WeightCache* cache) {
  VerifyReport report;
  for (const auto& type : verification_types(options)) {
    const auto rs = build(type);
    Recorder type_rec(report, type, std::nullopt);
    check_type(rs, type_rec);
    for (const auto& lambda : verification_weights(type.rank(), options.weights)) {
      Recorder rec(report, type, lambda);
      check_weight(rs, lambda, cache, rec);
    }
  }
  return report;
}

}  // namespace springer::cli
