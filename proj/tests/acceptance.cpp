// End-to-end acceptance run: one PASS/FAIL line per criterion, nonzero exit
// if any criterion fails. Tolerances are fixed here and never tuned.

#include "springer/errors.hpp"
#include "springer/reference_tables.hpp"
#include "springer/springer.hpp"
#include "springer/weyl.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

using namespace springer;
using cd = std::complex<double>;

namespace {

constexpr double kIdentityTolerance = 1e-12;   // |c_i(1)|
constexpr double kCayleyRelTolerance = 1e-9;   // c_i - c_{i-1} vs (t_i - 1/t_i)/2
constexpr int kCayleySamples = 20;
constexpr double kMinModulus = 0.5;
constexpr double kMaxModulus = 2.0;
constexpr std::uint64_t kSeed = 20240611;

struct Instance {
  std::string label;
  const RootSystemData* rs;
  Weight lambda;
  WeightMultiset wm;
  std::vector<WeightWithMultiplicity> weights;
};

std::vector<RootSystemData> grid_types() {
  std::vector<RootSystemData> out;
  for (std::size_t n = 1; n <= 5; ++n) out.push_back(build(LieType(Family::A, n)));
  for (std::size_t n = 2; n <= 4; ++n) out.push_back(build(LieType(Family::B, n)));
  for (std::size_t n = 2; n <= 4; ++n) out.push_back(build(LieType(Family::C, n)));
  out.push_back(build(LieType(Family::D, 4)));
  out.push_back(build(LieType(Family::G, 2)));
  out.push_back(build(LieType(Family::F, 4)));
  return out;
}

std::vector<Instance> grid_instances(const std::vector<RootSystemData>& types) {
  std::vector<Instance> out;
  for (const auto& rs : types) {
    std::vector<Weight> lambdas;
    for (std::size_t i = 0; i < rs.rank(); ++i) lambdas.push_back(Weight::fundamental(rs.rank(), i));
    lambdas.push_back(Weight::rho(rs.rank()));
    for (const auto& lambda : lambdas) {
      auto wm = freudenthal(rs, lambda);
      auto weights = expand(rs, wm);
      out.push_back({rs.lie_type.name() + " " + lambda.to_string(), &rs, lambda, std::move(wm), std::move(weights)});
    }
  }
  return out;
}

struct Outcome {
  bool passed = true;
  std::vector<std::string> notes;
  void fail(std::string note) {
    passed = false;
    notes.push_back(std::move(note));
  }
};

// Runs a criterion body, converting exceptions into failures.
Outcome run_guarded(const std::function<void(Outcome&)>& body) {
  Outcome o;
  try {
    body(o);
  } catch (const std::exception& e) {
    o.fail(std::string("exception: ") + e.what());
  }
  return o;
}

int report(int number, const std::string& title, const Outcome& o, double seconds) {
  std::printf("[%s] %d. %s (%.2fs)\n", o.passed ? "PASS" : "FAIL", number, title.c_str(), seconds);
  for (const auto& n : o.notes) std::printf("       %s\n", n.c_str());
  std::fflush(stdout);
  return o.passed ? 0 : 1;
}

template <typename F>
int criterion(int number, const std::string& title, F&& body) {
  const auto start = std::chrono::steady_clock::now();
  const Outcome o = run_guarded(body);
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report(number, title, o, secs);
}

// Sum of mu_j^2 at every long simple root, computed directly from the weights.
std::vector<BigInt> long_diagonals(const Instance& inst) {
  std::vector<BigInt> out;
  for (auto j : inst.rs->long_indices) {
    BigInt s = 0;
    for (const auto& w : inst.weights) s += w.multiplicity * w.weight[j] * w.weight[j];
    out.push_back(s);
  }
  return out;
}

int run_cli_verify() {
  const std::string cmd = std::string("\"") + SPRINGER_CLI_PATH + "\" verify --all --max-rank 4 > /dev/null";
  const int status = std::system(cmd.c_str());
  if (status == -1 || !WIFEXITED(status)) return -1;
  return WEXITSTATUS(status);
}

}  // namespace

int main() {
  const auto setup_start = std::chrono::steady_clock::now();
  const auto types = grid_types();
  const auto grid = grid_instances(types);
  std::printf("grid: %zu (type, lambda) instances, weight systems built in %.2fs\n", grid.size(),
              std::chrono::duration<double>(std::chrono::steady_clock::now() - setup_start).count());

  int failures = 0;

  failures += criterion(1, "brute-force S(G,lambda) equals (x/2) S exactly on the grid", [&](Outcome& o) {
    for (const auto& inst : grid) {
      if (s_matrix_bruteforce(*inst.rs, inst.weights) != s_matrix_closed(*inst.rs, inst.weights)) {
        o.fail(inst.label + ": matrices differ");
      }
    }
  });

  failures += criterion(2, "x is the same at every long simple root", [&](Outcome& o) {
    for (const auto& inst : grid) {
      const auto diag = long_diagonals(inst);
      const bool equal = std::all_of(diag.begin(), diag.end(), [&](const BigInt& v) { return v == diag.front(); });
      if (!equal) o.fail(inst.label + ": long-root diagonals differ");
      // x_long performs its own cross-check and throws on disagreement.
      if (x_long(*inst.rs, inst.weights) != Rational(diag.front())) o.fail(inst.label + ": x_long mismatch");
    }
  });

  failures += criterion(3, "pair identities via `springer verify --all --max-rank 4`", [&](Outcome& o) {
    for (const auto& inst : grid) {
      for (const auto& c : identity_report(*inst.rs, inst.weights).checks) {
        if (!c.passed) o.fail(inst.label + ": " + c.relation);
      }
    }
    const int code = run_cli_verify();
    if (code != 0) o.fail("springer verify exited with " + std::to_string(code));
  });

  failures += criterion(4, "C_n, lambda = omega_1: c_i - c_{i-1} = (t_i - 1/t_i)/2", [&](Outcome& o) {
    std::mt19937_64 rng(kSeed);
    std::uniform_real_distribution<double> modulus(kMinModulus, kMaxModulus);
    std::uniform_real_distribution<double> angle(-std::numbers::pi, std::numbers::pi);
    double worst = 0.0;
    for (std::size_t n = 2; n <= 5; ++n) {
      const auto rs = build(LieType(Family::C, n));
      const auto wm = freudenthal(rs, Weight::fundamental(n, 0));
      const auto coeffs = coefficients(rs, wm);
      for (int sample = 0; sample < kCayleySamples; ++sample) {
        std::vector<cd> t(n);
        for (auto& ti : t) ti = std::polar(modulus(rng), angle(rng));
        const auto c = evaluate_coefficients(coeffs, torus_from_symplectic_eigenvalues(t)).coefficients;
        for (std::size_t i = 0; i < n; ++i) {
          const cd lhs = c[i] - (i ? c[i - 1] : cd(0));
          const cd rhs = (t[i] - 1.0 / t[i]) / 2.0;
          const double rel = std::abs(lhs - rhs) / std::abs(rhs);
          worst = std::max(worst, rel);
          if (!(rel <= kCayleyRelTolerance)) {
            std::ostringstream msg;
            msg << "C" << n << " sample " << sample << " i=" << i + 1 << ": relative error " << rel;
            o.fail(msg.str());
          }
        }
      }
    }
    std::ostringstream msg;
    msg << "worst relative error " << worst << " (tolerance " << kCayleyRelTolerance << ")";
    o.notes.push_back(msg.str());
  });

  failures += criterion(5, "G2 coefficients match 2/(3x) sum (2mu_1+3mu_2) e^mu and 2/(3x) sum (3mu_1+6mu_2) e^mu",
                        [&](Outcome& o) {
    const auto rs = build(LieType(Family::G, 2));
    for (const auto& lambda : {Weight{1, 0}, Weight{0, 1}, Weight{1, 1}}) {
      const auto wm = freudenthal(rs, lambda);
      const auto weights = expand(rs, wm);
      const Rational x = x_long(rs, weights);
      std::vector<CharacterCombo::Term> t1, t2;
      for (const auto& [mu, m] : weights) {
        t1.emplace_back(mu, Rational(2) / (3 * x) * Rational(m) * (2 * mu[0] + 3 * mu[1]));
        t2.emplace_back(mu, Rational(2) / (3 * x) * Rational(m) * (3 * mu[0] + 6 * mu[1]));
      }
      const auto c = coefficients(rs, wm, weights);
      if (c[0] != CharacterCombo(t1)) o.fail("c_1 differs for lambda = " + lambda.to_string());
      if (c[1] != CharacterCombo(t2)) o.fail("c_2 differs for lambda = " + lambda.to_string());
    }
  });

  failures += criterion(6, "Freudenthal dimension equals Weyl dimension; spot values 6, 7, 26, 8", [&](Outcome& o) {
    for (const auto& inst : grid) {
      const BigInt weyl = weyl_dimension(*inst.rs, inst.lambda);
      BigInt counted = 0;
      for (const auto& w : inst.weights) counted += w.multiplicity;
      if (inst.wm.total_dim != weyl || counted != weyl) {
        o.fail(inst.label + ": " + to_string(inst.wm.total_dim) + " vs Weyl " + to_string(weyl));
      }
    }
    const struct {
      LieType type;
      Weight lambda;
      int dim;
    } spots[] = {{LieType(Family::C, 3), Weight{1, 0, 0}, 6},
                 {LieType(Family::G, 2), Weight{1, 0}, 7},
                 {LieType(Family::F, 4), Weight{0, 0, 0, 1}, 26},
                 {LieType(Family::A, 2), Weight{1, 1}, 8}};
    for (const auto& s : spots) {
      const auto rs = build(s.type);
      const BigInt f = freudenthal(rs, s.lambda).total_dim;
      const BigInt w = weyl_dimension(rs, s.lambda);
      if (f != s.dim || w != s.dim) {
        o.fail(s.type.name() + " " + s.lambda.to_string() + ": Freudenthal " + to_string(f) + ", Weyl " +
               to_string(w) + ", expected " + std::to_string(s.dim));
      }
    }
  });

  failures += criterion(7, "computed inverses equal the published tables entry by entry", [&](Outcome& o) {
    const LieType literal[] = {LieType(Family::A, 2), LieType(Family::A, 3), LieType(Family::D, 4),
                               LieType(Family::E, 6), LieType(Family::B, 3), LieType(Family::C, 3),
                               LieType(Family::G, 2), LieType(Family::F, 4)};
    for (const auto& type : literal) {
      const auto rs = build(type);
      const auto cmp = compare_with_published(rs);
      if (!cmp) {
        o.fail(type.name() + ": no published table");
        continue;
      }
      const RationalMatrix& base = cmp->of == PublishedInverse::Of::Cartan ? rs.cartan : rs.s_matrix;
      if (mat_inverse(base) != cmp->computed) o.fail(type.name() + ": comparison used a different inverse");
      for (const auto& m : cmp->mismatches) {
        o.fail(type.name() + " entry (" + std::to_string(m.i + 1) + "," + std::to_string(m.j + 1) + "): table " +
               to_string(m.printed) + ", computed " + to_string(m.computed));
      }
    }
    // E7: the table entry printed as 2/2 is taken as a typo; check A A^-1 = I
    // and that the only disagreement with the table is that entry.
    const auto e7 = build(LieType(Family::E, 7));
    const auto inv = mat_inverse(e7.cartan);
    if (mat_mul(e7.cartan, inv) != RationalMatrix::identity(7)) o.fail("E7: A A^-1 != I");
    const auto cmp = compare_with_published(e7);
    if (!cmp) {
      o.fail("E7: no published table");
    } else {
      for (const auto& m : cmp->mismatches) {
        const std::string where = "E7 entry (" + std::to_string(m.i + 1) + "," + std::to_string(m.j + 1) + ")";
        if (m.known_misprint) {
          o.notes.push_back(where + ": table " + to_string(m.printed) + " is a misprint, exact " +
                            to_string(m.computed));
        } else {
          o.fail(where + ": table " + to_string(m.printed) + ", computed " + to_string(m.computed));
        }
      }
    }
  });

  failures += criterion(8, "properties: c_i(1) = 0, reflection invariance, S(G,lambda) > 0, S c = moments",
                        [&](Outcome& o) {
    for (const auto& inst : grid) {
      const auto& rs = *inst.rs;
      const auto coeffs = coefficients(rs, inst.wm, inst.weights);

      const auto at_one = evaluate_coefficients(coeffs, TorusPoint::identity(rs.rank())).coefficients;
      for (std::size_t i = 0; i < at_one.size(); ++i) {
        if (!(std::abs(at_one[i]) < kIdentityTolerance)) {
          o.fail(inst.label + ": |c_" + std::to_string(i + 1) + "(1)| = " + std::to_string(std::abs(at_one[i])));
        }
      }

      for (std::size_t i = 0; i < rs.rank(); ++i) {
        auto reflected = inst.weights;
        for (auto& w : reflected) w.weight = simple_reflection(rs, i, w.weight);
        std::sort(reflected.begin(), reflected.end(), [](const auto& a, const auto& b) { return a.weight < b.weight; });
        if (reflected != inst.weights) o.fail(inst.label + ": not invariant under s_" + std::to_string(i + 1));
      }

      const auto s = s_matrix_bruteforce(rs, inst.weights);
      if (!s.is_symmetric() || !is_positive_definite(s)) o.fail(inst.label + ": S(G,lambda) not positive definite");

      const auto closed = s_matrix_closed(rs, inst.weights);
      const auto moments = moment_vector(rs, inst.weights);
      for (std::size_t i = 0; i < rs.rank(); ++i) {
        CharacterCombo row;
        for (std::size_t j = 0; j < rs.rank(); ++j) row += closed(i, j) * coeffs[j];
        if (row != moments[i]) o.fail(inst.label + ": row " + std::to_string(i + 1) + " of S c != moments");
      }
    }
  });

  std::printf("%d of 8 criteria failed\n", failures);
  return failures == 0 ? EXIT_SUCCESS : EXIT_FAILURE;
}
