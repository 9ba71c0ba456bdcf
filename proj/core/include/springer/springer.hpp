#pragma once

#include "springer/character.hpp"
#include "springer/exact_linear.hpp"
#include "springer/rep_weights.hpp"
#include "springer/root_system.hpp"

#include <complex>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace springer {

/// Coefficients c_i(t) of theta_lambda(t) = sum_i c_i(t) coroot_i.
struct SpringerResult {
  std::vector<std::complex<double>> coefficients;
};

using WeightList = std::span<const WeightWithMultiplicity>;

/// Component i is sum_{mu in Lambda_lambda} mu_i e^mu, multiplicities included.
std::vector<CharacterCombo> moment_vector(const RootSystemData& rs, const WeightMultiset& wm);
std::vector<CharacterCombo> moment_vector(const RootSystemData& rs, WeightList weights);

/// S(G, lambda)_ij = sum_{mu in Lambda_lambda} mu_i mu_j, summed over the full multiset.
RationalMatrix s_matrix_bruteforce(const RootSystemData& rs, const WeightMultiset& wm);
RationalMatrix s_matrix_bruteforce(const RootSystemData& rs, WeightList weights);

/// sum mu_j^2 at the first long simple root. Checks that every long root
/// gives the same value and throws InvariantViolation otherwise.
Rational x_long(const RootSystemData& rs, const WeightMultiset& wm);
Rational x_long(const RootSystemData& rs, WeightList weights);

/// (x_long / 2) * S.
RationalMatrix s_matrix_closed(const RootSystemData& rs, const WeightMultiset& wm);
RationalMatrix s_matrix_closed(const RootSystemData& rs, WeightList weights);

enum class IdentityClass {
  Disconnected,          // A_ij = 0: sum mu_i mu_j = 0
  ConnectedEqualLength,  // sum mu_i^2 = sum mu_j^2 = -2 sum mu_i mu_j
  ConnectedShortLong,    // short diagonal = 2x, cross term = -x
  G2,                    // sum mu_1^2 = -2 sum mu_1 mu_2 = 3 sum mu_2^2
};

std::string to_string(IdentityClass kind);

struct IdentityCheck {
  std::size_t i = 0;  // 0-based, i < j
  std::size_t j = 0;
  IdentityClass kind{};
  Rational sum_ii;
  Rational sum_jj;
  Rational sum_ij;
  bool passed = false;
  std::string relation;  // human-readable statement of what was checked
};

struct IdentityReport {
  std::vector<IdentityCheck> checks;
  bool passed() const;
};

/// Classifies every pair i < j of simple roots and checks the matching
/// relation on the brute-force sums, exactly.
IdentityReport identity_report(const RootSystemData& rs, const WeightMultiset& wm);
IdentityReport identity_report(const RootSystemData& rs, WeightList weights);

/// Solves S(G, lambda) c = moment_vector exactly over character
/// combinations, using the closed form of S(G, lambda) after asserting it
/// equals the brute-force sum. Throws NotAlmostFaithfulError for lambda = 0.
std::vector<CharacterCombo> coefficients(const RootSystemData& rs, const WeightMultiset& wm);
std::vector<CharacterCombo> coefficients(const RootSystemData& rs, const WeightMultiset& wm,
                                         WeightList weights);

SpringerResult evaluate_coefficients(std::span<const CharacterCombo> coeffs, const TorusPoint& t);

/// theta_lambda(t) in the coroot basis.
SpringerResult springer_torus(const RootSystemData& rs, const Weight& lambda, const TorusPoint& t);

/// Sp(2n) torus diag(t_1..t_n, 1/t_1..1/t_n) to fundamental-weight values:
/// z_i = t_1 t_2 ... t_i, since omega_i = eps_1 + ... + eps_i.
TorusPoint torus_from_symplectic_eigenvalues(std::span<const std::complex<double>> t);

}  // namespace springer
