#pragma once

#include "springer/exact_linear.hpp"
#include "springer/lie_type.hpp"
#include "springer/weight.hpp"

#include <cstddef>
#include <vector>

namespace springer {

/// Static data of a simple root system in Bourbaki numbering, everything in
/// fundamental-weight coordinates. Long roots have squared length 2.
///
/// Indices are 0-based throughout the library: simple root i here is
/// Bourbaki's alpha_{i+1}.
struct RootSystemData {
  LieType lie_type;
  /// A_ij = alpha_i(coroot_j); row i is alpha_i in fundamental-weight coordinates.
  RationalMatrix cartan;
  /// D_ii = (alpha_i, alpha_i) / 2.
  std::vector<Rational> d_diag;
  /// Symmetrization with cartan = diag(d_diag) * s_matrix.
  RationalMatrix s_matrix;
  /// (omega_i, omega_j) = (S^-1)_ij.
  RationalMatrix gram;
  /// Sorted by height, then by simple-root coefficients in decreasing
  /// lexicographic order, so the first rank() entries are alpha_1..alpha_n.
  std::vector<Weight> positive_roots;
  /// positive_roots[r] = sum_i positive_root_coefficients[r][i] * alpha_i.
  std::vector<std::vector<int>> positive_root_coefficients;
  std::vector<Weight> simple_roots;
  Weight rho;
  std::vector<std::size_t> long_indices;

  std::size_t rank() const { return lie_type.rank(); }
  int cartan_entry(std::size_t i, std::size_t j) const { return simple_roots[i][j]; }
  bool is_long(std::size_t i) const { return d_diag[i] == 1; }
};

RootSystemData build(const LieType& type);

/// Classical number of positive roots for the type.
std::size_t expected_positive_root_count(const LieType& type);

/// The invariant form on weights, sum_ij a_i b_j (omega_i, omega_j).
Rational inner_product(const RootSystemData& rs, const Weight& a, const Weight& b);

const std::vector<Weight>& positive_roots(const RootSystemData& rs);
const std::vector<std::size_t>& long_root_indices(const RootSystemData& rs);

/// Indices i != j with A_ij != 0.
bool connected(const RootSystemData& rs, std::size_t i, std::size_t j);

}  // namespace springer
