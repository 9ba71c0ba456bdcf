#pragma once

#include "springer/rational.hpp"
#include "springer/weight.hpp"

#include <complex>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace springer {

/// A formal finite sum sum_mu c_mu e^mu of torus characters with rational
/// coefficients. Terms are kept sorted by weight with no zero coefficients,
/// so equality is structural.
class CharacterCombo {
 public:
  using Term = std::pair<Weight, Rational>;

  CharacterCombo() = default;
  /// Terms in any order; duplicates are merged, zeros dropped.
  explicit CharacterCombo(std::vector<Term> terms);
  static CharacterCombo character(const Weight& mu, Rational coeff = 1);

  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }
  /// Coefficient of e^mu (0 when absent).
  Rational coefficient(const Weight& mu) const;
  /// Sum of coefficients, i.e. the value at the identity.
  Rational coefficient_sum() const;

  CharacterCombo& operator+=(const CharacterCombo& other);
  CharacterCombo& operator-=(const CharacterCombo& other);
  CharacterCombo& operator*=(const Rational& factor);

  friend CharacterCombo operator+(CharacterCombo a, const CharacterCombo& b) { return a += b; }
  friend CharacterCombo operator-(CharacterCombo a, const CharacterCombo& b) { return a -= b; }
  friend CharacterCombo operator*(const Rational& r, CharacterCombo a) { return a *= r; }

  friend bool operator==(const CharacterCombo&, const CharacterCombo&) = default;

  std::string to_string() const;

 private:
  static std::vector<Term> merge(const std::vector<Term>& a, const std::vector<Term>& b, int sign);
  std::vector<Term> terms_;
};

/// A torus element t, given by z_i = e^{omega_i}(t). All z_i are nonzero.
class TorusPoint {
 public:
  explicit TorusPoint(std::vector<std::complex<double>> z);
  static TorusPoint identity(std::size_t rank);

  std::size_t rank() const { return z_.size(); }
  std::span<const std::complex<double>> values() const { return z_; }
  const std::complex<double>& operator[](std::size_t i) const { return z_[i]; }

  /// e^mu(t) = prod_i z_i^{mu_i}.
  std::complex<double> character(const Weight& mu) const;

 private:
  std::vector<std::complex<double>> z_;
};

std::complex<double> evaluate(const CharacterCombo& combo, const TorusPoint& t);

}  // namespace springer
