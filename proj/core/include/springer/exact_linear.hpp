#pragma once

#include "springer/errors.hpp"
#include "springer/rational.hpp"

#include <concepts>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace springer {

/// Dense square matrix of exact rationals, row-major.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  explicit RationalMatrix(std::size_t dim);
  RationalMatrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static RationalMatrix identity(std::size_t dim);
  static RationalMatrix diagonal(std::span<const Rational> diag);

  std::size_t dim() const { return dim_; }

  Rational& operator()(std::size_t i, std::size_t j) { return entries_[i * dim_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return entries_[i * dim_ + j]; }

  bool is_symmetric() const;
  bool is_zero() const;
  bool is_integral() const;

  RationalMatrix transpose() const;
  RationalMatrix scaled(const Rational& factor) const;

  friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

 private:
  std::size_t dim_ = 0;
  std::vector<Rational> entries_;
};

RationalMatrix mat_mul(const RationalMatrix& a, const RationalMatrix& b);
std::vector<Rational> mat_vec(const RationalMatrix& m, std::span<const Rational> v);

/// Exact inverse. Throws SingularMatrixError.
RationalMatrix mat_inverse(const RationalMatrix& m);

/// Throws InvalidArgument for a non-symmetric matrix.
bool is_positive_definite(const RationalMatrix& m);

/// Exact determinant (Bareiss).
Rational determinant(const RationalMatrix& m);

/// Anything that forms a vector space over the rationals: Rational itself,
/// or a formal character combination.
template <class V>
concept RationalVectorSpace = std::copyable<V> && requires(const V& a, const V& b, const Rational& r) {
  { a + b } -> std::convertible_to<V>;
  { a - b } -> std::convertible_to<V>;
  { r * a } -> std::convertible_to<V>;
};

/// Solves m * x = rhs exactly by fraction-free (Bareiss) elimination with
/// partial pivoting. Only the matrix entries are divided; the right-hand side
/// is touched through vector-space operations, so V may be any
/// rational vector space. Throws SingularMatrixError.
template <RationalVectorSpace V>
std::vector<V> solve(const RationalMatrix& m, std::vector<V> rhs) {
  const std::size_t n = m.dim();
  if (rhs.size() != n) {
    throw InvalidArgument("solve: right-hand side has " + std::to_string(rhs.size()) +
                          " entries, matrix dimension is " + std::to_string(n));
  }
  RationalMatrix a = m;
  Rational previous = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = k;
    for (std::size_t r = k + 1; r < n; ++r) {
      if (abs(a(r, k)) > abs(a(pivot, k))) pivot = r;
    }
    if (a(pivot, k) == 0) throw SingularMatrixError("solve: matrix is singular");
    if (pivot != k) {
      for (std::size_t c = 0; c < n; ++c) std::swap(a(k, c), a(pivot, c));
      std::swap(rhs[k], rhs[pivot]);
    }
    const Rational inv_previous = 1 / previous;
    for (std::size_t r = k + 1; r < n; ++r) {
      const Rational factor = a(r, k);
      if (factor == 0) {
        // Bareiss still rescales the row by a_kk / previous.
        if (a(k, k) != previous) {
          const Rational ratio = a(k, k) * inv_previous;
          for (std::size_t c = k + 1; c < n; ++c) a(r, c) *= ratio;
          rhs[r] = ratio * rhs[r];
        }
        continue;
      }
      for (std::size_t c = k + 1; c < n; ++c) {
        a(r, c) = (a(k, k) * a(r, c) - factor * a(k, c)) * inv_previous;
      }
      rhs[r] = (a(k, k) * inv_previous) * rhs[r] - (factor * inv_previous) * rhs[k];
      a(r, k) = 0;
    }
    previous = a(k, k);
  }

  std::vector<V> x(rhs);
  for (std::size_t i = n; i-- > 0;) {
    V acc = rhs[i];
    for (std::size_t j = i + 1; j < n; ++j) {
      if (a(i, j) != 0) acc = acc - a(i, j) * x[j];
    }
    x[i] = (1 / a(i, i)) * acc;
  }
  return x;
}

}  // namespace springer
