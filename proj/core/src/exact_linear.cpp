#include "springer/exact_linear.hpp"

#include <string>

namespace springer {

std::string to_string(const Rational& r) {
  const BigInt& den = boost::multiprecision::denominator(r);
  if (den == 1) return boost::multiprecision::numerator(r).str();
  return boost::multiprecision::numerator(r).str() + "/" + den.str();
}

std::string to_string(const BigInt& n) { return n.str(); }

Rational parse_rational(std::string_view text) {
  while (!text.empty() && (text.front() == ' ' || text.front() == '\t')) text.remove_prefix(1);
  while (!text.empty() && (text.back() == ' ' || text.back() == '\t')) text.remove_suffix(1);
  if (text.empty()) throw InvalidArgument("empty rational");
  auto parse_int = [&](std::string_view s) {
    std::string_view digits = s;
    if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) digits.remove_prefix(1);
    if (digits.empty()) throw InvalidArgument("malformed rational '" + std::string(text) + "'");
    for (char c : digits) {
      if (c < '0' || c > '9') throw InvalidArgument("malformed rational '" + std::string(text) + "'");
    }
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    return BigInt(std::string(s));
  };
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text));
  BigInt num = parse_int(text.substr(0, slash));
  BigInt den = parse_int(text.substr(slash + 1));
  if (den == 0) throw InvalidArgument("zero denominator in '" + std::string(text) + "'");
  return Rational(num, den);
}

RationalMatrix::RationalMatrix(std::size_t dim) : dim_(dim), entries_(dim * dim) {}

RationalMatrix::RationalMatrix(std::initializer_list<std::initializer_list<Rational>> rows)
    : dim_(rows.size()) {
  entries_.reserve(dim_ * dim_);
  for (const auto& row : rows) {
    if (row.size() != dim_) throw InvalidArgument("RationalMatrix: rows must form a square matrix");
    entries_.insert(entries_.end(), row.begin(), row.end());
  }
}

RationalMatrix RationalMatrix::identity(std::size_t dim) {
  RationalMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1;
  return m;
}

RationalMatrix RationalMatrix::diagonal(std::span<const Rational> diag) {
  RationalMatrix m(diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
  return m;
}

bool RationalMatrix::is_symmetric() const {
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = i + 1; j < dim_; ++j)
      if ((*this)(i, j) != (*this)(j, i)) return false;
  return true;
}

bool RationalMatrix::is_zero() const {
  for (const auto& e : entries_)
    if (e != 0) return false;
  return true;
}

bool RationalMatrix::is_integral() const {
  for (const auto& e : entries_)
    if (!springer::is_integer(e)) return false;
  return true;
}

RationalMatrix RationalMatrix::transpose() const {
  RationalMatrix t(dim_);
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

RationalMatrix RationalMatrix::scaled(const Rational& factor) const {
  RationalMatrix s = *this;
  for (auto& e : s.entries_) e *= factor;
  return s;
}

RationalMatrix mat_mul(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.dim() != b.dim()) {
    throw InvalidArgument("mat_mul: dimension mismatch (" + std::to_string(a.dim()) + " vs " +
                          std::to_string(b.dim()) + ")");
  }
  const std::size_t n = a.dim();
  RationalMatrix c(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < n; ++j) c(i, j) += a(i, k) * b(k, j);
    }
  return c;
}

std::vector<Rational> mat_vec(const RationalMatrix& m, std::span<const Rational> v) {
  if (v.size() != m.dim()) throw InvalidArgument("mat_vec: dimension mismatch");
  std::vector<Rational> out(m.dim());
  for (std::size_t i = 0; i < m.dim(); ++i)
    for (std::size_t j = 0; j < m.dim(); ++j) out[i] += m(i, j) * v[j];
  return out;
}

RationalMatrix mat_inverse(const RationalMatrix& m) {
  const std::size_t n = m.dim();
  RationalMatrix inv(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::vector<Rational> unit(n);
    unit[col] = 1;
    auto x = solve(m, std::move(unit));
    for (std::size_t row = 0; row < n; ++row) inv(row, col) = x[row];
  }
  return inv;
}

Rational determinant(const RationalMatrix& m) {
  const std::size_t n = m.dim();
  if (n == 0) return 1;
  RationalMatrix a = m;
  Rational previous = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    std::size_t pivot = k;
    while (pivot < n && a(pivot, k) == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != k) {
      for (std::size_t c = 0; c < n; ++c) std::swap(a(k, c), a(pivot, c));
      sign = -sign;
    }
    for (std::size_t r = k + 1; r < n; ++r)
      for (std::size_t c = k + 1; c < n; ++c)
        a(r, c) = (a(k, k) * a(r, c) - a(r, k) * a(k, c)) / previous;
    previous = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

bool is_positive_definite(const RationalMatrix& m) {
  if (!m.is_symmetric()) throw InvalidArgument("is_positive_definite: matrix is not symmetric");
  // Without pivoting the k-th Bareiss pivot is the k-th leading principal minor.
  const std::size_t n = m.dim();
  RationalMatrix a = m;
  Rational previous = 1;
  for (std::size_t k = 0; k < n; ++k) {
    if (a(k, k) <= 0) return false;
    for (std::size_t r = k + 1; r < n; ++r)
      for (std::size_t c = k + 1; c < n; ++c)
        a(r, c) = (a(k, k) * a(r, c) - a(r, k) * a(k, c)) / previous;
    previous = a(k, k);
  }
  return true;
}

}  // namespace springer
