#include "springer/reference_tables.hpp"

#include <algorithm>

namespace springer {

namespace {

using Of = PublishedInverse::Of;

RationalMatrix from_rows(const std::vector<std::vector<Rational>>& rows) {
  RationalMatrix m(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows.size(); ++j) m(i, j) = rows[i][j];
  return m;
}

Rational q(long p, long d = 1) { return Rational(p, d); }

PublishedInverse type_a(std::size_t n) {
  PublishedInverse p{Of::Cartan, RationalMatrix(n), {}};
  const long size = static_cast<long>(n) + 1;
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = 1; j <= n; ++j) {
      const long lo = static_cast<long>(std::min(i, j));
      const long hi = static_cast<long>(std::max(i, j));
      p.table(i - 1, j - 1) = q(lo * (size - hi), size);
    }
  // Row 2 is printed as n-1, 2(n-1), 2(n-3), ..., 6, 4, 2; the third entry
  // should read 2(n-2). For n <= 4 the trailing pattern covers that column.
  if (n >= 5) {
    const long printed = 2 * (static_cast<long>(n) - 3);
    p.table(1, 2) = q(printed, size);
    p.misprints.push_back({1, 2, q(printed, size), "row 2, column 3 printed as 2(n-3)/(n+1)"});
  }
  return p;
}

PublishedInverse type_d(std::size_t n) {
  PublishedInverse p{Of::Cartan, RationalMatrix(n), {}};
  const std::size_t spin = n - 2;  // 0-based index of the first spin node
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Rational v;
      if (i < spin && j < spin) {
        v = static_cast<long>(std::min(i, j) + 1);
      } else if (i < spin || j < spin) {
        v = q(static_cast<long>(std::min(i, j) + 1), 2);
      } else if (i == j) {
        v = q(static_cast<long>(n), 4);
      } else {
        v = q(static_cast<long>(n) - 2, 4);
      }
      p.table(i, j) = v;
    }
  return p;
}

PublishedInverse type_e(std::size_t n) {
  PublishedInverse p;
  p.of = Of::Cartan;
  if (n == 6) {
    p.table = from_rows({{q(4, 3), 1, q(5, 3), 2, q(4, 3), q(2, 3)},
                         {1, 2, 2, 3, 2, 1},
                         {q(5, 3), 2, q(10, 3), 4, q(8, 3), q(4, 3)},
                         {2, 3, 4, 6, 4, 2},
                         {q(4, 3), 2, q(8, 3), 4, q(10, 3), q(5, 3)},
                         {q(2, 3), 1, q(4, 3), 2, q(5, 3), q(4, 3)}});
  } else if (n == 7) {
    p.table = from_rows({{2, 2, 3, 4, 3, 2, 1},
                         {2, q(2, 2), 4, 6, q(9, 2), 3, q(3, 2)},
                         {3, 4, 6, 8, 6, 4, 2},
                         {4, 6, 8, 12, 9, 6, 3},
                         {3, q(9, 2), 6, 9, q(15, 2), 5, q(5, 2)},
                         {2, 3, 4, 6, 5, 4, 2},
                         {1, q(3, 2), 2, 3, q(5, 2), 2, q(3, 2)}});
    p.misprints.push_back({1, 1, q(2, 2), "diagonal entry (2,2) printed as 2/2"});
  } else {
    p.table = from_rows({{4, 5, 7, 10, 8, 6, 4, 2},
                         {5, 8, 10, 15, 12, 9, 6, 3},
                         {7, 10, 14, 20, 16, 12, 8, 4},
                         {10, 15, 20, 30, 24, 18, 12, 6},
                         {8, 12, 16, 24, 20, 15, 10, 5},
                         {6, 9, 12, 18, 15, 12, 8, 4},
                         {4, 6, 8, 12, 10, 8, 6, 3},
                         {2, 3, 4, 6, 5, 4, 3, 2}});
  }
  return p;
}

PublishedInverse type_c(std::size_t n) {
  PublishedInverse p{Of::Symmetrization, RationalMatrix(n), {}};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) p.table(i, j) = q(static_cast<long>(std::min(i, j) + 1), 2);
  return p;
}

PublishedInverse type_b(std::size_t n) {
  PublishedInverse p{Of::Symmetrization, RationalMatrix(n), {}};
  const std::size_t last = n - 1;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      long printed;  // the entry inside the leading 1/2
      if (i < last && j < last) {
        printed = 2 * static_cast<long>(std::min(i, j) + 1);
      } else if (i < last || j < last) {
        printed = static_cast<long>(std::min(i, j) + 1);
      } else {
        printed = 2;
      }
      p.table(i, j) = q(printed, 2);
    }
  // The corner is printed as 2 inside the 1/2, i.e. 1; the inverse has n/4.
  if (n != 4) p.misprints.push_back({last, last, q(1), "corner entry printed as 2/2 instead of n/4"});
  return p;
}

}  // namespace

std::optional<PublishedInverse> published_inverse(const LieType& type) {
  const std::size_t n = type.rank();
  switch (type.family()) {
    case Family::A: return type_a(n);
    case Family::B: return type_b(n);
    case Family::C: return type_c(n);
    case Family::D: return type_d(n);
    case Family::E: return type_e(n);
    case Family::F:
      return PublishedInverse{Of::Symmetrization,
                              from_rows({{2, 3, 2, 1}, {3, 6, 4, 2}, {2, 4, 3, q(3, 2)}, {1, 2, q(3, 2), 1}}),
                              {}};
    case Family::G:
      return PublishedInverse{Of::Symmetrization, from_rows({{q(2, 3), 1}, {1, 2}}), {}};
  }
  return std::nullopt;
}

bool ReferenceComparison::consistent() const {
  return computed_is_inverse &&
         std::all_of(mismatches.begin(), mismatches.end(), [](const Mismatch& m) { return m.known_misprint; });
}

std::optional<ReferenceComparison> compare_with_published(const RootSystemData& rs) {
  auto published = published_inverse(rs.lie_type);
  if (!published) return std::nullopt;
  const RationalMatrix& source = published->of == Of::Cartan ? rs.cartan : rs.s_matrix;
  ReferenceComparison cmp;
  cmp.of = published->of;
  cmp.computed = mat_inverse(source);
  cmp.computed_is_inverse = mat_mul(source, cmp.computed) == RationalMatrix::identity(rs.rank());
  for (std::size_t i = 0; i < rs.rank(); ++i)
    for (std::size_t j = 0; j < rs.rank(); ++j) {
      if (published->table(i, j) == cmp.computed(i, j)) continue;
      const bool known = std::any_of(published->misprints.begin(), published->misprints.end(),
                                     [&](const auto& m) { return m.i == i && m.j == j; });
      cmp.mismatches.push_back({i, j, published->table(i, j), cmp.computed(i, j), known});
    }
  return cmp;
}

}  // namespace springer
