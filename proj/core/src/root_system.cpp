#include "springer/root_system.hpp"

#include "springer/errors.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <utility>

namespace springer {

namespace {

struct Diagram {
  std::vector<Rational> norms;  // (alpha_i, alpha_i)
  std::vector<std::pair<std::size_t, std::size_t>> edges;
};

void chain(Diagram& d, std::size_t from, std::size_t to) {
  for (std::size_t i = from; i + 1 <= to; ++i) d.edges.emplace_back(i, i + 1);
}

// Bourbaki labelling.
Diagram dynkin_diagram(const LieType& type) {
  const std::size_t n = type.rank();
  Diagram d;
  d.norms.assign(n, Rational(2));
  switch (type.family()) {
    case Family::A:
      chain(d, 0, n - 1);
      break;
    case Family::B:
      chain(d, 0, n - 1);
      d.norms[n - 1] = 1;
      break;
    case Family::C:
      chain(d, 0, n - 1);
      for (std::size_t i = 0; i + 1 < n; ++i) d.norms[i] = 1;
      break;
    case Family::D:
      chain(d, 0, n - 2);
      d.edges.emplace_back(n - 3, n - 1);
      break;
    case Family::E:
      d.edges.emplace_back(0, 2);
      d.edges.emplace_back(1, 3);
      chain(d, 2, n - 1);
      break;
    case Family::F:
      chain(d, 0, 3);
      d.norms[2] = 1;
      d.norms[3] = 1;
      break;
    case Family::G:
      d.edges.emplace_back(0, 1);
      d.norms[0] = Rational(2, 3);
      break;
  }
  return d;
}

// Gram matrix of the simple roots: bonded roots have (a_i, a_j) = -max(|a_i|^2, |a_j|^2) / 2,
// which gives the single, double and triple bonds with long roots normalized to 2.
RationalMatrix root_gram(const Diagram& d) {
  const std::size_t n = d.norms.size();
  RationalMatrix g(n);
  for (std::size_t i = 0; i < n; ++i) g(i, i) = d.norms[i];
  for (auto [i, j] : d.edges) {
    const Rational v = -std::max(d.norms[i], d.norms[j]) / 2;
    g(i, j) = v;
    g(j, i) = v;
  }
  return g;
}

void generate_positive_roots(RootSystemData& rs) {
  const std::size_t n = rs.rank();
  using Coeffs = std::vector<int>;
  std::map<Coeffs, bool> seen;
  std::vector<Coeffs> frontier;
  for (std::size_t i = 0; i < n; ++i) {
    Coeffs k(n, 0);
    k[i] = 1;
    seen.emplace(k, true);
    frontier.push_back(std::move(k));
  }
  while (!frontier.empty()) {
    std::vector<Coeffs> next;
    for (const auto& k : frontier) {
      for (std::size_t i = 0; i < n; ++i) {
        int pairing = 0;  // <beta, coroot_i>
        for (std::size_t j = 0; j < n; ++j) pairing += k[j] * rs.cartan_entry(j, i);
        if (pairing == 0) continue;
        Coeffs reflected = k;
        reflected[i] -= pairing;
        if (std::any_of(reflected.begin(), reflected.end(), [](int c) { return c < 0; })) continue;
        if (std::all_of(reflected.begin(), reflected.end(), [](int c) { return c == 0; })) continue;
        if (seen.emplace(reflected, true).second) next.push_back(std::move(reflected));
      }
    }
    frontier = std::move(next);
  }

  std::vector<Coeffs> all;
  all.reserve(seen.size());
  for (auto& [k, _] : seen) all.push_back(k);
  std::stable_sort(all.begin(), all.end(), [](const Coeffs& a, const Coeffs& b) {
    const int ha = std::accumulate(a.begin(), a.end(), 0);
    const int hb = std::accumulate(b.begin(), b.end(), 0);
    if (ha != hb) return ha < hb;
    return a > b;
  });
  for (auto& k : all) {
    Weight w(n);
    for (std::size_t j = 0; j < n; ++j) {
      if (k[j] != 0) w += Weight::Coord(k[j]) * rs.simple_roots[j];
    }
    rs.positive_roots.push_back(w);
    rs.positive_root_coefficients.push_back(std::move(k));
  }
}

void check_invariants(const RootSystemData& rs) {
  const std::size_t n = rs.rank();
  const std::string name = rs.lie_type.name();
  if (mat_mul(RationalMatrix::diagonal(rs.d_diag), rs.s_matrix) != rs.cartan)
    throw InvariantViolation(name + ": cartan != D * S");
  for (std::size_t i = 0; i < n; ++i) {
    if (rs.cartan(i, i) != 2) throw InvariantViolation(name + ": cartan diagonal entry != 2");
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      if (rs.cartan(i, j) > 0) throw InvariantViolation(name + ": positive off-diagonal entry");
      if ((rs.cartan(i, j) == 0) != (rs.cartan(j, i) == 0))
        throw InvariantViolation(name + ": asymmetric zero pattern");
    }
  }
  if (!rs.s_matrix.is_symmetric() || !is_positive_definite(rs.s_matrix))
    throw InvariantViolation(name + ": S is not symmetric positive definite");
  if (rs.positive_roots.size() != expected_positive_root_count(rs.lie_type))
    throw InvariantViolation(name + ": wrong number of positive roots");
}

}  // namespace

std::size_t expected_positive_root_count(const LieType& type) {
  const std::size_t n = type.rank();
  switch (type.family()) {
    case Family::A: return n * (n + 1) / 2;
    case Family::B:
    case Family::C: return n * n;
    case Family::D: return n * (n - 1);
    case Family::E: return n == 6 ? 36 : n == 7 ? 63 : 120;
    case Family::F: return 24;
    case Family::G: return 6;
  }
  return 0;
}

RootSystemData build(const LieType& type) {
  const std::size_t n = type.rank();
  const Diagram diagram = dynkin_diagram(type);
  const RationalMatrix form = root_gram(diagram);

  RootSystemData rs{.lie_type = type,
                    .cartan = RationalMatrix(n),
                    .d_diag = {},
                    .s_matrix = RationalMatrix(n),
                    .gram = {},
                    .positive_roots = {},
                    .positive_root_coefficients = {},
                    .simple_roots = {},
                    .rho = Weight::rho(n),
                    .long_indices = {}};
  for (std::size_t i = 0; i < n; ++i) {
    rs.d_diag.push_back(diagram.norms[i] / 2);
    for (std::size_t j = 0; j < n; ++j) {
      rs.cartan(i, j) = 2 * form(i, j) / form(j, j);
      rs.s_matrix(i, j) = 4 * form(i, j) / (form(i, i) * form(j, j));
    }
    if (diagram.norms[i] == 2) rs.long_indices.push_back(i);
  }
  if (!rs.cartan.is_integral()) throw InvariantViolation(type.name() + ": non-integral Cartan matrix");
  for (std::size_t i = 0; i < n; ++i) {
    Weight row(n);
    for (std::size_t j = 0; j < n; ++j) row[j] = rs.cartan(i, j).convert_to<int>();
    rs.simple_roots.push_back(row);
  }
  rs.gram = mat_inverse(rs.s_matrix);
  generate_positive_roots(rs);
  check_invariants(rs);
  return rs;
}

Rational inner_product(const RootSystemData& rs, const Weight& a, const Weight& b) {
  if (a.rank() != rs.rank() || b.rank() != rs.rank()) {
    throw InvalidArgument("inner_product: weight rank does not match " + rs.lie_type.name());
  }
  Rational sum = 0;
  for (std::size_t i = 0; i < rs.rank(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < rs.rank(); ++j) {
      if (b[j] == 0) continue;
      sum += static_cast<std::int64_t>(a[i]) * b[j] * rs.gram(i, j);
    }
  }
  return sum;
}

const std::vector<Weight>& positive_roots(const RootSystemData& rs) { return rs.positive_roots; }

const std::vector<std::size_t>& long_root_indices(const RootSystemData& rs) { return rs.long_indices; }

bool connected(const RootSystemData& rs, std::size_t i, std::size_t j) {
  return i != j && rs.cartan_entry(i, j) != 0;
}

}  // namespace springer
