#include "springer/springer.hpp"

#include "springer/errors.hpp"

namespace springer {

namespace {

void check_rank(const RootSystemData& rs, WeightList weights) {
  for (const auto& w : weights) {
    if (w.weight.rank() != rs.rank()) {
      throw InvalidArgument("weight list does not match rank of " + rs.lie_type.name());
    }
  }
}

}  // namespace

std::vector<CharacterCombo> moment_vector(const RootSystemData& rs, const WeightMultiset& wm) {
  const auto weights = expand(rs, wm);
  return moment_vector(rs, weights);
}

std::vector<CharacterCombo> moment_vector(const RootSystemData& rs, WeightList weights) {
  check_rank(rs, weights);
  std::vector<CharacterCombo> out;
  for (std::size_t i = 0; i < rs.rank(); ++i) {
    std::vector<CharacterCombo::Term> terms;
    for (const auto& [mu, m] : weights) {
      if (mu[i] != 0) terms.emplace_back(mu, Rational(m * mu[i]));
    }
    out.emplace_back(std::move(terms));
  }
  return out;
}

RationalMatrix s_matrix_bruteforce(const RootSystemData& rs, const WeightMultiset& wm) {
  const auto weights = expand(rs, wm);
  return s_matrix_bruteforce(rs, weights);
}

RationalMatrix s_matrix_bruteforce(const RootSystemData& rs, WeightList weights) {
  check_rank(rs, weights);
  const std::size_t n = rs.rank();
  std::vector<BigInt> sums(n * n);
  for (const auto& [mu, m] : weights) {
    for (std::size_t i = 0; i < n; ++i) {
      if (mu[i] == 0) continue;
      for (std::size_t j = i; j < n; ++j) {
        if (mu[j] == 0) continue;
        sums[i * n + j] += m * (std::int64_t{mu[i]} * mu[j]);
      }
    }
  }
  RationalMatrix s(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      s(i, j) = Rational(sums[i * n + j]);
      s(j, i) = s(i, j);
    }
  return s;
}

Rational x_long(const RootSystemData& rs, const WeightMultiset& wm) {
  const auto weights = expand(rs, wm);
  return x_long(rs, weights);
}

Rational x_long(const RootSystemData& rs, WeightList weights) {
  check_rank(rs, weights);
  std::vector<BigInt> squares(rs.long_indices.size());
  for (const auto& [mu, m] : weights) {
    for (std::size_t k = 0; k < rs.long_indices.size(); ++k) {
      const std::int64_t c = mu[rs.long_indices[k]];
      squares[k] += m * (c * c);
    }
  }
  for (std::size_t k = 1; k < squares.size(); ++k) {
    if (squares[k] != squares[0]) {
      throw InvariantViolation("x_long: sum of squares differs between long roots " +
                               std::to_string(rs.long_indices[0] + 1) + " and " +
                               std::to_string(rs.long_indices[k] + 1));
    }
  }
  return Rational(squares.front());
}

RationalMatrix s_matrix_closed(const RootSystemData& rs, const WeightMultiset& wm) {
  const auto weights = expand(rs, wm);
  return s_matrix_closed(rs, weights);
}

RationalMatrix s_matrix_closed(const RootSystemData& rs, WeightList weights) {
  return rs.s_matrix.scaled(x_long(rs, weights) / 2);
}

std::string to_string(IdentityClass kind) {
  switch (kind) {
    case IdentityClass::Disconnected: return "disconnected";
    case IdentityClass::ConnectedEqualLength: return "connected-equal-length";
    case IdentityClass::ConnectedShortLong: return "connected-short-long";
    case IdentityClass::G2: return "g2";
  }
  return "unknown";
}

bool IdentityReport::passed() const {
  for (const auto& c : checks)
    if (!c.passed) return false;
  return true;
}

IdentityReport identity_report(const RootSystemData& rs, const WeightMultiset& wm) {
  const auto weights = expand(rs, wm);
  return identity_report(rs, weights);
}

IdentityReport identity_report(const RootSystemData& rs, WeightList weights) {
  const RationalMatrix sums = s_matrix_bruteforce(rs, weights);
  const std::size_t n = rs.rank();
  IdentityReport report;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      IdentityCheck check{.i = i, .j = j, .sum_ii = sums(i, i), .sum_jj = sums(j, j), .sum_ij = sums(i, j), .passed = false, .relation = {}};
      const std::string a = std::to_string(i + 1);
      const std::string b = std::to_string(j + 1);
      if (!connected(rs, i, j)) {
        check.kind = IdentityClass::Disconnected;
        check.passed = check.sum_ij == 0;
        check.relation = "sum mu_" + a + " mu_" + b + " = 0";
      } else if (rs.lie_type.family() == Family::G) {
        check.kind = IdentityClass::G2;
        check.passed = check.sum_ii == -2 * check.sum_ij && check.sum_ii == 3 * check.sum_jj;
        check.relation = "sum mu_1^2 = -2 sum mu_1 mu_2 = 3 sum mu_2^2";
      } else if (rs.d_diag[i] == rs.d_diag[j]) {
        check.kind = IdentityClass::ConnectedEqualLength;
        check.passed = check.sum_ii == check.sum_jj && 2 * check.sum_ij == -check.sum_ii;
        check.relation = "sum mu_" + a + "^2 = sum mu_" + b + "^2 = -2 sum mu_" + a + " mu_" + b;
      } else {
        check.kind = IdentityClass::ConnectedShortLong;
        const bool i_long = rs.is_long(i);
        const Rational& x = i_long ? check.sum_ii : check.sum_jj;
        const Rational& short_sum = i_long ? check.sum_jj : check.sum_ii;
        check.passed = short_sum == 2 * x && check.sum_ij == -x;
        const std::string s = i_long ? b : a;
        const std::string l = i_long ? a : b;
        check.relation = "sum mu_" + s + "^2 = 2 sum mu_" + l + "^2, sum mu_" + a + " mu_" + b +
                         " = -sum mu_" + l + "^2";
      }
      report.checks.push_back(std::move(check));
    }
  }
  return report;
}

std::vector<CharacterCombo> coefficients(const RootSystemData& rs, const WeightMultiset& wm) {
  const auto weights = expand(rs, wm);
  return coefficients(rs, wm, weights);
}

std::vector<CharacterCombo> coefficients(const RootSystemData& rs, const WeightMultiset& wm,
                                         WeightList weights) {
  if (wm.highest.is_zero()) {
    throw NotAlmostFaithfulError("representation not almost faithful: lambda = 0 gives S(G, lambda) = 0");
  }
  const RationalMatrix closed = s_matrix_closed(rs, weights);
  if (closed != s_matrix_bruteforce(rs, weights)) {
    throw InvariantViolation("S(G, lambda) differs from (x/2) S for " + rs.lie_type.name() + " " +
                             wm.highest.to_string());
  }
  try {
    return solve(closed, moment_vector(rs, weights));
  } catch (const SingularMatrixError&) {
    throw NotAlmostFaithfulError("representation not almost faithful: S(G, lambda) is singular");
  }
}

SpringerResult evaluate_coefficients(std::span<const CharacterCombo> coeffs, const TorusPoint& t) {
  SpringerResult result;
  result.coefficients.reserve(coeffs.size());
  for (const auto& c : coeffs) result.coefficients.push_back(evaluate(c, t));
  return result;
}

SpringerResult springer_torus(const RootSystemData& rs, const Weight& lambda, const TorusPoint& t) {
  if (t.rank() != rs.rank()) {
    throw InvalidArgument("torus point has rank " + std::to_string(t.rank()) + ", expected " +
                          std::to_string(rs.rank()));
  }
  const WeightMultiset wm = freudenthal(rs, lambda);
  const auto c = coefficients(rs, wm);
  return evaluate_coefficients(c, t);
}

TorusPoint torus_from_symplectic_eigenvalues(std::span<const std::complex<double>> t) {
  std::vector<std::complex<double>> z;
  z.reserve(t.size());
  std::complex<double> running{1.0, 0.0};
  for (std::size_t k = 0; k < t.size(); ++k) {
    if (t[k] == std::complex<double>(0.0, 0.0)) {
      throw InvalidArgument("symplectic eigenvalue t_" + std::to_string(k + 1) + " is zero");
    }
    running *= t[k];
    z.push_back(running);
  }
  return TorusPoint(std::move(z));
}

}  // namespace springer
