#include "springer/character.hpp"

#include "springer/errors.hpp"

#include <algorithm>

namespace springer {

CharacterCombo::CharacterCombo(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.first < b.first; });
  for (auto& term : terms) {
    if (!terms_.empty() && terms_.back().first == term.first) {
      terms_.back().second += term.second;
    } else {
      terms_.push_back(std::move(term));
    }
  }
  std::erase_if(terms_, [](const Term& t) { return t.second == 0; });
}

CharacterCombo CharacterCombo::character(const Weight& mu, Rational coeff) {
  CharacterCombo c;
  if (coeff != 0) c.terms_.emplace_back(mu, std::move(coeff));
  return c;
}

Rational CharacterCombo::coefficient(const Weight& mu) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), mu,
                             [](const Term& t, const Weight& w) { return t.first < w; });
  if (it != terms_.end() && it->first == mu) return it->second;
  return 0;
}

Rational CharacterCombo::coefficient_sum() const {
  Rational sum = 0;
  for (const auto& [_, c] : terms_) sum += c;
  return sum;
}

std::vector<CharacterCombo::Term> CharacterCombo::merge(const std::vector<Term>& a,
                                                        const std::vector<Term>& b, int sign) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() || j != b.end()) {
    if (j == b.end() || (i != a.end() && i->first < j->first)) {
      out.push_back(*i++);
    } else if (i == a.end() || j->first < i->first) {
      out.emplace_back(j->first, sign > 0 ? j->second : Rational(-j->second));
      ++j;
    } else {
      Rational c = sign > 0 ? Rational(i->second + j->second) : Rational(i->second - j->second);
      if (c != 0) out.emplace_back(i->first, std::move(c));
      ++i;
      ++j;
    }
  }
  return out;
}

CharacterCombo& CharacterCombo::operator+=(const CharacterCombo& other) {
  terms_ = merge(terms_, other.terms_, +1);
  return *this;
}

CharacterCombo& CharacterCombo::operator-=(const CharacterCombo& other) {
  terms_ = merge(terms_, other.terms_, -1);
  return *this;
}

CharacterCombo& CharacterCombo::operator*=(const Rational& factor) {
  if (factor == 0) {
    terms_.clear();
  } else {
    for (auto& [_, c] : terms_) c *= factor;
  }
  return *this;
}

std::string CharacterCombo::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [w, c] : terms_) {
    if (!out.empty()) out += " + ";
    out += "(" + springer::to_string(c) + ")e^" + w.to_string();
  }
  return out;
}

TorusPoint::TorusPoint(std::vector<std::complex<double>> z) : z_(std::move(z)) {
  for (std::size_t i = 0; i < z_.size(); ++i) {
    if (z_[i] == std::complex<double>(0.0, 0.0)) {
      throw InvalidArgument("torus coordinate z_" + std::to_string(i + 1) + " is zero");
    }
  }
}

TorusPoint TorusPoint::identity(std::size_t rank) {
  return TorusPoint(std::vector<std::complex<double>>(rank, {1.0, 0.0}));
}

namespace {
std::complex<double> int_power(std::complex<double> base, std::int64_t exponent) {
  if (exponent < 0) return 1.0 / int_power(base, -exponent);
  std::complex<double> result{1.0, 0.0};
  while (exponent > 0) {
    if (exponent & 1) result *= base;
    base *= base;
    exponent >>= 1;
  }
  return result;
}
}  // namespace

std::complex<double> TorusPoint::character(const Weight& mu) const {
  if (mu.rank() != z_.size()) throw InvalidArgument("character: weight rank does not match torus rank");
  std::complex<double> value{1.0, 0.0};
  for (std::size_t i = 0; i < z_.size(); ++i) {
    if (mu[i] != 0) value *= int_power(z_[i], mu[i]);
  }
  return value;
}

std::complex<double> evaluate(const CharacterCombo& combo, const TorusPoint& t) {
  std::complex<double> sum{0.0, 0.0};
  for (const auto& [mu, c] : combo.terms()) sum += to_double(c) * t.character(mu);
  return sum;
}

}  // namespace springer
