#include "cli/output.hpp"

#include "cli/cli.hpp"

#include <algorithm>
#include <cstdio>
#include <ostream>

namespace springer::cli {

Json to_json(const Rational& r) { return to_string(r); }

Json to_json(const BigInt& n) { return to_string(n); }

Json to_json(const Weight& w) { return w.to_vector(); }

Json to_json(const RationalMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.dim(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.dim(); ++j) row.push_back(to_string(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json to_json(std::complex<double> z) {
  // Avoid "-0.0" so that equal values always print identically.
  auto clean = [](double v) { return v == 0.0 ? 0.0 : v; };
  return Json::array({clean(z.real()), clean(z.imag())});
}

Json to_json(const CharacterCombo& combo) {
  Json terms = Json::array();
  for (const auto& [mu, c] : combo.terms()) {
    terms.push_back({{"weight", to_json(mu)}, {"coeff", to_string(c)}});
  }
  return terms;
}

Json lie_type_json(const LieType& type) {
  return {{"family", std::string(1, type.letter())}, {"rank", type.rank()}};
}

Json make_document(const std::string& command, const std::optional<LieType>& type,
                   const std::optional<Weight>& lambda, Json payload) {
  return {
      {"command", command},
      {"lie_type", type ? lie_type_json(*type) : Json(nullptr)},
      {"lambda", lambda ? to_json(*lambda) : Json::array()},
      {"payload", std::move(payload)},
      {"version", kSchemaVersion},
  };
}

std::string format_complex(std::complex<double> z) {
  char buf[64];
  const double re = z.real() == 0.0 ? 0.0 : z.real();
  const double im = z.imag() == 0.0 ? 0.0 : z.imag();
  if (im == 0.0) {
    std::snprintf(buf, sizeof buf, "%.12g", re);
  } else {
    std::snprintf(buf, sizeof buf, "%.12g%+.12gi", re, im);
  }
  return buf;
}

std::string format_combo(const CharacterCombo& combo) {
  if (combo.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [mu, c] : combo.terms()) {
    const bool negative = c < 0;
    if (first) {
      if (negative) s += "-";
    } else {
      s += negative ? " - " : " + ";
    }
    const Rational mag = negative ? Rational(-c) : c;
    if (mag != 1) s += to_string(mag) + " ";
    s += "e^" + mu.to_string();
    first = false;
  }
  return s;
}

void print_matrix(std::ostream& out, const std::string& title, const RationalMatrix& m) {
  out << title << ":\n";
  std::vector<std::size_t> width(m.dim(), 0);
  for (std::size_t i = 0; i < m.dim(); ++i) {
    for (std::size_t j = 0; j < m.dim(); ++j) width[j] = std::max(width[j], to_string(m(i, j)).size());
  }
  for (std::size_t i = 0; i < m.dim(); ++i) {
    out << "  ";
    for (std::size_t j = 0; j < m.dim(); ++j) {
      const std::string cell = to_string(m(i, j));
      out << std::string(width[j] - cell.size(), ' ') << cell << (j + 1 < m.dim() ? "  " : "\n");
    }
  }
}

void print_columns(std::ostream& out, const std::vector<std::string>& header,
                   const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width(header.size());
  for (std::size_t c = 0; c < header.size(); ++c) width[c] = header[c].size();
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < row.size() && c < width.size(); ++c) {
      width[c] = std::max(width[c], row[c].size());
    }
  }
  auto emit = [&](const std::vector<std::string>& row) {
    std::string line = "  ";
    for (std::size_t c = 0; c < row.size(); ++c) {
      line += row[c];
      if (c + 1 < row.size()) line += std::string(width[c] - row[c].size() + 2, ' ');
    }
    out << line << '\n';
  };
  emit(header);
  for (const auto& row : rows) emit(row);
}

}  // namespace springer::cli
