#pragma once

#include "springer/character.hpp"
#include "springer/exact_linear.hpp"
#include "springer/lie_type.hpp"
#include "springer/rep_weights.hpp"
#include "springer/weight.hpp"

#include <nlohmann/json.hpp>

#include <complex>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace springer::cli {

// nlohmann::json keeps object keys in a std::map, so dumps are key-sorted.
using Json = nlohmann::json;

Json to_json(const Rational& r);
Json to_json(const BigInt& n);
Json to_json(const Weight& w);
Json to_json(const RationalMatrix& m);
Json to_json(std::complex<double> z);
Json to_json(const CharacterCombo& combo);
Json lie_type_json(const LieType& type);

/// The versioned top-level document every command emits in JSON mode.
Json make_document(const std::string& command, const std::optional<LieType>& type,
                   const std::optional<Weight>& lambda, Json payload);

/// Plain-text rendering helpers; rationals always print as fractions.
std::string format_complex(std::complex<double> z);
std::string format_combo(const CharacterCombo& combo);
void print_matrix(std::ostream& out, const std::string& title, const RationalMatrix& m);
/// Left-aligned columns with a header row.
void print_columns(std::ostream& out, const std::vector<std::string>& header,
                   const std::vector<std::vector<std::string>>& rows);

}  // namespace springer::cli
