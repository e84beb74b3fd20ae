#pragma once

#include <string>

#include <json.hpp>

#include "hopfkit/bialgebra.hpp"
#include "hopfkit/errors.hpp"

namespace hopfkit {

/// Malformed bialgebra file; the message names the member and index.
class ParseError : public StructuralError {
 public:
  using StructuralError::StructuralError;
};

nlohmann::json to_json(const Bialgebra& b);
nlohmann::json field_json(const Field& f);
/// Builds the bialgebra described by `doc`. With checked = true the axioms are
/// enforced and AxiomError is thrown on failure.
Bialgebra from_json(const nlohmann::json& doc, bool checked = true);

Bialgebra read_bialgebra(const std::string& path, bool checked = true);
void write_bialgebra(const Bialgebra& b, const std::string& path);
/// The file text: members in a fixed order, one structure row per line.
std::string format_bialgebra(const Bialgebra& b);

/// Parses "Q" or "Fp:p".
Field parse_field(const std::string& text);

}  // namespace hopfkit
