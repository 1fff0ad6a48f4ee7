#pragma once
// JSON and text forms of presentations, reports and Betti data. Generator
// indices are 1-based everywhere in external formats.

#include <optional>
#include <string>

#include "json.hpp"
#include "nil7/classify.hpp"
#include "nil7/cohomology.hpp"

namespace nil7 {

using Json = nlohmann::json;

/// "Q", "Fp" (with p), "R", "Qbar"; also accepts "F_5" style names. Throws InvalidField.
Field parse_field(const std::string& name, std::optional<std::int64_t> p = std::nullopt);
/// "3", "-2/5"; throws ParseError.
Scalar parse_scalar(const Field& f, const std::string& text);

/// Reads {"field", "p", "dim", "brackets" | "differentials"}. A field passed in
/// overrides the document's. Throws ParseError (with line/column for
/// malformed JSON), InvalidField or DimensionMismatch.
Presentation parse_presentation(const std::string& text, const std::optional<Field>& field = std::nullopt);
Presentation presentation_from_json(const Json& doc, const std::optional<Field>& field = std::nullopt);

Json to_json(const Field& f);
Json to_json(const Scalar& x);
Json to_json(const Matrix& m);
Json to_json(const Presentation& p);
Json to_json(const CanonicalForm& c);
Json to_json(const Certificate& c);
Json to_json(const ClassificationReport& r);
Json to_json(const BettiVector& b);

/// One line per generator in table order, e.g. "dx7 = x1^x2".
std::string summary_text(const ClassificationReport& r);

}  // namespace nil7
