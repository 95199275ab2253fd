#pragma once

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

#include "stiefel/designs.hpp"
#include "stiefel/numkernel.hpp"
#include "stiefel/verifier.hpp"

namespace stiefel::io {

using nlohmann::json;

inline constexpr int kSchemaVersion = 1;

/// Serializes JSON with every floating-point number printed to 17
/// significant digits, so doubles survive a round trip bit for bit. Arrays
/// of scalars stay on one line.
std::string dump(const json& value, int indent = 2);

json read_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

/// Code file: schema_version, field, d, r, n, matrices (n x d x r array of
/// [re, im] pairs, row-major) and optional metadata.
json code_to_json(const StiefelCode& code, const json& metadata = json::object());

struct CodeFile {
  StiefelCode code;
  json metadata;
};

/// Parses a code file. Malformed input, including a real-field file with a
/// nonzero imaginary part, raises an InputError. Stiefel membership is
/// left to the certifier.
CodeFile code_from_json(const json& j);

json report_to_json(const CodeReport& rep);

struct DesignFile {
  BIBD design;
  std::optional<Resolution> resolution;
};

/// {"v": int, "blocks": [[point, ...], ...], "resolution": [[block, ...], ...]}
/// with 1-based points and 0-based block indices.
DesignFile design_from_json(const json& j);
json design_to_json(const BIBD& design, const std::optional<Resolution>& res = std::nullopt);

/// A list of d x d matrices with [re, im] entries, either the bare array or
/// {"matrices": [...]}.
std::vector<Matrix> hr_family_from_json(const json& j);

json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const json& j, Index rows, Index cols);

}  // namespace stiefel::io
