#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "maxmin/eigenspace.hpp"
#include "maxmin/matrix.hpp"
#include "maxmin/parametric_set.hpp"

namespace maxmin::io {

/// Problem input. JSON object with a required "matrix" (array of rows of
/// decimal strings) and optional "b", "lambda" and "x". Numbers must be
/// strings so that no binary floating point is involved.
struct ProblemFile {
  Matrix matrix;
  std::optional<Vector> b;
  std::optional<Scalar> lambda;
  std::optional<Vector> x;

  friend bool operator==(const ProblemFile&, const ProblemFile&) = default;
};

/// Serialized eigenspace pieces. Indices are 1-based; generators are stored
/// column by column.
struct DescriptionFile {
  Scalar lambda;
  std::vector<EigenspacePiece> pieces;

  friend bool operator==(const DescriptionFile&, const DescriptionFile&) = default;
};

/// Throws ParseError with the byte offset or the JSON path of the problem.
ProblemFile parse_problem(std::string_view text);
std::string serialize_problem(const ProblemFile& problem);

DescriptionFile parse_description(std::string_view text);
std::string serialize_description(const DescriptionFile& description);

nlohmann::json to_json(const Scalar& s);
nlohmann::json vector_to_json(const Vector& v);
/// Array of rows.
nlohmann::json matrix_to_json(const Matrix& m);
/// {"offset": [...], "generators": [[column], ...]}
nlohmann::json set_to_json(const ParametricSet& set);
nlohmann::json piece_to_json(const EigenspacePiece& piece);
nlohmann::json indices_to_json(const IndexSet& set);

/// Parses a comma-separated list of 1-based indices ("1,3"); an empty
/// string is the empty set. Throws ParseError.
IndexSet parse_index_list(std::string_view text, std::size_t n);

}  // namespace maxmin::io
