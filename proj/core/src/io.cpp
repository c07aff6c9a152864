#include "maxmin/io.hpp"

#include <charconv>

#include "maxmin/errors.hpp"

namespace maxmin::io {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& why) {
  throw ParseError(path + ": " + why);
}

json parse_json(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw ParseError("malformed JSON at byte " + std::to_string(e.byte) + ": " + e.what());
  }
}

Scalar scalar_at(const json& j, const std::string& path) {
  if (!j.is_string()) fail(path, "expected a decimal string, got " + std::string(j.type_name()));
  try {
    return Scalar::parse(j.get<std::string>());
  } catch (const ParseError& e) {
    fail(path, e.what());
  }
}

Vector vector_at(const json& j, const std::string& path) {
  if (!j.is_array()) fail(path, "expected an array");
  std::vector<Scalar> v;
  v.reserve(j.size());
  for (std::size_t i = 0; i < j.size(); ++i) v.push_back(scalar_at(j[i], path + "[" + std::to_string(i) + "]"));
  return Matrix::column_vector(std::move(v));
}

Matrix matrix_at(const json& j, const std::string& path) {
  if (!j.is_array() || j.empty()) fail(path, "expected a non-empty array of rows");
  std::vector<std::vector<Scalar>> rows;
  for (std::size_t r = 0; r < j.size(); ++r) {
    const std::string rp = path + "[" + std::to_string(r) + "]";
    if (!j[r].is_array()) fail(rp, "expected an array");
    if (j[r].size() != j[0].size()) {
      fail(rp, "has " + std::to_string(j[r].size()) + " entries, expected " + std::to_string(j[0].size()));
    }
    std::vector<Scalar> row;
    for (std::size_t c = 0; c < j[r].size(); ++c) {
      row.push_back(scalar_at(j[r][c], rp + "[" + std::to_string(c) + "]"));
    }
    rows.push_back(std::move(row));
  }
  if (rows.front().empty()) fail(path, "rows are empty");
  return Matrix::from_rows(rows);
}

IndexSet indices_at(const json& j, std::size_t n, const std::string& path) {
  if (!j.is_array()) fail(path, "expected an array of 1-based indices");
  std::vector<std::size_t> v;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string ip = path + "[" + std::to_string(i) + "]";
    if (!j[i].is_number_unsigned()) fail(ip, "expected a positive integer");
    const auto idx = j[i].get<std::size_t>();
    if (idx == 0 || idx > n) fail(ip, "index " + std::to_string(idx) + " outside 1.." + std::to_string(n));
    v.push_back(idx - 1);
  }
  IndexSet set(v);
  if (set.size() != v.size()) fail(path, "duplicate index");
  return set;
}

const json& field(const json& obj, const char* name, const std::string& path) {
  const auto it = obj.find(name);
  if (it == obj.end()) fail(path, std::string("missing field '") + name + "'");
  return *it;
}

}  // namespace

json to_json(const Scalar& s) { return s.to_string(); }

json vector_to_json(const Vector& v) {
  json out = json::array();
  for (std::size_t i = 0; i < v.rows(); ++i) out.push_back(to_json(v[i]));
  return out;
}

json matrix_to_json(const Matrix& m) {
  json out = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j)));
    out.push_back(std::move(row));
  }
  return out;
}

json indices_to_json(const IndexSet& set) { return set.to_one_based(); }

json set_to_json(const ParametricSet& set) {
  json gens = json::array();
  for (std::size_t j = 0; j < set.parameters(); ++j) gens.push_back(vector_to_json(set.generators().column(j)));
  return json{{"offset", vector_to_json(set.offset())}, {"generators", std::move(gens)}};
}

json piece_to_json(const EigenspacePiece& piece) {
  json out = set_to_json(piece.set);
  out["kind"] = to_string(piece.kind);
  out["K"] = indices_to_json(piece.partition.k());
  out["L"] = indices_to_json(piece.partition.l());
  out["W"] = piece.covering ? indices_to_json(piece.covering->w) : json(nullptr);
  return out;
}

ProblemFile parse_problem(std::string_view text) {
  const json doc = parse_json(text);
  if (!doc.is_object()) fail("$", "expected a JSON object");
  ProblemFile p;
  p.matrix = matrix_at(field(doc, "matrix", "$"), "$.matrix");
  if (doc.contains("b")) {
    p.b = vector_at(doc["b"], "$.b");
    if (p.b->rows() != p.matrix.rows()) {
      fail("$.b", "has " + std::to_string(p.b->rows()) + " entries, matrix has " +
                      std::to_string(p.matrix.rows()) + " rows");
    }
  }
  if (doc.contains("lambda")) p.lambda = scalar_at(doc["lambda"], "$.lambda");
  if (doc.contains("x")) {
    p.x = vector_at(doc["x"], "$.x");
    if (p.x->rows() != p.matrix.cols()) {
      fail("$.x", "has " + std::to_string(p.x->rows()) + " entries, matrix has " +
                      std::to_string(p.matrix.cols()) + " columns");
    }
  }
  return p;
}

std::string serialize_problem(const ProblemFile& problem) {
  json doc{{"matrix", matrix_to_json(problem.matrix)}};
  if (problem.b) doc["b"] = vector_to_json(*problem.b);
  if (problem.lambda) doc["lambda"] = to_json(*problem.lambda);
  if (problem.x) doc["x"] = vector_to_json(*problem.x);
  return doc.dump(2) + "\n";
}

DescriptionFile parse_description(std::string_view text) {
  const json doc = parse_json(text);
  if (!doc.is_object()) fail("$", "expected a JSON object");
  DescriptionFile d;
  d.lambda = scalar_at(field(doc, "lambda", "$"), "$.lambda");
  const json& pieces = field(doc, "pieces", "$");
  if (!pieces.is_array()) fail("$.pieces", "expected an array");
  for (std::size_t p = 0; p < pieces.size(); ++p) {
    const std::string path = "$.pieces[" + std::to_string(p) + "]";
    const json& pj = pieces[p];
    if (!pj.is_object()) fail(path, "expected an object");
    EigenspacePiece piece;
    const json& kind = field(pj, "kind", path);
    if (!kind.is_string()) fail(path + ".kind", "expected a string");
    try {
      piece.kind = piece_kind_from_string(kind.get<std::string>());
    } catch (const ParseError& e) {
      fail(path + ".kind", e.what());
    }
    Vector offset = vector_at(field(pj, "offset", path), path + ".offset");
    const std::size_t n = offset.rows();
    const IndexSet k = indices_at(field(pj, "K", path), n, path + ".K");
    piece.partition = Partition(k, n);
    if (pj.contains("L") && indices_at(pj["L"], n, path + ".L") != piece.partition.l()) {
      fail(path + ".L", "is not the complement of K");
    }
    if (pj.contains("W") && !pj["W"].is_null()) {
      piece.covering = Covering{indices_at(pj["W"], n, path + ".W"), true};
    }
    const json& gens = field(pj, "generators", path);
    if (!gens.is_array()) fail(path + ".generators", "expected an array of columns");
    std::vector<Vector> columns;
    for (std::size_t c = 0; c < gens.size(); ++c) {
      const std::string cp = path + ".generators[" + std::to_string(c) + "]";
      columns.push_back(vector_at(gens[c], cp));
      if (columns.back().rows() != n) fail(cp, "length differs from offset");
    }
    piece.set = ParametricSet(std::move(offset), Matrix::from_columns(columns, n));
    d.pieces.push_back(std::move(piece));
  }
  return d;
}

std::string serialize_description(const DescriptionFile& description) {
  json pieces = json::array();
  for (const auto& p : description.pieces) pieces.push_back(piece_to_json(p));
  json doc{{"lambda", to_json(description.lambda)}, {"pieces", std::move(pieces)}};
  return doc.dump(2) + "\n";
}

IndexSet parse_index_list(std::string_view text, std::size_t n) {
  std::vector<std::size_t> v;
  if (!text.empty() && text.back() == ',') throw ParseError("trailing comma in index list '" + std::string(text) + "'");
  std::size_t start = 0;
  while (start < text.size()) {
    auto end = text.find(',', start);
    if (end == std::string_view::npos) end = text.size();
    const auto tok = text.substr(start, end - start);
    std::size_t idx = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), idx);
    if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size()) {
      throw ParseError("invalid index '" + std::string(tok) + "' in list '" + std::string(text) + "'");
    }
    if (idx == 0 || idx > n) {
      throw ParseError("index " + std::to_string(idx) + " outside 1.." + std::to_string(n));
    }
    v.push_back(idx - 1);
    start = end + 1;
  }
  return IndexSet(std::move(v));
}

}  // namespace maxmin::io
