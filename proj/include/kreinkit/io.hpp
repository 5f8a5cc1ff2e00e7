#pragma once

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>

#include "json.hpp"

#include "kreinkit/relations.hpp"

namespace kreinkit::io {

using json = nlohmann::json;

// "-" reads standard input.
inline std::string read_text(const std::string& path) {
  if (path == "-") return std::string(std::istreambuf_iterator<char>(std::cin), {});
  std::ifstream in(path, std::ios::binary);
  require(static_cast<bool>(in), ErrorKind::InvalidInput, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline json parse(const std::string& text, const std::string& origin) {
  require(!text.empty(), ErrorKind::InvalidInput, origin + " is empty");
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    fail(ErrorKind::InvalidInput, origin + ": " + e.what());
  }
}

inline json read_json(const std::string& path) { return parse(read_text(path), path); }

namespace detail {

inline double number(const json& v, const std::string& what) {
  require(v.is_number(), ErrorKind::InvalidInput, what + " must be a number");
  double x = v.get<double>();
  require(std::isfinite(x), ErrorKind::InvalidInput, what + " must be finite");
  return x;
}

inline Index count(const json& doc, const char* key) {
  require(doc.contains(key) && doc[key].is_number_integer() && doc[key].get<long long>() >= 0,
          ErrorKind::InvalidInput, std::string("\"") + key + "\" must be a non-negative integer");
  return doc[key].get<Index>();
}

inline Vector vector_of(const json& v, Index n, const std::string& what) {
  require(v.is_array() && static_cast<Index>(v.size()) == n, ErrorKind::InvalidInput,
          what + " must be an array of length " + std::to_string(n));
  Vector out(n);
  for (Index i = 0; i < n; ++i) out(i) = number(v[i], what);
  return out;
}

}  // namespace detail

// {"rows": n, "cols": m, "data": [[...], ...]}
inline DenseMatrix matrix_from_json(const json& doc) {
  require(doc.is_object(), ErrorKind::InvalidInput, "matrix file must hold a JSON object");
  Index rows = detail::count(doc, "rows"), cols = detail::count(doc, "cols");
  require(doc.contains("data") && doc["data"].is_array() && static_cast<Index>(doc["data"].size()) == rows,
          ErrorKind::InvalidInput, "\"data\" must hold one array per row");
  DenseMatrix m(rows, cols);
  for (Index i = 0; i < rows; ++i) m.row(i) = detail::vector_of(doc["data"][i], cols, "row").transpose();
  return m;
}

inline json matrix_to_json(const DenseMatrix& m) {
  json data = json::array();
  for (Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    data.push_back(std::move(row));
  }
  return json{{"rows", m.rows()}, {"cols", m.cols()}, {"data", std::move(data)}};
}

inline DenseMatrix read_matrix(const std::string& path) { return matrix_from_json(read_json(path)); }

inline bool is_relation_document(const json& doc) { return doc.is_object() && doc.contains("generators"); }

// {"dim": n, "generators": [{"f": [...], "fp": [...]}, ...]}
inline LinearRelation relation_from_json(const json& doc, const Tolerance& tol = default_tolerance()) {
  require(doc.is_object(), ErrorKind::InvalidInput, "relation file must hold a JSON object");
  Index n = detail::count(doc, "dim");
  require(doc.contains("generators") && doc["generators"].is_array(), ErrorKind::InvalidInput,
          "\"generators\" must be an array");
  const json& gens = doc["generators"];
  Index k = gens.size();
  DenseMatrix f(n, k), fp(n, k);
  for (Index j = 0; j < k; ++j) {
    require(gens[j].is_object() && gens[j].contains("f") && gens[j].contains("fp"), ErrorKind::InvalidInput,
            "each generator needs \"f\" and \"fp\"");
    f.col(j) = detail::vector_of(gens[j]["f"], n, "f");
    fp.col(j) = detail::vector_of(gens[j]["fp"], n, "fp");
  }
  return LinearRelation::from_generators(f, fp, tol);
}

inline json basis_to_json(const DenseMatrix& q) {
  json cols = json::array();
  for (Index j = 0; j < q.cols(); ++j) {
    json c = json::array();
    for (Index i = 0; i < q.rows(); ++i) c.push_back(q(i, j));
    cols.push_back(std::move(c));
  }
  return cols;
}

// Canonical generators, plus the multivalued part and, when single-valued, the matrix.
inline json relation_to_json(const LinearRelation& a, const Tolerance& tol = default_tolerance()) {
  json gens = json::array();
  DenseMatrix top = a.top(), bottom = a.bottom();
  for (Index j = 0; j < a.graph_dim(); ++j) {
    json f = json::array(), fp = json::array();
    for (Index i = 0; i < a.space_dim(); ++i) {
      f.push_back(top(i, j));
      fp.push_back(bottom(i, j));
    }
    gens.push_back(json{{"f", std::move(f)}, {"fp", std::move(fp)}});
  }
  json doc{{"dim", a.space_dim()}, {"generators", std::move(gens)}};
  doc["mul"] = basis_to_json(mul_basis(a, tol));
  if (auto op = as_bounded_operator(a, tol); op && op->dom.cols() == a.space_dim())
    doc["operator"] = matrix_to_json(op->matrix);
  return doc;
}

inline LinearRelation read_relation(const std::string& path, const Tolerance& tol = default_tolerance()) {
  return relation_from_json(read_json(path), tol);
}

inline json inertia_to_json(const Inertia& i) {
  return json{{"n_plus", i.n_plus}, {"n_minus", i.n_minus}, {"n_zero", i.n_zero}, {"n_inf", i.n_inf}};
}

}  // namespace kreinkit::io
