#pragma once

// JSON formats. Rationals are strings ("p" or "p/q", lowest terms) with plain
// JSON integers accepted on input; vertex labels are 1-based.
//
//   graph       {"n": 6, "edges": [[1,2], ...]}
//   framework   {"dim": 2, "points": [["-2","0"], ...], "edges": [[1,2], ...]}
//   stress      {"n": 6, "matrix": [["10","-10", ...], ...]}
//   certificate {"verdict", "connectivity", "peo", "stress", "counterexample", "reason"}

#include <fstream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "chordrig/certify.hpp"
#include "chordrig/error.hpp"
#include "chordrig/framework.hpp"
#include "chordrig/graph.hpp"
#include "chordrig/matrix.hpp"
#include "chordrig/rational.hpp"
#include "json.hpp"

namespace chordrig::io {

using json = nlohmann::ordered_json;

namespace detail {
[[noreturn]] inline void fail(const std::string& path, const std::string& what) {
  throw Error(Errc::parse_error, path + ": " + what);
}

inline const json& member(const json& j, const char* key, const std::string& path) {
  if (!j.is_object()) fail(path, "expected an object");
  const auto it = j.find(key);
  if (it == j.end()) fail(path, std::string("missing key \"") + key + "\"");
  return *it;
}

inline long long as_int(const json& j, const std::string& path) {
  if (!j.is_number_integer()) fail(path, "expected an integer");
  return j.get<long long>();
}
}  // namespace detail

inline json to_json(const Rational& q) { return to_string(q); }

inline Rational rational_from_json(const json& j, const std::string& path) {
  if (j.is_number_integer()) return Rational(std::to_string(j.get<long long>()), 10);
  if (!j.is_string()) detail::fail(path, "expected a rational string or an integer");
  try {
    return parse_rational(j.get<std::string>());
  } catch (const Error& e) {
    detail::fail(path, e.detail());
  }
}

inline json to_json(const Matrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

inline Matrix matrix_from_json(const json& j, const std::string& path) {
  if (!j.is_array()) detail::fail(path, "expected an array of rows");
  std::vector<Vector> rows;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string rp = path + "[" + std::to_string(i) + "]";
    if (!j[i].is_array()) detail::fail(rp, "expected an array");
    if (i > 0 && j[i].size() != j[0].size()) detail::fail(rp, "row length differs from row 0");
    Vector row;
    for (std::size_t k = 0; k < j[i].size(); ++k) row.push_back(rational_from_json(j[i][k], rp + "[" + std::to_string(k) + "]"));
    rows.push_back(std::move(row));
  }
  return Matrix::from_rows(rows);
}

inline json edges_to_json(const Graph& g) {
  json edges = json::array();
  for (const auto& [u, v] : g.edges()) edges.push_back({u, v});
  return edges;
}

/// Edge list on n vertices; rejects loops, duplicates and labels outside 1..n.
inline Graph edges_from_json(int n, const json& j, const std::string& path) {
  if (!j.is_array()) detail::fail(path, "expected an array of edges");
  Graph g(n);
  for (std::size_t k = 0; k < j.size(); ++k) {
    const std::string ep = path + "[" + std::to_string(k) + "]";
    if (!j[k].is_array() || j[k].size() != 2) detail::fail(ep, "expected a pair [i, j]");
    const auto u = detail::as_int(j[k][0], ep + "[0]");
    const auto v = detail::as_int(j[k][1], ep + "[1]");
    if (u < 1 || u > n) detail::fail(ep + "[0]", "vertex " + std::to_string(u) + " outside 1.." + std::to_string(n));
    if (v < 1 || v > n) detail::fail(ep + "[1]", "vertex " + std::to_string(v) + " outside 1.." + std::to_string(n));
    if (u == v) detail::fail(ep, "loop at vertex " + std::to_string(u));
    if (g.adjacent(static_cast<Vertex>(u), static_cast<Vertex>(v)))
      detail::fail(ep, "duplicate edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
    g.add_edge(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  return g;
}

inline json to_json(const Graph& g) {
  json j;
  j["n"] = g.order();
  j["edges"] = edges_to_json(g);
  return j;
}

inline Graph graph_from_json(const json& j) {
  const auto n = detail::as_int(detail::member(j, "n", "$"), "$.n");
  if (n < 0) detail::fail("$.n", "negative vertex count");
  return edges_from_json(static_cast<int>(n), detail::member(j, "edges", "$"), "$.edges");
}

inline json to_json(const Framework& fw) {
  json j;
  j["dim"] = fw.dim();
  json pts = json::array();
  for (const auto& p : fw.points()) {
    json row = json::array();
    for (const auto& x : p) row.push_back(to_json(x));
    pts.push_back(std::move(row));
  }
  j["points"] = std::move(pts);
  j["edges"] = edges_to_json(fw.graph());
  return j;
}

inline Framework framework_from_json(const json& j) {
  const auto dim = detail::as_int(detail::member(j, "dim", "$"), "$.dim");
  if (dim < 1) detail::fail("$.dim", "dimension must be at least 1");
  const json& pts = detail::member(j, "points", "$");
  if (!pts.is_array()) detail::fail("$.points", "expected an array of points");
  std::vector<Vector> points;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const std::string pp = "$.points[" + std::to_string(i) + "]";
    if (!pts[i].is_array()) detail::fail(pp, "expected an array of coordinates");
    if (pts[i].size() != static_cast<std::size_t>(dim))
      detail::fail(pp, "has " + std::to_string(pts[i].size()) + " coordinates, dim is " + std::to_string(dim));
    Vector p;
    for (std::size_t k = 0; k < pts[i].size(); ++k) p.push_back(rational_from_json(pts[i][k], pp + "[" + std::to_string(k) + "]"));
    points.push_back(std::move(p));
  }
  Graph g = edges_from_json(static_cast<int>(points.size()), detail::member(j, "edges", "$"), "$.edges");
  return Framework(std::move(g), static_cast<int>(dim), std::move(points));
}

inline json stress_to_json(const Matrix& s) {
  json j;
  j["n"] = s.rows();
  j["matrix"] = to_json(s);
  return j;
}

inline Matrix stress_from_json(const json& j) {
  const auto n = detail::as_int(detail::member(j, "n", "$"), "$.n");
  Matrix m = matrix_from_json(detail::member(j, "matrix", "$"), "$.matrix");
  if (m.rows() != static_cast<std::size_t>(n) || (n > 0 && m.cols() != static_cast<std::size_t>(n)))
    detail::fail("$.matrix", "expected a " + std::to_string(n) + "x" + std::to_string(n) + " matrix");
  return m;
}

inline json to_json(const Certificate& cert) {
  json j;
  j["verdict"] = to_string(cert.verdict);
  j["connectivity"] = cert.connectivity;
  j["peo"] = cert.peo.sequence();
  j["stress"] = cert.stress ? to_json(cert.stress->matrix()) : json(nullptr);
  j["counterexample"] = cert.counterexample ? to_json(*cert.counterexample) : json(nullptr);
  j["reason"] = cert.reason ? json(to_string(*cert.reason)) : json(nullptr);
  return j;
}

inline json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::parse_error, path + ": cannot open file");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw Error(Errc::parse_error, path + ": " + e.what());
  }
}

inline void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw Error(Errc::invalid_parameters, path + ": cannot open for writing");
  out << text;
}

}  // namespace chordrig::io
