#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "chordrig/error.hpp"
#include "chordrig/exactmat.hpp"
#include "chordrig/graph.hpp"
#include "chordrig/matrix.hpp"
#include "chordrig/rational.hpp"

namespace chordrig {

/// (r+1)×n matrix with columns [pⁱ; 1].
inline Matrix extended_config_matrix(int dim, std::span<const Vector> points) {
  Matrix p(static_cast<std::size_t>(dim) + 1, points.size());
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (points[i].size() != static_cast<std::size_t>(dim))
      throw Error(Errc::dimension_mismatch, "point " + std::to_string(i + 1) + " has " + std::to_string(points[i].size()) +
                                                " coordinates, expected " + std::to_string(dim));
    for (int k = 0; k < dim; ++k) p(static_cast<std::size_t>(k), i) = points[i][static_cast<std::size_t>(k)];
    p(static_cast<std::size_t>(dim), i) = 1;
  }
  return p;
}

/// A bar framework G(p) in ℚʳ: a connected graph whose vertex i sits at pⁱ,
/// with the points affinely spanning ℚʳ.
class Framework {
 public:
  Framework(Graph graph, int dim, std::vector<Vector> points)
      : graph_(std::move(graph)), dim_(dim), points_(std::move(points)) {
    if (dim_ < 1) throw Error(Errc::invalid_parameters, "dimension must be at least 1");
    if (points_.size() != static_cast<std::size_t>(graph_.order()))
      throw Error(Errc::dimension_mismatch, std::to_string(points_.size()) + " points for a graph on " +
                                                std::to_string(graph_.order()) + " vertices");
    const Matrix p = extended_config_matrix(dim_, points_);
    if (!graph_.is_connected()) throw Error(Errc::disconnected_graph, "framework graph must be connected");
    if (graph_.order() < dim_ + 1 || rank(p) != static_cast<std::size_t>(dim_) + 1)
      throw Error(Errc::degenerate_span, "points do not affinely span dimension " + std::to_string(dim_));
  }

  [[nodiscard]] const Graph& graph() const noexcept { return graph_; }
  [[nodiscard]] int dim() const noexcept { return dim_; }
  [[nodiscard]] int order() const noexcept { return graph_.order(); }
  /// r̄ = n - r - 1, the nullity of the extended configuration matrix.
  [[nodiscard]] int rbar() const noexcept { return order() - dim_ - 1; }
  [[nodiscard]] const std::vector<Vector>& points() const noexcept { return points_; }
  [[nodiscard]] const Vector& point(Vertex v) const { return points_.at(static_cast<std::size_t>(v - 1)); }

  friend bool operator==(const Framework& a, const Framework& b) {
    return a.dim_ == b.dim_ && a.graph_ == b.graph_ && a.points_ == b.points_;
  }

 private:
  Graph graph_;
  int dim_;
  std::vector<Vector> points_;
};

inline Matrix extended_config_matrix(const Framework& fw) { return extended_config_matrix(fw.dim(), fw.points()); }

/// The vertex relabeling π(i) -> i applied to graph and points.
inline Framework relabel_to_positions(const Framework& fw, const Ordering& order) {
  std::vector<Vector> pts(static_cast<std::size_t>(fw.order()));
  for (int i = 1; i <= fw.order(); ++i) pts[static_cast<std::size_t>(i - 1)] = fw.point(order.at(i));
  return Framework(relabel_to_positions(fw.graph(), order), fw.dim(), std::move(pts));
}

/// True iff the columns [pⁱ; 1] are linearly independent. More than r+1
/// points are never affinely independent.
inline bool affinely_independent(std::span<const Vector> points) {
  if (points.empty()) return true;
  const std::size_t dim = points.front().size();
  for (const auto& p : points)
    if (p.size() != dim) throw Error(Errc::dimension_mismatch, "points of mixed dimension");
  if (points.size() > dim + 1) return false;
  return rank(extended_config_matrix(static_cast<int>(dim), points)) == points.size();
}

struct GeneralPositionCheck {
  bool ok = true;
  /// First affinely dependent (r+1)-subset in lexicographic order.
  std::vector<Vertex> violating;
};

inline GeneralPositionCheck is_general_position(const Framework& fw, std::uint64_t cap = default_subset_cap) {
  const auto n = static_cast<std::size_t>(fw.order());
  const auto k = static_cast<std::size_t>(fw.dim()) + 1;
  if (binomial(n, k) > cap)
    throw Error(Errc::size_cap_exceeded, "C(" + std::to_string(n) + "," + std::to_string(k) + ") exceeds cap " + std::to_string(cap));
  const Matrix p = extended_config_matrix(fw);
  std::vector<std::size_t> all_rows(k);
  for (std::size_t i = 0; i < k; ++i) all_rows[i] = i;
  GeneralPositionCheck out;
  for_each_combination(n, k, [&](const std::vector<std::size_t>& cols) {
    if (sgn(determinant(p.submatrix(all_rows, cols))) != 0) return true;
    out.ok = false;
    for (auto c : cols) out.violating.push_back(static_cast<Vertex>(c + 1));
    return false;
  });
  return out;
}

inline Rational squared_distance(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw Error(Errc::dimension_mismatch, "points of different dimension");
  Rational s = 0;
  for (std::size_t k = 0; k < a.size(); ++k) {
    const Rational d = a[k] - b[k];
    s += d * d;
  }
  return s;
}

/// Same squared length on every edge. The frameworks may live in different
/// dimensions but must share the graph.
inline bool frameworks_equivalent(const Framework& a, const Framework& b) {
  if (!(a.graph() == b.graph())) throw Error(Errc::graph_mismatch, "frameworks have different graphs");
  for (const auto& [i, j] : a.graph().edges())
    if (squared_distance(a.point(i), a.point(j)) != squared_distance(b.point(i), b.point(j))) return false;
  return true;
}

/// Same squared distance between every pair of vertices.
inline bool frameworks_congruent(const Framework& a, const Framework& b) {
  if (a.order() != b.order()) throw Error(Errc::size_mismatch, "frameworks have different vertex counts");
  for (Vertex i = 1; i <= a.order(); ++i)
    for (Vertex j = i + 1; j <= a.order(); ++j)
      if (squared_distance(a.point(i), a.point(j)) != squared_distance(b.point(i), b.point(j))) return false;
  return true;
}

}  // namespace chordrig
