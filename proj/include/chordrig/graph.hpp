#pragma once

#include <algorithm>
#include <queue>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "chordrig/error.hpp"

namespace chordrig {

/// Vertices are labeled 1..n.
using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

/// Simple undirected graph with sorted adjacency lists.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n) : adj_(static_cast<std::size_t>(std::max(n, 0)) + 1) {
    if (n < 0) throw Error(Errc::invalid_graph, "negative vertex count");
  }

  Graph(int n, std::span<const Edge> edges) : Graph(n) {
    for (std::size_t k = 0; k < edges.size(); ++k) {
      const auto [u, v] = edges[k];
      const std::string where = "edge " + std::to_string(k) + " (" + std::to_string(u) + "," + std::to_string(v) + ")";
      if (!contains(u) || !contains(v)) throw Error(Errc::invalid_graph, where + ": vertex out of range");
      if (u == v) throw Error(Errc::invalid_graph, where + ": loop");
      if (adjacent(u, v)) throw Error(Errc::invalid_graph, where + ": duplicate edge");
      add_edge(u, v);
    }
  }

  Graph(int n, std::initializer_list<Edge> edges) : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

  [[nodiscard]] int order() const noexcept { return adj_.empty() ? 0 : static_cast<int>(adj_.size()) - 1; }
  [[nodiscard]] std::size_t size() const noexcept { return edge_count_; }
  [[nodiscard]] bool contains(Vertex v) const noexcept { return v >= 1 && v <= order(); }

  [[nodiscard]] const std::vector<Vertex>& neighbors(Vertex v) const { return adj_.at(static_cast<std::size_t>(v)); }
  [[nodiscard]] std::size_t degree(Vertex v) const { return neighbors(v).size(); }

  [[nodiscard]] bool adjacent(Vertex u, Vertex v) const {
    if (!contains(u) || !contains(v)) return false;
    const auto& nu = adj_[static_cast<std::size_t>(u)];
    return std::binary_search(nu.begin(), nu.end(), v);
  }

  /// Adds {u, v}; no-op when already present.
  void add_edge(Vertex u, Vertex v) {
    if (!contains(u) || !contains(v) || u == v) throw Error(Errc::invalid_graph, "bad edge");
    auto& nu = adj_[static_cast<std::size_t>(u)];
    auto it = std::lower_bound(nu.begin(), nu.end(), v);
    if (it != nu.end() && *it == v) return;
    nu.insert(it, v);
    auto& nv = adj_[static_cast<std::size_t>(v)];
    nv.insert(std::lower_bound(nv.begin(), nv.end(), u), u);
    ++edge_count_;
  }

  void remove_edge(Vertex u, Vertex v) {
    if (!adjacent(u, v)) return;
    auto& nu = adj_[static_cast<std::size_t>(u)];
    nu.erase(std::lower_bound(nu.begin(), nu.end(), v));
    auto& nv = adj_[static_cast<std::size_t>(v)];
    nv.erase(std::lower_bound(nv.begin(), nv.end(), u));
    --edge_count_;
  }

  /// Edges (i, j) with i < j, lexicographically sorted.
  [[nodiscard]] std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (Vertex u = 1; u <= order(); ++u)
      for (Vertex v : neighbors(u))
        if (u < v) out.emplace_back(u, v);
    return out;
  }

  [[nodiscard]] bool is_complete() const {
    const auto n = static_cast<std::size_t>(order());
    return edge_count_ == n * (n - (n > 0 ? 1 : 0)) / 2;
  }

  [[nodiscard]] bool is_connected() const {
    if (order() <= 1) return true;
    std::vector<bool> seen(adj_.size(), false);
    std::queue<Vertex> q;
    q.push(1);
    seen[1] = true;
    int count = 1;
    while (!q.empty()) {
      const Vertex u = q.front();
      q.pop();
      for (Vertex v : neighbors(u))
        if (!seen[static_cast<std::size_t>(v)]) {
          seen[static_cast<std::size_t>(v)] = true;
          ++count;
          q.push(v);
        }
    }
    return count == order();
  }

  friend bool operator==(const Graph& a, const Graph& b) { return a.adj_ == b.adj_; }

 private:
  std::vector<std::vector<Vertex>> adj_;  // index 0 unused
  std::size_t edge_count_ = 0;
};

/// A vertex ordering π(1), ..., π(n). Positions are 1-based.
class Ordering {
 public:
  Ordering() = default;
  explicit Ordering(std::vector<Vertex> sequence) : seq_(std::move(sequence)), pos_(seq_.size() + 1, 0) {
    const int n = static_cast<int>(seq_.size());
    for (int i = 0; i < n; ++i) {
      const Vertex v = seq_[static_cast<std::size_t>(i)];
      if (v < 1 || v > n || pos_[static_cast<std::size_t>(v)] != 0)
        throw Error(Errc::invalid_parameters, "ordering is not a permutation of 1.." + std::to_string(n));
      pos_[static_cast<std::size_t>(v)] = i + 1;
    }
  }

  static Ordering identity(int n) {
    std::vector<Vertex> seq(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) seq[static_cast<std::size_t>(i)] = i + 1;
    return Ordering(std::move(seq));
  }

  [[nodiscard]] int size() const noexcept { return static_cast<int>(seq_.size()); }
  /// π(position).
  [[nodiscard]] Vertex at(int position) const { return seq_.at(static_cast<std::size_t>(position - 1)); }
  /// π⁻¹(v).
  [[nodiscard]] int position(Vertex v) const { return pos_.at(static_cast<std::size_t>(v)); }
  [[nodiscard]] const std::vector<Vertex>& sequence() const noexcept { return seq_; }
  [[nodiscard]] bool is_identity() const {
    for (std::size_t i = 0; i < seq_.size(); ++i)
      if (seq_[i] != static_cast<Vertex>(i + 1)) return false;
    return true;
  }

  /// 0-based matrix index of π(position) for each position: feeds
  /// permute_symmetric / permute_rows to move a matrix into position space.
  [[nodiscard]] std::vector<std::size_t> to_position_indices() const {
    std::vector<std::size_t> idx(seq_.size());
    for (std::size_t i = 0; i < seq_.size(); ++i) idx[i] = static_cast<std::size_t>(seq_[i] - 1);
    return idx;
  }

  /// Inverse map: 0-based position index for each vertex index.
  [[nodiscard]] std::vector<std::size_t> to_label_indices() const {
    std::vector<std::size_t> idx(seq_.size());
    for (std::size_t v = 1; v <= seq_.size(); ++v) idx[v - 1] = static_cast<std::size_t>(pos_[v] - 1);
    return idx;
  }

  friend bool operator==(const Ordering& a, const Ordering& b) { return a.seq_ == b.seq_; }

 private:
  std::vector<Vertex> seq_;
  std::vector<int> pos_;  // index 0 unused
};

/// The graph with vertex π(i) renamed i.
inline Graph relabel_to_positions(const Graph& g, const Ordering& order) {
  if (order.size() != g.order()) throw Error(Errc::size_mismatch, "ordering size differs from graph order");
  Graph h(g.order());
  for (const auto& [u, v] : g.edges()) h.add_edge(order.position(u), order.position(v));
  return h;
}

}  // namespace chordrig
