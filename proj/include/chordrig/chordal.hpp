#pragma once

// Chordal graph machinery: Maximum Cardinality Search, perfect elimination
// orderings, vertex connectivity of chordal graphs from higher neighborhoods
// and small vertex cuts.
//
// Orderings follow the elimination convention: a PEO lists vertices so that
// the later neighbors of every vertex form a clique.

#include <algorithm>
#include <limits>
#include <optional>
#include <queue>
#include <set>
#include <string>
#include <vector>

#include "chordrig/error.hpp"
#include "chordrig/graph.hpp"

namespace chordrig {

/// MCS: π(n) = start, then each earlier position takes the unlabeled vertex
/// with the most labeled neighbors. Ties go to the highest label, which makes
/// the identity ordering come back unchanged on graphs already numbered by a
/// PEO. O((n + |E|) log n).
inline Ordering mcs_order(const Graph& g, Vertex start) {
  const int n = g.order();
  if (!g.contains(start)) throw Error(Errc::invalid_parameters, "start vertex " + std::to_string(start) + " out of range");
  std::vector<int> weight(static_cast<std::size_t>(n) + 1, 0);
  std::vector<bool> labeled(static_cast<std::size_t>(n) + 1, false);
  std::vector<std::set<Vertex>> bucket(static_cast<std::size_t>(n) + 1);
  for (Vertex v = 1; v <= n; ++v)
    if (v != start) bucket[0].insert(v);

  std::vector<Vertex> seq(static_cast<std::size_t>(n));
  int top = 0;
  Vertex next = start;
  for (int pos = n; pos >= 1; --pos) {
    if (pos != n) {
      while (bucket[static_cast<std::size_t>(top)].empty()) --top;
      auto& b = bucket[static_cast<std::size_t>(top)];
      next = *b.rbegin();
      b.erase(std::prev(b.end()));
    }
    seq[static_cast<std::size_t>(pos - 1)] = next;
    labeled[static_cast<std::size_t>(next)] = true;
    for (Vertex u : g.neighbors(next)) {
      if (labeled[static_cast<std::size_t>(u)]) continue;
      auto& w = weight[static_cast<std::size_t>(u)];
      bucket[static_cast<std::size_t>(w)].erase(u);
      ++w;
      bucket[static_cast<std::size_t>(w)].insert(u);
      top = std::max(top, w);
    }
  }
  return Ordering(std::move(seq));
}

inline Ordering mcs_order(const Graph& g) { return mcs_order(g, g.order()); }

/// Neighbors of π(j) at later positions, listed in increasing position.
inline std::vector<Vertex> higher_neighbors(const Graph& g, const Ordering& order, int j) {
  if (j < 1 || j > order.size()) throw Error(Errc::invalid_parameters, "position " + std::to_string(j) + " out of range");
  std::vector<Vertex> out;
  for (Vertex u : g.neighbors(order.at(j)))
    if (order.position(u) > j) out.push_back(u);
  std::sort(out.begin(), out.end(), [&](Vertex a, Vertex b) { return order.position(a) < order.position(b); });
  return out;
}

struct PeoViolation {
  Vertex vertex;
  Vertex a;
  Vertex b;  // a, b later neighbors of `vertex`, not adjacent to each other
};

struct PeoCheck {
  bool ok = true;
  std::optional<PeoViolation> violation;
};

/// Zero-fill-in test: every later neighbor of v other than the earliest one,
/// p, must be adjacent to p. Equivalent to all higher neighborhoods being
/// cliques.
inline PeoCheck is_peo(const Graph& g, const Ordering& order) {
  if (order.size() != g.order()) throw Error(Errc::size_mismatch, "ordering size differs from graph order");
  for (int j = 1; j <= order.size(); ++j) {
    const auto later = higher_neighbors(g, order, j);
    if (later.size() < 2) continue;
    const Vertex p = later.front();
    for (std::size_t k = 1; k < later.size(); ++k)
      if (!g.adjacent(p, later[k])) return {false, PeoViolation{order.at(j), p, later[k]}};
  }
  return {};
}

struct ChordalResult {
  bool chordal = false;
  /// The MCS ordering; a PEO exactly when `chordal`.
  Ordering order;
  std::optional<PeoViolation> violation;
};

inline ChordalResult is_chordal(const Graph& g) {
  if (g.order() == 0) return {true, Ordering{}, std::nullopt};
  ChordalResult out;
  out.order = mcs_order(g);
  const auto check = is_peo(g, out.order);
  out.chordal = check.ok;
  out.violation = check.violation;
  return out;
}

/// Shortest chordless cycle of length >= 4, or nothing when G is chordal.
/// Brute force over (v, a, b) with a, b non-adjacent neighbors of v, joined by
/// a shortest a-b path that avoids v's other neighbors.
inline std::optional<std::vector<Vertex>> find_chordless_cycle(const Graph& g) {
  const int n = g.order();
  std::optional<std::vector<Vertex>> best;
  std::vector<int> parent(static_cast<std::size_t>(n) + 1);
  std::vector<bool> blocked(static_cast<std::size_t>(n) + 1);
  for (Vertex v = 1; v <= n; ++v) {
    const auto& nv = g.neighbors(v);
    for (std::size_t ia = 0; ia < nv.size(); ++ia)
      for (std::size_t ib = ia + 1; ib < nv.size(); ++ib) {
        const Vertex a = nv[ia], b = nv[ib];
        if (g.adjacent(a, b)) continue;
        std::fill(blocked.begin(), blocked.end(), false);
        blocked[static_cast<std::size_t>(v)] = true;
        for (Vertex u : nv)
          if (u != a && u != b) blocked[static_cast<std::size_t>(u)] = true;
        std::fill(parent.begin(), parent.end(), 0);
        std::queue<Vertex> q;
        q.push(a);
        parent[static_cast<std::size_t>(a)] = a;
        while (!q.empty() && parent[static_cast<std::size_t>(b)] == 0) {
          const Vertex u = q.front();
          q.pop();
          for (Vertex w : g.neighbors(u))
            if (!blocked[static_cast<std::size_t>(w)] && parent[static_cast<std::size_t>(w)] == 0) {
              parent[static_cast<std::size_t>(w)] = u;
              q.push(w);
            }
        }
        if (parent[static_cast<std::size_t>(b)] == 0) continue;
        std::vector<Vertex> cycle{v};
        std::vector<Vertex> path;
        for (Vertex w = b; w != a; w = parent[static_cast<std::size_t>(w)]) path.push_back(w);
        path.push_back(a);
        cycle.insert(cycle.end(), path.rbegin(), path.rend());
        if (!best || cycle.size() < best->size()) best = std::move(cycle);
      }
  }
  return best;
}

/// Connected components of G - X, each sorted, ordered by smallest label.
inline std::vector<std::vector<Vertex>> components_after_removal(const Graph& g, const std::vector<Vertex>& removed) {
  const int n = g.order();
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  for (Vertex x : removed) {
    if (!g.contains(x)) throw Error(Errc::invalid_parameters, "vertex " + std::to_string(x) + " out of range");
    seen[static_cast<std::size_t>(x)] = true;
  }
  std::vector<std::vector<Vertex>> comps;
  for (Vertex s = 1; s <= n; ++s) {
    if (seen[static_cast<std::size_t>(s)]) continue;
    std::vector<Vertex> comp{s};
    seen[static_cast<std::size_t>(s)] = true;
    for (std::size_t head = 0; head < comp.size(); ++head)
      for (Vertex w : g.neighbors(comp[head]))
        if (!seen[static_cast<std::size_t>(w)]) {
          seen[static_cast<std::size_t>(w)] = true;
          comp.push_back(w);
        }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

namespace detail {
inline void require_peo(const Graph& g, const Ordering& peo) {
  const auto check = is_peo(g, peo);
  if (!check.ok) {
    const auto& v = *check.violation;
    throw Error(Errc::not_a_peo, "later neighbors " + std::to_string(v.a) + " and " + std::to_string(v.b) + " of vertex " +
                                     std::to_string(v.vertex) + " are not adjacent");
  }
}
}  // namespace detail

/// Vertex connectivity of a chordal graph: the largest k <= n-1 with
/// |N̂(j)| >= k for every position j <= n-k.
inline int chordal_connectivity(const Graph& g, const Ordering& peo) {
  detail::require_peo(g, peo);
  const int n = g.order();
  if (n <= 1) return 0;
  std::vector<int> higher(static_cast<std::size_t>(n) + 1, 0);
  for (int j = 1; j <= n; ++j) higher[static_cast<std::size_t>(j)] = static_cast<int>(higher_neighbors(g, peo, j).size());
  int k = 0;
  while (k + 1 <= n - 1) {
    const int cand = k + 1;
    bool holds = true;
    for (int j = 1; j <= n - cand && holds; ++j) holds = higher[static_cast<std::size_t>(j)] >= cand;
    if (!holds) break;
    k = cand;
  }
  return k;
}

/// A vertex cut of size <= r, or nothing when G is (r+1)-connected or
/// complete. The cut is N̂(j*) for the first position j* with |N̂(j*)| <= r
/// that misses some later vertex (any j* <= n-r-1 with |N̂(j*)| <= r does);
/// it separates π(j*) from every later vertex outside it. Sorted by label.
inline std::optional<std::vector<Vertex>> vertex_cut_of_size_at_most(const Graph& g, const Ordering& peo, int r) {
  if (r < 0) throw Error(Errc::invalid_parameters, "negative cut bound");
  if (chordal_connectivity(g, peo) >= r + 1) return std::nullopt;
  const int n = g.order();
  for (int j = 1; j < n; ++j) {
    auto cut = higher_neighbors(g, peo, j);
    const int size = static_cast<int>(cut.size());
    if (size > r || size >= n - j) continue;
    std::sort(cut.begin(), cut.end());
    if (components_after_removal(g, cut).size() < 2)
      throw Error(Errc::internal_separation_failure, "higher neighborhood of position " + std::to_string(j) +
                                                         " does not separate the graph");
    return cut;
  }
  return std::nullopt;
}

}  // namespace chordrig
