#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "chordrig/error.hpp"
#include "chordrig/graph.hpp"

namespace chordrig {

/// Random k-tree on n vertices: K_k on 1..k, then each vertex v = k+1..n is
/// joined to a uniformly chosen k-clique of the graph built so far. Labels
/// follow construction order, so (n, n-1, ..., 1) is a PEO.
inline Graph gen_ktree(int n, int k, std::uint64_t seed) {
  if (k < 1 || n < k)
    throw Error(Errc::invalid_parameters, "k-tree needs 1 <= k <= n (n=" + std::to_string(n) + ", k=" + std::to_string(k) + ")");
  Graph g(n);
  std::vector<std::vector<Vertex>> cliques;
  std::vector<Vertex> base;
  for (Vertex v = 1; v <= k; ++v) {
    for (Vertex u : base) g.add_edge(u, v);
    base.push_back(v);
  }
  cliques.push_back(base);
  std::mt19937_64 rng(seed);
  for (Vertex v = k + 1; v <= n; ++v) {
    const auto chosen = cliques[rng() % cliques.size()];
    for (Vertex u : chosen) g.add_edge(u, v);
    for (std::size_t drop = 0; drop < chosen.size(); ++drop) {
      auto next = chosen;
      next[drop] = v;
      cliques.push_back(std::move(next));
    }
  }
  return g;
}

/// Ordering (n, n-1, ..., 1), the PEO of a graph from gen_ktree.
inline Ordering reverse_construction_order(int n) {
  std::vector<Vertex> seq(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) seq[static_cast<std::size_t>(i)] = n - i;
  return Ordering(std::move(seq));
}

}  // namespace chordrig
