#pragma once

// Seeded instance generators. Only raw mt19937_64 output is consumed (no
// std distributions), so a seed gives the same instance on every platform.

#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "chordrig/error.hpp"
#include "chordrig/exactmat.hpp"
#include "chordrig/framework.hpp"
#include "chordrig/graph.hpp"
#include "chordrig/ktree.hpp"

namespace chordrig {

struct GenOptions {
  /// Coordinates are drawn from [-range, range]; 0 picks 4n + 4.
  long coord_range = 0;
  int max_tries = 1000;
  bool shuffle_labels = true;
  std::uint64_t subset_cap = default_subset_cap;
};

inline long draw_int(std::mt19937_64& rng, long lo, long hi) {
  return lo + static_cast<long>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

/// Fisher-Yates permutation of 1..n.
inline Ordering random_ordering(int n, std::mt19937_64& rng) {
  std::vector<Vertex> seq(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) seq[static_cast<std::size_t>(i)] = i + 1;
  for (int i = n - 1; i > 0; --i) std::swap(seq[static_cast<std::size_t>(i)], seq[static_cast<std::size_t>(draw_int(rng, 0, i))]);
  return Ordering(std::move(seq));
}

/// Integer points in general position in ℚʳ, rejection-sampled.
inline std::vector<Vector> random_general_position_points(int n, int r, std::mt19937_64& rng, const GenOptions& opts = {}) {
  const long range = opts.coord_range > 0 ? opts.coord_range : 4L * n + 4;
  const Graph complete = [&] {
    Graph k(n);
    for (Vertex u = 1; u <= n; ++u)
      for (Vertex v = u + 1; v <= n; ++v) k.add_edge(u, v);
    return k;
  }();
  for (int attempt = 0; attempt < opts.max_tries; ++attempt) {
    std::vector<Vector> pts(static_cast<std::size_t>(n), Vector(static_cast<std::size_t>(r)));
    for (auto& p : pts)
      for (auto& x : p) x = draw_int(rng, -range, range);
    if (rank(extended_config_matrix(r, pts)) != static_cast<std::size_t>(r) + 1) continue;
    if (is_general_position(Framework(complete, r, pts), opts.subset_cap).ok) return pts;
  }
  throw Error(Errc::size_cap_exceeded, "no general-position configuration after " + std::to_string(opts.max_tries) + " tries");
}

/// Framework on an (r+1)-tree with n vertices in general position in ℚʳ.
inline Framework gen_ktree_framework(int n, int r, std::uint64_t seed, const GenOptions& opts = {}) {
  if (r < 1 || n < r + 1)
    throw Error(Errc::invalid_parameters, "need r >= 1 and n >= r + 1 (n=" + std::to_string(n) + ", r=" + std::to_string(r) + ")");
  std::mt19937_64 rng(seed);
  Graph g = gen_ktree(n, r + 1, rng());
  if (opts.shuffle_labels) g = relabel_to_positions(g, random_ordering(n, rng));
  return Framework(std::move(g), r, random_general_position_points(n, r, rng, opts));
}

}  // namespace chordrig
