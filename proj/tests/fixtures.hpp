#pragma once

// Shared test data: the six-point planar example with its printed stress,
// elimination result, Gale matrix and PSD stress; the two five/six-point
// frameworks of the introductory figure; small line frameworks.

#include <vector>

#include "chordrig/framework.hpp"
#include "chordrig/graph.hpp"
#include "chordrig/matrix.hpp"
#include "chordrig/rational.hpp"

namespace fx {

using namespace chordrig;

inline Graph worked_graph() {
  Graph g(6);
  for (Vertex i = 1; i <= 6; ++i)
    for (Vertex j = i + 1; j <= 6; ++j)
      if (!(i == 1 && j == 5) && !(i == 1 && j == 6) && !(i == 2 && j == 6)) g.add_edge(i, j);
  return g;
}

inline Framework worked() {
  return Framework(worked_graph(), 2, {{-2, 0}, {-1, -1}, {-1, 1}, {1, -1}, {1, 1}, {2, 0}});
}

inline Matrix worked_S() {
  return Matrix{{10, -10, -5, 5, 0, 0}, {-10, 8, 7, -3, -2, 0}, {-5, 7, 1, -5, 1, 1},
                {5, -3, -5, 1, 3, -1},  {0, -2, 1, 3, 0, -2},   {0, 0, 1, -1, -2, 2}};
}

inline Matrix worked_S3() {
  const Rational h = frac(1, 2);
  return Matrix{{1, -1, -h, h, 0, 0}, {0, 1, -1, -1, 1, 0}, {0, 0, 1, -1, -2, 2},
                {0, 0, 0, 0, 0, 0},   {0, 0, 0, 0, 0, 0},   {0, 0, 0, 0, 0, 0}};
}

inline Matrix worked_Z() {
  const Rational h = frac(1, 2);
  return Matrix{{1, 0, 0}, {-1, 1, 0}, {-h, -1, 1}, {h, -1, -1}, {0, 1, -2}, {0, 0, 2}};
}

inline Matrix worked_ZZt() {
  const Rational h = frac(1, 2), q = frac(1, 4), nq = frac(9, 4);
  return Matrix{{1, -1, -h, h, 0, 0},     {-1, 2, -h, -3 * h, 1, 0}, {-h, -h, nq, -q, -3, 2},
                {h, -3 * h, -q, nq, 1, -2}, {0, 1, -3, 1, 5, -4},      {0, 0, 2, -2, -4, 4}};
}

inline Graph collinear5_graph() { return Graph(5, {{1, 2}, {1, 4}, {1, 5}, {2, 3}, {2, 4}, {2, 5}, {3, 4}, {3, 5}, {4, 5}}); }

inline Framework collinear5() { return Framework(collinear5_graph(), 2, {{-60, 0}, {-40, 0}, {-20, 0}, {-40, 10}, {-40, -10}}); }

inline Graph square6_graph() { return Graph(6, {{1, 2}, {1, 3}, {1, 5}, {2, 4}, {2, 6}, {3, 4}, {3, 5}, {4, 6}, {5, 6}}); }

inline Framework square6() { return Framework(square6_graph(), 2, {{10, 10}, {40, 10}, {10, -10}, {40, -10}, {15, 0}, {45, 0}}); }

inline Graph path3() { return Graph(3, {{1, 2}, {2, 3}}); }

inline Framework path3_line() { return Framework(path3(), 1, {{0}, {1}, {2}}); }

inline Graph k(int n) {
  Graph g(n);
  for (Vertex i = 1; i <= n; ++i)
    for (Vertex j = i + 1; j <= n; ++j) g.add_edge(i, j);
  return g;
}

inline Framework k3_line() { return Framework(k(3), 1, {{0}, {1}, {2}}); }

inline Graph cycle(int n) {
  Graph g(n);
  for (Vertex i = 1; i <= n; ++i) g.add_edge(i, i % n + 1);
  return g;
}

}  // namespace fx
