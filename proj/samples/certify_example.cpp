// Certify the six-point planar framework from data/worked.json and turn
// its indefinite stress matrix into a PSD one.

#include <iostream>

#include "chordrig/chordrig.hpp"

int main() {
  using namespace chordrig;
  const std::vector<Vector> points{{-2, 0}, {-1, -1}, {-1, 1}, {1, -1}, {1, 1}, {2, 0}};
  Graph g(6);
  for (Vertex i = 1; i <= 6; ++i)
    for (Vertex j = i + 1; j <= 6; ++j)
      if (!(i == 1 && j >= 5) && !(i == 2 && j == 6)) g.add_edge(i, j);
  const Framework fw(g, 2, points);

  const Certificate cert = certify_chordal(fw);
  std::cout << "verdict: " << to_string(cert.verdict) << ", connectivity " << cert.connectivity << '\n';
  std::cout << "PSD stress:\n" << cert.stress->matrix() << "\n\n";

  const Matrix s{{10, -10, -5, 5, 0, 0}, {-10, 8, 7, -3, -2, 0}, {-5, 7, 1, -5, 1, 1},
                 {5, -3, -5, 1, 3, -1},  {0, -2, 1, 3, 0, -2},   {0, 0, 1, -1, -2, 2}};
  const auto res = psdize_stress(fw, s);
  std::cout << "after 3 elimination steps:\n" << res.eliminated << '\n';
  std::cout << "ZZ^T:\n" << res.stress.matrix() << '\n';
}
