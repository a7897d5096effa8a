#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "chordrig/certify.hpp"
#include "chordrig/generate.hpp"
#include "fixtures.hpp"
#include "instances.hpp"
#include "oracles.hpp"

using namespace chordrig;

namespace {

void check_stress_invariants(const Framework& fw, const StressMatrix& s) {
  const auto rep = validate_stress_matrix(fw, s.matrix());
  CHECK(rep.symmetric);
  CHECK(rep.pattern_ok);
  CHECK(rep.kernel_ok);
  CHECK(rep.psd);
  CHECK(rep.rank == static_cast<std::size_t>(fw.rbar()));
}

}  // namespace

TEST_CASE("property A gale matrices", "[gale]") {
  CHECK(property_A_gale(fx::k3_line(), Ordering::identity(3)).matrix() == Matrix{{1}, {-2}, {1}});

  const Framework fw = fx::worked();
  const Matrix z = property_A_gale(fw, Ordering::identity(6)).matrix();
  CHECK((extended_config_matrix(fw) * z).is_zero());
  CHECK(satisfies_property_A(z, fw.graph(), Ordering::identity(6)).ok);
  for (std::size_t j = 0; j < 3; ++j) {
    const auto hn = higher_neighbors(fw.graph(), Ordering::identity(6), static_cast<int>(j) + 1);
    for (std::size_t i = 0; i < 6; ++i) {
      const bool in_support = i == j || std::find(hn.begin(), hn.end(), static_cast<Vertex>(i + 1)) != hn.end();
      if (!in_support) CHECK(sgn(z(i, j)) == 0);
    }
  }

  try {
    property_A_gale(fx::path3_line(), Ordering::identity(3));
    FAIL("path has connectivity 1");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::precondition_violated);
  }
  // 5 comes first but its neighbors 2 and 6 are not adjacent
  CHECK_THROWS_AS(property_A_gale(fw, Ordering(std::vector<Vertex>{5, 1, 2, 3, 4, 6})), Error);
}

TEST_CASE("ZZ^T stress certificates", "[psd]") {
  const StressMatrix k3 = psd_stress_from_gale_A(fx::k3_line(), GaleMatrix::checked(fx::k3_line(), Matrix{{1}, {-2}, {1}}),
                                                 Ordering::identity(3));
  CHECK(k3.matrix() == Matrix{{1, -2, 1}, {-2, 4, -2}, {1, -2, 1}});
  CHECK(psd_check(k3.matrix()).rank == 1);

  const Framework fw = fx::worked();
  const StressMatrix s = psd_stress_from_gale_A(fw, GaleMatrix::checked(fw, fx::worked_Z()), Ordering::identity(6));
  CHECK(s.matrix() == fx::worked_ZZt());
  CHECK((extended_config_matrix(fw) * s.matrix()).is_zero());
  check_stress_invariants(fw, s);
}

TEST_CASE("certify the worked examples", "[certify]") {
  const auto ex = certify_chordal(fx::worked());
  CHECK(ex.verdict == Verdict::universally_rigid);
  CHECK(ex.connectivity == 3);
  REQUIRE(ex.stress);
  check_stress_invariants(fx::worked(), *ex.stress);

  const auto a = certify_chordal(fx::collinear5());
  CHECK(a.verdict == Verdict::inconclusive);
  CHECK(a.reason == InconclusiveReason::not_general_position);

  const auto b = certify_chordal(fx::square6());
  CHECK(b.verdict == Verdict::inconclusive);
  CHECK(b.reason == InconclusiveReason::not_chordal);
  CHECK(b.connectivity == -1);

  const auto simplex = certify_chordal(Framework(fx::k(3), 2, {{0, 0}, {1, 0}, {0, 1}}));
  CHECK(simplex.verdict == Verdict::inconclusive);
  CHECK(simplex.reason == InconclusiveReason::simplex_case);

  // the component holding vertex 1 is mirrored through p2 = 1
  const auto path = certify_chordal(fx::path3_line());
  CHECK(path.verdict == Verdict::not_globally_rigid);
  CHECK(path.cut == std::vector<Vertex>{2});
  REQUIRE(path.counterexample);
  CHECK(path.counterexample->points() == std::vector<Vector>{{2}, {1}, {2}});
  CHECK(frameworks_equivalent(fx::path3_line(), *path.counterexample));
  CHECK_FALSE(frameworks_congruent(fx::path3_line(), *path.counterexample));
}

TEST_CASE("hyperplanes through cut points", "[hyperplane]") {
  const std::vector<Vector> one{{1}}, line_avoid{{0}, {2}};
  const Hyperplane h1 = hyperplane_through(1, one, line_avoid);
  CHECK(h1.normal == Vector{1});
  CHECK(h1.offset == 1);

  const std::vector<Vector> cut{{-40, 10}, {-40, -10}}, rest{{-60, 0}, {-20, 0}};
  const Hyperplane h2 = hyperplane_through(2, cut, rest);
  CHECK(h2.normal == Vector{1, 0});
  CHECK(h2.offset == -40);

  const std::vector<Vector> none, origin{{0, 0}};
  const Hyperplane h3 = hyperplane_through(2, none, origin);
  CHECK(sgn(h3.offset) != 0);
  CHECK_FALSE(h3.contains({0, 0}));

  const Hyperplane h{{1, 2}, 3};
  const Vector p{5, -1};
  CHECK(h.reflect(h.reflect(p)) == p);
  CHECK(h.contains(Vector{3, 0}));
  CHECK(h.reflect(Vector{3, 0}) == Vector{3, 0});
}

TEST_CASE("reflection counterexamples", "[reflect]") {
  std::mt19937_64 rng(7);
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    // a 2-tree has connectivity 2, so it always has a cut of size r = 2
    const Framework fw(gen_ktree(6, 2, seed), 2, random_general_position_points(6, 2, rng));
    const auto c = is_chordal(fw.graph());
    const auto cut = vertex_cut_of_size_at_most(fw.graph(), c.order, 2);
    REQUIRE(cut);
    const Framework q = reflection_counterexample(fw, *cut);
    CHECK(frameworks_equivalent(fw, q));
    CHECK_FALSE(frameworks_congruent(fw, q));
  }
  try {
    reflection_counterexample(Framework(fx::k(4), 2, {{0, 0}, {1, 0}, {0, 1}, {3, 2}}), {});
    FAIL("empty set does not separate K4");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::not_a_cut);
  }
  CHECK_THROWS_AS(reflection_counterexample(fx::worked(), {2, 3, 4}), Error);
}

TEST_CASE("certificates on random chordal frameworks", "[property]") {
  std::mt19937_64 rng(404);
  for (int trial = 0; trial < 40; ++trial) {
    const int r = 1 + static_cast<int>(rng() % 3);
    const int n = r + 2 + static_cast<int>(rng() % static_cast<unsigned>(9 - r));
    const Framework ur = gen_ktree_framework(n, r, rng());
    const auto cert = certify_chordal(ur);
    REQUIRE(cert.verdict == Verdict::universally_rigid);
    check_stress_invariants(ur, *cert.stress);
    CHECK(cert.connectivity == oracle::brute_connectivity(ur.graph()));

    const Framework low = inst::low_connectivity_framework(n, r, rng());
    const auto neg = certify_chordal(low);
    REQUIRE(neg.verdict == Verdict::not_globally_rigid);
    CHECK(neg.connectivity <= r);
    CHECK(frameworks_equivalent(low, *neg.counterexample));
    CHECK_FALSE(frameworks_congruent(low, *neg.counterexample));
  }
}
