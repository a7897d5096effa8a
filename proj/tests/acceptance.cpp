// Acceptance run: seven criteria, one PASS/FAIL line each, exit 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "chordrig/chordrig.hpp"
#include "fixtures.hpp"
#include "instances.hpp"
#include "oracles.hpp"

using namespace chordrig;

namespace {

// wall-clock budgets in seconds
constexpr double budget_example = 1.0;
constexpr double budget_validation = 1.0;
constexpr double budget_figure = 1.0;
constexpr double budget_certify = 60.0;
constexpr double budget_elimination = 30.0;
constexpr double budget_submatrix = 60.0;
constexpr double budget_psd = 30.0;

constexpr int certify_cases = 200;
constexpr int elimination_cases = 200;
constexpr int submatrix_cases = 100;
constexpr int psd_cases = 500;

struct Outcome {
  bool ok = true;
  std::string note;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      note = what;
    }
  }
};

const std::vector<std::size_t> first3{0, 1, 2}, all6{0, 1, 2, 3, 4, 5};

Framework load_framework(const char* name) {
  return io::framework_from_json(io::read_json_file(std::string(CHORDRIG_DATA_DIR) + "/" + name));
}

Outcome example_psdize() {
  Outcome o;
  const Framework fw = load_framework("worked.json");
  const Matrix s = io::stress_from_json(io::read_json_file(std::string(CHORDRIG_DATA_DIR) + "/worked_stress.json"));
  o.require(s == fx::worked_S(), "stress file differs from the printed S");
  const auto res = psdize_stress(fw, s);
  o.require(res.eliminated == fx::worked_S3(), "S3 differs");
  o.require(res.eliminated.submatrix(first3, all6) ==
                Matrix{{1, -1, frac(-1, 2), frac(1, 2), 0, 0}, {0, 1, -1, -1, 1, 0}, {0, 0, 1, -1, -2, 2}},
            "first three rows of S3 differ");
  o.require(res.gale == fx::worked_Z(), "Z differs");
  o.require(res.stress.matrix() == fx::worked_ZZt(), "ZZ^T differs");
  return o;
}

Outcome example_validation() {
  Outcome o;
  const Framework fw = fx::worked();
  const Matrix s = fx::worked_S();
  const auto rep = validate_stress_matrix(fw, s);
  o.require(rep.is_stress_matrix(), "S is not a stress matrix");
  o.require(rep.rank == 3, "rank of S is not 3");
  o.require(rep.generic_rank_profile, "S lacks generic rank profile");
  o.require(rep.leading_minors == std::vector<Rational>{10, -20, -10}, "leading minors are not 10, -20, -10");
  o.require(oracle::cofactor_det(s.submatrix(first3, first3)) == -10, "cofactor oracle disagrees on the third minor");
  o.require(!rep.psd, "S reported PSD");
  const auto zz = validate_stress_matrix(fw, fx::worked_ZZt());
  o.require(zz.is_stress_matrix() && zz.psd && zz.rank == 3, "ZZ^T is not a PSD rank-3 stress matrix");
  o.require(oracle::principal_minors_psd(fx::worked_ZZt()), "minor oracle rejects ZZ^T");
  o.require(!oracle::principal_minors_psd(s), "minor oracle accepts S");
  return o;
}

Outcome figure_cases() {
  Outcome o;
  const Framework a = load_framework("collinear5.json");
  const auto gpa = is_general_position(a);
  o.require(!gpa.ok && gpa.violating == std::vector<Vertex>{1, 2, 3}, "(a) general-position witness is not {1,2,3}");
  const auto ca = is_chordal(a.graph());
  o.require(ca.chordal, "(a) not chordal");
  o.require(ca.chordal && chordal_connectivity(a.graph(), ca.order) == 3, "(a) connectivity is not 3");
  o.require(oracle::brute_connectivity(a.graph()) == 3, "(a) brute-force connectivity is not 3");

  const Framework b = load_framework("square6.json");
  o.require(is_general_position(b).ok, "(b) not in general position");
  o.require(oracle::brute_connectivity(b.graph()) == 3, "(b) brute-force connectivity is not 3");
  o.require(!is_chordal(b.graph()).chordal, "(b) reported chordal");
  const auto cyc = find_chordless_cycle(b.graph());
  o.require(cyc && cyc->size() == 4 && oracle::is_induced_cycle(b.graph(), *cyc), "(b) no chordless 4-cycle reported");
  return o;
}

Outcome certify_suite() {
  Outcome o;
  for (int i = 0; i < certify_cases && o.ok; ++i) {
    const auto seed = static_cast<std::uint64_t>(1000 + i);
    const int r = 1 + i % 3;
    const int n = r + 2 + static_cast<int>(seed % static_cast<unsigned>(9 - r));
    const std::string tag = " (n=" + std::to_string(n) + " r=" + std::to_string(r) + " seed=" + std::to_string(seed) + ")";

    const Framework ur = gen_ktree_framework(n, r, seed);
    const auto cert = certify_chordal(ur);
    o.require(cert.verdict == Verdict::universally_rigid && cert.stress.has_value(), "not certified UR" + tag);
    if (!o.ok) break;
    const auto rep = validate_stress_matrix(ur, cert.stress->matrix());
    o.require(rep.symmetric && rep.pattern_ok && rep.kernel_ok, "stress invariants fail" + tag);
    o.require(rep.psd && oracle::principal_minors_psd(cert.stress->matrix()), "stress not PSD" + tag);
    o.require(rep.rank == static_cast<std::size_t>(n - r - 1), "stress rank is not n-r-1" + tag);

    const Framework low = inst::low_connectivity_framework(n, r, seed);
    const auto neg = certify_chordal(low);
    o.require(neg.verdict == Verdict::not_globally_rigid && neg.counterexample.has_value(), "low-connectivity case not refuted" + tag);
    if (!o.ok) break;
    o.require(oracle::brute_connectivity(low.graph()) <= r, "generator produced connectivity > r" + tag);
    o.require(frameworks_equivalent(low, *neg.counterexample), "counterexample not equivalent" + tag);
    o.require(!frameworks_congruent(low, *neg.counterexample), "counterexample congruent" + tag);
  }
  return o;
}

bool pattern_holds(const Graph& g, const Matrix& m) {
  for (Vertex i = 1; i <= g.order(); ++i)
    for (Vertex j = 1; j <= g.order(); ++j)
      if (i != j && !g.adjacent(i, j) && sgn(m(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1))) != 0)
        return false;
  return true;
}

Outcome elimination_suite() {
  Outcome o;
  std::mt19937_64 rng(2024);
  for (int i = 0; i < elimination_cases && o.ok; ++i) {
    const int n = 2 + static_cast<int>(rng() % 7);
    const auto pm = inst::random_chordal_patterned(rng, n, i % 2 == 0);
    const std::string tag = " (case " + std::to_string(i) + ")";
    o.require(has_generic_rank_profile(pm.a).generic, "instance lacks generic rank profile" + tag);
    o.require(elimination_keeps_pattern(pm.graph, Ordering::identity(n), pm.a, pm.rank), "library check fails" + tag);
    Matrix stage = pm.a;
    for (std::size_t t = 1; t <= pm.rank; ++t) {
      stage = oracle::elimination_stage(stage, t);
      o.require(pattern_holds(pm.graph, stage), "non-edge fill at stage " + std::to_string(t) + tag);
    }
  }
  return o;
}

Outcome submatrix_suite() {
  Outcome o;
  for (int i = 0; i < submatrix_cases && o.ok; ++i) {
    const auto seed = static_cast<std::uint64_t>(5000 + i);
    const int r = 1 + i % 3;
    const int n = r + 2 + static_cast<int>(seed % static_cast<unsigned>(7 - r));
    const std::string tag = " (n=" + std::to_string(n) + " r=" + std::to_string(r) + " seed=" + std::to_string(seed) + ")";
    const Framework fw = gen_ktree_framework(n, r, seed);
    o.require(is_general_position(fw).ok, "not in general position" + tag);
    const auto rbar = static_cast<std::size_t>(fw.rbar());
    o.require(all_square_submatrices_nonsingular(gale_matrix(fw).matrix(), rbar).all_nonsingular, "singular Gale submatrix" + tag);
    const auto cert = certify_chordal(fw);
    o.require(cert.stress.has_value(), "no certified stress" + tag);
    if (cert.stress)
      o.require(all_square_submatrices_nonsingular(cert.stress->matrix(), rbar).all_nonsingular, "singular stress submatrix" + tag);
  }
  return o;
}

Outcome psd_suite() {
  Outcome o;
  std::mt19937_64 rng(31337);
  int psd_seen = 0;
  for (int i = 0; i < psd_cases && o.ok; ++i) {
    const auto n = static_cast<std::size_t>(1 + rng() % 6);
    Matrix a(n, n);
    if (i % 3 == 0) {
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = r; c < n; ++c) a(r, c) = a(c, r) = oracle::small_rational(rng);
    } else {
      // Gram matrices are PSD, of rank at most k; nudging one diagonal entry
      // down lands near the boundary from either side
      const auto k = static_cast<std::size_t>(rng() % (n + 1));
      Matrix b(n, k);
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < k; ++c) b(r, c) = oracle::small_rational(rng, 3, 2);
      a = b * b.transpose();
      if (i % 3 == 2) {
        const auto d = rng() % n;
        a(d, d) -= frac(1, 1 + static_cast<long>(rng() % 4));
      }
    }
    const auto res = psd_check(a);
    psd_seen += res.is_psd;
    const std::string tag = " (case " + std::to_string(i) + ")";
    o.require(res.is_psd == oracle::principal_minors_psd(a), "psd_check disagrees with the minor oracle" + tag);
    if (res.is_psd) o.require(res.rank == oracle::minor_rank(a), "rank disagrees" + tag);
    if (!res.is_psd) o.require(res.witness && sgn(quadratic_form(a, *res.witness)) < 0, "witness is not negative" + tag);
  }
  // the draw must exercise both answers
  o.require(psd_seen > psd_cases / 5 && psd_seen < psd_cases * 4 / 5, "only " + std::to_string(psd_seen) + " PSD draws");
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    double budget;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {"worked example psdize is exact", budget_example, example_psdize},
      {"worked example stress validation", budget_validation, example_validation},
      {"degenerate and non-chordal frameworks", budget_figure, figure_cases},
      {"chordal certificates on 200+200 frameworks", budget_certify, certify_suite},
      {"elimination keeps chordal zero patterns", budget_elimination, elimination_suite},
      {"square submatrices of Gale and stress matrices", budget_submatrix, submatrix_suite},
      {"psd_check agrees with principal minors", budget_psd, psd_suite},
  };
  int failed = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    const auto& c = criteria[k];
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.ok = false;
      o.note = std::string("threw ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (o.ok && secs >= c.budget) {
      o.ok = false;
      o.note = "over the " + std::to_string(c.budget) + " s budget";
    }
    failed += !o.ok;
    std::printf("%s criterion %zu: %s [%.3f s]%s%s\n", o.ok ? "PASS" : "FAIL", k + 1, c.name, secs, o.ok ? "" : " -- ",
                o.note.c_str());
  }
  return failed == 0 ? 0 : 1;
}
