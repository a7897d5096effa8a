#pragma once

// Rigidity certificates for chordal frameworks in general position.
//
// For a chordal G(p) in general position in ℚʳ with n > r + 1 the following
// are equivalent: G is (r+1)-connected; G(p) has a PSD stress matrix of rank
// n - r - 1; G(p) is universally rigid; G(p) is globally rigid. The pipeline
// below witnesses one side of that dichotomy: a PSD stress of maximal rank
// when the connectivity is high enough, otherwise an equivalent framework
// that is not congruent, obtained by reflecting one side of a small cut.

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "chordrig/chordal.hpp"
#include "chordrig/error.hpp"
#include "chordrig/exactmat.hpp"
#include "chordrig/framework.hpp"
#include "chordrig/graph.hpp"
#include "chordrig/stress.hpp"

namespace chordrig {

enum class Verdict { universally_rigid, not_globally_rigid, inconclusive };
enum class InconclusiveReason { not_chordal, not_general_position, simplex_case };

inline const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::universally_rigid: return "UniversallyRigid";
    case Verdict::not_globally_rigid: return "NotGloballyRigid";
    case Verdict::inconclusive: return "Inconclusive";
  }
  return "?";
}

inline const char* to_string(InconclusiveReason r) {
  switch (r) {
    case InconclusiveReason::not_chordal: return "NotChordal";
    case InconclusiveReason::not_general_position: return "NotGeneralPosition";
    case InconclusiveReason::simplex_case: return "SimplexCase";
  }
  return "?";
}

struct CertifyOptions {
  std::uint64_t subset_cap = default_subset_cap;
};

/// Verdict plus evidence. `connectivity` is -1 when the graph is not chordal
/// (the chordal connectivity formula does not apply). A simplex (n = r + 1)
/// is reported as inconclusive; complete simplices are trivially universally
/// rigid but have no stress matrix to certify it.
struct Certificate {
  Verdict verdict = Verdict::inconclusive;
  std::optional<StressMatrix> stress;
  std::optional<Framework> counterexample;
  std::optional<InconclusiveReason> reason;
  Ordering peo;
  int connectivity = -1;
  std::optional<std::vector<Vertex>> cut;
};

// ---------------------------------------------------------------------------
// Hyperplanes

/// {x : normal · x = offset}, normal != 0.
struct Hyperplane {
  Vector normal;
  Rational offset;

  [[nodiscard]] Rational side(const Vector& p) const { return dot(normal, p) - offset; }
  [[nodiscard]] bool contains(const Vector& p) const { return sgn(side(p)) == 0; }

  /// Mirror image of p.
  [[nodiscard]] Vector reflect(const Vector& p) const {
    const Rational scale = 2 * side(p) / dot(normal, normal);
    Vector q = p;
    for (std::size_t k = 0; k < q.size(); ++k) q[k] -= scale * normal[k];
    return q;
  }

  friend bool operator==(const Hyperplane&, const Hyperplane&) = default;
};

namespace detail {

/// Scales (a, b) to a primitive integer vector whose first nonzero normal
/// entry is positive.
inline Hyperplane normalize(Vector coeffs) {
  mpz_class lcm = 1;
  for (const auto& c : coeffs) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den_mpz_t());
  mpz_class gcd = 0;
  for (auto& c : coeffs) {
    c *= lcm;
    mpz_gcd(gcd.get_mpz_t(), gcd.get_mpz_t(), c.get_num_mpz_t());
  }
  int lead = 0;
  for (std::size_t k = 0; k + 1 < coeffs.size() && lead == 0; ++k) lead = sgn(coeffs[k]);
  if (lead < 0) gcd = -gcd;
  for (auto& c : coeffs) c /= gcd;
  Hyperplane h;
  h.offset = coeffs.back();
  coeffs.pop_back();
  h.normal = std::move(coeffs);
  return h;
}

inline long enumeration_value(long rank) { return rank % 2 == 1 ? (rank + 1) / 2 : -(rank / 2); }

}  // namespace detail

inline constexpr long hyperplane_search_limit = 64;

/// Walks hyperplanes through `points` in a fixed order until `accept` takes
/// one. Candidates are K·c for the kernel basis K of the system
/// [pᵢᵀ, -1]·(a, b) = 0 and integer coefficient tuples c of growing max-norm,
/// each norm shell in lexicographic order over the values 0, 1, -1, 2, -2, ...
template <class Accept>
Hyperplane search_hyperplane(int dim, std::span<const Vector> points, Accept&& accept) {
  if (static_cast<int>(points.size()) > dim)
    throw Error(Errc::precondition_violated, "a hyperplane can pass through at most r points in general position");
  Matrix system(points.size(), static_cast<std::size_t>(dim) + 1);
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (points[i].size() != static_cast<std::size_t>(dim)) throw Error(Errc::dimension_mismatch, "point of wrong dimension");
    for (int k = 0; k < dim; ++k) system(i, static_cast<std::size_t>(k)) = points[i][static_cast<std::size_t>(k)];
    system(i, static_cast<std::size_t>(dim)) = -1;
  }
  const Matrix kernel = null_space_basis(system);
  const std::size_t d = kernel.cols();
  bool normal_possible = false;
  for (std::size_t c = 0; c < d && !normal_possible; ++c)
    for (int k = 0; k < dim && !normal_possible; ++k) normal_possible = sgn(kernel(static_cast<std::size_t>(k), c)) != 0;
  if (!normal_possible) throw Error(Errc::infeasible, "every solution has a zero normal");

  std::vector<long> ranks(d);
  for (long norm = 1; norm <= hyperplane_search_limit; ++norm) {
    const long radix = 2 * norm + 1;
    std::fill(ranks.begin(), ranks.end(), 0);
    while (true) {
      long max_abs = 0;
      for (long r : ranks) max_abs = std::max(max_abs, std::abs(detail::enumeration_value(r)));
      if (max_abs == norm) {
        Vector coeffs(static_cast<std::size_t>(dim) + 1, Rational(0));
        for (std::size_t c = 0; c < d; ++c) {
          const long v = detail::enumeration_value(ranks[c]);
          if (v == 0) continue;
          for (std::size_t k = 0; k < coeffs.size(); ++k) coeffs[k] += v * kernel(k, c);
        }
        bool nonzero_normal = false;
        for (int k = 0; k < dim; ++k) nonzero_normal = nonzero_normal || sgn(coeffs[static_cast<std::size_t>(k)]) != 0;
        if (nonzero_normal) {
          Hyperplane h = detail::normalize(std::move(coeffs));
          if (accept(h)) return h;
        }
      }
      std::size_t pos = d;
      while (pos > 0 && ranks[pos - 1] == radix - 1) ranks[--pos] = 0;
      if (pos == 0) break;
      ++ranks[pos - 1];
    }
  }
  throw Error(Errc::infeasible, "no acceptable hyperplane within the coefficient search limit");
}

/// A hyperplane containing every point of `points` and none of `avoid`.
inline Hyperplane hyperplane_through(int dim, std::span<const Vector> points, std::span<const Vector> avoid) {
  return search_hyperplane(dim, points, [&](const Hyperplane& h) {
    for (const auto& q : avoid)
      if (h.contains(q)) return false;
    return true;
  });
}

// ---------------------------------------------------------------------------
// Hendrickson reflection

/// Reflects the component of G - X holding the smallest label across a
/// hyperplane through the points of X that misses every other point. The
/// result is equivalent to fw but not congruent to it; both facts are checked.
inline Framework reflection_counterexample(const Framework& fw, const std::vector<Vertex>& cut) {
  if (static_cast<int>(cut.size()) > fw.dim())
    throw Error(Errc::precondition_violated, "cut of size " + std::to_string(cut.size()) + " exceeds r = " + std::to_string(fw.dim()));
  const auto comps = components_after_removal(fw.graph(), cut);
  if (comps.size() < 2) throw Error(Errc::not_a_cut, "removing the given vertices leaves the graph connected");

  std::vector<bool> in_cut(static_cast<std::size_t>(fw.order()) + 1, false);
  std::vector<Vector> on, off;
  for (Vertex x : cut) {
    in_cut[static_cast<std::size_t>(x)] = true;
    on.push_back(fw.point(x));
  }
  for (Vertex v = 1; v <= fw.order(); ++v)
    if (!in_cut[static_cast<std::size_t>(v)]) off.push_back(fw.point(v));

  const auto& flipped = comps.front();
  auto reflected_points = [&](const Hyperplane& h) {
    auto q = fw.points();
    for (Vertex v : flipped) q[static_cast<std::size_t>(v - 1)] = h.reflect(fw.point(v));
    return q;
  };
  const Hyperplane h = search_hyperplane(fw.dim(), on, [&](const Hyperplane& cand) {
    for (const auto& q : off)
      if (cand.contains(q)) return false;
    return rank(extended_config_matrix(fw.dim(), reflected_points(cand))) == static_cast<std::size_t>(fw.dim()) + 1;
  });

  Framework out(fw.graph(), fw.dim(), reflected_points(h));
  if (!frameworks_equivalent(fw, out)) throw Error(Errc::assertion_failure, "reflected framework is not equivalent");
  if (frameworks_congruent(fw, out)) throw Error(Errc::assertion_failure, "reflected framework is congruent");
  return out;
}

// ---------------------------------------------------------------------------
// Property (A) Gale matrices and PSD stresses

namespace detail {
[[noreturn]] inline void precondition(const std::string& what) { throw Error(Errc::precondition_violated, what); }
}  // namespace detail

/// Gale matrix with Property (A) in the PEO labeling, returned in the
/// original labels. Column j (position space) is 1 at j, the unique affine
/// dependency coefficients on the r+1 earliest higher neighbors of j, and
/// zero elsewhere.
inline GaleMatrix property_A_gale(const Framework& fw, const Ordering& peo, const CertifyOptions& opts = {}) {
  const auto peo_check = is_peo(fw.graph(), peo);
  if (!peo_check.ok) detail::precondition("ordering is not a PEO");
  if (fw.rbar() < 1) detail::precondition("rbar = 0: no Gale matrix");
  if (!is_general_position(fw, opts.subset_cap).ok) detail::precondition("points are not in general position");
  if (chordal_connectivity(fw.graph(), peo) < fw.dim() + 1)
    detail::precondition("graph is not " + std::to_string(fw.dim() + 1) + "-connected");

  const Framework local = relabel_to_positions(fw, peo);
  const Ordering ident = Ordering::identity(fw.order());
  const auto n = static_cast<std::size_t>(fw.order());
  const auto rbar = static_cast<std::size_t>(fw.rbar());
  const auto width = static_cast<std::size_t>(fw.dim()) + 1;
  const Matrix p = extended_config_matrix(local);

  Matrix z(n, rbar);
  for (std::size_t j = 0; j < rbar; ++j) {
    auto support = higher_neighbors(local.graph(), ident, static_cast<int>(j) + 1);
    if (support.size() < width) throw Error(Errc::assertion_failure, "higher neighborhood smaller than r+1");
    support.resize(width);
    Matrix a(width, width);
    Vector rhs(width);
    for (std::size_t row = 0; row < width; ++row) {
      for (std::size_t k = 0; k < width; ++k) a(row, k) = p(row, static_cast<std::size_t>(support[k] - 1));
      rhs[row] = -p(row, j);
    }
    const auto sol = solve_linear(a, rhs);
    if (sol.kind != SolutionKind::unique) throw Error(Errc::assertion_failure, "affine dependency is not unique");
    z(j, j) = 1;
    for (std::size_t k = 0; k < width; ++k) z(static_cast<std::size_t>(support[k] - 1), j) = sol.solution[k];
  }
  if (!(p * z).is_zero()) throw Error(Errc::assertion_failure, "constructed columns are not affine dependencies");
  if (!satisfies_property_A(z, local.graph(), ident).ok) throw Error(Errc::assertion_failure, "Property (A) failed");

  return GaleMatrix::checked(fw, permute_rows(z, peo.to_label_indices()));
}

/// S = ZZᵀ for a Gale matrix with Property (A) in the PEO labeling: PSD, of
/// rank r̄, and zero on every non-edge.
inline StressMatrix psd_stress_from_gale_A(const Framework& fw, const GaleMatrix& gale, const Ordering& peo) {
  const Matrix& z = gale.matrix();
  if (!satisfies_property_A(permute_rows(z, peo.to_position_indices()), fw.graph(), peo).ok)
    detail::precondition("Gale matrix does not satisfy Property (A) in the given ordering");
  const Matrix s = z * z.transpose();
  for (Vertex i = 1; i <= fw.order(); ++i)
    for (Vertex j = i + 1; j <= fw.order(); ++j)
      if (!fw.graph().adjacent(i, j) && sgn(s(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1))) != 0)
        throw Error(Errc::pattern_violation, "ZZ^T is nonzero on non-edge (" + std::to_string(i) + "," + std::to_string(j) + ")",
                    {static_cast<std::size_t>(i), static_cast<std::size_t>(j)});
  auto stress = StressMatrix::checked(fw, s);
  const auto psd = psd_check(s);
  if (!psd.is_psd || psd.rank != static_cast<std::size_t>(fw.rbar()))
    throw Error(Errc::assertion_failure, "ZZ^T is not PSD of rank rbar");
  return stress;
}

// ---------------------------------------------------------------------------

inline Certificate certify_chordal(const Framework& fw, const CertifyOptions& opts = {}) {
  Certificate cert;
  const auto chordal = is_chordal(fw.graph());
  cert.peo = chordal.order;
  if (!chordal.chordal) {
    cert.reason = InconclusiveReason::not_chordal;
    return cert;
  }
  cert.connectivity = chordal_connectivity(fw.graph(), cert.peo);
  if (!is_general_position(fw, opts.subset_cap).ok) {
    cert.reason = InconclusiveReason::not_general_position;
    return cert;
  }
  if (fw.rbar() == 0) {
    cert.reason = InconclusiveReason::simplex_case;
    return cert;
  }
  if (cert.connectivity >= fw.dim() + 1) {
    const auto gale = property_A_gale(fw, cert.peo, opts);
    cert.stress = psd_stress_from_gale_A(fw, gale, cert.peo);
    cert.verdict = Verdict::universally_rigid;
    return cert;
  }
  cert.cut = vertex_cut_of_size_at_most(fw.graph(), cert.peo, fw.dim());
  if (!cert.cut) throw Error(Errc::assertion_failure, "connectivity <= r but no cut of size <= r was found");
  cert.counterexample = reflection_counterexample(fw, *cert.cut);
  cert.verdict = Verdict::not_globally_rigid;
  return cert;
}

}  // namespace chordrig
