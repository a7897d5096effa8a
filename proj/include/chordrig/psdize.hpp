#pragma once

// Turning a stress matrix of rank r̄ with generic rank profile into a PSD
// stress matrix of the same rank.
//
// In a PEO labeling, r̄ steps of no-exchange Gauss elimination on S keep every
// non-edge entry at zero. The first r̄ rows of S^(r̄) are then Zᵀ for a Gale
// matrix Z with Property (A), and ZZᵀ is the PSD stress.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>

#include "chordrig/certify.hpp"
#include "chordrig/chordal.hpp"
#include "chordrig/error.hpp"
#include "chordrig/exactmat.hpp"
#include "chordrig/framework.hpp"
#include "chordrig/stress.hpp"

namespace chordrig {

struct PsdizeOptions {
  std::uint64_t subset_cap = default_subset_cap;
  /// PEO to eliminate in. Defaults to the identity when that is a PEO,
  /// otherwise the MCS ordering.
  std::optional<Ordering> peo;
};

struct PsdizeResult {
  StressMatrix stress;  ///< ZZᵀ in the original labels
  Ordering peo;
  Matrix permuted;      ///< S in PEO labels
  Matrix eliminated;    ///< S^(r̄) in PEO labels
  Matrix gale;          ///< Z in the original labels
};

inline PsdizeResult psdize_stress(const Framework& fw, const Matrix& s, const PsdizeOptions& opts = {}) {
  const Graph& g = fw.graph();
  Ordering peo;
  if (opts.peo) {
    if (!is_peo(g, *opts.peo).ok) detail::precondition("supplied ordering is not a PEO");
    peo = *opts.peo;
  } else if (const auto ident = Ordering::identity(g.order()); is_peo(g, ident).ok) {
    peo = ident;
  } else {
    const auto chordal = is_chordal(g);
    if (!chordal.chordal) detail::precondition("graph is not chordal");
    peo = chordal.order;
  }
  if (fw.rbar() < 1) detail::precondition("rbar = 0: no stress matrix of positive rank");
  if (!is_general_position(fw, opts.subset_cap).ok) detail::precondition("points are not in general position");

  const auto report = validate_stress_matrix(fw, s);
  if (!report.symmetric) detail::precondition("S is not symmetric");
  if (!report.pattern_ok) detail::precondition("S is nonzero on a non-edge");
  if (!report.kernel_ok) detail::precondition("S is not in the kernel of the extended configuration matrix");
  const auto rbar = static_cast<std::size_t>(fw.rbar());
  if (report.rank != rbar)
    detail::precondition("rank(S) = " + std::to_string(report.rank) + " but n - r - 1 = " + std::to_string(rbar));

  const Matrix permuted = permute_symmetric(s, peo.to_position_indices());
  const auto profile = has_generic_rank_profile(permuted);
  if (!profile.generic)
    throw Error(Errc::not_generic_rank_profile,
                "leading principal minor " + std::to_string(*profile.failing_minor) + " vanishes in the PEO labeling",
                {*profile.failing_minor});

  Matrix eliminated;
  try {
    eliminated = gauss_step_sequence(permuted, rbar);
  } catch (const Error& e) {
    if (e.code() != Errc::zero_pivot) throw;
    throw Error(Errc::not_generic_rank_profile, e.what(), e.where());
  }
  const auto n = static_cast<std::size_t>(fw.order());
  if (!eliminated.block(rbar, 0, n - rbar, n).is_zero())
    throw Error(Errc::assertion_failure, "trailing rows of the eliminated matrix are not zero");

  const Matrix z_local = eliminated.block(0, 0, rbar, n).transpose();
  if (!satisfies_property_A(z_local, g, peo).ok)
    throw Error(Errc::assertion_failure, "eliminated rows do not have Property (A)");

  const auto back = peo.to_label_indices();
  Matrix gale = permute_rows(z_local, back);
  Matrix result = permute_symmetric(z_local * z_local.transpose(), back);
  auto stress = StressMatrix::checked(fw, std::move(result));
  const auto psd = psd_check(stress.matrix());
  if (!psd.is_psd || psd.rank != rbar) throw Error(Errc::assertion_failure, "ZZ^T is not PSD of rank rbar");
  return PsdizeResult{std::move(stress), std::move(peo), permuted, std::move(eliminated), std::move(gale)};
}

/// Runs elimination stages 1..k on A (indexed by PEO position) and reports
/// whether every non-edge entry stays zero at every stage.
inline bool elimination_keeps_pattern(const Graph& g, const Ordering& peo, const Matrix& a, std::size_t k) {
  const auto n = static_cast<std::size_t>(g.order());
  if (a.rows() != n || a.cols() != n) throw Error(Errc::dimension_mismatch, "matrix size differs from graph order");
  if (!a.is_symmetric()) throw Error(Errc::not_symmetric, "matrix must be symmetric");
  auto pattern_holds = [&](const Matrix& m) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (i != j && !g.adjacent(peo.at(static_cast<int>(i) + 1), peo.at(static_cast<int>(j) + 1)) && sgn(m(i, j)) != 0)
          return false;
    return true;
  };
  if (!pattern_holds(a)) detail::precondition("matrix is nonzero on a non-edge");
  Matrix stage = a;
  for (std::size_t t = 1; t <= k; ++t) {
    stage = gauss_step(stage, t);
    if (!pattern_holds(stage)) return false;
  }
  return true;
}

}  // namespace chordrig
