#pragma once

// Equilibrium stresses, stress matrices and Gale matrices of a framework.
//
// A symmetric n×n matrix S is a stress matrix of G(p) iff 𝒫S = 0 and S
// vanishes on every non-adjacent pair. Given a Gale matrix Z (columns spanning
// ker 𝒫) every stress matrix factors as S = ZΨZᵀ with Ψ symmetric r̄×r̄.

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "chordrig/error.hpp"
#include "chordrig/exactmat.hpp"
#include "chordrig/framework.hpp"
#include "chordrig/graph.hpp"
#include "chordrig/matrix.hpp"

namespace chordrig {

/// Edge weights ω_ij keyed by the unordered edge. Unset edges weigh zero.
class StressWeights {
 public:
  void set(Vertex i, Vertex j, Rational w) { weights_[key(i, j)] = std::move(w); }

  [[nodiscard]] Rational get(Vertex i, Vertex j) const {
    const auto it = weights_.find(key(i, j));
    return it == weights_.end() ? Rational(0) : it->second;
  }

  [[nodiscard]] const std::map<Edge, Rational>& entries() const noexcept { return weights_; }

  friend bool operator==(const StressWeights& a, const StressWeights& b) {
    auto nonzero = [](const StressWeights& w) {
      std::map<Edge, Rational> out;
      for (const auto& [e, x] : w.weights_)
        if (sgn(x) != 0) out.emplace(e, x);
      return out;
    };
    return nonzero(a) == nonzero(b);
  }

 private:
  static Edge key(Vertex i, Vertex j) { return i < j ? Edge{i, j} : Edge{j, i}; }
  std::map<Edge, Rational> weights_;
};

/// n×r̄ matrix whose columns are a basis of ker 𝒫.
class GaleMatrix {
 public:
  static GaleMatrix checked(const Framework& fw, Matrix z) {
    if (fw.rbar() < 1) throw Error(Errc::no_gale_matrix, "a framework with n = r + 1 has no Gale matrix");
    const auto n = static_cast<std::size_t>(fw.order());
    const auto rbar = static_cast<std::size_t>(fw.rbar());
    if (z.rows() != n || z.cols() != rbar)
      throw Error(Errc::dimension_mismatch, "Gale matrix must be " + std::to_string(n) + "x" + std::to_string(rbar));
    if (!(extended_config_matrix(fw) * z).is_zero())
      throw Error(Errc::invalid_parameters, "columns are not in the null space of the extended configuration matrix");
    if (rank(z) != rbar) throw Error(Errc::invalid_parameters, "Gale matrix columns are dependent");
    return GaleMatrix(std::move(z));
  }

  [[nodiscard]] const Matrix& matrix() const noexcept { return z_; }

 private:
  explicit GaleMatrix(Matrix z) : z_(std::move(z)) {}
  Matrix z_;
};

struct StressReport {
  bool symmetric = false;
  bool pattern_ok = false;
  bool kernel_ok = false;
  std::size_t rank = 0;
  bool generic_rank_profile = false;
  bool psd = false;
  /// Leading principal minors of sizes 1..rank (symmetric input only).
  std::vector<Rational> leading_minors;
  std::optional<std::size_t> failing_minor;
  /// First non-adjacent pair (i < j) with s_ij != 0.
  std::optional<Edge> pattern_violation;

  [[nodiscard]] bool is_stress_matrix() const noexcept { return symmetric && pattern_ok && kernel_ok; }
};

/// Evaluates every stress-matrix clause independently.
inline StressReport validate_stress_matrix(const Framework& fw, const Matrix& s) {
  const auto n = static_cast<std::size_t>(fw.order());
  if (s.rows() != n || s.cols() != n)
    throw Error(Errc::dimension_mismatch, "stress matrix must be " + std::to_string(n) + "x" + std::to_string(n));
  StressReport rep;
  rep.symmetric = s.is_symmetric();
  rep.pattern_ok = true;
  for (Vertex i = 1; i <= fw.order() && rep.pattern_ok; ++i)
    for (Vertex j = 1; j <= fw.order(); ++j) {
      if (i == j || fw.graph().adjacent(i, j)) continue;
      if (sgn(s(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1))) != 0) {
        rep.pattern_ok = false;
        rep.pattern_violation = Edge{std::min(i, j), std::max(i, j)};
        break;
      }
    }
  rep.kernel_ok = (extended_config_matrix(fw) * s).is_zero();
  rep.rank = rank(s);
  if (rep.symmetric) {
    const auto profile = has_generic_rank_profile(s);
    rep.generic_rank_profile = profile.generic;
    rep.failing_minor = profile.failing_minor;
    for (std::size_t k = 1; k <= rep.rank; ++k) rep.leading_minors.push_back(leading_principal_minor(s, k));
    rep.psd = psd_check(s).is_psd;
  }
  return rep;
}

/// Symmetric matrix with 𝒫S = 0 and zeros on non-edges.
class StressMatrix {
 public:
  static StressMatrix checked(const Framework& fw, Matrix s) {
    const auto rep = validate_stress_matrix(fw, s);
    if (!rep.symmetric) throw Error(Errc::invalid_stress_matrix, "matrix is not symmetric");
    if (!rep.pattern_ok)
      throw Error(Errc::invalid_stress_matrix, "nonzero entry on non-edge (" + std::to_string(rep.pattern_violation->first) +
                                                   "," + std::to_string(rep.pattern_violation->second) + ")");
    if (!rep.kernel_ok) throw Error(Errc::invalid_stress_matrix, "extended configuration matrix times S is not zero");
    return StressMatrix(std::move(s));
  }

  [[nodiscard]] const Matrix& matrix() const noexcept { return s_; }

  friend bool operator==(const StressMatrix& a, const StressMatrix& b) { return a.s_ == b.s_; }

 private:
  explicit StressMatrix(Matrix s) : s_(std::move(s)) {}
  Matrix s_;
};

/// Canonical Gale matrix: the RREF kernel basis of 𝒫.
inline GaleMatrix gale_matrix(const Framework& fw) {
  if (fw.rbar() < 1) throw Error(Errc::no_gale_matrix, "a framework with n = r + 1 has no Gale matrix");
  return GaleMatrix::checked(fw, null_space_basis(extended_config_matrix(fw)));
}

struct EquilibriumCheck {
  bool ok = true;
  std::optional<Vertex> violating_vertex;
};

/// Σ_j ω_ij (pⁱ - pʲ) = 0 at every vertex i.
inline EquilibriumCheck verify_equilibrium_stress(const Framework& fw, const StressWeights& w) {
  for (const auto& [e, x] : w.entries())
    if (!fw.graph().adjacent(e.first, e.second))
      throw Error(Errc::invalid_parameters, "weight on non-edge (" + std::to_string(e.first) + "," + std::to_string(e.second) + ")");
  const auto dim = static_cast<std::size_t>(fw.dim());
  for (Vertex i = 1; i <= fw.order(); ++i) {
    Vector force(dim, Rational(0));
    for (Vertex j : fw.graph().neighbors(i)) {
      const Rational wij = w.get(i, j);
      if (sgn(wij) == 0) continue;
      for (std::size_t k = 0; k < dim; ++k) force[k] += wij * (fw.point(i)[k] - fw.point(j)[k]);
    }
    for (const auto& f : force)
      if (sgn(f) != 0) return {false, i};
  }
  return {};
}

/// s_ij = -ω_ij on edges, s_ii = Σ_k ω_ik, zero elsewhere.
inline StressMatrix stress_from_omega(const Framework& fw, const StressWeights& w) {
  const auto check = verify_equilibrium_stress(fw, w);
  if (!check.ok) throw Error(Errc::not_equilibrium, "forces do not balance at vertex " + std::to_string(*check.violating_vertex));
  const auto n = static_cast<std::size_t>(fw.order());
  Matrix s(n, n);
  for (const auto& [i, j] : fw.graph().edges()) {
    const Rational wij = w.get(i, j);
    const auto a = static_cast<std::size_t>(i - 1), b = static_cast<std::size_t>(j - 1);
    s(a, b) = -wij;
    s(b, a) = -wij;
    s(a, a) += wij;
    s(b, b) += wij;
  }
  return StressMatrix::checked(fw, std::move(s));
}

inline StressWeights omega_from_stress(const Framework& fw, const Matrix& s) {
  const auto checked = StressMatrix::checked(fw, s);
  StressWeights w;
  for (const auto& [i, j] : fw.graph().edges())
    w.set(i, j, -checked.matrix()(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1)));
  return w;
}

/// Ψ = (ZᵀZ)⁻¹ Zᵀ S Z (ZᵀZ)⁻¹, verified by ZΨZᵀ = S.
inline Matrix psi_from_stress(const Framework& fw, const GaleMatrix& gale, const StressMatrix& s) {
  (void)fw;
  const Matrix& z = gale.matrix();
  const Matrix zt = z.transpose();
  const Matrix gram_inv = inverse(zt * z);
  const Matrix psi = gram_inv * zt * s.matrix() * z * gram_inv;
  if (!(z * psi * zt == s.matrix()))
    throw Error(Errc::reconstruction_failure, "Z Psi Z^T does not reproduce the stress matrix");
  return psi;
}

/// S' = ZΨ'Zᵀ after checking (zⁱ)ᵀΨ'zʲ = 0 on every non-adjacent pair.
inline StressMatrix stress_from_psi(const Framework& fw, const GaleMatrix& gale, const Matrix& psi) {
  const auto rbar = static_cast<std::size_t>(fw.rbar());
  if (psi.rows() != rbar || psi.cols() != rbar)
    throw Error(Errc::dimension_mismatch, "Psi must be " + std::to_string(rbar) + "x" + std::to_string(rbar));
  if (!psi.is_symmetric()) throw Error(Errc::not_symmetric, "Psi must be symmetric");
  const Matrix& z = gale.matrix();
  const Matrix s = z * psi * z.transpose();
  for (Vertex i = 1; i <= fw.order(); ++i)
    for (Vertex j = i + 1; j <= fw.order(); ++j)
      if (!fw.graph().adjacent(i, j) && sgn(s(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1))) != 0)
        throw Error(Errc::pattern_violation,
                    "(z^" + std::to_string(i) + ")^T Psi z^" + std::to_string(j) + " is nonzero on a non-edge",
                    {static_cast<std::size_t>(i), static_cast<std::size_t>(j)});
  return StressMatrix::checked(fw, s);
}

struct PropertyACheck {
  bool ok = true;
  /// 0-based (row, col) of the first offending entry in row-major order.
  std::optional<std::pair<std::size_t, std::size_t>> violation;
};

/// Property (A) for a matrix whose row i belongs to the vertex at PEO
/// position i+1: unit diagonal, zeros above it, and zeros below it wherever
/// the two vertices are not adjacent.
inline PropertyACheck satisfies_property_A(const Matrix& z, const Graph& g, const Ordering& peo) {
  const auto n = static_cast<std::size_t>(g.order());
  if (z.rows() != n || z.cols() > n || peo.size() != g.order())
    throw Error(Errc::dimension_mismatch, "Property (A) check needs an n x k matrix with k <= n");
  for (std::size_t i = 0; i < z.rows(); ++i)
    for (std::size_t j = 0; j < z.cols(); ++j) {
      bool ok;
      if (i == j) {
        ok = z(i, j) == 1;
      } else if (i < j) {
        ok = sgn(z(i, j)) == 0;
      } else {
        ok = g.adjacent(peo.at(static_cast<int>(i) + 1), peo.at(static_cast<int>(j) + 1)) || sgn(z(i, j)) == 0;
      }
      if (!ok) return {false, std::pair{i, j}};
    }
  return {};
}

}  // namespace chordrig
