#pragma once

// Exact dense linear algebra over the rationals: the no-exchange Gauss
// elimination used for stress matrices, determinants, rank, reduced row
// echelon forms, kernels, linear solves and a PSD decision procedure.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "chordrig/error.hpp"
#include "chordrig/matrix.hpp"
#include "chordrig/rational.hpp"

namespace chordrig {

inline constexpr std::uint64_t default_subset_cap = 5'000'000;

/// One elimination step on A^(t-1), producing A^(t). `t` is 1-based.
///
/// Rows above the pivot are kept, the pivot row is divided by the pivot,
/// entries below the pivot in columns 1..t become zero and the trailing block
/// receives the Schur update a_ij - a_it a_tj / a_tt. No row exchanges.
inline Matrix gauss_step(const Matrix& prev, std::size_t t) {
  if (t == 0 || t > prev.rows() || t > prev.cols())
    throw Error(Errc::invalid_parameters, "elimination step " + std::to_string(t) + " out of range");
  const std::size_t p = t - 1;
  const Rational pivot = prev(p, p);
  if (sgn(pivot) == 0) throw Error(Errc::zero_pivot, "zero pivot at step " + std::to_string(t), {t});

  Matrix next = prev;
  for (std::size_t j = 0; j < prev.cols(); ++j) next(p, j) = prev(p, j) / pivot;
  for (std::size_t i = t; i < prev.rows(); ++i) {
    for (std::size_t j = 0; j <= p; ++j) next(i, j) = 0;
    const Rational& lead = prev(i, p);
    if (sgn(lead) == 0) continue;
    for (std::size_t j = t; j < prev.cols(); ++j) next(i, j) = prev(i, j) - lead * prev(p, j) / pivot;
  }
  return next;
}

/// A^(t): `t` steps of elimination without row exchanges.
inline Matrix gauss_step_sequence(const Matrix& a, std::size_t t) {
  Matrix m = a;
  for (std::size_t s = 1; s <= t; ++s) m = gauss_step(m, s);
  return m;
}

/// Bareiss fraction-free determinant with row exchanges on zero pivots.
inline Rational determinant(Matrix m) {
  if (!m.is_square()) throw Error(Errc::dimension_mismatch, "determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  Rational prev_pivot = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (sgn(m(k, k)) == 0) {
      std::size_t swap = k + 1;
      while (swap < n && sgn(m(swap, k)) == 0) ++swap;
      if (swap == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(swap, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev_pivot;
      m(i, k) = 0;
    }
    prev_pivot = m(k, k);
  }
  Rational det = m(n - 1, n - 1);
  if (sign < 0) det = -det;
  return det;
}

/// Determinant of the leading k×k block.
inline Rational leading_principal_minor(const Matrix& a, std::size_t k) {
  if (!a.is_square()) throw Error(Errc::dimension_mismatch, "leading minor of a non-square matrix");
  if (k == 0 || k > a.rows()) throw Error(Errc::invalid_parameters, "minor size " + std::to_string(k) + " out of range");
  return determinant(a.block(0, 0, k, k));
}

struct RrefResult {
  Matrix reduced;
  std::vector<std::size_t> pivot_cols;
};

/// Reduced row echelon form by Gauss-Jordan elimination, pivoting on the
/// first nonzero entry of each column.
inline RrefResult rref(Matrix m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t sel = row;
    while (sel < m.rows() && sgn(m(sel, col)) == 0) ++sel;
    if (sel == m.rows()) continue;
    if (sel != row)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(sel, j), m(row, j));
    const Rational pivot = m(row, col);
    for (std::size_t j = col; j < m.cols(); ++j) m(row, j) /= pivot;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == row || sgn(m(i, col)) == 0) continue;
      const Rational f = m(i, col);
      for (std::size_t j = col; j < m.cols(); ++j) m(i, j) -= f * m(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return {std::move(m), std::move(pivots)};
}

/// Rank by elimination with full pivoting (row and column exchanges).
inline std::size_t rank(Matrix m) {
  std::size_t r = 0;
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  while (r < rows && r < cols) {
    std::size_t pi = rows, pj = cols;
    for (std::size_t i = r; i < rows && pi == rows; ++i)
      for (std::size_t j = r; j < cols; ++j)
        if (sgn(m(i, j)) != 0) {
          pi = i;
          pj = j;
          break;
        }
    if (pi == rows) break;
    for (std::size_t j = 0; j < cols; ++j) std::swap(m(r, j), m(pi, j));
    for (std::size_t i = 0; i < rows; ++i) std::swap(m(i, r), m(i, pj));
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (sgn(m(i, r)) == 0) continue;
      const Rational f = m(i, r) / m(r, r);
      for (std::size_t j = r; j < cols; ++j) m(i, j) -= f * m(r, j);
    }
    ++r;
  }
  return r;
}

struct RankProfile {
  bool generic = false;
  std::size_t rank = 0;
  /// First leading minor (1-based size) that vanishes, when not generic.
  std::optional<std::size_t> failing_minor;
};

/// Generic rank profile: the first rank(A) leading principal minors are nonzero.
inline RankProfile has_generic_rank_profile(const Matrix& a) {
  if (!a.is_symmetric()) throw Error(Errc::not_symmetric, "generic rank profile requires a symmetric matrix");
  RankProfile out;
  out.rank = rank(a);
  out.generic = true;
  for (std::size_t k = 1; k <= out.rank; ++k) {
    if (sgn(leading_principal_minor(a, k)) == 0) {
      out.generic = false;
      out.failing_minor = k;
      break;
    }
  }
  return out;
}

/// Kernel basis as columns: one column per free variable of the RREF, in
/// increasing free-column order, with a 1 in the free position.
inline Matrix null_space_basis(const Matrix& a) {
  const auto [r, pivots] = rref(a);
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < a.cols(); ++c)
    if (!is_pivot[c]) free_cols.push_back(c);

  Matrix basis(a.cols(), free_cols.size());
  for (std::size_t k = 0; k < free_cols.size(); ++k) {
    const std::size_t f = free_cols[k];
    basis(f, k) = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) basis(pivots[i], k) = -r(i, f);
  }
  return basis;
}

enum class SolutionKind { unique, none, underdetermined };

struct LinearSolution {
  SolutionKind kind = SolutionKind::none;
  /// Particular solution (free variables set to zero); empty when kind == none.
  Vector solution;
  /// Kernel basis as columns; non-empty only when underdetermined.
  Matrix kernel;
};

inline LinearSolution solve_linear(const Matrix& a, const Vector& b) {
  if (b.size() != a.rows())
    throw Error(Errc::dimension_mismatch, "right-hand side has " + std::to_string(b.size()) + " entries, matrix has " +
                                              std::to_string(a.rows()) + " rows");
  Matrix aug(a.rows(), a.cols() + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
    aug(i, a.cols()) = b[i];
  }
  const auto [r, pivots] = rref(std::move(aug));
  LinearSolution out;
  if (!pivots.empty() && pivots.back() == a.cols()) return out;

  out.solution.assign(a.cols(), Rational(0));
  for (std::size_t i = 0; i < pivots.size(); ++i) out.solution[pivots[i]] = r(i, a.cols());
  if (pivots.size() == a.cols()) {
    out.kind = SolutionKind::unique;
  } else {
    out.kind = SolutionKind::underdetermined;
    out.kernel = null_space_basis(a);
  }
  return out;
}

inline Matrix inverse(const Matrix& a) {
  if (!a.is_square()) throw Error(Errc::dimension_mismatch, "inverse of a non-square matrix");
  const std::size_t n = a.rows();
  Matrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    aug(i, n + i) = 1;
  }
  const auto [r, pivots] = rref(std::move(aug));
  if (pivots.size() < n || (n > 0 && pivots[n - 1] != n - 1)) throw Error(Errc::singular_matrix, "matrix is singular");
  return r.block(0, n, n, n);
}

/// B with B(i, j) = A(order[i], order[j]).
inline Matrix permute_symmetric(const Matrix& a, std::span<const std::size_t> order) {
  return a.submatrix(order, order);
}

inline Matrix permute_rows(const Matrix& a, std::span<const std::size_t> order) {
  std::vector<std::size_t> all(a.cols());
  for (std::size_t j = 0; j < all.size(); ++j) all[j] = j;
  return a.submatrix(order, all);
}

struct PsdResult {
  bool is_psd = false;
  std::size_t rank = 0;
  /// x with xᵀAx < 0, present exactly when !is_psd.
  std::optional<Vector> witness;
};

/// Exact PSD decision by symmetric elimination on the largest remaining
/// diagonal entry (lowest index on ties). Each stage works on the Schur
/// complement R of the pivots chosen so far. A negative witness y for R lifts
/// to x = (y, -A_PP⁻¹ A_PJ y) with xᵀAx = yᵀRy.
inline PsdResult psd_check(const Matrix& a) {
  if (!a.is_symmetric()) throw Error(Errc::not_symmetric, "psd_check requires a symmetric matrix");
  const std::size_t n = a.rows();
  std::vector<std::size_t> rest(n);
  for (std::size_t i = 0; i < n; ++i) rest[i] = i;
  std::vector<std::size_t> used;
  Matrix r = a;  // residual on the `rest` indices

  PsdResult out;
  while (!rest.empty()) {
    const std::size_t m = rest.size();
    std::size_t best = 0;
    for (std::size_t k = 1; k < m; ++k)
      if (r(k, k) > r(best, best)) best = k;

    std::optional<Vector> y;
    if (sgn(r(best, best)) < 0) {
      y = Vector(m, Rational(0));
      (*y)[best] = 1;
    } else if (sgn(r(best, best)) == 0) {
      if (r.is_zero()) break;
      // All residual diagonals are <= 0 and some off-diagonal entry is not zero.
      for (std::size_t k = 0; k < m && !y; ++k)
        if (sgn(r(k, k)) < 0) {
          y = Vector(m, Rational(0));
          (*y)[k] = 1;
        }
      for (std::size_t i = 0; i < m && !y; ++i)
        for (std::size_t j = i + 1; j < m && !y; ++j)
          if (sgn(r(i, j)) != 0) {
            y = Vector(m, Rational(0));
            (*y)[i] = 1;
            (*y)[j] = sgn(r(i, j)) > 0 ? -1 : 1;
          }
    }

    if (y) {
      Vector x(n, Rational(0));
      for (std::size_t k = 0; k < m; ++k) x[rest[k]] = (*y)[k];
      if (!used.empty()) {
        const Matrix app = a.submatrix(used, used);
        const Matrix apj = a.submatrix(used, rest);
        Vector rhs = apj * *y;
        for (auto& v : rhs) v = -v;
        const auto sol = solve_linear(app, rhs);
        for (std::size_t k = 0; k < used.size(); ++k) x[used[k]] = sol.solution[k];
      }
      if (sgn(quadratic_form(a, x)) >= 0) throw Error(Errc::assertion_failure, "psd witness is not negative");
      out.is_psd = false;
      out.rank = chordrig::rank(a);
      out.witness = std::move(x);
      return out;
    }

    const Rational pivot = r(best, best);
    Matrix next(m - 1, m - 1);
    for (std::size_t i = 0, ni = 0; i < m; ++i) {
      if (i == best) continue;
      for (std::size_t j = 0, nj = 0; j < m; ++j) {
        if (j == best) continue;
        next(ni, nj) = r(i, j) - r(i, best) * r(best, j) / pivot;
        ++nj;
      }
      ++ni;
    }
    used.push_back(rest[best]);
    rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(best));
    r = std::move(next);
  }
  out.is_psd = true;
  out.rank = used.size();
  return out;
}

/// C(n, k), saturating at UINT64_MAX.
inline std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  mpz_class c;
  mpz_bin_uiui(c.get_mpz_t(), n, k);
  if (!mpz_fits_ulong_p(c.get_mpz_t())) return UINT64_MAX;
  return mpz_get_ui(c.get_mpz_t());
}

/// Calls `visit` with every k-subset of {0..n-1} in lexicographic order until
/// it returns false. Returns false if stopped early.
template <class Visit>
bool for_each_combination(std::size_t n, std::size_t k, Visit&& visit) {
  if (k > n) return true;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    if (!visit(std::as_const(idx))) return false;
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return true;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

struct SubmatrixCheck {
  bool all_nonsingular = true;
  /// First singular m×m submatrix (0-based row and column index sets).
  std::vector<std::size_t> rows;
  std::vector<std::size_t> cols;
};

/// Brute force over all m×m submatrices, row subsets outer, column subsets
/// inner, both lexicographic.
inline SubmatrixCheck all_square_submatrices_nonsingular(const Matrix& a, std::size_t m,
                                                         std::uint64_t cap = default_subset_cap) {
  if (m > std::min(a.rows(), a.cols()))
    throw Error(Errc::invalid_parameters, "submatrix size exceeds matrix dimensions");
  const std::uint64_t nr = binomial(a.rows(), m);
  const std::uint64_t nc = binomial(a.cols(), m);
  if (nc != 0 && nr > cap / nc)
    throw Error(Errc::size_cap_exceeded, "C(" + std::to_string(a.rows()) + "," + std::to_string(m) + ")·C(" +
                                             std::to_string(a.cols()) + "," + std::to_string(m) +
                                             ") exceeds cap " + std::to_string(cap));
  SubmatrixCheck out;
  for_each_combination(a.rows(), m, [&](const std::vector<std::size_t>& rs) {
    return for_each_combination(a.cols(), m, [&](const std::vector<std::size_t>& cs) {
      if (sgn(determinant(a.submatrix(rs, cs))) != 0) return true;
      out.all_nonsingular = false;
      out.rows = rs;
      out.cols = cs;
      return false;
    });
  });
  return out;
}

}  // namespace chordrig
