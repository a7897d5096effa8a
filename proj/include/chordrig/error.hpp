#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace chordrig {

enum class Errc {
  zero_pivot,
  not_symmetric,
  singular_matrix,
  size_cap_exceeded,
  dimension_mismatch,
  invalid_graph,
  disconnected_graph,
  not_a_peo,
  internal_separation_failure,
  invalid_parameters,
  degenerate_span,
  no_gale_matrix,
  not_equilibrium,
  invalid_stress_matrix,
  reconstruction_failure,
  pattern_violation,
  graph_mismatch,
  size_mismatch,
  precondition_violated,
  not_a_cut,
  assertion_failure,
  infeasible,
  not_generic_rank_profile,
  unsupported_dimension,
  parse_error,
};

inline const char* to_string(Errc code) {
  switch (code) {
    case Errc::zero_pivot: return "ZeroPivot";
    case Errc::not_symmetric: return "NotSymmetric";
    case Errc::singular_matrix: return "SingularMatrix";
    case Errc::size_cap_exceeded: return "SizeCapExceeded";
    case Errc::dimension_mismatch: return "DimensionMismatch";
    case Errc::invalid_graph: return "InvalidGraph";
    case Errc::disconnected_graph: return "DisconnectedGraph";
    case Errc::not_a_peo: return "NotAPeo";
    case Errc::internal_separation_failure: return "InternalSeparationFailure";
    case Errc::invalid_parameters: return "InvalidParameters";
    case Errc::degenerate_span: return "DegenerateSpan";
    case Errc::no_gale_matrix: return "NoGaleMatrix";
    case Errc::not_equilibrium: return "NotEquilibrium";
    case Errc::invalid_stress_matrix: return "InvalidStressMatrix";
    case Errc::reconstruction_failure: return "ReconstructionFailure";
    case Errc::pattern_violation: return "PatternViolation";
    case Errc::graph_mismatch: return "GraphMismatch";
    case Errc::size_mismatch: return "SizeMismatch";
    case Errc::precondition_violated: return "PreconditionViolated";
    case Errc::not_a_cut: return "NotACut";
    case Errc::assertion_failure: return "AssertionFailure";
    case Errc::infeasible: return "Infeasible";
    case Errc::not_generic_rank_profile: return "NotGenericRankProfile";
    case Errc::unsupported_dimension: return "UnsupportedDimension";
    case Errc::parse_error: return "ParseError";
  }
  return "Unknown";
}

/// Library error. `where()` carries the positional payload some codes define:
/// the step for zero_pivot, the failing minor for not_generic_rank_profile,
/// the (row, col) pair for pattern_violation.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& detail, std::vector<std::size_t> where = {})
      : std::runtime_error(std::string(to_string(code)) + ": " + detail),
        code_(code),
        detail_(detail),
        where_(std::move(where)) {}

  [[nodiscard]] Errc code() const noexcept { return code_; }
  [[nodiscard]] const std::vector<std::size_t>& where() const noexcept { return where_; }
  /// The message without the code prefix.
  [[nodiscard]] const std::string& detail() const noexcept { return detail_; }

 private:
  Errc code_;
  std::string detail_;
  std::vector<std::size_t> where_;
};

}  // namespace chordrig
