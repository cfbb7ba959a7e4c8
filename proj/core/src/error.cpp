#include "optree/error.hpp"

namespace optree {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::axiom1_violation: return "axiom1_violation";
    case ErrorCode::axiom2_violation: return "axiom2_violation";
    case ErrorCode::axiom3_violation: return "axiom3_violation";
    case ErrorCode::bad_reference: return "bad_reference";
    case ErrorCode::arity_mismatch: return "arity_mismatch";
    case ErrorCode::colour_mismatch: return "colour_mismatch";
    case ErrorCode::unknown_operation: return "unknown_operation";
    case ErrorCode::unknown_colour: return "unknown_colour";
    case ErrorCode::malformed_table: return "malformed_table";
    case ErrorCode::unsupported_nesting: return "unsupported_nesting";
    case ErrorCode::bounds_too_large_for_colour_domain:
      return "bounds_too_large_for_colour_domain";
    case ErrorCode::trivial_tree_has_no_blobbing:
      return "trivial_tree_has_no_blobbing";
    case ErrorCode::trivial_tree_in_blobs_basis:
      return "trivial_tree_in_blobs_basis";
    case ErrorCode::residue_mismatch: return "residue_mismatch";
    case ErrorCode::operad_mismatch: return "operad_mismatch";
    case ErrorCode::monoid_mismatch: return "monoid_mismatch";
    case ErrorCode::empty_tree: return "empty_tree";
    case ErrorCode::not_monotone: return "not_monotone";
    case ErrorCode::syntax_error: return "syntax_error";
    case ErrorCode::inference_ambiguous: return "inference_ambiguous";
    case ErrorCode::io_error: return "io_error";
  }
  return "unknown_error";
}

}  // namespace optree
