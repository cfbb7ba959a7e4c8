#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace optree {

enum class ErrorCode {
  axiom1_violation,  // output map not injective
  axiom2_violation,  // non-root edge consumed zero or several times
  axiom3_violation,  // walk to root does not terminate
  bad_reference,     // identifier out of range
  arity_mismatch,
  colour_mismatch,
  unknown_operation,
  unknown_colour,
  malformed_table,
  unsupported_nesting,
  bounds_too_large_for_colour_domain,
  trivial_tree_has_no_blobbing,
  trivial_tree_in_blobs_basis,
  residue_mismatch,
  operad_mismatch,
  monoid_mismatch,
  empty_tree,
  not_monotone,
  syntax_error,
  inference_ambiguous,
  io_error,
};

std::string_view to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message),
        code_(code),
        message_(message) {}

  ErrorCode code() const noexcept { return code_; }
  /// The message without the error-code prefix.
  const std::string& message() const noexcept { return message_; }

 private:
  ErrorCode code_;
  std::string message_;
};

/// Parse failure with the byte offset into the source text.
class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t offset, const std::string& detail)
      : Error(ErrorCode::syntax_error,
              "at offset " + std::to_string(offset) + ": " + detail),
        offset_(offset),
        detail_(detail) {}

  std::size_t offset() const noexcept { return offset_; }
  /// The message without the offset.
  const std::string& detail() const noexcept { return detail_; }

 private:
  std::size_t offset_;
  std::string detail_;
};

}  // namespace optree
