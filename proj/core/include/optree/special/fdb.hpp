#pragma once

#include <cstddef>
#include <optional>
#include <string_view>

#include "optree/lincomb.hpp"

namespace optree {

/// mult: the closed form of the cut comultiplication on linear trees,
/// sum over i + j = n of l_i (x) l_j. subst: the substitution form, a sum
/// over compositions (c_1, ..., c_k) of n of l_c1 ... l_ck (x) l_k.
enum class FdbKind { mult, subst };

std::string_view to_string(FdbKind kind) noexcept;
std::optional<FdbKind> parse_fdb_kind(std::string_view text);

/// Key of the linear tree with n nodes over the identity operad.
CanonicalKey linear_key(std::size_t n);

/// Closed-form right-hand side. subst requires n >= 1 (throws
/// trivial_tree_in_blobs_basis otherwise).
LinComb<Tensor2> fdb_reference(FdbKind kind, std::size_t n);

}  // namespace optree
