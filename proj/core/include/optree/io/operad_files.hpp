#pragma once

#include <string>
#include <string_view>

#include "optree/operad.hpp"
#include "optree/operads.hpp"

namespace optree {

/// Monoid file: {"elements":[...], "table":[[...]]}, entries of the table
/// being element names; row i, column j holds elements[i] * elements[j].
FiniteMonoid parse_monoid_json(std::string_view text);
/// Poset file: {"elements":[...], "le":[[a,b],...]}.
FinitePoset parse_poset_json(std::string_view text);
/// Signature file: {"colours":[...], "ops":[{"name":..,"out":..,"in":[..]}]}.
Signature parse_signature_json(std::string_view text);

/// Reads a monoid file, or a built-in cyclic group "zN" or "zN.json"
/// (N >= 1) when no file of that name exists.
FiniteMonoid load_monoid(const std::string& path);

/// Builds an operad from a descriptor:
///   id | identity | freemonoid | terminal | terminal-reduced
///   monoid:FILE | poset:FILE | poset:nat | free:FILE | bd:SPEC | bd(SPEC)
/// Throws Error(unsupported_nesting) for unknown descriptors, io_error for
/// unreadable files and malformed_table for unlawful tables.
OperadPtr make_operad(std::string_view descriptor);

}  // namespace optree
