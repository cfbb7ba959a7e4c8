#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>

#include "optree/lincomb.hpp"
#include "optree/operad.hpp"

namespace optree {

enum class Format { text, json };

std::optional<Format> parse_format(std::string_view text);

/// Renders one tree key.
using KeyPrinter = std::function<std::string(const CanonicalKey&)>;

/// Printer for keys of `op`-trees.
KeyPrinter tree_printer(const OperadPtr& op);

/// Text: one line "coeff · F1 ⊗ F2" per term in basis order (forests as in
/// print_forest), or "0". JSON:
///   {"basis":"tensor2","terms":[{"coeff":{"num":"..","den":".."},
///    "factors":[[tree,...],[tree,...]]}]}
/// with basis "forest" / "tensor2" / "tensor3" and one factor list per
/// tensor position.
std::string serialize_lincomb(const LinComb<Forest>& x, const KeyPrinter& p,
                              Format format);
std::string serialize_lincomb(const LinComb<Tensor2>& x, const KeyPrinter& p,
                              Format format);
std::string serialize_lincomb(const LinComb<Tensor3>& x, const KeyPrinter& p,
                              Format format);

/// Inverse of the JSON form for tensor2 combinations of `op`-trees.
LinComb<Tensor2> parse_tensor2_json(std::string_view text, const OperadPtr& op);

}  // namespace optree
