#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "optree/operad.hpp"
#include "optree/ptree.hpp"

namespace optree {

/// Linear tree of a word, read from the leaf down to the root.
///
/// Over a poset operad the letters colour the edges and the nodes carry the
/// relations between consecutive letters; a single letter gives the trivial
/// tree of that colour. Throws not_monotone when consecutive letters are
/// unrelated. Over a monoid operad the letters label the nodes; the empty
/// word gives the trivial tree. Other operads: unsupported_nesting.
PTree word_to_tree(std::span<const std::string> letters, const OperadPtr& op);

/// Inverse of word_to_tree for linear trees over monoid and poset operads.
std::optional<std::vector<std::string>> tree_to_word(const PTree& t);

}  // namespace optree
