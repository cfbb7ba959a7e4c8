#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "optree/lincomb.hpp"
#include "optree/operad.hpp"
#include "optree/ptree.hpp"

namespace optree {

/// Tree expressions:
///
///   tree  := '|' [':' colour] | node | 'word:' letters
///   node  := [label] '(' child* ')' [':' colour]
///   child := '*' [':' colour] | node
///
/// Children are separated by whitespace. A label or colour is either a run
/// of characters other than whitespace and ( ) [ ] * : ; | , or a bracketed
/// group [ ... ] (used for operations of Baez-Dolan and free operads). The
/// colour "*" of single-coloured operads may be written after ':' as well.
/// Missing labels are inferred when exactly one operation fits; missing
/// colours are taken from the operation profiles or the sole colour.
///
/// `word:` letters are single characters, or comma separated when any
/// letter is longer. Over a poset the letters colour the edges from the leaf
/// down to the root; over a monoid they label the nodes from the leaf down.
///
/// Throws SyntaxError with the byte offset, Error(inference_ambiguous), or
/// the decoration errors of decorate().
PTree parse_tree(std::string_view text, const OperadPtr& op);

/// Trees separated by ';'. "1" or blank text is the empty forest.
std::vector<PTree> parse_forest(std::string_view text, const OperadPtr& op);
Forest parse_forest_keys(std::string_view text, const OperadPtr& op);

/// Canonical text: children in canonical order, labels and colours only
/// where they cannot be inferred. Linear trees over monoids and posets use
/// the word form.
std::string print_tree(const PTree& t);
std::string print_key(const OperadPtr& op, const CanonicalKey& key);

/// Trees joined by "; ", or "1" for the empty forest.
std::string print_forest(const OperadPtr& op, const Forest& f);

}  // namespace optree
