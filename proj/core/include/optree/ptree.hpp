#pragma once

#include <compare>
#include <span>
#include <string>
#include <vector>

#include "optree/operad.hpp"
#include "optree/rational.hpp"
#include "optree/tree.hpp"

namespace optree {

/// Iso-class token of a P-tree. Equal keys iff isomorphic trees over the same
/// operad (children sorted for non-planar operads, ordered otherwise).
struct CanonicalKey {
  std::string text;

  friend auto operator<=>(const CanonicalKey&, const CanonicalKey&) = default;
  friend bool operator==(const CanonicalKey&, const CanonicalKey&) = default;
};

/// A tree whose nodes carry operations and whose edges carry colours,
/// compatibly with the operad's profiles.
class PTree {
 public:
  const Tree& shape() const noexcept { return tree_; }
  const OperadPtr& operad() const noexcept { return operad_; }

  const Operation& label(NodeId n) const { return labels_.at(n); }
  const Colour& colour(EdgeId e) const { return colours_.at(e); }
  std::span<const Operation> labels() const noexcept { return labels_; }
  std::span<const Colour> colours() const noexcept { return colours_; }

  std::size_t node_count() const noexcept { return tree_.node_count(); }
  bool is_trivial() const noexcept { return tree_.is_trivial(); }
  const Colour& root_colour() const { return colours_.at(tree_.root()); }

 private:
  friend PTree decorate(Tree t, std::vector<Operation> node_dec,
                        std::vector<Colour> edge_dec, OperadPtr op);

  Tree tree_;
  OperadPtr operad_;
  std::vector<Operation> labels_;
  std::vector<Colour> colours_;
};

/// Attaches decorations, checking arity and colour compatibility for every
/// node. Throws arity_mismatch, colour_mismatch or unknown_operation.
PTree decorate(Tree t, std::vector<Operation> node_dec,
               std::vector<Colour> edge_dec, OperadPtr op);

PTree trivial_ptree(OperadPtr op, const Colour& c);
PTree corolla(OperadPtr op, const Operation& b);

CanonicalKey canonical_key(const PTree& t);

/// Key of the full subtree above edge `e` (a trivial tree when `e` is a
/// leaf).
CanonicalKey subtree_key(const PTree& t, EdgeId e);

/// Key of the trivial tree of colour `c`.
CanonicalKey trivial_key(const Colour& c);

/// Key of a tree whose root node carries `label` with output colour `out`
/// and whose input subtrees have the given keys.
CanonicalKey compose_key(const Operation& label, const Colour& out,
                         std::span<const CanonicalKey> children,
                         bool sort_children);

/// Rebuilds the canonical representative of a key: node 0 is the root node,
/// nodes are numbered in preorder and edges in order of first appearance.
PTree from_key(OperadPtr op, const CanonicalKey& key);

/// Number of nodes encoded in a key, without decoding it.
std::size_t key_node_count(const CanonicalKey& key);

/// Order of the automorphism group: product over nodes of the factorials of
/// the multiplicities of isomorphic child branches. Always 1 when planar.
Natural aut_order(const PTree& t);

/// Subtree spanned by a connected set of nodes, with all their incident
/// edges. Nodes of the result follow the preorder of `t`.
PTree induced_subtree(const PTree& t, std::span<const NodeId> nodes);

/// Full subtree above `e`.
PTree subtree_above(const PTree& t, EdgeId e);

/// Nodes at or above the node producing `e` (empty when `e` is a leaf).
std::vector<NodeId> nodes_above(const Tree& t, EdgeId e);

}  // namespace optree
