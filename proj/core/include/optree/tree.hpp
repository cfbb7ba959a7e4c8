#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <vector>

namespace optree {

using EdgeId = std::uint32_t;
using NodeId = std::uint32_t;

inline constexpr NodeId kNoNode = std::numeric_limits<NodeId>::max();

/// Unvalidated tree data. Edges are 0..edge_count-1, nodes are the indices
/// of `nodes`.
struct RawTree {
  struct Node {
    EdgeId output;
    std::vector<EdgeId> inputs;
  };

  std::size_t edge_count = 1;
  EdgeId root = 0;
  std::vector<Node> nodes;
};

/// A finite rooted tree with open leaf and root edges, in the polynomial
/// presentation: each node has one output edge and an ordered list of input
/// edges. Instances only exist in valid form; construct through
/// validate_tree().
class Tree {
 public:
  /// The nodeless tree: one edge, which is both root and leaf.
  Tree();

  std::size_t edge_count() const noexcept { return producer_.size(); }
  std::size_t node_count() const noexcept { return output_.size(); }
  EdgeId root() const noexcept { return root_; }
  bool is_trivial() const noexcept { return output_.empty(); }

  EdgeId output(NodeId n) const { return output_.at(n); }
  std::span<const EdgeId> inputs(NodeId n) const { return inputs_.at(n); }
  std::size_t arity(NodeId n) const { return inputs_.at(n).size(); }

  /// Node whose output is `e`, or kNoNode when `e` is a leaf.
  NodeId producer(EdgeId e) const { return producer_.at(e); }
  /// Node having `e` among its inputs, or kNoNode when `e` is the root.
  NodeId consumer(EdgeId e) const { return consumer_.at(e); }

  bool is_leaf(EdgeId e) const { return producer(e) == kNoNode; }
  /// Neither root nor leaf.
  bool is_inner(EdgeId e) const { return e != root_ && !is_leaf(e); }

  /// The walk-to-root map: an edge goes to the output of the node consuming
  /// it; the root is fixed.
  EdgeId sigma(EdgeId e) const;

  /// Node at the bottom of the tree, or kNoNode for the trivial tree.
  NodeId root_node() const { return producer(root_); }

  /// Number of sigma steps from `e` to the root.
  std::size_t height(EdgeId e) const;

  /// Node depth: the root node has depth 0.
  std::size_t depth(NodeId n) const { return height(output(n)); }

  /// Nodes in preorder: a node precedes the nodes above it, and the subtrees
  /// hanging off one node appear in input order.
  std::vector<NodeId> preorder() const;

  /// Inner edges in increasing id order.
  std::vector<EdgeId> inner_edges() const;

  /// True iff every leaf has height exactly n and every edge height is at
  /// most n.
  bool is_n_level(std::size_t n) const;

 private:
  friend Tree validate_tree(const RawTree& raw);

  EdgeId root_ = 0;
  std::vector<EdgeId> output_;
  std::vector<std::vector<EdgeId>> inputs_;
  std::vector<NodeId> producer_;
  std::vector<NodeId> consumer_;
};

/// Checks the three tree axioms and returns the validated tree. Throws
/// Error with axiom1_violation, axiom2_violation, axiom3_violation or
/// bad_reference.
Tree validate_tree(const RawTree& raw);

/// Leaf edges in traversal order (depth first from the root, inputs left to
/// right).
std::vector<EdgeId> leaves(const Tree& t);

/// Tree with a single node of the given arity.
Tree corolla_shape(std::size_t arity);

/// Linear tree with n unary nodes; node 0 is at the root.
Tree linear_shape(std::size_t n);

}  // namespace optree
