#include "optree/tree.hpp"

#include <string>

#include "optree/error.hpp"

namespace optree {

Tree::Tree() : root_(0), producer_{kNoNode}, consumer_{kNoNode} {}

EdgeId Tree::sigma(EdgeId e) const {
  const NodeId c = consumer(e);
  return c == kNoNode ? root_ : output_[c];
}

std::size_t Tree::height(EdgeId e) const {
  std::size_t h = 0;
  while (e != root_) {
    e = sigma(e);
    ++h;
  }
  return h;
}

std::vector<NodeId> Tree::preorder() const {
  std::vector<NodeId> order;
  order.reserve(node_count());
  if (is_trivial()) return order;
  std::vector<NodeId> stack{root_node()};
  while (!stack.empty()) {
    const NodeId n = stack.back();
    stack.pop_back();
    order.push_back(n);
    const auto& ins = inputs_[n];
    for (auto it = ins.rbegin(); it != ins.rend(); ++it) {
      if (const NodeId p = producer_[*it]; p != kNoNode) stack.push_back(p);
    }
  }
  return order;
}

std::vector<EdgeId> Tree::inner_edges() const {
  std::vector<EdgeId> result;
  for (EdgeId e = 0; e < edge_count(); ++e) {
    if (is_inner(e)) result.push_back(e);
  }
  return result;
}

bool Tree::is_n_level(std::size_t n) const {
  for (EdgeId e = 0; e < edge_count(); ++e) {
    const std::size_t h = height(e);
    if (h > n) return false;
    if (is_leaf(e) && h != n) return false;
  }
  return true;
}

Tree validate_tree(const RawTree& raw) {
  const std::size_t edge_count = raw.edge_count;
  if (edge_count == 0 || raw.root >= edge_count) {
    throw Error(ErrorCode::bad_reference, "root edge out of range");
  }
  Tree t;
  t.root_ = raw.root;
  t.producer_.assign(edge_count, kNoNode);
  t.consumer_.assign(edge_count, kNoNode);
  t.output_.reserve(raw.nodes.size());
  t.inputs_.reserve(raw.nodes.size());

  for (NodeId n = 0; n < raw.nodes.size(); ++n) {
    const auto& node = raw.nodes[n];
    if (node.output >= edge_count) {
      throw Error(ErrorCode::bad_reference, "output edge out of range");
    }
    if (t.producer_[node.output] != kNoNode) {
      throw Error(ErrorCode::axiom1_violation,
                  "edge " + std::to_string(node.output) +
                      " is the output of two nodes");
    }
    t.producer_[node.output] = n;
    for (EdgeId e : node.inputs) {
      if (e >= edge_count) {
        throw Error(ErrorCode::bad_reference, "input edge out of range");
      }
      if (t.consumer_[e] != kNoNode) {
        throw Error(ErrorCode::axiom2_violation,
                    "edge " + std::to_string(e) + " is consumed twice");
      }
      t.consumer_[e] = n;
    }
    t.output_.push_back(node.output);
    t.inputs_.push_back(node.inputs);
  }

  for (EdgeId e = 0; e < edge_count; ++e) {
    const bool consumed = t.consumer_[e] != kNoNode;
    if (e == t.root_ && consumed) {
      throw Error(ErrorCode::axiom2_violation, "root edge is consumed");
    }
    if (e != t.root_ && !consumed) {
      throw Error(ErrorCode::axiom2_violation,
                  "edge " + std::to_string(e) + " is never consumed");
    }
  }

  // Every edge must reach the root within edge_count sigma steps.
  for (EdgeId e = 0; e < edge_count; ++e) {
    EdgeId cur = e;
    std::size_t steps = 0;
    while (cur != t.root_) {
      cur = t.sigma(cur);
      if (++steps > edge_count) {
        throw Error(ErrorCode::axiom3_violation,
                    "edge " + std::to_string(e) + " does not reach the root");
      }
    }
  }
  return t;
}

std::vector<EdgeId> leaves(const Tree& t) {
  std::vector<EdgeId> result;
  std::vector<EdgeId> stack{t.root()};
  while (!stack.empty()) {
    const EdgeId e = stack.back();
    stack.pop_back();
    const NodeId p = t.producer(e);
    if (p == kNoNode) {
      result.push_back(e);
      continue;
    }
    const auto ins = t.inputs(p);
    for (auto it = ins.rbegin(); it != ins.rend(); ++it) stack.push_back(*it);
  }
  return result;
}

Tree corolla_shape(std::size_t arity) {
  RawTree raw;
  raw.edge_count = arity + 1;
  raw.root = 0;
  RawTree::Node node{0, {}};
  for (std::size_t i = 1; i <= arity; ++i) {
    node.inputs.push_back(static_cast<EdgeId>(i));
  }
  raw.nodes.push_back(std::move(node));
  return validate_tree(raw);
}

Tree linear_shape(std::size_t n) {
  RawTree raw;
  raw.edge_count = n + 1;
  raw.root = 0;
  for (std::size_t i = 0; i < n; ++i) {
    raw.nodes.push_back(
        {static_cast<EdgeId>(i), {static_cast<EdgeId>(i + 1)}});
  }
  return validate_tree(raw);
}

}  // namespace optree
