#include "optree/combinat.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>

#include "optree/error.hpp"
#include "optree/operads.hpp"

namespace optree {

namespace {

struct Candidate {
  CanonicalKey key;
  std::size_t nodes;
};

class Enumerator {
 public:
  Enumerator(const OperadPtr& op, std::size_t max_arity,
             std::optional<std::vector<Colour>> window)
      : op_(op), max_arity_(max_arity) {
    if (window) window_ = std::set<Colour>(window->begin(), window->end());
  }

  bool allowed(const Colour& c) const {
    return !window_ || window_->count(c) > 0;
  }

  // Trees with root colour c and exactly m nodes, sorted.
  const std::vector<CanonicalKey>& exactly(const Colour& c, std::size_t m) {
    const auto memo_key = std::make_pair(c, m);
    if (auto it = memo_.find(memo_key); it != memo_.end()) return it->second;
    std::set<CanonicalKey> found;
    if (m == 0) {
      found.insert(trivial_key(c));
    } else {
      for (const auto& b : op_->operations_into(c, max_arity_)) {
        const Profile p = op_->profile(b);
        if (p.arity() > max_arity_) continue;
        if (!std::all_of(p.inputs.begin(), p.inputs.end(),
                         [&](const Colour& x) { return allowed(x); })) {
          continue;
        }
        add_node_trees(b, p, m - 1, found);
      }
    }
    auto& slot = memo_[memo_key];
    slot.assign(found.begin(), found.end());
    return slot;
  }

 private:
  void add_node_trees(const Operation& b, const Profile& p, std::size_t budget,
                      std::set<CanonicalKey>& found) {
    const bool symmetric = !op_->planar();
    std::vector<CanonicalKey> children;
    const bool uniform =
        symmetric && std::all_of(p.inputs.begin(), p.inputs.end(),
                                 [&](const Colour& x) { return x == p.output; });
    if (uniform && p.arity() > 0) {
      // Multisets of children: nondecreasing indices into one candidate list.
      std::vector<Candidate> pool;
      for (std::size_t s = 0; s <= budget; ++s) {
        for (const auto& key : exactly(p.inputs[0], s)) pool.push_back({key, s});
      }
      choose_multiset(b, p, pool, 0, budget, children, found);
      return;
    }
    choose_sequence(b, p, 0, budget, children, found);
  }

  void choose_multiset(const Operation& b, const Profile& p,
                       const std::vector<Candidate>& pool, std::size_t start,
                       std::size_t budget, std::vector<CanonicalKey>& children,
                       std::set<CanonicalKey>& found) {
    if (children.size() == p.arity()) {
      if (budget == 0) {
        found.insert(compose_key(b, p.output, children, !op_->planar()));
      }
      return;
    }
    for (std::size_t i = start; i < pool.size(); ++i) {
      if (pool[i].nodes > budget) continue;
      children.push_back(pool[i].key);
      choose_multiset(b, p, pool, i, budget - pool[i].nodes, children, found);
      children.pop_back();
    }
  }

  void choose_sequence(const Operation& b, const Profile& p, std::size_t slot,
                       std::size_t budget, std::vector<CanonicalKey>& children,
                       std::set<CanonicalKey>& found) {
    if (slot == p.arity()) {
      if (budget == 0) {
        found.insert(compose_key(b, p.output, children, !op_->planar()));
      }
      return;
    }
    for (std::size_t s = 0; s <= budget; ++s) {
      // std::map keeps references stable while recursion inserts.
      const auto& options = exactly(p.inputs[slot], s);
      for (const auto& key : options) {
        children.push_back(key);
        choose_sequence(b, p, slot + 1, budget - s, children, found);
        children.pop_back();
      }
    }
  }

  OperadPtr op_;
  std::size_t max_arity_;
  std::optional<std::set<Colour>> window_;
  std::map<std::pair<Colour, std::size_t>, std::vector<CanonicalKey>> memo_;
};

std::vector<Colour> colour_domain(
    const Operad& op, const std::optional<std::vector<Colour>>& window) {
  if (window) {
    for (const auto& c : *window) {
      if (!op.has_colour(c)) {
        throw Error(ErrorCode::unknown_colour,
                    "window colour '" + c + "' is not a colour of " +
                        op.name());
      }
    }
    return *window;
  }
  auto cs = op.colours();
  if (!cs) {
    throw Error(ErrorCode::bounds_too_large_for_colour_domain,
                op.name() + " has infinitely many colours; give a colour window");
  }
  return *cs;
}

void layerings_from(const Tree& s, const std::vector<NodeId>& order,
                    std::size_t index, std::size_t k, Layering& current,
                    std::vector<Layering>& out) {
  if (index == order.size()) {
    out.push_back(current);
    return;
  }
  const NodeId n = order[index];
  const NodeId below = s.consumer(s.output(n));
  const std::size_t lowest = below == kNoNode ? 1 : current.level[below];
  for (std::size_t lvl = lowest; lvl <= k; ++lvl) {
    current.level[n] = lvl;
    layerings_from(s, order, index + 1, k, current, out);
  }
}

}  // namespace

std::vector<CanonicalKey> enumerate_ptrees_rooted(
    const OperadPtr& op, const Colour& root, std::size_t max_nodes,
    std::size_t max_arity, const std::optional<std::vector<Colour>>& window) {
  Enumerator gen(op, max_arity, window);
  std::vector<CanonicalKey> result;
  if (!gen.allowed(root)) return result;
  for (std::size_t m = 0; m <= max_nodes; ++m) {
    const auto& keys = gen.exactly(root, m);
    result.insert(result.end(), keys.begin(), keys.end());
  }
  std::sort(result.begin(), result.end());
  return result;
}

std::vector<CanonicalKey> enumerate_ptrees(
    const OperadPtr& op, std::size_t max_nodes, std::size_t max_arity,
    const std::optional<std::vector<Colour>>& window) {
  const auto domain = colour_domain(*op, window);
  Enumerator gen(op, max_arity, domain);
  std::vector<CanonicalKey> result;
  for (const auto& c : domain) {
    for (std::size_t m = 0; m <= max_nodes; ++m) {
      const auto& keys = gen.exactly(c, m);
      result.insert(result.end(), keys.begin(), keys.end());
    }
  }
  std::sort(result.begin(), result.end());
  result.erase(std::unique(result.begin(), result.end()), result.end());
  return result;
}

std::vector<Layering> enumerate_layerings(const PTree& t, std::size_t k) {
  std::vector<Layering> out;
  if (k == 0) return out;
  const Tree& s = t.shape();
  Layering current{k, std::vector<std::size_t>(s.node_count(), 0)};
  layerings_from(s, s.preorder(), 0, k, current, out);
  return out;
}

Cut cut_layers(const PTree& t, const Layering& c) {
  const Tree& s = t.shape();
  std::vector<NodeId> bottom;
  for (NodeId n : s.preorder()) {
    if (c.level.at(n) == 1) bottom.push_back(n);
  }
  if (bottom.empty()) {
    return {Forest{canonical_key(t)}, trivial_ptree(t.operad(), t.root_colour())};
  }
  std::vector<CanonicalKey> crown;
  for (NodeId n : bottom) {
    for (EdgeId e : s.inputs(n)) {
      const NodeId p = s.producer(e);
      if (p == kNoNode || c.level[p] != 1) crown.push_back(subtree_key(t, e));
    }
  }
  return {Forest(std::move(crown)), induced_subtree(t, bottom)};
}

std::vector<Blobbing> enumerate_blobbings(const PTree& t) {
  if (t.is_trivial()) {
    throw Error(ErrorCode::trivial_tree_has_no_blobbing,
                "the trivial tree has no nodes to blob");
  }
  const Tree& s = t.shape();
  const auto inner = s.inner_edges();
  if (inner.size() >= 8 * sizeof(std::size_t) - 1) {
    throw Error(ErrorCode::bounds_too_large_for_colour_domain,
                "too many inner edges to enumerate blobbings");
  }
  std::vector<Blobbing> out;
  const std::size_t count = std::size_t{1} << inner.size();
  out.reserve(count);
  for (std::size_t mask = 0; mask < count; ++mask) {
    Blobbing b{std::vector<bool>(s.edge_count(), false)};
    for (std::size_t i = 0; i < inner.size(); ++i) {
      if (mask & (std::size_t{1} << i)) b.inside[inner[i]] = true;
    }
    out.push_back(std::move(b));
  }
  return out;
}

std::vector<std::vector<NodeId>> blobs(const PTree& t, const Blobbing& b) {
  const Tree& s = t.shape();
  std::vector<std::vector<NodeId>> groups;
  std::vector<std::size_t> group_of(s.node_count(), 0);
  for (NodeId n : s.preorder()) {
    const EdgeId out = s.output(n);
    if (b.inside.at(out)) {
      const std::size_t g = group_of[s.consumer(out)];
      group_of[n] = g;
      groups[g].push_back(n);
    } else {
      group_of[n] = groups.size();
      groups.push_back({n});
    }
  }
  return groups;
}

Forest blob_contents(const PTree& t, const Blobbing& b) {
  std::vector<CanonicalKey> keys;
  for (const auto& group : blobs(t, b)) {
    keys.push_back(canonical_key(induced_subtree(t, group)));
  }
  return Forest(std::move(keys));
}

namespace {

// Contracted tree of a blobbing whose blob residues are already known.
PTree contract_groups(const PTree& t, const Blobbing& b,
                      const std::vector<std::vector<NodeId>>& groups,
                      std::vector<Operation> labels) {
  const Tree& s = t.shape();
  std::vector<EdgeId> new_id(s.edge_count(), kNoNode);
  std::vector<Colour> colours;
  for (EdgeId e = 0; e < s.edge_count(); ++e) {
    if (b.inside.at(e)) continue;
    new_id[e] = static_cast<EdgeId>(colours.size());
    colours.push_back(t.colour(e));
  }

  RawTree raw;
  raw.edge_count = colours.size();
  raw.root = new_id[s.root()];
  for (const auto& group : groups) {
    const NodeId top = group.front();
    RawTree::Node node{new_id[s.output(top)], {}};
    // Boundary inputs in traversal order of the blob.
    std::vector<EdgeId> stack;
    const auto top_ins = s.inputs(top);
    for (auto it = top_ins.rbegin(); it != top_ins.rend(); ++it) {
      stack.push_back(*it);
    }
    while (!stack.empty()) {
      const EdgeId e = stack.back();
      stack.pop_back();
      if (!b.inside[e]) {
        node.inputs.push_back(new_id[e]);
        continue;
      }
      const auto ins = s.inputs(s.producer(e));
      for (auto it = ins.rbegin(); it != ins.rend(); ++it) stack.push_back(*it);
    }
    raw.nodes.push_back(std::move(node));
  }
  return decorate(validate_tree(raw), std::move(labels), std::move(colours),
                  t.operad());
}

}  // namespace

PTree contract_blobbing(const Operad& op, const PTree& t, const Blobbing& b) {
  const auto groups = blobs(t, b);
  std::vector<Operation> labels;
  for (const auto& group : groups) {
    labels.push_back(residue(op, induced_subtree(t, group)));
  }
  return contract_groups(t, b, groups, std::move(labels));
}

std::vector<BlobTerm> blob_terms(const Operad& op, const PTree& t) {
  struct Blob {
    CanonicalKey key;
    Operation residue;
  };
  std::map<std::vector<NodeId>, Blob> cache;
  std::vector<BlobTerm> out;
  for (const auto& b : enumerate_blobbings(t)) {
    const auto groups = blobs(t, b);
    std::vector<CanonicalKey> keys;
    std::vector<Operation> labels;
    for (const auto& group : groups) {
      auto it = cache.find(group);
      if (it == cache.end()) {
        const PTree sub = induced_subtree(t, group);
        it = cache.emplace(group, Blob{canonical_key(sub), residue(op, sub)}).first;
      }
      keys.push_back(it->second.key);
      labels.push_back(it->second.residue);
    }
    out.push_back({Forest(std::move(keys)),
                   canonical_key(contract_groups(t, b, groups, std::move(labels)))});
  }
  return out;
}

PTree glue(const Operad& op, const PTree& skeleton,
           const std::vector<PTree>& refinement) {
  const Tree& s = skeleton.shape();
  if (refinement.size() != s.node_count()) {
    throw Error(ErrorCode::residue_mismatch,
                "expected one refinement per skeleton node");
  }
  for (NodeId n = 0; n < s.node_count(); ++n) {
    Operation r;
    try {
      r = residue(op, refinement[n]);
    } catch (const Error& e) {
      throw Error(ErrorCode::residue_mismatch,
                  "refinement of node " + std::to_string(n) +
                      " has no residue: " + e.what());
    }
    if (r != skeleton.label(n)) {
      throw Error(ErrorCode::residue_mismatch,
                  "refinement of node " + std::to_string(n) + " has residue '" +
                      op.display_operation(r) + "', expected '" +
                      op.display_operation(skeleton.label(n)) + "'");
    }
  }
  return substitute_nodes(skeleton, refinement);
}

}  // namespace optree
