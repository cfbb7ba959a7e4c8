#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "optree/lincomb.hpp"
#include "optree/operad.hpp"
#include "optree/ptree.hpp"

namespace optree {

/// A k-layering: a level in 1..k for every node, non-increasing along each
/// path towards the root. Level 1 is the root layer. Equivalent to an active
/// map from a k-level tree.
struct Layering {
  std::size_t k = 1;
  std::vector<std::size_t> level;  // indexed by NodeId

  friend bool operator==(const Layering&, const Layering&) = default;
};

/// A reduced cover: the set of inner edges lying inside blobs. Blobs are
/// the connected node groups under these edges; every blob has a node.
struct Blobbing {
  std::vector<bool> inside;  // indexed by EdgeId; only inner edges may be set

  friend bool operator==(const Blobbing&, const Blobbing&) = default;
};

/// Iso-classes of P-trees with at most `max_nodes` nodes and node arities at
/// most `max_arity`, including one trivial tree per colour, sorted by key.
/// Colours are restricted to `window` when given; an operad with infinitely
/// many colours requires a window (bounds_too_large_for_colour_domain).
std::vector<CanonicalKey> enumerate_ptrees(
    const OperadPtr& op, std::size_t max_nodes, std::size_t max_arity,
    const std::optional<std::vector<Colour>>& window = std::nullopt);

/// Same, restricted to trees with root colour `root`.
std::vector<CanonicalKey> enumerate_ptrees_rooted(
    const OperadPtr& op, const Colour& root, std::size_t max_nodes,
    std::size_t max_arity,
    const std::optional<std::vector<Colour>>& window = std::nullopt);

/// All k-layerings of `t`; the trivial tree has exactly one.
std::vector<Layering> enumerate_layerings(const PTree& t, std::size_t k);

struct Cut {
  Forest crown;  // one tree per edge crossing the cut
  PTree trunk;   // the level-1 nodes; trivial of root colour if none
};

/// Splits a 2-layering into crown forest and trunk.
Cut cut_layers(const PTree& t, const Layering& c);

/// All 2^(#inner edges) reduced covers. Throws trivial_tree_has_no_blobbing
/// for the trivial tree.
std::vector<Blobbing> enumerate_blobbings(const PTree& t);

/// Node groups of a blobbing, each listed in preorder of `t`; groups are
/// ordered by their first node in preorder.
std::vector<std::vector<NodeId>> blobs(const PTree& t, const Blobbing& b);

/// Forest of the subtrees spanned by the blobs.
Forest blob_contents(const PTree& t, const Blobbing& b);

/// One node per blob, decorated by the residue of the blob's subtree; edges
/// outside blobs are kept.
PTree contract_blobbing(const Operad& op, const PTree& t, const Blobbing& b);

struct BlobTerm {
  Forest contents;
  CanonicalKey contracted;
};

/// (blob_contents, key of contract_blobbing) for every blobbing, computing
/// each distinct blob once.
std::vector<BlobTerm> blob_terms(const Operad& op, const PTree& t);

/// Replaces each skeleton node by its refinement. Throws residue_mismatch
/// unless residue(refinement[n]) is the label of node n.
PTree glue(const Operad& op, const PTree& skeleton,
           const std::vector<PTree>& refinement);

}  // namespace optree
