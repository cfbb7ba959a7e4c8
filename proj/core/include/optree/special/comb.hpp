#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "optree/hopf.hpp"
#include "optree/lincomb.hpp"
#include "optree/ptree.hpp"

namespace optree {

/// A rooted tree made of nodes only, without leaf or root edges or
/// decorations. The empty comb tree is allowed.
class CombTree {
 public:
  static constexpr std::size_t kNone = static_cast<std::size_t>(-1);

  CombTree() = default;
  /// parent[i] is the parent of node i, or kNone for the root. Throws
  /// bad_reference for out-of-range parents and axiom3_violation for
  /// cycles or several roots.
  explicit CombTree(std::vector<std::size_t> parent);

  std::size_t size() const noexcept { return parent_.size(); }
  bool empty() const noexcept { return parent_.empty(); }
  std::size_t root() const noexcept { return root_; }
  std::size_t parent(std::size_t i) const { return parent_.at(i); }
  const std::vector<std::size_t>& children(std::size_t i) const {
    return children_.at(i);
  }
  std::size_t edge_count() const noexcept { return empty() ? 0 : size() - 1; }

 private:
  std::vector<std::size_t> parent_;
  std::vector<std::vector<std::size_t>> children_;
  std::size_t root_ = kNone;
};

/// "(" + sorted child keys + ")"; the empty tree has the empty key. The key
/// is also the printed form: the cherry is "(()())".
CanonicalKey comb_key(const CombTree& t);
/// Parses the printed form; "", "1" and "|" give the empty tree.
CombTree parse_comb(std::string_view text);
/// Number of nodes encoded in a comb key.
std::size_t comb_key_size(const CanonicalKey& key);

/// Printer for comb keys, "1" for the empty tree.
std::string print_comb_key(const CanonicalKey& key);

/// Forgets decorations and shaves off the leaf and root edges. The trivial
/// tree goes to the empty comb tree.
CombTree core(const PTree& t);

/// Comb forest of a forest of comb keys: empty trees are dropped, being the
/// unit.
Forest comb_forest(std::vector<CanonicalKey> keys);

/// Butcher-Connes-Kreimer: sum over admissible cuts of pruned forest (x)
/// rooted trunk, including T (x) 1 and 1 (x) T. The empty tree gives
/// 1 (x) 1.
LinComb<Tensor2> bck_delta(const CombTree& t);

/// Calaque-Ebrahimi-Fard-Manchon: sum over subsets of edges of the forest of
/// connected blocks (x) the tree with each block contracted to a node.
/// Throws empty_tree.
LinComb<Tensor2> cem_delta(const CombTree& t);

/// Every comb tree with 1..max_nodes nodes, sorted by key.
std::vector<CanonicalKey> enumerate_comb_trees(std::size_t max_nodes);

struct CombReport {
  std::size_t checked = 0;
  bool passed = true;
  std::string check;  // name of the failing identity
  std::optional<Witness> witness;
};

using CoreMap = std::function<CombTree(const PTree&)>;

/// For every terminal-operad tree within the bounds: (core (x) core) of the
/// cut comultiplication is bck_delta of the core, and (core (x) core) of the
/// blob comultiplication is cem_delta of the core (nontrivial trees). The
/// core map can be replaced to test the check itself.
CombReport check_core_homomorphism(std::size_t max_nodes,
                                   std::size_t max_arity = 3,
                                   const CoreMap& core_map = nullptr);

/// On comb trees with at most max_nodes nodes: coassociativity and counit of
/// bck_delta and cem_delta, coassociativity and counit of the CEM coaction on
/// BCK, and both comodule-bialgebra diagrams.
CombReport check_comb_comodule_bialgebra(std::size_t max_nodes);

}  // namespace optree
