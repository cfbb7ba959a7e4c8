#pragma once

// Independent reference implementations used to cross-check the engine.
// They are deliberately naive: exhaustive search over functions, subsets
// and bijections, with their own tree encodings.

#include <cstddef>
#include <set>
#include <string>
#include <vector>

#include "optree/lincomb.hpp"
#include "optree/operads.hpp"
#include "optree/ptree.hpp"
#include "optree/special/comb.hpp"
#include "optree/special/mould.hpp"

namespace oracle {

using optree::LinComb;
using optree::Natural;
using optree::PTree;
using optree::Rational;
using optree::Tensor2;

/// A naked tree: children per node (node 0 is the root) and the number of
/// leaf edges per node. `trivial` is the nodeless tree.
struct Naked {
  bool trivial = false;
  std::vector<std::vector<std::size_t>> children;
  std::vector<std::size_t> leaves;
};

Naked from_ptree(const PTree& t);

/// Own canonical code: "|" for the trivial tree, otherwise nested brackets
/// with "*" for leaves, children sorted.
std::string code(const Naked& t);

/// Every naked tree with at most max_nodes nodes and arities at most
/// max_arity (at least 1 when reduced), built from all parent arrays and
/// leaf counts, deduplicated by code().
std::set<std::string> naked_trees(std::size_t max_nodes, std::size_t max_arity,
                                  bool reduced);

/// Number of automorphisms, by trying every bijection of the inputs at
/// every node and comparing labels and colours.
Natural automorphisms(const PTree& t);

/// Number of functions nodes -> {1..k} that never increase towards the
/// root, by listing all k^n functions.
std::size_t layerings(const PTree& t, std::size_t k);

/// Cut comultiplication from down-closed node subsets.
LinComb<Tensor2> cuts(const PTree& t);

/// Number of partitions of the nodes into connected blocks, by listing all
/// set partitions.
std::size_t connected_partitions(const PTree& t);

/// Comb trees as parent arrays; keys in the library format, computed here
/// independently.
std::string comb_code(const std::vector<std::size_t>& parent);

/// BCK from admissible edge cuts (no two cut edges on one root path).
LinComb<Tensor2> bck(const std::vector<std::size_t>& parent);

/// CEM from set partitions of the nodes into connected blocks.
LinComb<Tensor2> cem(const std::vector<std::size_t>& parent);

/// Mould product and composition straight from the defining sums, with
/// block decompositions listed as bitmasks of cut positions.
Rational mould_product(const optree::Mould& m, const optree::Mould& n,
                       const optree::Word& w);
Rational mould_compose(const optree::Mould& m, const optree::Mould& n,
                       const optree::Word& w);

/// n!
Natural factorial(std::size_t n);

/// Sum over i + j = n of l_i (x) l_j and the composition sum, on identity
/// keys.
LinComb<Tensor2> fdb_mult(std::size_t n);
LinComb<Tensor2> fdb_subst(std::size_t n);

}  // namespace oracle
