#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "optree/operad.hpp"
#include "optree/ptree.hpp"

namespace optree {

/// A finite monoid given by its multiplication table; row i, column j holds
/// the index of elements[i] * elements[j].
struct FiniteMonoid {
  std::vector<std::string> elements;
  std::vector<std::vector<std::size_t>> table;

  std::size_t multiply(std::size_t a, std::size_t b) const {
    return table[a][b];
  }
  std::size_t identity() const;
  std::size_t index_of(const std::string& name) const;
};

/// Throws malformed_table unless the table is square, in range, associative
/// and has a two-sided identity.
FiniteMonoid make_monoid(std::vector<std::string> elements,
                         std::vector<std::vector<std::size_t>> table);

/// Cyclic group Z/n with elements "0".."n-1".
FiniteMonoid cyclic_monoid(std::size_t n);

/// A finite poset. `le` lists pairs (a, b) with a <= b; the diagonal is
/// added if missing. Throws malformed_table when the relation is not
/// transitive or not antisymmetric.
struct FinitePoset {
  std::vector<std::string> elements;
  std::vector<std::vector<bool>> le;

  std::size_t index_of(const std::string& name) const;
};

FinitePoset make_poset(std::vector<std::string> elements,
                       const std::vector<std::pair<std::string, std::string>>& le);

/// Generators of a free operad.
struct Signature {
  struct Generator {
    std::string name;
    Colour output;
    std::vector<Colour> inputs;
  };
  std::vector<Colour> colours;
  std::vector<Generator> generators;
};

/// One colour, one unary operation.
OperadPtr identity_operad();
/// One colour, one planar operation of every arity.
OperadPtr free_monoid_operad();
/// One colour, one symmetric operation of every arity; the reduced variant
/// has no nullary operation.
OperadPtr terminal_operad(bool reduced = false);
/// One colour; the unary operations are the monoid elements and composing b
/// after a gives a*b, so a linear tree folds to the product of its node
/// labels read from the leaf down to the root.
OperadPtr monoid_operad(FiniteMonoid m);
/// Colours are the elements; a unary operation "a<=b" for each a <= b.
OperadPtr poset_operad(FinitePoset p);
/// The linear order of natural numbers, as an operad with infinitely many
/// colours.
OperadPtr naturals_poset_operad();
/// Operations are planar trees of generators, composed by grafting. Throws
/// malformed_table for unknown colours or duplicate generator names.
OperadPtr free_operad(Signature sig);
/// Baez-Dolan construction: colours are the operations of `inner`,
/// operations are `inner`-trees (inputs = node labels in preorder, output =
/// residue), composition substitutes trees into nodes.
OperadPtr bd_operad(OperadPtr inner);

/// If `op` is a Baez-Dolan construction, its inner operad.
OperadPtr bd_inner(const Operad& op);
/// If `op` is a monoid operad, its monoid.
const FiniteMonoid* operad_monoid(const Operad& op);

/// Fold of the operad composition over the tree; the trivial tree of colour
/// c gives unit(c).
Operation residue(const PTree& t);
Operation residue(const Operad& op, const PTree& t);

/// Replaces every node of `skeleton` by the matching refinement tree: its
/// root edge becomes the node's output and its leaves, in traversal order,
/// the node's inputs. A trivial refinement is allowed on a unary node and
/// erases it. Residues are not checked here.
PTree substitute_nodes(const PTree& skeleton,
                       const std::vector<PTree>& refinements);

}  // namespace optree
