#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "optree/lincomb.hpp"
#include "optree/operad.hpp"
#include "optree/ptree.hpp"

namespace optree {

/// cuts: the grafting-dual comultiplication (sum over 2-layerings, crown
/// tensor trunk). blobs: the substitution-dual one on nontrivial trees (sum
/// over reduced covers, blob forest tensor contracted tree). coaction: the
/// blobs formula extended to all trees, with the trivial tree going to
/// 1 tensor itself.
enum class CoalgebraKind { cuts, blobs, coaction };

std::string_view to_string(CoalgebraKind kind) noexcept;
std::optional<CoalgebraKind> parse_coalgebra_kind(std::string_view text);

LinComb<Forest> as_lincomb(const PTree& t);
LinComb<Forest> as_lincomb(const Forest& f);

/// Comultiplication of a single tree. Counting semantics: each concrete cut
/// or blobbing of the representative contributes 1.
LinComb<Tensor2> delta_tree(CoalgebraKind kind, const PTree& t);

/// Multiplicative and linear extension of delta_tree. Keys are decoded over
/// `op`. Throws trivial_tree_in_blobs_basis for kind = blobs on a trivial
/// tree.
LinComb<Tensor2> delta(CoalgebraKind kind, const OperadPtr& op,
                       const LinComb<Forest>& x);

/// The coaction gamma.
LinComb<Tensor2> coaction(const OperadPtr& op, const LinComb<Forest>& x);

/// cuts: 1 iff every tree is trivial; blobs: 1 iff every tree has exactly
/// one node. The empty forest has counit 1.
Rational counit(CoalgebraKind kind, const Forest& m);

/// The structure maps on single trees, as replaceable functions so that the
/// verifier can be run against mutated variants.
struct Structure {
  using TreeMap = std::function<LinComb<Tensor2>(const CanonicalKey&)>;
  using CounitMap = std::function<Rational(const Forest&)>;

  TreeMap delta_cuts;
  TreeMap delta_blobs;
  TreeMap coaction;
  CounitMap counit_cuts;
  CounitMap counit_blobs;
};

/// The engine's maps for `op`, memoized per key. The memo is not
/// synchronized; use one Structure per thread.
Structure engine_structure(const OperadPtr& op);

enum class Axiom {
  coassoc_cuts,
  coassoc_blobs,
  counit_cuts,
  counit_blobs,
  coaction_coassoc,
  coaction_counit,
  comodule_bialgebra,
  comodule_counit,
};

std::string_view to_string(Axiom axiom) noexcept;
std::optional<Axiom> parse_axiom(std::string_view text);
const std::vector<Axiom>& all_axioms();

struct Witness {
  CanonicalKey generator;
  std::string lhs;   // rendered linear combinations
  std::string rhs;
  std::string diff;  // lhs - rhs
};

struct VerifyReport {
  Axiom axiom = Axiom::coassoc_cuts;
  std::string operad;
  std::size_t checked = 0;
  bool passed = true;
  std::vector<CanonicalKey> generators;
  std::optional<Witness> witness;  // first failing generator
};

struct VerifyOptions {
  std::size_t max_nodes = 4;
  std::size_t max_arity = 3;
  std::optional<std::vector<Colour>> window;
};

/// Checks the exact tensor identity of `axiom` on every generator within the
/// bounds; stops at the first failure. When `structure` is null the engine's
/// maps are used.
VerifyReport verify(Axiom axiom, const OperadPtr& op,
                    const VerifyOptions& options,
                    const Structure* structure = nullptr);

// Helpers shared with the specialised checks.

/// (f (x) id) and (id (x) f) for maps from forests to tensors.
using ForestMap = std::function<LinComb<Tensor2>(const Forest&)>;

/// Multiplicative extension of a per-tree map; the empty forest goes to
/// 1 (x) 1.
ForestMap extend_multiplicatively(Structure::TreeMap per_tree);

LinComb<Tensor3> apply_left(const ForestMap& f, const LinComb<Tensor2>& x);
LinComb<Tensor3> apply_right(const ForestMap& f, const LinComb<Tensor2>& x);

/// (eps (x) id) and (id (x) eps).
LinComb<Forest> counit_left(const Structure::CounitMap& eps,
                            const LinComb<Tensor2>& x);
LinComb<Forest> counit_right(const Structure::CounitMap& eps,
                             const LinComb<Tensor2>& x);

/// mu_13 (g (x) g) on a tensor: the two left factors are multiplied, the
/// right factors land in positions two and three.
LinComb<Tensor3> mu13_gamma_gamma(const ForestMap& gamma,
                                  const LinComb<Tensor2>& x);

}  // namespace optree
