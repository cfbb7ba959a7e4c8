#include "optree/hopf.hpp"

#include <map>

#include "optree/combinat.hpp"
#include "optree/error.hpp"
#include "optree/io/serialize.hpp"
#include "optree/operads.hpp"

namespace optree {

std::string_view to_string(CoalgebraKind kind) noexcept {
  switch (kind) {
    case CoalgebraKind::cuts: return "cuts";
    case CoalgebraKind::blobs: return "blobs";
    case CoalgebraKind::coaction: return "coaction";
  }
  return "?";
}

std::optional<CoalgebraKind> parse_coalgebra_kind(std::string_view text) {
  if (text == "cuts") return CoalgebraKind::cuts;
  if (text == "blobs") return CoalgebraKind::blobs;
  if (text == "coaction") return CoalgebraKind::coaction;
  return std::nullopt;
}

LinComb<Forest> as_lincomb(const PTree& t) {
  return LinComb<Forest>(Forest{canonical_key(t)});
}

LinComb<Forest> as_lincomb(const Forest& f) { return LinComb<Forest>(f); }

LinComb<Tensor2> delta_tree(CoalgebraKind kind, const PTree& t) {
  LinComb<Tensor2> out;
  if (kind == CoalgebraKind::cuts) {
    for (const auto& layering : enumerate_layerings(t, 2)) {
      Cut cut = cut_layers(t, layering);
      out.add({std::move(cut.crown), Forest{canonical_key(cut.trunk)}}, 1);
    }
    return out;
  }
  if (t.is_trivial()) {
    if (kind == CoalgebraKind::blobs) {
      throw Error(ErrorCode::trivial_tree_in_blobs_basis,
                  "the blobs comultiplication is defined on nontrivial trees");
    }
    out.add({Forest{}, Forest{canonical_key(t)}}, 1);
    return out;
  }
  for (auto& term : blob_terms(*t.operad(), t)) {
    out.add({std::move(term.contents), Forest{std::move(term.contracted)}}, 1);
  }
  return out;
}

ForestMap extend_multiplicatively(Structure::TreeMap per_tree) {
  return [per_tree = std::move(per_tree)](const Forest& f) {
    LinComb<Tensor2> acc(Tensor2{});
    for (const auto& key : f.keys()) acc = mul(acc, per_tree(key));
    return acc;
  };
}

namespace {

Structure::TreeMap memoized(const OperadPtr& op, CoalgebraKind kind) {
  auto memo = std::make_shared<std::map<CanonicalKey, LinComb<Tensor2>>>();
  return [op, kind, memo](const CanonicalKey& key) {
    if (auto it = memo->find(key); it != memo->end()) return it->second;
    auto value = delta_tree(kind, from_key(op, key));
    memo->emplace(key, value);
    return value;
  };
}

LinComb<Tensor2> delta_with(const OperadPtr& op, CoalgebraKind kind,
                            const LinComb<Forest>& x) {
  const ForestMap f = extend_multiplicatively(
      [&](const CanonicalKey& key) { return delta_tree(kind, from_key(op, key)); });
  return linear_map<Tensor2>(x, f);
}

}  // namespace

LinComb<Tensor2> delta(CoalgebraKind kind, const OperadPtr& op,
                       const LinComb<Forest>& x) {
  return delta_with(op, kind, x);
}

LinComb<Tensor2> coaction(const OperadPtr& op, const LinComb<Forest>& x) {
  return delta_with(op, CoalgebraKind::coaction, x);
}

Rational counit(CoalgebraKind kind, const Forest& m) {
  for (const auto& key : m.keys()) {
    const std::size_t nodes = key_node_count(key);
    if (kind == CoalgebraKind::cuts ? nodes != 0 : nodes != 1) return 0;
  }
  return 1;
}

Structure engine_structure(const OperadPtr& op) {
  Structure s;
  s.delta_cuts = memoized(op, CoalgebraKind::cuts);
  s.delta_blobs = memoized(op, CoalgebraKind::blobs);
  s.coaction = memoized(op, CoalgebraKind::coaction);
  s.counit_cuts = [](const Forest& f) { return counit(CoalgebraKind::cuts, f); };
  s.counit_blobs = [](const Forest& f) {
    return counit(CoalgebraKind::blobs, f);
  };
  return s;
}

std::string_view to_string(Axiom axiom) noexcept {
  switch (axiom) {
    case Axiom::coassoc_cuts: return "coassoc-cuts";
    case Axiom::coassoc_blobs: return "coassoc-blobs";
    case Axiom::counit_cuts: return "counit-cuts";
    case Axiom::counit_blobs: return "counit-blobs";
    case Axiom::coaction_coassoc: return "coaction-coassoc";
    case Axiom::coaction_counit: return "coaction-counit";
    case Axiom::comodule_bialgebra: return "comodule-bialgebra";
    case Axiom::comodule_counit: return "comodule-counit";
  }
  return "?";
}

const std::vector<Axiom>& all_axioms() {
  static const std::vector<Axiom> axioms{
      Axiom::coassoc_cuts,       Axiom::coassoc_blobs,
      Axiom::counit_cuts,        Axiom::counit_blobs,
      Axiom::coaction_coassoc,   Axiom::coaction_counit,
      Axiom::comodule_bialgebra, Axiom::comodule_counit};
  return axioms;
}

std::optional<Axiom> parse_axiom(std::string_view text) {
  for (Axiom a : all_axioms()) {
    if (to_string(a) == text) return a;
  }
  return std::nullopt;
}

LinComb<Tensor3> apply_left(const ForestMap& f, const LinComb<Tensor2>& x) {
  LinComb<Tensor3> out;
  for (const auto& [t, c] : x.terms()) {
    const auto images = f(t.left);
    for (const auto& [image, d] : images.terms()) {
      out.add({image.left, image.right, t.right}, c * d);
    }
  }
  return out;
}

LinComb<Tensor3> apply_right(const ForestMap& f, const LinComb<Tensor2>& x) {
  LinComb<Tensor3> out;
  for (const auto& [t, c] : x.terms()) {
    const auto images = f(t.right);
    for (const auto& [image, d] : images.terms()) {
      out.add({t.left, image.left, image.right}, c * d);
    }
  }
  return out;
}

LinComb<Forest> counit_left(const Structure::CounitMap& eps,
                            const LinComb<Tensor2>& x) {
  LinComb<Forest> out;
  for (const auto& [t, c] : x.terms()) out.add(t.right, c * eps(t.left));
  return out;
}

LinComb<Forest> counit_right(const Structure::CounitMap& eps,
                             const LinComb<Tensor2>& x) {
  LinComb<Forest> out;
  for (const auto& [t, c] : x.terms()) out.add(t.left, c * eps(t.right));
  return out;
}

LinComb<Tensor3> mu13_gamma_gamma(const ForestMap& gamma,
                                  const LinComb<Tensor2>& x) {
  LinComb<Tensor3> out;
  for (const auto& [t, c] : x.terms()) {
    const auto left = gamma(t.left);
    const auto right = gamma(t.right);
    for (const auto& [a, ca] : left.terms()) {
      for (const auto& [b, cb] : right.terms()) {
        out.add({mul(a.left, b.left), a.right, b.right}, c * ca * cb);
      }
    }
  }
  return out;
}

namespace {

template <typename Basis>
std::optional<Witness> compare(const CanonicalKey& generator,
                               const LinComb<Basis>& lhs,
                               const LinComb<Basis>& rhs,
                               const KeyPrinter& printer) {
  if (lhs == rhs) return std::nullopt;
  return Witness{generator, serialize_lincomb(lhs, printer, Format::text),
                 serialize_lincomb(rhs, printer, Format::text),
                 serialize_lincomb(lhs - rhs, printer, Format::text)};
}

ForestMap cached(ForestMap f) {
  auto memo = std::make_shared<std::map<Forest, LinComb<Tensor2>>>();
  return [f = std::move(f), memo](const Forest& x) {
    if (auto it = memo->find(x); it != memo->end()) return it->second;
    return memo->emplace(x, f(x)).first->second;
  };
}

bool blobs_generator(Axiom axiom) {
  return axiom == Axiom::coassoc_blobs || axiom == Axiom::counit_blobs;
}

}  // namespace

VerifyReport verify(Axiom axiom, const OperadPtr& op,
                    const VerifyOptions& options, const Structure* structure) {
  const Structure engine = structure ? *structure : engine_structure(op);
  const ForestMap delta_y = cached(extend_multiplicatively(engine.delta_cuts));
  const ForestMap delta_z = cached(extend_multiplicatively(engine.delta_blobs));
  const ForestMap gamma = cached(extend_multiplicatively(engine.coaction));
  const KeyPrinter printer = tree_printer(op);

  VerifyReport report;
  report.axiom = axiom;
  report.operad = op->name();
  const auto generators = enumerate_ptrees(op, options.max_nodes,
                                           options.max_arity, options.window);
  for (const auto& key : generators) {
    if (blobs_generator(axiom) && key_node_count(key) == 0) continue;
    const LinComb<Forest> x(Forest{key});
    const Forest single{key};
    std::optional<Witness> witness;
    switch (axiom) {
      case Axiom::coassoc_cuts:
      case Axiom::coassoc_blobs: {
        const ForestMap& d = axiom == Axiom::coassoc_cuts ? delta_y : delta_z;
        const auto dx = d(single);
        witness = compare(key, apply_left(d, dx), apply_right(d, dx), printer);
        break;
      }
      case Axiom::counit_cuts:
      case Axiom::counit_blobs: {
        const bool cuts = axiom == Axiom::counit_cuts;
        const auto dx = (cuts ? delta_y : delta_z)(single);
        const auto& eps = cuts ? engine.counit_cuts : engine.counit_blobs;
        witness = compare(key, counit_left(eps, dx), x, printer);
        if (!witness) witness = compare(key, counit_right(eps, dx), x, printer);
        break;
      }
      case Axiom::coaction_coassoc: {
        const auto gx = gamma(single);
        witness = compare(key, apply_left(delta_z, gx), apply_right(gamma, gx),
                          printer);
        break;
      }
      case Axiom::coaction_counit: {
        witness = compare(key, counit_left(engine.counit_blobs, gamma(single)),
                          x, printer);
        break;
      }
      case Axiom::comodule_bialgebra: {
        witness = compare(key, apply_right(delta_y, gamma(single)),
                          mu13_gamma_gamma(gamma, delta_y(single)), printer);
        break;
      }
      case Axiom::comodule_counit: {
        LinComb<Forest> rhs;
        rhs.add(Forest{}, engine.counit_cuts(single));
        witness =
            compare(key, counit_right(engine.counit_cuts, gamma(single)), rhs,
                    printer);
        break;
      }
    }
    ++report.checked;
    report.generators.push_back(key);
    if (witness) {
      report.passed = false;
      report.witness = std::move(witness);
      break;
    }
  }
  return report;
}

}  // namespace optree
