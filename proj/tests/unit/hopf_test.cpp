#include <doctest.h>

#include "optree/combinat.hpp"
#include "optree/error.hpp"
#include "optree/hopf.hpp"
#include "optree/io/grammar.hpp"
#include "optree/io/operad_files.hpp"
#include "optree/operads.hpp"

using namespace optree;

namespace {

std::size_t nodes(const Forest& f) {
  std::size_t n = 0;
  for (const auto& k : f.keys()) n += key_node_count(k);
  return n;
}

Forest forest(const char* text, const OperadPtr& op) { return parse_forest_keys(text, op); }

}  // namespace

TEST_CASE("cuts of a cherry") {
  const auto op = terminal_operad();
  const PTree t = parse_tree("((*) (*))", op);
  LinComb<Tensor2> expect;
  expect.add({forest("|; |", op), forest("((*) (*))", op)}, 1);
  expect.add({forest("(*); |", op), forest("((*) *)", op)}, 2);
  expect.add({forest("(*); (*)", op), forest("(* *)", op)}, 1);
  expect.add({forest("((*) (*))", op), forest("|", op)}, 1);
  CHECK(delta_tree(CoalgebraKind::cuts, t) == expect);
}

TEST_CASE("blobs of a cherry count each blobbing once") {
  const auto op = terminal_operad();
  const PTree t = parse_tree("((*) (*))", op);
  LinComb<Tensor2> expect;
  expect.add({forest("(*); (*); (* *)", op), forest("((*) (*))", op)}, 1);
  expect.add({forest("(*); ((*) *)", op), forest("((*) *)", op)}, 2);
  expect.add({forest("((*) (*))", op), forest("(* *)", op)}, 1);
  CHECK(delta_tree(CoalgebraKind::blobs, t) == expect);
}

TEST_CASE("coaction on a trivial tree") {
  const auto op = terminal_operad();
  const auto triv = as_lincomb(parse_tree("|", op));
  CHECK(coaction(op, triv) == LinComb<Tensor2>({Forest{}, forest("|", op)}));
  try {
    delta(CoalgebraKind::blobs, op, triv);
    FAIL("accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::trivial_tree_in_blobs_basis);
  }
}

TEST_CASE("delta is multiplicative and linear") {
  const auto op = terminal_operad();
  const auto a = as_lincomb(parse_tree("((*))", op));
  const auto b = as_lincomb(parse_tree("(* *)", op));
  for (auto kind : {CoalgebraKind::cuts, CoalgebraKind::blobs, CoalgebraKind::coaction}) {
    CHECK(delta(kind, op, mul(a, b)) == mul(delta(kind, op, a), delta(kind, op, b)));
    CHECK(delta(kind, op, Rational(3, 2) * a + b) ==
          Rational(3, 2) * delta(kind, op, a) + delta(kind, op, b));
  }
  CHECK(delta(CoalgebraKind::cuts, op, as_lincomb(Forest{})) ==
        LinComb<Tensor2>(unit_tensor2()));
}

TEST_CASE("grading") {
  // Cuts split the nodes; blobbings have one contracted node per blob.
  const auto op = terminal_operad();
  for (const auto& k : enumerate_ptrees(op, 4, 3)) {
    const PTree t = from_key(op, k);
    const auto cuts = delta_tree(CoalgebraKind::cuts, t);
    for (const auto& [b, c] : cuts.terms()) {
      CHECK(nodes(b.left) + nodes(b.right) == t.node_count());
      CHECK(c > 0);
    }
    if (t.is_trivial()) continue;
    Rational total = 0;
    const auto blobs = delta_tree(CoalgebraKind::blobs, t);
    for (const auto& [b, c] : blobs.terms()) {
      CHECK(nodes(b.left) == t.node_count());
      CHECK(b.left.size() == nodes(b.right));
      total += c;
    }
    CHECK(total == Rational(std::size_t{1} << t.shape().inner_edges().size()));
  }
}

TEST_CASE("counits") {
  const auto op = terminal_operad();
  CHECK(counit(CoalgebraKind::cuts, Forest{}) == 1);
  CHECK(counit(CoalgebraKind::cuts, forest("|; |", op)) == 1);
  CHECK(counit(CoalgebraKind::cuts, forest("|; (*)", op)) == 0);
  CHECK(counit(CoalgebraKind::blobs, forest("(*); (* *)", op)) == 1);
  CHECK(counit(CoalgebraKind::blobs, forest("((*))", op)) == 0);
}

TEST_CASE("all axioms hold on small operads") {
  for (const char* d : {"id", "freemonoid", "terminal", "terminal-reduced", "monoid:z2",
                        "poset:" OPTREE_DATA_DIR "/diamond.json"}) {
    const auto op = make_operad(d);
    for (Axiom a : all_axioms()) {
      CAPTURE(d);
      CAPTURE(to_string(a));
      const auto r = verify(a, op, {3, 2, std::nullopt});
      CHECK(r.passed);
      CHECK(r.checked > 0);
    }
  }
}

TEST_CASE("verify over poset:nat uses the window") {
  const auto op = naturals_poset_operad();
  VerifyOptions o{3, 1, std::vector<Colour>{"0", "1", "2"}};
  CHECK(verify(Axiom::coassoc_cuts, op, o).passed);
  CHECK(verify(Axiom::comodule_bialgebra, op, o).passed);
  try {
    verify(Axiom::coassoc_cuts, op, {3, 1, std::nullopt});
    FAIL("accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::bounds_too_large_for_colour_domain);
  }
}

TEST_CASE("a mutated coaction is caught") {
  const auto op = terminal_operad();
  Structure s = engine_structure(op);
  const auto honest = s.coaction;
  // Drop one blobbing term of every tree with an inner edge.
  s.coaction = [honest](const CanonicalKey& k) {
    auto x = honest(k);
    if (x.size() < 2) return x;
    auto first = *x.terms().begin();
    x.add(first.first, -1);
    return x;
  };
  const auto r = verify(Axiom::comodule_bialgebra, op, {3, 2, std::nullopt}, &s);
  CHECK_FALSE(r.passed);
  REQUIRE(r.witness);
  CHECK_FALSE(r.witness->diff.empty());
}

TEST_CASE("a mutated counit is caught") {
  const auto op = free_monoid_operad();
  Structure s = engine_structure(op);
  s.counit_cuts = [](const Forest&) { return Rational(1); };
  CHECK_FALSE(verify(Axiom::counit_cuts, op, {2, 2, std::nullopt}, &s).passed);
}

TEST_CASE("axiom names round trip") {
  for (Axiom a : all_axioms()) CHECK(parse_axiom(to_string(a)) == a);
  CHECK_FALSE(parse_axiom("nope"));
  CHECK(parse_coalgebra_kind("blobs") == CoalgebraKind::blobs);
}
