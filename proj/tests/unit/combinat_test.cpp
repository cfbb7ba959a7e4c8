#include <doctest.h>

#include <set>

#include "optree/combinat.hpp"
#include "optree/error.hpp"
#include "optree/hopf.hpp"
#include "optree/io/grammar.hpp"
#include "optree/io/operad_files.hpp"
#include "optree/operads.hpp"
#include "oracles.hpp"

using namespace optree;

namespace {

std::set<std::string> oracle_codes(const OperadPtr& op, std::size_t nodes,
                                   std::size_t arity) {
  std::set<std::string> out;
  for (const auto& k : enumerate_ptrees(op, nodes, arity)) {
    out.insert(oracle::code(oracle::from_ptree(from_key(op, k))));
  }
  return out;
}

}  // namespace

TEST_CASE("terminal trees match the naked-tree oracle") {
  for (std::size_t n = 0; n <= 5; ++n) {
    for (std::size_t a = 1; a <= 3; ++a) {
      CAPTURE(n);
      CAPTURE(a);
      CHECK(oracle_codes(terminal_operad(), n, a) == oracle::naked_trees(n, a, false));
      CHECK(oracle_codes(terminal_operad(true), n, a) == oracle::naked_trees(n, a, true));
    }
  }
}

TEST_CASE("enumeration has no duplicates and respects bounds") {
  const auto op = free_monoid_operad();
  const auto keys = enumerate_ptrees(op, 3, 2);
  CHECK(std::set<CanonicalKey>(keys.begin(), keys.end()).size() == keys.size());
  CHECK(std::is_sorted(keys.begin(), keys.end()));
  for (const auto& k : keys) {
    const PTree t = from_key(op, k);
    CHECK(t.node_count() <= 3);
    for (NodeId n = 0; n < t.node_count(); ++n) CHECK(t.shape().arity(n) <= 2);
  }
  // Linear trees with 0..4 nodes.
  CHECK(enumerate_ptrees(identity_operad(), 4, 1).size() == 5);
}

TEST_CASE("poset trees are monotone words") {
  const auto op = make_operad("poset:" OPTREE_DATA_DIR "/diamond.json");
  const auto keys = enumerate_ptrees(op, 2, 1);
  // Chains of length <= 2 in the diamond: 4 trivial, 9 relations, and the
  // composable pairs.
  std::size_t pairs = 0;
  const std::vector<std::string> els{"0", "a", "b", "1"};
  const auto le = [&](const std::string& x, const std::string& y) {
    return x == y || x == "0" || y == "1";
  };
  for (const auto& x : els) {
    for (const auto& y : els) {
      for (const auto& z : els) pairs += le(x, y) && le(y, z);
    }
  }
  CHECK(keys.size() == 4 + 9 + pairs);
}

TEST_CASE("infinite colour sets need a window") {
  try {
    enumerate_ptrees(naturals_poset_operad(), 2, 1);
    FAIL("accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::bounds_too_large_for_colour_domain);
  }
  const std::vector<Colour> window{"1", "2", "3"};
  // 3 trivial, 6 relations, 10 monotone triples.
  CHECK(enumerate_ptrees(naturals_poset_operad(), 2, 1, window).size() == 3 + 6 + 10);
}

TEST_CASE("layerings match the brute-force count") {
  const auto op = terminal_operad();
  for (const auto& k : enumerate_ptrees(op, 4, 3)) {
    const PTree t = from_key(op, k);
    for (std::size_t layers = 1; layers <= 3; ++layers) {
      CHECK(enumerate_layerings(t, layers).size() == oracle::layerings(t, layers));
    }
  }
}

TEST_CASE("cut comultiplication matches down-closed subsets") {
  for (const OperadPtr& op : std::vector<OperadPtr>{terminal_operad(), free_monoid_operad(),
                         make_operad("poset:" OPTREE_DATA_DIR "/diamond.json")}) {
    for (const auto& k : enumerate_ptrees(op, 4, 2)) {
      const PTree t = from_key(op, k);
      CHECK(delta_tree(CoalgebraKind::cuts, t) == oracle::cuts(t));
    }
  }
}

TEST_CASE("blobbings are the subsets of inner edges") {
  const auto op = terminal_operad();
  for (const auto& k : enumerate_ptrees(op, 5, 3)) {
    const PTree t = from_key(op, k);
    if (t.is_trivial()) {
      CHECK_THROWS_AS(enumerate_blobbings(t), Error);
      continue;
    }
    const auto all = enumerate_blobbings(t);
    CHECK(all.size() == (std::size_t{1} << t.shape().inner_edges().size()));
    CHECK(all.size() == oracle::connected_partitions(t));
    for (const auto& b : all) {
      std::size_t covered = 0;
      for (const auto& group : blobs(t, b)) covered += group.size();
      CHECK(covered == t.node_count());
    }
  }
}

TEST_CASE("gluing the blobs back gives the original tree") {
  for (const OperadPtr& op : std::vector<OperadPtr>{terminal_operad(), free_monoid_operad(),
                         monoid_operad(cyclic_monoid(2))}) {
    for (const auto& k : enumerate_ptrees(op, 4, 2)) {
      const PTree t = from_key(op, k);
      if (t.is_trivial()) continue;
      for (const auto& b : enumerate_blobbings(t)) {
        const PTree skeleton = contract_blobbing(*op, t, b);
        std::vector<PTree> parts;
        for (const auto& group : blobs(t, b)) parts.push_back(induced_subtree(t, group));
        CHECK(canonical_key(glue(*op, skeleton, parts)) == k);
      }
    }
  }
}

TEST_CASE("glue rejects residue mismatches") {
  const auto op = terminal_operad();
  const PTree skeleton = parse_tree("(* *)", op);
  const std::vector<PTree> wrong{parse_tree("(* * *)", op)};
  try {
    glue(*op, skeleton, wrong);
    FAIL("accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::residue_mismatch);
  }
}

TEST_CASE("blob_terms agrees with the blobbing-by-blobbing computation") {
  const auto op = free_monoid_operad();
  for (const auto& k : enumerate_ptrees(op, 4, 2)) {
    const PTree t = from_key(op, k);
    if (t.is_trivial()) continue;
    std::multiset<std::pair<Forest, CanonicalKey>> direct;
    for (const auto& b : enumerate_blobbings(t)) {
      direct.emplace(blob_contents(t, b), canonical_key(contract_blobbing(*op, t, b)));
    }
    std::multiset<std::pair<Forest, CanonicalKey>> fast;
    for (const auto& term : blob_terms(*op, t)) fast.emplace(term.contents, term.contracted);
    CHECK(direct == fast);
  }
}

TEST_CASE("cut_layers splits crown and trunk") {
  const auto op = terminal_operad();
  const PTree t = parse_tree("((*) *)", op);
  Layering all_trunk{2, std::vector<std::size_t>(t.node_count(), 1)};
  const Cut c = cut_layers(t, all_trunk);
  CHECK(canonical_key(c.trunk) == canonical_key(t));
  CHECK(c.crown.size() == 2);  // one trivial tree per leaf
  Layering all_crown{2, std::vector<std::size_t>(t.node_count(), 2)};
  const Cut d = cut_layers(t, all_crown);
  CHECK(d.trunk.is_trivial());
  CHECK(d.crown == Forest{canonical_key(t)});
}

TEST_CASE("layerings split along a cut") {
  // Splitting off the top or the bottom layer of a 3-layering, and a 2 + 2
  // split of a 4-layering.
  const auto op = terminal_operad();
  const auto count = [](const PTree& t, std::size_t k) {
    return enumerate_layerings(t, k).size();
  };
  for (const auto& k : enumerate_ptrees(op, 5, 3)) {
    const PTree t = from_key(op, k);
    std::size_t by_trunk = 0;
    std::size_t by_crown = 0;
    std::size_t both = 0;
    for (const auto& c : enumerate_layerings(t, 2)) {
      const Cut cut = cut_layers(t, c);
      std::size_t crowns = 1;
      for (const auto& ck : cut.crown.keys()) crowns *= count(from_key(op, ck), 2);
      by_trunk += count(cut.trunk, 2);
      by_crown += crowns;
      both += count(cut.trunk, 2) * crowns;
    }
    CHECK(by_trunk == oracle::layerings(t, 3));
    CHECK(by_crown == oracle::layerings(t, 3));
    CHECK(both == oracle::layerings(t, 4));
  }
}
