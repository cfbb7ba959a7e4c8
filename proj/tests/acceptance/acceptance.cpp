// One PASS/FAIL line per acceptance criterion, each with its time budget.
// Usage: optree_acceptance [criterion numbers...]

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "optree/combinat.hpp"
#include "optree/error.hpp"
#include "optree/hopf.hpp"
#include "optree/io/grammar.hpp"
#include "optree/io/operad_files.hpp"
#include "optree/io/serialize.hpp"
#include "optree/operads.hpp"
#include "optree/special/comb.hpp"
#include "optree/special/fdb.hpp"
#include "optree/special/mould.hpp"
#include "oracles.hpp"

using namespace optree;

namespace {

struct Outcome {
  bool passed = true;
  std::string detail;
  std::vector<std::string> notes;  // printed indented under the verdict

  void fail(const std::string& why) {
    if (passed) detail = why;
    passed = false;
  }
};

struct Criterion {
  int number;
  const char* title;
  double budget_seconds;
  std::function<Outcome()> run;
};

const std::string kDiamond = std::string("poset:") + OPTREE_DATA_DIR + "/diamond.json";

// Operad set shared by criteria 5 and 6, with the node bound for each.
struct Subject {
  std::string descriptor;
  bool unary;
};

std::vector<Subject> subjects() {
  return {{"id", true},          {"freemonoid", false},
          {"terminal", false},   {"terminal-reduced", false},
          {"monoid:z2", true},   {kDiamond, true}};
}

// 1. Faa di Bruno for n <= 8.
Outcome faa_di_bruno() {
  Outcome o;
  const auto op = identity_operad();
  for (std::size_t n = 0; n <= 8; ++n) {
    const auto x = as_lincomb(Forest{linear_key(n)});
    if (delta(CoalgebraKind::cuts, op, x) != oracle::fdb_mult(n)) {
      o.fail("cuts differ at n = " + std::to_string(n));
    }
    if (n > 0 && delta(CoalgebraKind::blobs, op, x) != oracle::fdb_subst(n)) {
      o.fail("blobs differ at n = " + std::to_string(n));
    }
  }
  if (o.passed) o.detail = "n = 0..8, both comultiplications";
  return o;
}

// 2. The two printed word expansions, run through the command line.
Outcome monotone_words() {
  Outcome o;
  const auto op = naturals_poset_operad();
  const auto expect = [&](std::vector<std::pair<const char*, const char*>> terms) {
    LinComb<Tensor2> x;
    for (const auto& [l, r] : terms) {
      x.add({parse_forest_keys(l, op), parse_forest_keys(r, op)}, 1);
    }
    return x;
  };
  const auto via_cli = [&](const char* word, const char* kind) {
    std::ostringstream out;
    std::ostringstream err;
    const std::vector<std::string> args{"coproduct", "--operad", "poset:nat", "--tree",
                                        word,        "--kind",   kind,        "--format",
                                        "json"};
    if (cli::run(args, out, err) != cli::kExitOk) {
      throw Error(ErrorCode::io_error, err.str());
    }
    return parse_tensor2_json(out.str(), op);
  };
  const auto cuts = expect({{"word:2", "word:2335"},
                            {"word:23", "word:335"},
                            {"word:233", "word:35"},
                            {"word:2335", "word:5"}});
  const auto blobs = expect({{"word:35; word:56; word:68; word:88", "word:35688"},
                             {"word:35; word:56; word:688", "word:3568"},
                             {"word:35; word:568; word:88", "word:3588"},
                             {"word:356; word:68; word:88", "word:3688"},
                             {"word:35; word:5688", "word:358"},
                             {"word:356; word:688", "word:368"},
                             {"word:3568; word:88", "word:388"},
                             {"word:35688", "word:38"}});
  if (via_cli("word:2335", "cuts") != cuts) o.fail("cuts of 2335 differ");
  if (via_cli("word:35688", "blobs") != blobs) o.fail("blobs of 35688 differ");
  if (o.passed) o.detail = "4 cut terms, 8 blob terms";
  return o;
}

// 3. #blobbings = 2^(#inner edges) on terminal trees.
Outcome blobbing_count() {
  Outcome o;
  const auto op = terminal_operad();
  std::size_t trees = 0;
  for (const auto& k : enumerate_ptrees(op, 7, 3)) {
    const PTree t = from_key(op, k);
    if (t.is_trivial()) continue;
    ++trees;
    const std::size_t expect = std::size_t{1} << t.shape().inner_edges().size();
    const std::size_t got = enumerate_blobbings(t).size();
    if (got != expect || oracle::connected_partitions(t) != expect) {
      o.fail("mismatch at " + print_key(op, k));
    }
  }
  if (o.passed) o.detail = std::to_string(trees) + " trees";
  return o;
}

// Reads one length-prefixed field "<len>:<text>" at pos.
std::string read_field(const std::string& key, std::size_t& pos) {
  const std::size_t colon = key.find(':', pos);
  const std::size_t len = std::stoul(key.substr(pos, colon - pos));
  std::string out = key.substr(colon + 1, len);
  pos = colon + 1 + len;
  return out;
}

// Rewrites a bd(identity) key as a freemonoid key: the label l_n becomes
// the arity n and every colour becomes "*".
std::string bd_to_freemonoid(const std::string& key, std::size_t& pos) {
  const auto field = [](const std::string& s) {
    return std::to_string(s.size()) + ":" + s;
  };
  const char tag = key[pos++];
  if (tag == 'T' || tag == 'L') {
    read_field(key, pos);
    return tag + field("*");
  }
  const std::string label = read_field(key, pos);
  read_field(key, pos);
  std::string out = "N" + field(std::to_string(key_node_count({label}))) + field("*") + "(";
  ++pos;  // '('
  while (key[pos] != ')') out += bd_to_freemonoid(key, pos);
  ++pos;
  return out + ")";
}

// 4. bd(identity) and the free-monoid operad have the same trees.
Outcome bd_identity() {
  Outcome o;
  const auto bd = bd_operad(identity_operad());
  std::set<std::string> relabelled;
  for (const auto& k : enumerate_ptrees(bd, 5, 4)) {
    std::size_t pos = 0;
    relabelled.insert(bd_to_freemonoid(k.text, pos));
  }
  std::set<std::string> free;
  for (const auto& k : enumerate_ptrees(free_monoid_operad(), 5, 4)) free.insert(k.text);
  if (relabelled != free) {
    o.fail(std::to_string(relabelled.size()) + " vs " + std::to_string(free.size()) +
           " trees");
  } else {
    o.detail = std::to_string(free.size()) + " trees on both sides";
  }
  return o;
}

std::size_t count_layerings(const PTree& t, std::size_t k) {
  return enumerate_layerings(t, k).size();
}

// #3-layerings, counted by splitting off the top layer (sum over cuts of
// the 2-layerings of the trunk) and by splitting off the bottom layer (sum
// over cuts of the product over crown trees of their 2-layerings).
bool layering_bridge(const OperadPtr& op, const PTree& t) {
  std::size_t by_trunk = 0;
  std::size_t by_crown = 0;
  for (const auto& c : enumerate_layerings(t, 2)) {
    const Cut cut = cut_layers(t, c);
    by_trunk += count_layerings(cut.trunk, 2);
    std::size_t product = 1;
    for (const auto& k : cut.crown.keys()) product *= count_layerings(from_key(op, k), 2);
    by_crown += product;
  }
  const std::size_t direct = oracle::layerings(t, 3);
  return by_trunk == direct && by_crown == direct;
}

// 5. Coassociativity and counit of both comultiplications.
Outcome coassociativity() {
  Outcome o;
  const std::vector<Axiom> axioms{Axiom::coassoc_cuts, Axiom::coassoc_blobs,
                                  Axiom::counit_cuts, Axiom::counit_blobs};
  std::size_t checks = 0;
  for (const auto& s : subjects()) {
    const auto op = make_operad(s.descriptor);
    const VerifyOptions options{s.unary ? 6u : 5u, 3, std::nullopt};
    for (Axiom a : axioms) {
      const auto r = verify(a, op, options);
      checks += r.checked;
      if (!r.passed) {
        o.fail(std::string(to_string(a)) + " fails on " + op->name());
        if (r.witness) o.notes.push_back("witness: " + r.witness->diff);
      }
    }
    for (const auto& k : enumerate_ptrees(op, options.max_nodes, options.max_arity)) {
      if (!layering_bridge(op, from_key(op, k))) {
        o.fail("layering count differs on " + print_key(op, k));
      }
    }
  }
  if (o.passed) o.detail = std::to_string(checks) + " generator checks, layering bridge ok";
  return o;
}

// 6. Both comodule-bialgebra diagrams, and a mutant that must fail.
Outcome comodule_bialgebra() {
  Outcome o;
  std::size_t checks = 0;
  for (const auto& s : subjects()) {
    const auto op = make_operad(s.descriptor);
    const VerifyOptions options{s.unary ? 6u : 4u, 3, std::nullopt};
    for (Axiom a : {Axiom::comodule_bialgebra, Axiom::comodule_counit}) {
      const auto r = verify(a, op, options);
      checks += r.checked;
      if (!r.passed) o.fail(std::string(to_string(a)) + " fails on " + op->name());
    }
  }
  // Drop the first blobbing term of every tree with more than one.
  const auto op = terminal_operad();
  Structure mutant = engine_structure(op);
  const auto honest = mutant.coaction;
  mutant.coaction = [honest](const CanonicalKey& k) {
    auto x = honest(k);
    if (x.size() > 1) x.add(x.terms().begin()->first, -x.terms().begin()->second);
    return x;
  };
  const auto r = verify(Axiom::comodule_bialgebra, op, {4, 3, std::nullopt}, &mutant);
  if (r.passed || !r.witness) {
    o.fail("the mutated coaction was not caught");
  } else {
    o.notes.push_back("mutant caught at " + print_key(op, r.witness->generator));
    std::string diff = r.witness->diff;
    while (!diff.empty() && diff.back() == '\n') diff.pop_back();
    o.notes.push_back("lhs - rhs: " + diff);
  }
  if (o.passed) o.detail = std::to_string(checks) + " generator checks, mutant rejected";
  return o;
}

// 7. Moulds over Z/2 and Z/3.
Outcome moulds() {
  Outcome o;
  for (std::size_t n : {2u, 3u}) {
    auto m = std::make_shared<const FiniteMonoid>(cyclic_monoid(n));
    const DualityReport r = mould_duality_check(m, 4, 20, 7);
    if (!r.passed()) {
      o.fail("duality fails over Z/" + std::to_string(n));
      if (r.failure) o.notes.push_back("at word " + word_text(*m, r.failure->word));
    }
    if (r.right_witness) {
      o.notes.push_back("Z/" + std::to_string(n) + ": M o (N x P) = " +
                        r.right_witness->lhs.str() + " but (M o N) x (M o P) = " +
                        r.right_witness->rhs.str() + " at " +
                        word_text(*m, r.right_witness->word));
    }
    // The definitions themselves, against the naive sums.
    std::mt19937_64 rng(7);
    for (int i = 0; i < 20; ++i) {
      const Mould a = Mould::random(m, 4, rng);
      const Mould b = Mould::random(m, 4, rng);
      const Mould p = mould_product(a, b);
      const Mould c = mould_compose(a, b);
      for (const auto& w : words_up_to(n, 4)) {
        if (p.at(w) != oracle::mould_product(a, b, w) ||
            c.at(w) != oracle::mould_compose(a, b, w)) {
          o.fail("mould operations differ from the defining sums");
        }
      }
    }
  }
  if (o.passed) o.detail = "Z/2 and Z/3, words up to 4, 20 samples";
  return o;
}

// 8. Core map and the comb-tree comodule bialgebra.
Outcome core_and_cem() {
  Outcome o;
  const CombReport h = check_core_homomorphism(5);
  if (!h.passed) o.fail("core homomorphism: " + h.check);
  const CombReport c = check_comb_comodule_bialgebra(5);
  if (!c.passed) o.fail("comb comodule bialgebra: " + c.check);
  for (const auto& k : enumerate_comb_trees(5)) {
    const CombTree t = parse_comb(k.text);
    std::vector<std::size_t> parent(t.size());
    for (std::size_t i = 0; i < t.size(); ++i) parent[i] = t.parent(i);
    if (bck_delta(t) != oracle::bck(parent) || cem_delta(t) != oracle::cem(parent)) {
      o.fail("BCK or CEM differs from the oracle on " + k.text);
    }
  }
  if (o.passed) {
    o.detail = std::to_string(h.checked) + " trees, " + std::to_string(c.checked) +
               " comb trees";
  }
  return o;
}

// 9. aut_order against brute-force isomorphism counting.
Outcome automorphisms() {
  Outcome o;
  const auto op = terminal_operad();
  std::size_t trees = 0;
  for (const auto& k : enumerate_ptrees(op, 6, 4)) {
    const PTree t = from_key(op, k);
    ++trees;
    if (aut_order(t) != oracle::automorphisms(t)) o.fail("differs on " + print_key(op, k));
  }
  for (std::size_t n = 0; n <= 6; ++n) {
    const PTree c = corolla(op, std::to_string(n));
    if (aut_order(c) != oracle::factorial(n) || oracle::automorphisms(c) != oracle::factorial(n)) {
      o.fail("corolla of arity " + std::to_string(n));
    }
  }
  if (o.passed) o.detail = std::to_string(trees) + " trees, corollas up to 6";
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<Criterion> criteria{
      {1, "Faa di Bruno", 1, faa_di_bruno},
      {2, "monotone words", 1, monotone_words},
      {3, "reduced-cover counting", 30, blobbing_count},
      {4, "bd(identity) = free monoid", 10, bd_identity},
      {5, "coassociativity and counits", 120, coassociativity},
      {6, "comodule bialgebra", 300, comodule_bialgebra},
      {7, "mould calculus", 30, moulds},
      {8, "core and CEM", 120, core_and_cem},
      {9, "automorphism oracle", 10, automorphisms},
  };
  std::set<int> wanted;
  for (int i = 1; i < argc; ++i) wanted.insert(std::stoi(argv[i]));
  bool all = true;
  for (const auto& c : criteria) {
    if (!wanted.empty() && !wanted.contains(c.number)) continue;
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs >= c.budget_seconds) {
      o.fail("over the " + std::to_string(static_cast<int>(c.budget_seconds)) + " s budget");
    }
    char timing[64];
    std::snprintf(timing, sizeof timing, "%.2f s / %g s", secs, c.budget_seconds);
    std::cout << "criterion " << c.number << " [" << c.title << "]: "
              << (o.passed ? "PASS" : "FAIL") << " (" << timing << ") " << o.detail
              << '\n';
    for (const auto& n : o.notes) std::cout << "    " << n << '\n';
    std::cout.flush();
    all = all && o.passed;
  }
  return all ? 0 : 1;
}
