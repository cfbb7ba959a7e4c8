#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <memory>
#include <optional>
#include <vector>

#include "optree/combinat.hpp"
#include "optree/error.hpp"
#include "optree/hopf.hpp"
#include "optree/io/grammar.hpp"
#include "optree/io/operad_files.hpp"
#include "optree/io/serialize.hpp"
#include "optree/special/comb.hpp"
#include "optree/special/fdb.hpp"
#include "optree/special/mould.hpp"

namespace optree::cli {

namespace {

using Json = nlohmann::ordered_json;

struct Options {
  std::string operad = "terminal";
  std::string tree;
  std::string kind;
  std::string axiom = "all";
  std::size_t max_nodes = 4;
  std::size_t max_arity = 3;
  std::size_t max_len = 4;
  std::size_t n = 3;
  std::size_t samples = 20;
  std::uint64_t seed = 7;
  std::string format = "text";
  std::string monoid;
  std::string op = "check-duality";
  std::vector<std::string> colours;
  bool check = false;
};

Format format_of(const Options& o) {
  // CLI11 already restricts the value.
  return *parse_format(o.format);
}

std::optional<std::vector<Colour>> window_of(const Options& o) {
  if (o.colours.empty()) return std::nullopt;
  return o.colours;
}

std::string witness_text(const Witness& w, const std::string& generator) {
  return "generator: " + generator + "\nlhs:\n" + w.lhs + "rhs:\n" + w.rhs +
         "lhs - rhs:\n" + w.diff;
}

Json witness_json(const Witness& w, const std::string& generator) {
  return Json{{"generator", generator},
              {"lhs", w.lhs},
              {"rhs", w.rhs},
              {"diff", w.diff}};
}

int cmd_enumerate(const Options& o, std::ostream& out) {
  const OperadPtr op = make_operad(o.operad);
  const auto keys = enumerate_ptrees(op, o.max_nodes, o.max_arity, window_of(o));
  if (format_of(o) == Format::json) {
    Json trees = Json::array();
    for (const auto& k : keys) trees.push_back(print_key(op, k));
    out << Json{{"operad", op->name()}, {"count", keys.size()}, {"trees", trees}}
               .dump()
        << '\n';
    return kExitOk;
  }
  for (const auto& k : keys) out << print_key(op, k) << '\n';
  return kExitOk;
}

int cmd_coproduct(const Options& o, std::ostream& out) {
  const OperadPtr op = make_operad(o.operad);
  const auto kind = parse_coalgebra_kind(o.kind);
  const LinComb<Forest> x(parse_forest_keys(o.tree, op));
  out << serialize_lincomb(delta(*kind, op, x), tree_printer(op), format_of(o));
  return kExitOk;
}

int cmd_verify(const Options& o, std::ostream& out) {
  const OperadPtr op = make_operad(o.operad);
  std::vector<Axiom> axioms;
  if (o.axiom == "all") {
    axioms = all_axioms();
  } else {
    axioms.push_back(*parse_axiom(o.axiom));
  }
  const VerifyOptions options{o.max_nodes, o.max_arity, window_of(o)};
  const Structure engine = engine_structure(op);
  bool all_passed = true;
  Json reports = Json::array();
  for (Axiom a : axioms) {
    const VerifyReport r = verify(a, op, options, &engine);
    all_passed = all_passed && r.passed;
    if (format_of(o) == Format::json) {
      Json j{{"axiom", to_string(a)},
             {"operad", r.operad},
             {"checked", r.checked},
             {"passed", r.passed}};
      if (r.witness) {
        j["witness"] = witness_json(*r.witness, print_key(op, r.witness->generator));
      }
      reports.push_back(std::move(j));
      continue;
    }
    out << to_string(a) << " on " << r.operad << ": "
        << (r.passed ? "pass" : "FAIL") << " (" << r.checked << " generators)\n";
    if (r.witness) {
      out << witness_text(*r.witness, print_key(op, r.witness->generator));
    }
  }
  if (format_of(o) == Format::json) {
    out << Json{{"passed", all_passed}, {"reports", reports}}.dump() << '\n';
  }
  return all_passed ? kExitOk : kExitFailed;
}

int cmd_faadibruno(const Options& o, std::ostream& out) {
  const auto kind = parse_fdb_kind(o.kind.empty() ? "mult" : o.kind);
  const OperadPtr id = make_operad("id");
  const auto reference = fdb_reference(*kind, o.n);
  const auto engine =
      delta(*kind == FdbKind::mult ? CoalgebraKind::cuts : CoalgebraKind::blobs,
            id, LinComb<Forest>(Forest{linear_key(o.n)}));
  const bool agree = reference == engine;
  if (format_of(o) == Format::json) {
    Json doc = Json::parse(serialize_lincomb(reference, tree_printer(id), Format::json));
    out << Json{{"kind", to_string(*kind)},
                {"n", o.n},
                {"engine_agrees", agree},
                {"reference", doc}}
               .dump()
        << '\n';
  } else {
    out << serialize_lincomb(reference, tree_printer(id), Format::text);
    out << "engine agrees: " << (agree ? "yes" : "no") << '\n';
  }
  return agree ? kExitOk : kExitFailed;
}

std::string witness_line(const FiniteMonoid& m, const MouldWitness& w) {
  return w.identity + " at word " + word_text(m, w.word) + ": " + w.lhs.str() +
         " vs " + w.rhs.str();
}

int cmd_mould(const Options& o, std::ostream& out, std::ostream& err) {
  if (o.monoid.empty()) {
    err << "mould: --monoid is required\n";
    return kExitUsage;
  }
  auto monoid = std::make_shared<const FiniteMonoid>(load_monoid(o.monoid));
  if (o.op == "right-witness") {
    const auto w = right_distributivity_witness(monoid, o.max_len);
    if (format_of(o) == Format::json) {
      out << Json{{"identity", w.identity},
                  {"word", word_text(*monoid, w.word)},
                  {"lhs", w.lhs.str()},
                  {"rhs", w.rhs.str()}}
                 .dump()
          << '\n';
    } else {
      out << witness_line(*monoid, w) << '\n';
    }
    return w.lhs != w.rhs ? kExitOk : kExitFailed;
  }
  const DualityReport r = mould_duality_check(monoid, o.max_len, o.samples, o.seed);
  const auto flag = [](bool b) { return b ? "pass" : "FAIL"; };
  if (format_of(o) == Format::json) {
    Json doc{{"samples", r.samples},
             {"words", r.words},
             {"seed", o.seed},
             {"product_duality", r.product_duality},
             {"composition_duality", r.composition_duality},
             {"unit_duality", r.unit_duality},
             {"left_distributivity", r.left_distributivity},
             {"right_counterexample_fails", r.right_counterexample_fails},
             {"passed", r.passed()}};
    if (r.right_witness) doc["right_witness"] = witness_line(*monoid, *r.right_witness);
    if (r.failure) doc["failure"] = witness_line(*monoid, *r.failure);
    out << doc.dump() << '\n';
  } else {
    out << "moulds: " << r.samples << " samples, " << r.words
        << " words, seed " << o.seed << '\n'
        << "product = convolution through cuts: " << flag(r.product_duality) << '\n'
        << "composition = convolution through blobs: "
        << flag(r.composition_duality) << '\n'
        << "unit moulds = counits: " << flag(r.unit_duality) << '\n'
        << "left distributivity: " << flag(r.left_distributivity) << '\n'
        << "right distributivity counterexample: "
        << (r.right_counterexample_fails ? "fails as expected" : "FAIL") << '\n';
    if (r.right_witness) out << "  " << witness_line(*monoid, *r.right_witness) << '\n';
    if (r.failure) out << "first failure: " << witness_line(*monoid, *r.failure) << '\n';
  }
  return r.passed() ? kExitOk : kExitFailed;
}

int report_comb(const CombReport& r, const std::string& what,
                const std::string& generator, const Options& o,
                std::ostream& out) {
  if (format_of(o) == Format::json) {
    Json doc{{"check", what}, {"checked", r.checked}, {"passed", r.passed}};
    if (r.witness) {
      doc["failing_identity"] = r.check;
      doc["witness"] = witness_json(*r.witness, generator);
    }
    out << doc.dump() << '\n';
  } else {
    out << what << ": " << (r.passed ? "pass" : "FAIL") << " (" << r.checked
        << " trees)\n";
    if (r.witness) out << r.check << '\n' << witness_text(*r.witness, generator);
  }
  return r.passed ? kExitOk : kExitFailed;
}

int cmd_core(const Options& o, std::ostream& out) {
  if (o.check) {
    const auto r = check_core_homomorphism(o.max_nodes, o.max_arity);
    const std::string gen =
        r.witness ? print_key(make_operad("terminal"), r.witness->generator) : "";
    return report_comb(r, "core homomorphism", gen, o, out);
  }
  const OperadPtr op = make_operad(o.operad);
  const CombTree c = core(parse_tree(o.tree, op));
  const std::string text = print_comb_key(comb_key(c));
  if (format_of(o) == Format::json) {
    out << Json{{"core", text}, {"nodes", c.size()}}.dump() << '\n';
  } else {
    out << text << '\n';
  }
  return kExitOk;
}

int cmd_comb(const Options& o, bool bck, std::ostream& out) {
  if (o.check) {
    const auto r = check_comb_comodule_bialgebra(o.max_nodes);
    return report_comb(r, "BCK/CEM comodule bialgebra", r.witness ? print_comb_key(r.witness->generator) : "", o, out);
  }
  const CombTree t = parse_comb(o.tree);
  const auto x = bck ? bck_delta(t) : cem_delta(t);
  const KeyPrinter printer = [](const CanonicalKey& k) { return print_comb_key(k); };
  out << serialize_lincomb(x, printer, format_of(o));
  return kExitOk;
}

}  // namespace

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Operadic trees, their incidence bialgebras and comodule checks",
               "optree"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Help for every subcommand");

  Options o;
  const auto add_operad = [&](CLI::App* s) {
    s->add_option("--operad", o.operad,
                  "id | freemonoid | terminal | terminal-reduced | monoid:FILE "
                  "| poset:FILE | poset:nat | free:FILE | bd:SPEC")
        ->capture_default_str();
  };
  const auto add_bounds = [&](CLI::App* s) {
    s->add_option("--max-nodes", o.max_nodes, "Largest node count")
        ->capture_default_str();
    s->add_option("--max-arity", o.max_arity, "Largest node arity")
        ->capture_default_str();
    s->add_option("--colours", o.colours,
                  "Colour window, comma separated (required for poset:nat)")
        ->delimiter(',');
  };
  const auto add_format = [&](CLI::App* s) {
    s->add_option("--format", o.format, "Output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
  };

  auto* enumerate = app.add_subcommand("enumerate", "List P-trees up to isomorphism");
  add_operad(enumerate);
  add_bounds(enumerate);
  add_format(enumerate);

  auto* coproduct = app.add_subcommand("coproduct", "Comultiply a tree or forest");
  add_operad(coproduct);
  coproduct->add_option("--tree", o.tree, "Tree or ';'-separated forest")->required();
  coproduct->add_option("--kind", o.kind, "Comultiplication")
      ->check(CLI::IsMember({"cuts", "blobs", "coaction"}))
      ->required();
  add_format(coproduct);

  auto* verify_cmd = app.add_subcommand("verify", "Check an axiom on all small trees");
  add_operad(verify_cmd);
  add_bounds(verify_cmd);
  std::vector<std::string> axiom_names{"all"};
  for (Axiom a : all_axioms()) axiom_names.emplace_back(to_string(a));
  verify_cmd->add_option("--axiom", o.axiom, "Axiom name or 'all'")
      ->check(CLI::IsMember(axiom_names))
      ->capture_default_str();
  add_format(verify_cmd);

  auto* fdb = app.add_subcommand("faadibruno", "Faa di Bruno reference formulas");
  fdb->add_option("--kind", o.kind, "mult (cuts) or subst (blobs)")
      ->check(CLI::IsMember({"mult", "subst", "cuts", "blobs"}));
  fdb->add_option("--n", o.n, "Size of the linear tree")->capture_default_str();
  add_format(fdb);

  auto* mould = app.add_subcommand("mould", "Mould calculus checks");
  mould->add_option("--monoid", o.monoid, "Monoid file, or z<N> for Z/N");
  mould->add_option("--op", o.op, "check-duality | right-witness")
      ->check(CLI::IsMember({"check-duality", "right-witness"}))
      ->capture_default_str();
  mould->add_option("--max-len", o.max_len, "Word length bound")
      ->check(CLI::Range(std::size_t{0}, std::size_t{6}))
      ->capture_default_str();
  mould->add_option("--samples", o.samples, "Number of random moulds")
      ->check(CLI::Range(std::size_t{1}, std::size_t{10000}))
      ->capture_default_str();
  mould->add_option("--seed", o.seed, "Sampling seed")->capture_default_str();
  add_format(mould);

  auto* core_cmd = app.add_subcommand("core", "Core comb tree of a P-tree");
  add_operad(core_cmd);
  core_cmd->add_option("--tree", o.tree, "Tree expression");
  core_cmd->add_flag("--check", o.check,
                     "Check the core map against BCK and CEM instead");
  add_bounds(core_cmd);
  add_format(core_cmd);

  auto* bck = app.add_subcommand("bck", "Butcher-Connes-Kreimer coproduct");
  auto* cem = app.add_subcommand("cem", "Calaque-Ebrahimi-Fard-Manchon coproduct");
  for (auto* s : {bck, cem}) {
    s->add_option("--tree", o.tree, "Comb tree such as (()())");
    s->add_flag("--check", o.check,
                "Check the BCK/CEM comodule-bialgebra identities instead");
    s->add_option("--max-nodes", o.max_nodes, "Largest comb tree for --check")
        ->capture_default_str();
    add_format(s);
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  const auto need_tree = [&](const char* cmd) {
    if (!o.check && o.tree.empty()) {
      err << cmd << ": --tree is required\n";
      return false;
    }
    return true;
  };

  try {
    if (enumerate->parsed()) return cmd_enumerate(o, out);
    if (coproduct->parsed()) return cmd_coproduct(o, out);
    if (verify_cmd->parsed()) return cmd_verify(o, out);
    if (fdb->parsed()) return cmd_faadibruno(o, out);
    if (mould->parsed()) return cmd_mould(o, out, err);
    if (core_cmd->parsed()) {
      return need_tree("core") ? cmd_core(o, out) : kExitUsage;
    }
    if (bck->parsed()) return need_tree("bck") ? cmd_comb(o, true, out) : kExitUsage;
    if (cem->parsed()) return need_tree("cem") ? cmd_comb(o, false, out) : kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace optree::cli
