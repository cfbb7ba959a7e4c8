#include "optree/special/comb.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>

#include "optree/combinat.hpp"
#include "optree/error.hpp"
#include "optree/io/serialize.hpp"
#include "optree/operads.hpp"

namespace optree {

CombTree::CombTree(std::vector<std::size_t> parent)
    : parent_(std::move(parent)), children_(parent_.size()) {
  for (std::size_t i = 0; i < parent_.size(); ++i) {
    const std::size_t p = parent_[i];
    if (p == kNone) {
      if (root_ != kNone) {
        throw Error(ErrorCode::axiom3_violation, "comb tree with two roots");
      }
      root_ = i;
    } else if (p >= parent_.size()) {
      throw Error(ErrorCode::bad_reference, "parent out of range");
    } else {
      children_[p].push_back(i);
    }
  }
  if (!parent_.empty() && root_ == kNone) {
    throw Error(ErrorCode::axiom3_violation, "comb tree without a root");
  }
  // Every node must reach the root.
  std::size_t reached = 0;
  std::vector<std::size_t> stack;
  if (root_ != kNone) stack.push_back(root_);
  while (!stack.empty()) {
    const std::size_t n = stack.back();
    stack.pop_back();
    ++reached;
    for (std::size_t c : children_[n]) stack.push_back(c);
  }
  if (reached != parent_.size()) {
    throw Error(ErrorCode::axiom3_violation, "comb tree with a cycle");
  }
}

namespace {

// Key of the subtree at `n` restricted to nodes with keep[] set.
std::string restricted_key(const CombTree& t, std::size_t n,
                           const std::vector<bool>* keep) {
  std::vector<std::string> parts;
  for (std::size_t c : t.children(n)) {
    if (!keep || (*keep)[c]) parts.push_back(restricted_key(t, c, keep));
  }
  std::sort(parts.begin(), parts.end());
  std::string out = "(";
  for (const auto& p : parts) out += p;
  out += ')';
  return out;
}

}  // namespace

CanonicalKey comb_key(const CombTree& t) {
  if (t.empty()) return {};
  return {restricted_key(t, t.root(), nullptr)};
}

CombTree parse_comb(std::string_view text) {
  std::vector<std::size_t> parent;
  std::vector<std::size_t> open;
  bool done = false;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    if ((c == '1' || c == '|') && parent.empty() && !done) {
      done = true;
      continue;
    }
    if (done) throw SyntaxError(i, "unexpected text after comb tree");
    if (c == '(') {
      parent.push_back(open.empty() ? CombTree::kNone : open.back());
      open.push_back(parent.size() - 1);
    } else if (c == ')') {
      if (open.empty()) throw SyntaxError(i, "unbalanced ')'");
      open.pop_back();
      if (open.empty()) done = true;
    } else {
      throw SyntaxError(i, std::string("unexpected '") + c + "' in comb tree");
    }
  }
  if (!open.empty()) {
    throw SyntaxError(text.size(), "expected ')' before end of input");
  }
  return CombTree(std::move(parent));
}

std::size_t comb_key_size(const CanonicalKey& key) {
  return static_cast<std::size_t>(
      std::count(key.text.begin(), key.text.end(), '('));
}

std::string print_comb_key(const CanonicalKey& key) {
  return key.text.empty() ? "1" : key.text;
}

CombTree core(const PTree& t) {
  const Tree& s = t.shape();
  std::vector<std::size_t> parent(s.node_count());
  for (NodeId n = 0; n < s.node_count(); ++n) {
    const NodeId below = s.consumer(s.output(n));
    parent[n] = below == kNoNode ? CombTree::kNone : below;
  }
  return CombTree(std::move(parent));
}

Forest comb_forest(std::vector<CanonicalKey> keys) {
  std::erase_if(keys, [](const CanonicalKey& k) { return k.text.empty(); });
  return Forest(std::move(keys));
}

LinComb<Tensor2> bck_delta(const CombTree& t) {
  LinComb<Tensor2> out;
  if (t.empty()) {
    out.add({}, 1);
    return out;
  }
  const std::size_t n = t.size();
  std::vector<std::string> sub(n);
  for (std::size_t i = 0; i < n; ++i) sub[i] = restricted_key(t, i, nullptr);
  // A trunk is a set of nodes closed under taking parents.
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    std::vector<bool> trunk(n);
    bool closed = true;
    for (std::size_t i = 0; i < n; ++i) trunk[i] = (mask >> i) & 1;
    for (std::size_t i = 0; i < n && closed; ++i) {
      if (trunk[i] && t.parent(i) != CombTree::kNone && !trunk[t.parent(i)]) {
        closed = false;
      }
    }
    if (!closed) continue;
    std::vector<CanonicalKey> crown;
    for (std::size_t i = 0; i < n; ++i) {
      const std::size_t p = t.parent(i);
      const bool top = p == CombTree::kNone ? !trunk[i] : trunk[p] && !trunk[i];
      if (top) crown.push_back({sub[i]});
    }
    Forest trunk_forest;
    if (trunk[t.root()]) {
      trunk_forest = Forest{CanonicalKey{restricted_key(t, t.root(), &trunk)}};
    }
    out.add({Forest(std::move(crown)), std::move(trunk_forest)}, 1);
  }
  return out;
}

LinComb<Tensor2> cem_delta(const CombTree& t) {
  if (t.empty()) {
    throw Error(ErrorCode::empty_tree, "the CEM coproduct needs a node");
  }
  const std::size_t n = t.size();
  std::vector<std::size_t> edges;  // child end of each edge
  for (std::size_t i = 0; i < n; ++i) {
    if (t.parent(i) != CombTree::kNone) edges.push_back(i);
  }
  LinComb<Tensor2> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << edges.size());
       ++mask) {
    // The top of a node's block: climb while the edge below is kept.
    std::vector<bool> kept(n, false);
    for (std::size_t j = 0; j < edges.size(); ++j) {
      if ((mask >> j) & 1) kept[edges[j]] = true;
    }
    std::vector<std::size_t> top(n);
    for (std::size_t i = 0; i < n; ++i) {
      std::size_t x = i;
      while (kept[x]) x = t.parent(x);
      top[i] = x;
    }
    std::vector<CanonicalKey> blocks;
    std::vector<std::size_t> block_of(n);
    std::vector<std::size_t> tops;
    for (std::size_t i = 0; i < n; ++i) {
      if (top[i] != i) continue;
      block_of[i] = tops.size();
      tops.push_back(i);
      std::vector<bool> in(n);
      for (std::size_t j = 0; j < n; ++j) in[j] = top[j] == i;
      blocks.push_back({restricted_key(t, i, &in)});
    }
    std::vector<std::size_t> parent(tops.size(), CombTree::kNone);
    for (std::size_t b = 0; b < tops.size(); ++b) {
      const std::size_t p = t.parent(tops[b]);
      if (p != CombTree::kNone) parent[b] = block_of[top[p]];
    }
    out.add({Forest(std::move(blocks)),
             Forest{comb_key(CombTree(std::move(parent)))}},
            1);
  }
  return out;
}

std::vector<CanonicalKey> enumerate_comb_trees(std::size_t max_nodes) {
  std::set<CanonicalKey> all;
  std::vector<CombTree> layer;
  if (max_nodes >= 1) layer.push_back(CombTree({CombTree::kNone}));
  for (std::size_t size = 1; size <= max_nodes; ++size) {
    std::set<CanonicalKey> seen;
    std::vector<CombTree> next;
    for (const auto& t : layer) {
      all.insert(comb_key(t));
      if (size == max_nodes) continue;
      std::vector<std::size_t> parent(t.size());
      for (std::size_t i = 0; i < t.size(); ++i) parent[i] = t.parent(i);
      for (std::size_t i = 0; i < t.size(); ++i) {
        auto grown = parent;
        grown.push_back(i);
        CombTree g(std::move(grown));
        if (seen.insert(comb_key(g)).second) next.push_back(std::move(g));
      }
    }
    layer = std::move(next);
  }
  return {all.begin(), all.end()};
}

namespace {

const KeyPrinter& comb_printer() {
  static const KeyPrinter p = [](const CanonicalKey& k) {
    return print_comb_key(k);
  };
  return p;
}

template <typename Basis>
bool record(CombReport& report, const char* check, const CanonicalKey& gen,
            const LinComb<Basis>& lhs, const LinComb<Basis>& rhs) {
  if (lhs == rhs) return true;
  report.passed = false;
  report.check = check;
  report.witness =
      Witness{gen, serialize_lincomb(lhs, comb_printer(), Format::text),
              serialize_lincomb(rhs, comb_printer(), Format::text),
              serialize_lincomb(lhs - rhs, comb_printer(), Format::text)};
  return false;
}

LinComb<Tensor2> core_image(const OperadPtr& op, const LinComb<Tensor2>& x,
                            const CoreMap& core_map) {
  const auto image = [&](const Forest& f) {
    std::vector<CanonicalKey> keys;
    for (const auto& k : f.keys()) keys.push_back(comb_key(core_map(from_key(op, k))));
    return comb_forest(std::move(keys));
  };
  LinComb<Tensor2> out;
  for (const auto& [t, c] : x.terms()) out.add({image(t.left), image(t.right)}, c);
  return out;
}

}  // namespace

CombReport check_core_homomorphism(std::size_t max_nodes,
                                   std::size_t max_arity,
                                   const CoreMap& core_map) {
  const CoreMap shave = core_map ? core_map : CoreMap(core);
  const OperadPtr op = terminal_operad(false);
  CombReport report;
  for (const auto& key : enumerate_ptrees(op, max_nodes, max_arity)) {
    const PTree t = from_key(op, key);
    const CombTree c = shave(t);
    ++report.checked;
    if (!record(report, "core (x) core of cuts = BCK of core", key,
                core_image(op, delta_tree(CoalgebraKind::cuts, t), shave),
                bck_delta(c))) {
      break;
    }
    if (t.is_trivial()) continue;
    if (!record(report, "core (x) core of blobs = CEM of core", key,
                core_image(op, delta_tree(CoalgebraKind::blobs, t), shave),
                cem_delta(c))) {
      break;
    }
  }
  return report;
}

CombReport check_comb_comodule_bialgebra(std::size_t max_nodes) {
  const ForestMap bck = extend_multiplicatively(
      [](const CanonicalKey& k) { return bck_delta(parse_comb(k.text)); });
  const ForestMap cem = extend_multiplicatively(
      [](const CanonicalKey& k) { return cem_delta(parse_comb(k.text)); });
  const Structure::CounitMap eps_bck = [](const Forest& f) {
    return Rational(f.empty() ? 1 : 0);
  };
  const Structure::CounitMap eps_cem = [](const Forest& f) {
    for (const auto& k : f.keys()) {
      if (comb_key_size(k) != 1) return Rational(0);
    }
    return Rational(1);
  };
  CombReport report;
  for (const auto& key : enumerate_comb_trees(max_nodes)) {
    const Forest single{key};
    const LinComb<Forest> x(single);
    const auto d = bck(single);
    const auto g = cem(single);
    ++report.checked;
    const bool ok =
        record(report, "BCK coassociativity", key, apply_left(bck, d),
               apply_right(bck, d)) &&
        record(report, "BCK left counit", key, counit_left(eps_bck, d), x) &&
        record(report, "BCK right counit", key, counit_right(eps_bck, d), x) &&
        record(report, "CEM coassociativity", key, apply_left(cem, g),
               apply_right(cem, g)) &&
        record(report, "CEM left counit", key, counit_left(eps_cem, g), x) &&
        record(report, "CEM right counit", key, counit_right(eps_cem, g), x) &&
        record(report, "comodule bialgebra", key, apply_right(bck, g),
               mu13_gamma_gamma(cem, d)) &&
        record(report, "comodule counit", key, counit_right(eps_bck, g),
               LinComb<Forest>{});
    if (!ok) break;
  }
  return report;
}

}  // namespace optree
