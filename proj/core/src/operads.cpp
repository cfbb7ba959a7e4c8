#include "optree/operads.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <mutex>
#include <numeric>
#include <set>

#include "optree/combinat.hpp"
#include "optree/error.hpp"
#include "optree/io/grammar.hpp"

namespace optree {

namespace {

const Colour kStar = "*";

void check_token(const std::string& name, const char* what) {
  if (name.empty()) {
    throw Error(ErrorCode::malformed_table, std::string("empty ") + what);
  }
  for (char c : name) {
    if (std::string_view(" \t\r\n()[]*:;|,").find(c) != std::string_view::npos) {
      throw Error(ErrorCode::malformed_table,
                  std::string(what) + " '" + name +
                      "' contains a reserved character");
    }
  }
  if (name.find("<=") != std::string::npos) {
    throw Error(ErrorCode::malformed_table,
                std::string(what) + " '" + name + "' contains '<='");
  }
}

// "[tree]" with offsets reported relative to the opening bracket.
PTree parse_bracketed(std::string_view text, const OperadPtr& op) {
  try {
    return parse_tree(text.substr(1, text.size() - 2), op);
  } catch (const SyntaxError& e) {
    throw SyntaxError(e.offset() + 1, e.detail());
  }
}

[[noreturn]] void unknown(const Operad& op, const Operation& b) {
  throw Error(ErrorCode::unknown_operation,
              "'" + b + "' is not an operation of " + op.name());
}

std::optional<std::size_t> parse_natural(std::string_view s) {
  if (s.empty() || (s.size() > 1 && s[0] == '0')) return std::nullopt;
  std::size_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

// ---------------------------------------------------------------------------

class IdentityOperad final : public Operad {
 public:
  std::string name() const override { return "identity"; }
  bool planar() const override { return false; }
  std::optional<std::vector<Colour>> colours() const override {
    return std::vector<Colour>{kStar};
  }
  bool has_colour(const Colour& c) const override { return c == kStar; }
  Profile profile(const Operation& b) const override {
    if (b != "id") unknown(*this, b);
    return {kStar, {kStar}};
  }
  std::vector<Operation> operations_into(const Colour& c,
                                         std::size_t max_arity) const override {
    if (c != kStar || max_arity < 1) return {};
    return {"id"};
  }
  std::optional<std::vector<Operation>> finite_operations() const override {
    return std::vector<Operation>{"id"};
  }
  Operation unit(const Colour&) const override { return "id"; }
  bool unary_only() const override { return true; }

 protected:
  Operation compose_checked(const Operation&,
                            std::span<const Operation>) const override {
    return "id";
  }
};

// One colour, one operation per arity; the token is the arity in decimal.
class ArityOperad final : public Operad {
 public:
  ArityOperad(std::string name, bool planar, std::size_t min_arity)
      : name_(std::move(name)), planar_(planar), min_arity_(min_arity) {}

  std::string name() const override { return name_; }
  bool planar() const override { return planar_; }
  std::optional<std::vector<Colour>> colours() const override {
    return std::vector<Colour>{kStar};
  }
  bool has_colour(const Colour& c) const override { return c == kStar; }
  Profile profile(const Operation& b) const override {
    const auto n = parse_natural(b);
    if (!n || *n < min_arity_) unknown(*this, b);
    return {kStar, std::vector<Colour>(*n, kStar)};
  }
  std::vector<Operation> operations_into(const Colour& c,
                                         std::size_t max_arity) const override {
    std::vector<Operation> ops;
    if (c != kStar) return ops;
    for (std::size_t k = min_arity_; k <= max_arity; ++k) {
      ops.push_back(std::to_string(k));
    }
    return ops;
  }
  Operation unit(const Colour&) const override { return "1"; }

 protected:
  Operation compose_checked(const Operation&,
                            std::span<const Operation> args) const override {
    std::size_t total = 0;
    for (const auto& a : args) total += *parse_natural(a);
    return std::to_string(total);
  }

 private:
  std::string name_;
  bool planar_;
  std::size_t min_arity_;
};

class MonoidOperad final : public Operad {
 public:
  explicit MonoidOperad(FiniteMonoid m) : monoid_(std::move(m)) {}

  const FiniteMonoid& monoid() const { return monoid_; }

  std::string name() const override { return "monoid"; }
  bool planar() const override { return false; }
  std::optional<std::vector<Colour>> colours() const override {
    return std::vector<Colour>{kStar};
  }
  bool has_colour(const Colour& c) const override { return c == kStar; }
  Profile profile(const Operation& b) const override {
    index(b);
    return {kStar, {kStar}};
  }
  std::vector<Operation> operations_into(const Colour& c,
                                         std::size_t max_arity) const override {
    if (c != kStar || max_arity < 1) return {};
    return monoid_.elements;
  }
  std::optional<std::vector<Operation>> finite_operations() const override {
    return monoid_.elements;
  }
  Operation unit(const Colour&) const override {
    return monoid_.elements[monoid_.identity()];
  }
  bool unary_only() const override { return true; }
  bool word_syntax() const override { return true; }

 protected:
  Operation compose_checked(const Operation& b,
                            std::span<const Operation> args) const override {
    return monoid_.elements[monoid_.multiply(index(args[0]), index(b))];
  }

 private:
  std::size_t index(const Operation& b) const {
    const auto& els = monoid_.elements;
    const auto it = std::find(els.begin(), els.end(), b);
    if (it == els.end()) unknown(*this, b);
    return static_cast<std::size_t>(it - els.begin());
  }

  FiniteMonoid monoid_;
};

// Unary operations "a<=b" between related colours. The relation is supplied
// as a predicate so that finite and infinite posets share the code.
class PosetOperadBase : public Operad {
 public:
  bool planar() const override { return false; }
  bool unary_only() const override { return true; }
  bool word_syntax() const override { return true; }

  Profile profile(const Operation& b) const override {
    const auto pos = b.find("<=");
    if (pos == std::string::npos) unknown(*this, b);
    Colour lo = b.substr(0, pos);
    Colour hi = b.substr(pos + 2);
    if (!has_colour(lo) || !has_colour(hi) || !related(lo, hi)) {
      unknown(*this, b);
    }
    return {std::move(hi), {std::move(lo)}};
  }
  Operation unit(const Colour& c) const override {
    if (!has_colour(c)) {
      throw Error(ErrorCode::unknown_colour, "'" + c + "' is not a colour");
    }
    return c + "<=" + c;
  }

  virtual bool related(const Colour& lo, const Colour& hi) const = 0;

 protected:
  Operation compose_checked(const Operation& b,
                            std::span<const Operation> args) const override {
    const Profile outer = profile(b);
    const Profile inner = profile(args[0]);
    return inner.inputs[0] + "<=" + outer.output;
  }
};

class FinitePosetOperad final : public PosetOperadBase {
 public:
  explicit FinitePosetOperad(FinitePoset p) : poset_(std::move(p)) {}

  std::string name() const override { return "poset"; }
  std::optional<std::vector<Colour>> colours() const override {
    return poset_.elements;
  }
  bool has_colour(const Colour& c) const override {
    return std::find(poset_.elements.begin(), poset_.elements.end(), c) !=
           poset_.elements.end();
  }
  bool related(const Colour& lo, const Colour& hi) const override {
    return poset_.le[poset_.index_of(lo)][poset_.index_of(hi)];
  }
  std::vector<Operation> operations_into(const Colour& c,
                                         std::size_t max_arity) const override {
    std::vector<Operation> ops;
    if (max_arity < 1 || !has_colour(c)) return ops;
    for (const auto& a : poset_.elements) {
      if (related(a, c)) ops.push_back(a + "<=" + c);
    }
    return ops;
  }
  std::optional<std::vector<Operation>> finite_operations() const override {
    std::vector<Operation> ops;
    for (const auto& c : poset_.elements) {
      auto into = operations_into(c, 1);
      ops.insert(ops.end(), into.begin(), into.end());
    }
    return ops;
  }

 private:
  FinitePoset poset_;
};

class NaturalsPosetOperad final : public PosetOperadBase {
 public:
  std::string name() const override { return "poset:nat"; }
  std::optional<std::vector<Colour>> colours() const override {
    return std::nullopt;
  }
  bool has_colour(const Colour& c) const override {
    return parse_natural(c).has_value();
  }
  bool related(const Colour& lo, const Colour& hi) const override {
    return *parse_natural(lo) <= *parse_natural(hi);
  }
  std::vector<Operation> operations_into(const Colour& c,
                                         std::size_t max_arity) const override {
    std::vector<Operation> ops;
    const auto hi = parse_natural(c);
    if (max_arity < 1 || !hi) return ops;
    for (std::size_t a = 0; a <= *hi; ++a) {
      ops.push_back(std::to_string(a) + "<=" + c);
    }
    return ops;
  }
};

// Generators only; used as the decoration source for free-operad trees.
class SignatureCollection final : public Operad {
 public:
  explicit SignatureCollection(Signature sig) : sig_(std::move(sig)) {
    for (const auto& c : sig_.colours) check_token(c, "colour");
    std::set<Colour> colour_set(sig_.colours.begin(), sig_.colours.end());
    if (colour_set.size() != sig_.colours.size()) {
      throw Error(ErrorCode::malformed_table, "duplicate colour");
    }
    for (const auto& g : sig_.generators) {
      check_token(g.name, "generator name");
      if (!colour_set.count(g.output)) {
        throw Error(ErrorCode::malformed_table,
                    "generator '" + g.name + "' has an unknown output colour");
      }
      for (const auto& c : g.inputs) {
        if (!colour_set.count(c)) {
          throw Error(ErrorCode::malformed_table,
                      "generator '" + g.name + "' has an unknown input colour");
        }
      }
      if (!by_name_.emplace(g.name, g).second) {
        throw Error(ErrorCode::malformed_table,
                    "duplicate generator '" + g.name + "'");
      }
    }
  }

  std::string name() const override { return "signature"; }
  bool planar() const override { return true; }
  std::optional<std::vector<Colour>> colours() const override {
    return sig_.colours;
  }
  bool has_colour(const Colour& c) const override {
    return std::find(sig_.colours.begin(), sig_.colours.end(), c) !=
           sig_.colours.end();
  }
  Profile profile(const Operation& b) const override {
    const auto it = by_name_.find(b);
    if (it == by_name_.end()) unknown(*this, b);
    return {it->second.output, it->second.inputs};
  }
  std::vector<Operation> operations_into(const Colour& c,
                                         std::size_t max_arity) const override {
    std::vector<Operation> ops;
    for (const auto& g : sig_.generators) {
      if (g.output == c && g.inputs.size() <= max_arity) ops.push_back(g.name);
    }
    return ops;
  }
  Operation unit(const Colour&) const override {
    throw Error(ErrorCode::unsupported_nesting,
                "a signature has no units; use the free operad");
  }

 protected:
  Operation compose_checked(const Operation&,
                            std::span<const Operation>) const override {
    throw Error(ErrorCode::unsupported_nesting,
                "a signature has no composition; use the free operad");
  }

 private:
  Signature sig_;
  std::map<std::string, Signature::Generator> by_name_;
};

class FreeOperad final : public Operad {
 public:
  explicit FreeOperad(Signature sig)
      : gens_(std::make_shared<SignatureCollection>(std::move(sig))) {}

  std::string name() const override { return "free"; }
  bool planar() const override { return true; }
  std::optional<std::vector<Colour>> colours() const override {
    return gens_->colours();
  }
  bool has_colour(const Colour& c) const override {
    return gens_->has_colour(c);
  }
  Profile profile(const Operation& b) const override {
    const PTree t = decode(b);
    Profile p{t.root_colour(), {}};
    for (EdgeId e : leaves(t.shape())) p.inputs.push_back(t.colour(e));
    return p;
  }
  // Trees of generators with at most `max_arity` leaves and at most
  // `max_arity` nodes.
  std::vector<Operation> operations_into(const Colour& c,
                                         std::size_t max_arity) const override {
    std::vector<Operation> ops;
    for (const auto& key :
         enumerate_ptrees_rooted(gens_, c, max_arity, max_arity)) {
      const PTree t = from_key(gens_, key);
      if (leaves(t.shape()).size() <= max_arity) ops.push_back(key.text);
    }
    return ops;
  }
  // Every arity has infinitely many operations once a generator can be
  // grafted, so labels are never inferred.
  std::optional<Operation> infer(
      std::size_t, const std::optional<Colour>&,
      std::span<const std::optional<Colour>>) const override {
    return std::nullopt;
  }
  Operation unit(const Colour& c) const override {
    return canonical_key(trivial_ptree(gens_, c)).text;
  }
  std::string display_operation(const Operation& b) const override {
    const PTree t = decode(b);
    if (t.node_count() == 1) return t.label(0);
    return "[" + print_tree(t) + "]";
  }
  Operation parse_operation(std::string_view text) const override {
    if (!text.empty() && text.front() == '[' && text.back() == ']') {
      return canonical_key(parse_bracketed(text, gens_)).text;
    }
    return canonical_key(corolla(gens_, Operation(text))).text;
  }

 protected:
  Operation compose_checked(const Operation& b,
                            std::span<const Operation> args) const override {
    const PTree base = decode(b);
    const auto leaf_edges = leaves(base.shape());
    // args[i] is grafted onto the i-th leaf.
    std::vector<PTree> grafted;
    grafted.reserve(args.size());
    for (const auto& a : args) grafted.push_back(decode(a));
    return canonical_key(graft(base, leaf_edges, grafted)).text;
  }

 private:
  PTree decode(const Operation& b) const {
    try {
      return from_key(gens_, CanonicalKey{b});
    } catch (const Error&) {
      unknown(*this, b);
    }
  }

  static PTree graft(const PTree& base, const std::vector<EdgeId>& leaf_edges,
                     const std::vector<PTree>& tops) {
    const Tree& s = base.shape();
    RawTree raw;
    std::vector<Colour> colours(base.colours().begin(), base.colours().end());
    std::vector<Operation> labels(base.labels().begin(), base.labels().end());
    for (NodeId n = 0; n < s.node_count(); ++n) {
      const auto ins = s.inputs(n);
      raw.nodes.push_back({s.output(n), {ins.begin(), ins.end()}});
    }
    raw.root = s.root();
    for (std::size_t i = 0; i < leaf_edges.size(); ++i) {
      const PTree& top = tops[i];
      const Tree& ts = top.shape();
      std::vector<EdgeId> map(ts.edge_count());
      for (EdgeId e = 0; e < ts.edge_count(); ++e) {
        if (e == ts.root()) {
          map[e] = leaf_edges[i];
        } else {
          map[e] = static_cast<EdgeId>(colours.size());
          colours.push_back(top.colour(e));
        }
      }
      for (NodeId n = 0; n < ts.node_count(); ++n) {
        RawTree::Node node{map[ts.output(n)], {}};
        for (EdgeId e : ts.inputs(n)) node.inputs.push_back(map[e]);
        raw.nodes.push_back(std::move(node));
        labels.push_back(top.label(n));
      }
    }
    raw.edge_count = colours.size();
    return decorate(validate_tree(raw), std::move(labels), std::move(colours),
                    base.operad());
  }

  std::shared_ptr<const SignatureCollection> gens_;
};

class BdOperad final : public Operad {
 public:
  explicit BdOperad(OperadPtr inner) : inner_(std::move(inner)) {
    if (!inner_) {
      throw Error(ErrorCode::unsupported_nesting, "bd of a null operad");
    }
  }

  const OperadPtr& inner() const { return inner_; }

  std::string name() const override { return "bd(" + inner_->name() + ")"; }
  bool planar() const override { return true; }
  std::optional<std::vector<Colour>> colours() const override {
    return inner_->finite_operations();
  }
  bool has_colour(const Colour& c) const override {
    try {
      inner_->profile(c);
      return true;
    } catch (const Error&) {
      return false;
    }
  }
  Profile profile(const Operation& b) const override {
    const PTree t = decode(b);
    Profile p{residue(*inner_, t), {}};
    p.inputs.assign(t.labels().begin(), t.labels().end());
    return p;
  }
  // Inner trees with at most `max_arity` nodes and inner arities at most
  // `max_arity`, whose residue is `c`.
  std::vector<Operation> operations_into(const Colour& c,
                                         std::size_t max_arity) const override {
    {
      std::lock_guard lock(cache_mutex_);
      if (auto it = ops_cache_.find({c, max_arity}); it != ops_cache_.end()) {
        return it->second;
      }
    }
    auto ops = compute_operations_into(c, max_arity);
    std::lock_guard lock(cache_mutex_);
    ops_cache_.emplace(std::pair{c, max_arity}, ops);
    return ops;
  }
  // Over a unary inner operad the operations of arity n are the linear
  // trees with n nodes, so the bounded search is exhaustive. Otherwise the
  // candidates are unbounded and labels must be written out.
  std::optional<Operation> infer(
      std::size_t arity, const std::optional<Colour>& output,
      std::span<const std::optional<Colour>> inputs) const override {
    if (!inner_->unary_only()) return std::nullopt;
    return Operad::infer(arity, output, inputs);
  }
  Operation unit(const Colour& c) const override {
    return canonical_key(corolla(inner_, c)).text;
  }
  std::string display_operation(const Operation& b) const override {
    return "[" + print_tree(decode(b)) + "]";
  }
  Operation parse_operation(std::string_view text) const override {
    if (text.size() < 2 || text.front() != '[' || text.back() != ']') {
      throw SyntaxError(0, "Baez-Dolan operations are written as [tree]");
    }
    return canonical_key(parse_bracketed(text, inner_)).text;
  }
  std::string display_colour(const Colour& c) const override {
    return inner_->display_operation(c);
  }
  Colour parse_colour(std::string_view text) const override {
    return inner_->parse_operation(text);
  }

 protected:
  Operation compose_checked(const Operation& b,
                            std::span<const Operation> args) const override {
    const PTree skeleton = decode(b);
    std::vector<PTree> refinements;
    refinements.reserve(args.size());
    for (const auto& a : args) refinements.push_back(decode(a));
    return canonical_key(substitute_nodes(skeleton, refinements)).text;
  }

 private:
  std::vector<Operation> compute_operations_into(const Colour& c,
                                                 std::size_t max_arity) const {
    std::vector<Operation> ops;
    if (!has_colour(c)) return ops;
    const Colour root = inner_->profile(c).output;
    for (const auto& key :
         enumerate_ptrees_rooted(inner_, root, max_arity, max_arity)) {
      if (residue(*inner_, from_key(inner_, key)) == c) {
        ops.push_back(key.text);
      }
    }
    return ops;
  }

  PTree decode(const Operation& b) const {
    try {
      return from_key(inner_, CanonicalKey{b});
    } catch (const Error&) {
      unknown(*this, b);
    }
  }

  OperadPtr inner_;
  mutable std::mutex cache_mutex_;
  mutable std::map<std::pair<Colour, std::size_t>, std::vector<Operation>>
      ops_cache_;
};

}  // namespace

std::size_t FiniteMonoid::identity() const {
  for (std::size_t e = 0; e < elements.size(); ++e) {
    bool ok = true;
    for (std::size_t a = 0; a < elements.size() && ok; ++a) {
      ok = table[e][a] == a && table[a][e] == a;
    }
    if (ok) return e;
  }
  throw Error(ErrorCode::malformed_table, "monoid has no identity element");
}

std::size_t FiniteMonoid::index_of(const std::string& name) const {
  const auto it = std::find(elements.begin(), elements.end(), name);
  if (it == elements.end()) {
    throw Error(ErrorCode::unknown_operation,
                "'" + name + "' is not a monoid element");
  }
  return static_cast<std::size_t>(it - elements.begin());
}

FiniteMonoid make_monoid(std::vector<std::string> elements,
                         std::vector<std::vector<std::size_t>> table) {
  const std::size_t n = elements.size();
  if (n == 0) throw Error(ErrorCode::malformed_table, "empty monoid");
  for (const auto& e : elements) check_token(e, "monoid element");
  if (std::set<std::string>(elements.begin(), elements.end()).size() != n) {
    throw Error(ErrorCode::malformed_table, "duplicate monoid element");
  }
  if (table.size() != n) {
    throw Error(ErrorCode::malformed_table, "table is not square");
  }
  for (const auto& row : table) {
    if (row.size() != n) {
      throw Error(ErrorCode::malformed_table, "table is not square");
    }
    for (std::size_t v : row) {
      if (v >= n) throw Error(ErrorCode::malformed_table, "entry out of range");
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t c = 0; c < n; ++c) {
        if (table[table[a][b]][c] != table[a][table[b][c]]) {
          throw Error(ErrorCode::malformed_table,
                      "multiplication is not associative at (" + elements[a] +
                          ", " + elements[b] + ", " + elements[c] + ")");
        }
      }
    }
  }
  FiniteMonoid m{std::move(elements), std::move(table)};
  m.identity();
  return m;
}

FiniteMonoid cyclic_monoid(std::size_t n) {
  std::vector<std::string> elements;
  std::vector<std::vector<std::size_t>> table(n, std::vector<std::size_t>(n));
  for (std::size_t i = 0; i < n; ++i) {
    elements.push_back(std::to_string(i));
    for (std::size_t j = 0; j < n; ++j) table[i][j] = (i + j) % n;
  }
  return make_monoid(std::move(elements), std::move(table));
}

std::size_t FinitePoset::index_of(const std::string& name) const {
  const auto it = std::find(elements.begin(), elements.end(), name);
  if (it == elements.end()) {
    throw Error(ErrorCode::unknown_colour,
                "'" + name + "' is not a poset element");
  }
  return static_cast<std::size_t>(it - elements.begin());
}

FinitePoset make_poset(
    std::vector<std::string> elements,
    const std::vector<std::pair<std::string, std::string>>& le) {
  const std::size_t n = elements.size();
  for (const auto& e : elements) check_token(e, "poset element");
  if (std::set<std::string>(elements.begin(), elements.end()).size() != n) {
    throw Error(ErrorCode::malformed_table, "duplicate poset element");
  }
  FinitePoset p{std::move(elements), std::vector<std::vector<bool>>(
                                         n, std::vector<bool>(n, false))};
  for (std::size_t i = 0; i < n; ++i) p.le[i][i] = true;
  for (const auto& [a, b] : le) {
    std::size_t ia = 0;
    std::size_t ib = 0;
    try {
      ia = p.index_of(a);
      ib = p.index_of(b);
    } catch (const Error& e) {
      throw Error(ErrorCode::malformed_table, e.message());
    }
    p.le[ia][ib] = true;
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (a != b && p.le[a][b] && p.le[b][a]) {
        throw Error(ErrorCode::malformed_table,
                    "relation is not antisymmetric at (" + p.elements[a] +
                        ", " + p.elements[b] + ")");
      }
      for (std::size_t c = 0; c < n; ++c) {
        if (p.le[a][b] && p.le[b][c] && !p.le[a][c]) {
          throw Error(ErrorCode::malformed_table,
                      "relation is not transitive at (" + p.elements[a] +
                          ", " + p.elements[b] + ", " + p.elements[c] + ")");
        }
      }
    }
  }
  return p;
}

OperadPtr identity_operad() { return std::make_shared<IdentityOperad>(); }

OperadPtr free_monoid_operad() {
  return std::make_shared<ArityOperad>("freemonoid", true, 0);
}

OperadPtr terminal_operad(bool reduced) {
  return std::make_shared<ArityOperad>(
      reduced ? "terminal-reduced" : "terminal", false, reduced ? 1 : 0);
}

OperadPtr monoid_operad(FiniteMonoid m) {
  return std::make_shared<MonoidOperad>(std::move(m));
}

OperadPtr poset_operad(FinitePoset p) {
  return std::make_shared<FinitePosetOperad>(std::move(p));
}

OperadPtr naturals_poset_operad() {
  return std::make_shared<NaturalsPosetOperad>();
}

OperadPtr free_operad(Signature sig) {
  return std::make_shared<FreeOperad>(std::move(sig));
}

OperadPtr bd_operad(OperadPtr inner) {
  return std::make_shared<BdOperad>(std::move(inner));
}

OperadPtr bd_inner(const Operad& op) {
  if (const auto* bd = dynamic_cast<const BdOperad*>(&op)) return bd->inner();
  return nullptr;
}

const FiniteMonoid* operad_monoid(const Operad& op) {
  if (const auto* m = dynamic_cast<const MonoidOperad*>(&op)) {
    return &m->monoid();
  }
  return nullptr;
}

Operation residue(const Operad& op, const PTree& t) {
  const Tree& s = t.shape();
  if (s.is_trivial()) return op.unit(t.root_colour());
  // Children before parents: reverse preorder.
  const auto order = s.preorder();
  std::vector<Operation> folded(s.node_count());
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const NodeId n = *it;
    std::vector<Operation> args;
    args.reserve(s.arity(n));
    for (EdgeId e : s.inputs(n)) {
      const NodeId p = s.producer(e);
      args.push_back(p == kNoNode ? op.unit(t.colour(e)) : folded[p]);
    }
    folded[n] = op.compose(t.label(n), args);
  }
  return folded[s.root_node()];
}

Operation residue(const PTree& t) { return residue(*t.operad(), t); }

PTree substitute_nodes(const PTree& skeleton,
                       const std::vector<PTree>& refinements) {
  const Tree& s = skeleton.shape();
  if (refinements.size() != s.node_count()) {
    throw Error(ErrorCode::arity_mismatch,
                "one refinement per skeleton node is required");
  }
  // Skeleton edges keep their ids; trivial refinements merge two of them.
  std::vector<EdgeId> parent(s.edge_count());
  std::iota(parent.begin(), parent.end(), EdgeId{0});
  auto find = [&](EdgeId e) {
    while (parent[e] != e) e = parent[e] = parent[parent[e]];
    return e;
  };
  std::vector<Colour> colours(skeleton.colours().begin(),
                              skeleton.colours().end());
  std::vector<RawTree::Node> nodes;
  std::vector<Operation> labels;
  OperadPtr inner;

  for (NodeId n = 0; n < s.node_count(); ++n) {
    const PTree& r = refinements[n];
    if (!inner) inner = r.operad();
    const Tree& rs = r.shape();
    const auto r_leaves = leaves(rs);
    const auto ins = s.inputs(n);
    if (r_leaves.size() != ins.size()) {
      throw Error(ErrorCode::residue_mismatch,
                  "refinement of node " + std::to_string(n) + " has " +
                      std::to_string(r_leaves.size()) + " leaves, expected " +
                      std::to_string(ins.size()));
    }
    if (rs.is_trivial()) {
      parent[find(ins[0])] = find(s.output(n));
      continue;
    }
    std::vector<EdgeId> map(rs.edge_count(), kNoNode);
    map[rs.root()] = s.output(n);
    for (std::size_t i = 0; i < r_leaves.size(); ++i) map[r_leaves[i]] = ins[i];
    for (EdgeId e = 0; e < rs.edge_count(); ++e) {
      if (map[e] != kNoNode) continue;
      map[e] = static_cast<EdgeId>(colours.size());
      colours.push_back(r.colour(e));
      parent.push_back(map[e]);
    }
    for (NodeId m = 0; m < rs.node_count(); ++m) {
      RawTree::Node node{map[rs.output(m)], {}};
      for (EdgeId e : rs.inputs(m)) node.inputs.push_back(map[e]);
      nodes.push_back(std::move(node));
      labels.push_back(r.label(m));
    }
  }
  if (!inner) inner = skeleton.operad();

  // Compact merged edges.
  std::vector<EdgeId> compact(colours.size(), kNoNode);
  std::vector<Colour> out_colours;
  for (EdgeId e = 0; e < colours.size(); ++e) {
    const EdgeId rep = find(e);
    if (compact[rep] == kNoNode) {
      compact[rep] = static_cast<EdgeId>(out_colours.size());
      out_colours.push_back(colours[rep]);
    }
    compact[e] = compact[rep];
  }
  RawTree raw;
  raw.edge_count = out_colours.size();
  raw.root = compact[s.root()];
  for (auto& node : nodes) {
    node.output = compact[node.output];
    for (auto& e : node.inputs) e = compact[e];
  }
  raw.nodes = std::move(nodes);
  return decorate(validate_tree(raw), std::move(labels), std::move(out_colours),
                  std::move(inner));
}

}  // namespace optree
