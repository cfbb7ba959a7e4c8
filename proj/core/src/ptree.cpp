#include "optree/ptree.hpp"

#include <algorithm>
#include <map>
#include <utility>

#include "optree/error.hpp"

namespace optree {

namespace {

void append_field(std::string& out, std::string_view s) {
  out += std::to_string(s.size());
  out += ':';
  out += s;
}

// Key grammar:
//   key   := 'T' field            (trivial tree; field = colour)
//          | node
//   node  := 'N' field field '(' child* ')'   (label, output colour)
//   child := 'L' field | node
//   field := <decimal length> ':' <bytes>
std::string node_key(const PTree& t, NodeId n) {
  const Tree& s = t.shape();
  std::vector<std::string> children;
  children.reserve(s.arity(n));
  for (EdgeId e : s.inputs(n)) {
    const NodeId p = s.producer(e);
    if (p == kNoNode) {
      std::string leaf = "L";
      append_field(leaf, t.colour(e));
      children.push_back(std::move(leaf));
    } else {
      children.push_back(node_key(t, p));
    }
  }
  if (!t.operad()->planar()) std::sort(children.begin(), children.end());
  std::string out = "N";
  append_field(out, t.label(n));
  append_field(out, t.colour(s.output(n)));
  out += '(';
  for (const auto& c : children) out += c;
  out += ')';
  return out;
}

class KeyReader {
 public:
  explicit KeyReader(std::string_view text) : text_(text) {}

  char peek() const {
    if (pos_ >= text_.size()) fail("unexpected end of key");
    return text_[pos_];
  }
  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }
  std::string field() {
    std::size_t len = 0;
    bool any = false;
    while (pos_ < text_.size() && text_[pos_] >= '0' && text_[pos_] <= '9') {
      len = len * 10 + static_cast<std::size_t>(text_[pos_] - '0');
      ++pos_;
      any = true;
    }
    if (!any) fail("expected field length");
    expect(':');
    if (pos_ + len > text_.size()) fail("field overruns key");
    std::string s(text_.substr(pos_, len));
    pos_ += len;
    return s;
  }
  bool done() const { return pos_ == text_.size(); }
  [[noreturn]] void fail(const std::string& what) const {
    throw SyntaxError(pos_, "malformed canonical key: " + what);
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

struct Decoder {
  KeyReader reader;
  RawTree raw;
  std::vector<Operation> labels;
  std::vector<Colour> colours;

  // Reads a node whose output edge is `out` (already allocated).
  void node(EdgeId out) {
    reader.expect('N');
    const NodeId n = static_cast<NodeId>(raw.nodes.size());
    labels.push_back(reader.field());
    colours[out] = reader.field();
    raw.nodes.push_back({out, {}});
    reader.expect('(');
    while (reader.peek() != ')') {
      const EdgeId e = static_cast<EdgeId>(colours.size());
      colours.emplace_back();
      raw.nodes[n].inputs.push_back(e);
      if (reader.peek() == 'L') {
        reader.expect('L');
        colours[e] = reader.field();
      } else {
        node(e);
      }
    }
    reader.expect(')');
  }
};

std::vector<NodeId> collect_above(const Tree& t, EdgeId e) {
  std::vector<NodeId> result;
  std::vector<EdgeId> stack{e};
  while (!stack.empty()) {
    const EdgeId cur = stack.back();
    stack.pop_back();
    const NodeId p = t.producer(cur);
    if (p == kNoNode) continue;
    result.push_back(p);
    const auto ins = t.inputs(p);
    for (auto it = ins.rbegin(); it != ins.rend(); ++it) stack.push_back(*it);
  }
  return result;
}

Natural factorial(std::size_t k) {
  Natural f = 1;
  for (std::size_t i = 2; i <= k; ++i) f *= i;
  return f;
}

}  // namespace

PTree decorate(Tree t, std::vector<Operation> node_dec,
               std::vector<Colour> edge_dec, OperadPtr op) {
  if (!op) throw Error(ErrorCode::operad_mismatch, "null operad");
  if (node_dec.size() != t.node_count() || edge_dec.size() != t.edge_count()) {
    throw Error(ErrorCode::bad_reference, "decoration maps are not total");
  }
  for (EdgeId e = 0; e < t.edge_count(); ++e) {
    if (!op->has_colour(edge_dec[e])) {
      throw Error(ErrorCode::unknown_colour,
                  "'" + edge_dec[e] + "' is not a colour of " + op->name());
    }
  }
  for (NodeId n = 0; n < t.node_count(); ++n) {
    const Profile p = op->profile(node_dec[n]);
    if (p.arity() != t.arity(n)) {
      throw Error(ErrorCode::arity_mismatch,
                  "operation '" + op->display_operation(node_dec[n]) +
                      "' has arity " + std::to_string(p.arity()) +
                      " but its node has " + std::to_string(t.arity(n)) +
                      " inputs");
    }
    if (p.output != edge_dec[t.output(n)]) {
      throw Error(ErrorCode::colour_mismatch,
                  "output colour of '" + op->display_operation(node_dec[n]) +
                      "' differs from its edge colour");
    }
    const auto ins = t.inputs(n);
    for (std::size_t i = 0; i < ins.size(); ++i) {
      if (p.inputs[i] != edge_dec[ins[i]]) {
        throw Error(ErrorCode::colour_mismatch,
                    "input " + std::to_string(i) + " of '" +
                        op->display_operation(node_dec[n]) +
                        "' differs from its edge colour");
      }
    }
  }
  PTree result;
  result.tree_ = std::move(t);
  result.operad_ = std::move(op);
  result.labels_ = std::move(node_dec);
  result.colours_ = std::move(edge_dec);
  return result;
}

PTree trivial_ptree(OperadPtr op, const Colour& c) {
  return decorate(Tree{}, {}, {c}, std::move(op));
}

PTree corolla(OperadPtr op, const Operation& b) {
  const Profile p = op->profile(b);
  std::vector<Colour> colours{p.output};
  colours.insert(colours.end(), p.inputs.begin(), p.inputs.end());
  return decorate(corolla_shape(p.arity()), {b}, std::move(colours),
                  std::move(op));
}

CanonicalKey subtree_key(const PTree& t, EdgeId e) {
  const NodeId p = t.shape().producer(e);
  if (p == kNoNode) return trivial_key(t.colour(e));
  return {node_key(t, p)};
}

CanonicalKey trivial_key(const Colour& c) {
  std::string out = "T";
  append_field(out, c);
  return {std::move(out)};
}

CanonicalKey compose_key(const Operation& label, const Colour& out,
                         std::span<const CanonicalKey> children,
                         bool sort_children) {
  std::vector<std::string> encoded;
  encoded.reserve(children.size());
  for (const auto& c : children) {
    // A trivial subtree sits in its parent as a leaf slot.
    if (!c.text.empty() && c.text.front() == 'T') {
      encoded.push_back("L" + c.text.substr(1));
    } else {
      encoded.push_back(c.text);
    }
  }
  if (sort_children) std::sort(encoded.begin(), encoded.end());
  std::string key = "N";
  append_field(key, label);
  append_field(key, out);
  key += '(';
  for (const auto& c : encoded) key += c;
  key += ')';
  return {std::move(key)};
}

CanonicalKey canonical_key(const PTree& t) {
  return subtree_key(t, t.shape().root());
}

PTree from_key(OperadPtr op, const CanonicalKey& key) {
  Decoder d{KeyReader(key.text), {}, {}, {}};
  d.colours.emplace_back();
  d.raw.root = 0;
  if (d.reader.peek() == 'T') {
    d.reader.expect('T');
    d.colours[0] = d.reader.field();
  } else {
    d.node(0);
  }
  if (!d.reader.done()) d.reader.fail("trailing characters");
  d.raw.edge_count = d.colours.size();
  return decorate(validate_tree(d.raw), std::move(d.labels),
                  std::move(d.colours), std::move(op));
}

std::size_t key_node_count(const CanonicalKey& key) {
  // Every node contributes exactly one '(' outside of fields.
  KeyReader reader(key.text);
  std::size_t count = 0;
  while (!reader.done()) {
    const char c = reader.peek();
    if (c == 'N') {
      reader.expect('N');
      reader.field();
      reader.field();
      ++count;
    } else if (c == 'L' || c == 'T') {
      reader.expect(c);
      reader.field();
    } else {
      reader.expect(c);
    }
  }
  return count;
}

Natural aut_order(const PTree& t) {
  if (t.operad()->planar()) return 1;
  const Tree& s = t.shape();
  Natural order = 1;
  for (NodeId n = 0; n < s.node_count(); ++n) {
    std::map<CanonicalKey, std::size_t> multiplicity;
    for (EdgeId e : s.inputs(n)) ++multiplicity[subtree_key(t, e)];
    for (const auto& [key, m] : multiplicity) order *= factorial(m);
  }
  return order;
}

std::vector<NodeId> nodes_above(const Tree& t, EdgeId e) {
  return collect_above(t, e);
}

PTree induced_subtree(const PTree& t, std::span<const NodeId> nodes) {
  const Tree& s = t.shape();
  if (nodes.empty()) {
    throw Error(ErrorCode::bad_reference, "induced subtree of no nodes");
  }
  std::vector<bool> member(s.node_count(), false);
  for (NodeId n : nodes) member.at(n) = true;

  NodeId top = kNoNode;
  for (NodeId n : nodes) {
    const NodeId below = s.consumer(s.output(n));
    if (below == kNoNode || !member[below]) {
      if (top != kNoNode) {
        throw Error(ErrorCode::bad_reference, "node set is not connected");
      }
      top = n;
    }
  }

  RawTree raw;
  std::vector<Colour> colours{t.colour(s.output(top))};
  std::vector<Operation> labels;
  raw.root = 0;
  // Preorder walk restricted to member nodes.
  std::vector<std::pair<NodeId, EdgeId>> stack{{top, 0}};
  while (!stack.empty()) {
    const auto [n, out] = stack.back();
    stack.pop_back();
    const NodeId id = static_cast<NodeId>(raw.nodes.size());
    raw.nodes.push_back({out, {}});
    labels.push_back(t.label(n));
    std::vector<std::pair<NodeId, EdgeId>> pending;
    for (EdgeId e : s.inputs(n)) {
      const EdgeId fresh = static_cast<EdgeId>(colours.size());
      colours.push_back(t.colour(e));
      raw.nodes[id].inputs.push_back(fresh);
      const NodeId p = s.producer(e);
      if (p != kNoNode && member[p]) pending.emplace_back(p, fresh);
    }
    for (auto it = pending.rbegin(); it != pending.rend(); ++it) {
      stack.push_back(*it);
    }
  }
  if (raw.nodes.size() != nodes.size()) {
    throw Error(ErrorCode::bad_reference, "node set is not connected");
  }
  raw.edge_count = colours.size();
  return decorate(validate_tree(raw), std::move(labels), std::move(colours),
                  t.operad());
}

PTree subtree_above(const PTree& t, EdgeId e) {
  const auto nodes = collect_above(t.shape(), e);
  if (nodes.empty()) return trivial_ptree(t.operad(), t.colour(e));
  return induced_subtree(t, nodes);
}

}  // namespace optree
