#include "optree/io/grammar.hpp"

#include <cctype>

#include "optree/error.hpp"
#include "optree/special/words.hpp"

namespace optree {

namespace {

constexpr std::string_view kReserved = " \t\r\n()[]*:;|,";

bool is_reserved(char c) { return kReserved.find(c) != std::string_view::npos; }

struct Ast {
  bool leaf = false;
  std::optional<std::string> label;
  std::optional<std::string> colour;
  std::vector<Ast> children;
  std::size_t offset = 0;
};

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  std::size_t pos() const { return pos_; }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }

  bool consume(char c) {
    if (peek() != c || at_end()) return false;
    ++pos_;
    return true;
  }

  void expect(char c) {
    if (!consume(c)) {
      if (at_end()) fail(std::string("expected '") + c + "' before end of input");
      fail(std::string("expected '") + c + "', found '" + peek() + "'");
    }
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw SyntaxError(pos_, what);
  }

  // Plain run of unreserved characters, or a bracketed group.
  std::optional<std::string> token() {
    if (peek() == '[' && !at_end()) {
      const std::size_t start = pos_;
      int depth = 0;
      do {
        if (at_end()) fail("unterminated '['");
        if (text_[pos_] == '[') ++depth;
        if (text_[pos_] == ']') --depth;
        ++pos_;
      } while (depth > 0);
      return std::string(text_.substr(start, pos_ - start));
    }
    const std::size_t start = pos_;
    while (!at_end() && !is_reserved(text_[pos_])) ++pos_;
    if (pos_ == start) return std::nullopt;
    return std::string(text_.substr(start, pos_ - start));
  }

  std::optional<std::string> colour_annotation() {
    if (!consume(':')) return std::nullopt;
    // The colour of single-coloured operads is spelled "*".
    if (consume('*')) return std::string("*");
    auto c = token();
    if (!c) fail("expected a colour after ':'");
    return c;
  }

  Ast node() {
    Ast a;
    a.offset = pos_;
    if (peek() != '(') {
      a.label = token();
      if (!a.label) {
        if (at_end()) fail("expected a tree before end of input");
        fail(std::string("unexpected '") + peek() + "'");
      }
    }
    expect('(');
    while (true) {
      skip_ws();
      if (consume(')')) break;
      if (at_end()) fail("expected ')' before end of input");
      if (peek() == '*') {
        Ast leaf;
        leaf.leaf = true;
        leaf.offset = pos_;
        ++pos_;
        leaf.colour = colour_annotation();
        a.children.push_back(std::move(leaf));
      } else {
        a.children.push_back(node());
      }
    }
    a.colour = colour_annotation();
    return a;
  }

  std::string_view rest_until(char stop) {
    const std::size_t start = pos_;
    while (!at_end() && text_[pos_] != stop &&
           !std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
    return text_.substr(start, pos_ - start);
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

std::vector<std::string> split_letters(std::string_view body) {
  std::vector<std::string> letters;
  if (body.find(',') != std::string_view::npos) {
    std::size_t start = 0;
    while (true) {
      const std::size_t comma = body.find(',', start);
      letters.emplace_back(body.substr(start, comma - start));
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
  } else {
    for (char c : body) letters.emplace_back(1, c);
  }
  return letters;
}

class Builder {
 public:
  explicit Builder(const OperadPtr& op) : op_(op) {}

  PTree build(const Ast& root) {
    colours_.emplace_back();
    raw_.root = 0;
    add_node(root, 0);
    resolve(root, 0);
    raw_.edge_count = colours_.size();
    std::vector<Colour> colours;
    for (auto& c : colours_) {
      if (!c) throw Error(ErrorCode::inference_ambiguous, "uncoloured edge");
      colours.push_back(*c);
    }
    return decorate(validate_tree(raw_), labels_, std::move(colours), op_);
  }

 private:
  struct Slot {
    NodeId node;
    std::vector<EdgeId> child_edges;
  };

  // Allocates nodes and edges in preorder.
  void add_node(const Ast& a, EdgeId out) {
    const NodeId n = static_cast<NodeId>(raw_.nodes.size());
    raw_.nodes.push_back({out, {}});
    labels_.emplace_back();
    slots_.push_back({n, {}});
    if (a.colour) colours_[out] = parse_colour(*a.colour, a.offset);
    for (const auto& child : a.children) {
      const EdgeId e = static_cast<EdgeId>(colours_.size());
      colours_.emplace_back();
      raw_.nodes[n].inputs.push_back(e);
      slots_[n].child_edges.push_back(e);
      if (child.leaf) {
        if (child.colour) colours_[e] = parse_colour(*child.colour, child.offset);
      } else {
        add_node(child, e);
      }
    }
  }

  // Post-order: children first, so that their output colours are known.
  NodeId resolve(const Ast& a, NodeId n) {
    NodeId next = n + 1;
    const auto& edges = slots_[n].child_edges;
    for (std::size_t i = 0; i < a.children.size(); ++i) {
      if (!a.children[i].leaf) next = resolve(a.children[i], next);
    }
    const EdgeId out = raw_.nodes[n].output;
    Operation label;
    if (a.label) {
      try {
        label = op_->parse_operation(*a.label);
      } catch (const SyntaxError& e) {
        throw SyntaxError(a.offset + e.offset(), e.detail());
      }
    } else {
      std::vector<std::optional<Colour>> ins;
      for (EdgeId e : edges) ins.push_back(colours_[e]);
      auto inferred = op_->infer(edges.size(), colours_[out], ins);
      if (!inferred) {
        throw Error(ErrorCode::inference_ambiguous,
                    "cannot infer the operation of the node at offset " +
                        std::to_string(a.offset) + " of " + op_->name() +
                        "; add a label");
      }
      label = *inferred;
    }
    const Profile p = op_->profile(label);
    if (!colours_[out]) colours_[out] = p.output;
    if (p.arity() == edges.size()) {
      for (std::size_t i = 0; i < edges.size(); ++i) {
        if (!colours_[edges[i]]) colours_[edges[i]] = p.inputs[i];
      }
    }
    labels_[n] = std::move(label);
    return next;
  }

  Colour parse_colour(const std::string& text, std::size_t offset) const {
    try {
      return op_->parse_colour(text);
    } catch (const SyntaxError& e) {
      throw SyntaxError(offset + e.offset(), e.detail());
    }
  }

  const OperadPtr& op_;
  RawTree raw_;
  std::vector<Operation> labels_;
  std::vector<std::optional<Colour>> colours_;
  std::vector<Slot> slots_;
};

void print_node(const PTree& t, NodeId n, bool show_colours, std::string& out) {
  const Tree& s = t.shape();
  const Operad& op = *t.operad();
  std::vector<std::optional<Colour>> ins;
  std::optional<Colour> out_colour;
  if (show_colours) {
    out_colour = t.colour(s.output(n));
    for (EdgeId e : s.inputs(n)) ins.push_back(t.colour(e));
  }
  const auto inferred = op.infer(s.arity(n), out_colour, ins);
  if (!inferred || *inferred != t.label(n)) {
    out += op.display_operation(t.label(n));
  }
  out += '(';
  bool first = true;
  for (EdgeId e : s.inputs(n)) {
    if (!first) out += ' ';
    first = false;
    const NodeId p = s.producer(e);
    if (p == kNoNode) {
      out += '*';
      if (show_colours) out += ":" + op.display_colour(t.colour(e));
    } else {
      print_node(t, p, show_colours, out);
    }
  }
  out += ')';
  if (show_colours) out += ":" + op.display_colour(t.colour(s.output(n)));
}

}  // namespace

PTree parse_tree(std::string_view text, const OperadPtr& op) {
  Parser parser(text);
  parser.skip_ws();
  constexpr std::string_view kWord = "word:";
  if (text.substr(parser.pos()).starts_with(kWord)) {
    for (std::size_t i = 0; i < kWord.size(); ++i) parser.consume(kWord[i]);
    const auto body = parser.rest_until('\0');
    parser.skip_ws();
    if (!parser.at_end()) parser.fail("unexpected text after word");
    return word_to_tree(split_letters(body), op);
  }
  if (parser.consume('|')) {
    const std::size_t offset = parser.pos();
    auto colour = parser.colour_annotation();
    parser.skip_ws();
    if (!parser.at_end()) parser.fail("unexpected text after trivial tree");
    if (colour) return trivial_ptree(op, op->parse_colour(*colour));
    const auto sole = op->single_colour();
    if (!sole) {
      throw Error(ErrorCode::inference_ambiguous,
                  "trivial tree at offset " + std::to_string(offset) +
                      " needs a colour");
    }
    return trivial_ptree(op, *sole);
  }
  Ast root = parser.node();
  parser.skip_ws();
  if (!parser.at_end()) parser.fail("unexpected text after tree");
  return Builder(op).build(root);
}

std::vector<PTree> parse_forest(std::string_view text, const OperadPtr& op) {
  std::vector<PTree> trees;
  std::size_t start = 0;
  int depth = 0;
  auto flush = [&](std::size_t end) {
    std::string_view part = text.substr(start, end - start);
    const auto first = part.find_first_not_of(" \t\r\n");
    if (first == std::string_view::npos) {
      throw SyntaxError(start, "empty tree in forest");
    }
    const auto last = part.find_last_not_of(" \t\r\n");
    std::string_view trimmed = part.substr(first, last - first + 1);
    if (trimmed == "1") return;
    try {
      trees.push_back(parse_tree(trimmed, op));
    } catch (const SyntaxError& e) {
      throw SyntaxError(start + first + e.offset(), e.detail());
    }
  };
  if (text.find_first_not_of(" \t\r\n") == std::string_view::npos) return trees;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '[') ++depth;
    if (text[i] == ']') --depth;
    if (text[i] == ';' && depth == 0) {
      flush(i);
      start = i + 1;
    }
  }
  flush(text.size());
  return trees;
}

Forest parse_forest_keys(std::string_view text, const OperadPtr& op) {
  std::vector<CanonicalKey> keys;
  for (const auto& t : parse_forest(text, op)) keys.push_back(canonical_key(t));
  return Forest(std::move(keys));
}

std::string print_key(const OperadPtr& op, const CanonicalKey& key) {
  const PTree t = from_key(op, key);
  if (op->word_syntax()) {
    auto letters = tree_to_word(t);
    bool multi = false;
    if (letters) {
      for (const auto& l : *letters) multi = multi || l.size() != 1;
      // A lone multi-character letter has no word spelling.
      if (multi && letters->size() == 1) letters.reset();
    }
    if (letters) {
      std::string out = "word:";
      for (std::size_t i = 0; i < letters->size(); ++i) {
        if (multi && i > 0) out += ',';
        out += (*letters)[i];
      }
      return out;
    }
  }
  const bool show_colours = !op->single_colour().has_value();
  if (t.is_trivial()) {
    std::string out = "|";
    if (show_colours) out += ":" + op->display_colour(t.root_colour());
    return out;
  }
  std::string out;
  print_node(t, 0, show_colours, out);
  return out;
}

std::string print_tree(const PTree& t) {
  return print_key(t.operad(), canonical_key(t));
}

std::string print_forest(const OperadPtr& op, const Forest& f) {
  if (f.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (i > 0) out += "; ";
    out += print_key(op, f.keys()[i]);
  }
  return out;
}

}  // namespace optree
