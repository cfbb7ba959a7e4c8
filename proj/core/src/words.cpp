#include "optree/special/words.hpp"

#include "optree/error.hpp"
#include "optree/operads.hpp"

namespace optree {

PTree word_to_tree(std::span<const std::string> letters, const OperadPtr& op) {
  if (!op->word_syntax()) {
    throw Error(ErrorCode::unsupported_nesting,
                "words need a monoid or poset operad, not " + op->name());
  }
  const std::size_t n = letters.size();
  if (operad_monoid(*op)) {
    const Colour c = *op->single_colour();
    std::vector<Operation> labels(n);
    for (std::size_t i = 0; i < n; ++i) labels[i] = letters[n - 1 - i];
    return decorate(linear_shape(n), std::move(labels),
                    std::vector<Colour>(n + 1, c), op);
  }
  if (n == 0) {
    throw Error(ErrorCode::not_monotone, "a word over a poset is nonempty");
  }
  std::vector<Colour> colours(n);
  for (std::size_t j = 0; j < n; ++j) colours[j] = letters[n - 1 - j];
  std::vector<Operation> labels(n - 1);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const Colour& lo = colours[i + 1];
    const Colour& hi = colours[i];
    for (const Colour& c : {lo, hi}) {
      if (!op->has_colour(c)) {
        throw Error(ErrorCode::unknown_colour, "'" + c + "' is not a letter");
      }
    }
    labels[i] = lo + "<=" + hi;
    try {
      op->profile(labels[i]);
    } catch (const Error&) {
      throw Error(ErrorCode::not_monotone,
                  "letters '" + lo + "' and '" + hi + "' are not in order");
    }
  }
  return decorate(linear_shape(n - 1), std::move(labels), std::move(colours),
                  op);
}

std::optional<std::vector<std::string>> tree_to_word(const PTree& t) {
  const Operad& op = *t.operad();
  if (!op.word_syntax()) return std::nullopt;
  const Tree& s = t.shape();
  // Walk from the root edge up to the single leaf.
  std::vector<EdgeId> chain{s.root()};
  while (true) {
    const NodeId p = s.producer(chain.back());
    if (p == kNoNode) break;
    if (s.arity(p) != 1) return std::nullopt;
    chain.push_back(s.inputs(p)[0]);
  }
  std::vector<std::string> letters;
  if (operad_monoid(op)) {
    for (auto it = chain.rbegin(); it != chain.rend(); ++it) {
      const NodeId p = s.producer(*it);
      if (p != kNoNode) letters.push_back(t.label(p));
    }
  } else {
    for (auto it = chain.rbegin(); it != chain.rend(); ++it) {
      letters.push_back(t.colour(*it));
    }
  }
  return letters;
}

}  // namespace optree
