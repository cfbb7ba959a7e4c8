#include "optree/special/mould.hpp"

#include "optree/error.hpp"
#include "optree/hopf.hpp"
#include "optree/special/words.hpp"

namespace optree {

std::vector<Word> words_up_to(std::size_t alphabet, std::size_t max_len) {
  std::vector<Word> out{Word{}};
  std::size_t begin = 0;
  for (std::size_t len = 1; len <= max_len; ++len) {
    const std::size_t end = out.size();
    for (std::size_t i = begin; i < end; ++i) {
      for (std::size_t a = 0; a < alphabet; ++a) {
        Word w = out[i];
        w.push_back(a);
        out.push_back(std::move(w));
      }
    }
    begin = end;
  }
  return out;
}

Mould::Mould(std::shared_ptr<const FiniteMonoid> monoid, std::size_t max_len)
    : monoid_(std::move(monoid)), max_len_(max_len) {}

Rational Mould::at(const Word& w) const {
  const auto it = values_.find(w);
  return it == values_.end() ? Rational(0) : it->second;
}

void Mould::set(const Word& w, Rational value) {
  if (w.size() > max_len_) {
    throw Error(ErrorCode::bad_reference, "word longer than the mould bound");
  }
  if (value == 0) {
    values_.erase(w);
  } else {
    values_[w] = std::move(value);
  }
}

std::size_t Mould::norm(const Word& w) const {
  std::size_t acc = w.at(0);
  for (std::size_t i = 1; i < w.size(); ++i) acc = monoid_->multiply(acc, w[i]);
  return acc;
}

bool operator==(const Mould& a, const Mould& b) {
  return a.max_len_ == b.max_len_ && a.values_ == b.values_ &&
         a.monoid_->elements == b.monoid_->elements &&
         a.monoid_->table == b.monoid_->table;
}

Mould Mould::unit(std::shared_ptr<const FiniteMonoid> m, std::size_t max_len) {
  Mould out(std::move(m), max_len);
  out.set({}, 1);
  return out;
}

Mould Mould::identity(std::shared_ptr<const FiniteMonoid> m,
                      std::size_t max_len) {
  Mould out(m, max_len);
  if (max_len >= 1) {
    for (std::size_t a = 0; a < m->elements.size(); ++a) out.set({a}, 1);
  }
  return out;
}

Mould Mould::random(std::shared_ptr<const FiniteMonoid> m, std::size_t max_len,
                    std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-9, 9);
  std::uniform_int_distribution<int> den(1, 9);
  Mould out(m, max_len);
  for (const Word& w : words_up_to(m->elements.size(), max_len)) {
    const int n = num(rng);
    const int d = den(rng);
    out.set(w, Rational(n, d));
  }
  return out;
}

namespace {

void require_same(const Mould& m, const Mould& n) {
  if (m.max_len() != n.max_len() ||
      m.monoid().elements != n.monoid().elements ||
      m.monoid().table != n.monoid().table) {
    throw Error(ErrorCode::monoid_mismatch,
                "moulds over different monoids or length bounds");
  }
}

// Sum over decompositions of w[from..] into nonempty blocks, accumulating
// the product of N on blocks and the contracted word.
void compose_rec(const Mould& m, const Mould& n, const Word& w,
                 std::size_t from, const Rational& weight, Word& contracted,
                 Rational& acc) {
  if (from == w.size()) {
    acc += weight * m.at(contracted);
    return;
  }
  for (std::size_t to = from + 1; to <= w.size(); ++to) {
    const Word block(w.begin() + from, w.begin() + to);
    const Rational nb = n.at(block);
    if (nb == 0) continue;
    contracted.push_back(m.norm(block));
    compose_rec(m, n, w, to, weight * nb, contracted, acc);
    contracted.pop_back();
  }
}

}  // namespace

Mould mould_product(const Mould& m, const Mould& n) {
  require_same(m, n);
  Mould out(m.monoid_ptr(), m.max_len());
  for (const Word& w : words_up_to(m.monoid().elements.size(), m.max_len())) {
    Rational acc = 0;
    for (std::size_t i = 0; i <= w.size(); ++i) {
      acc += m.at(Word(w.begin(), w.begin() + i)) *
             n.at(Word(w.begin() + i, w.end()));
    }
    out.set(w, acc);
  }
  return out;
}

Mould mould_compose(const Mould& m, const Mould& n) {
  require_same(m, n);
  Mould out(m.monoid_ptr(), m.max_len());
  for (const Word& w : words_up_to(m.monoid().elements.size(), m.max_len())) {
    if (w.empty()) {
      out.set(w, m.at(w));
      continue;
    }
    Rational acc = 0;
    Word contracted;
    compose_rec(m, n, w, 0, 1, contracted, acc);
    out.set(w, acc);
  }
  return out;
}

std::string word_text(const FiniteMonoid& m, const Word& w) {
  if (w.empty()) return "()";
  bool multi = false;
  for (std::size_t a : w) multi = multi || m.elements[a].size() != 1;
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (multi && i > 0) out += ',';
    out += m.elements[w[i]];
  }
  return out;
}

MouldWitness right_distributivity_witness(
    std::shared_ptr<const FiniteMonoid> monoid, std::size_t max_len) {
  Mould ones(monoid, max_len);
  for (const Word& w : words_up_to(monoid->elements.size(), max_len)) {
    ones.set(w, 1);
  }
  const Mould id = Mould::identity(monoid, max_len);
  const Word w{monoid->identity()};
  const Mould lhs = mould_compose(ones, mould_product(id, id));
  const Mould rhs = mould_product(mould_compose(ones, id), mould_compose(ones, id));
  return {"M o (N x P) = (M o N) x (M o P)", w, lhs.at(w), rhs.at(w)};
}

namespace {

// The mould side of the duality: word trees, their keys and the
// comultiplications, computed once per word.
class WordTrees {
 public:
  WordTrees(const std::shared_ptr<const FiniteMonoid>& monoid,
            std::size_t max_len)
      : op_(monoid_operad(*monoid)),
        words_(words_up_to(monoid->elements.size(), max_len)) {
    for (const Word& w : words_) {
      std::vector<std::string> letters;
      for (std::size_t a : w) letters.push_back(monoid->elements[a]);
      const CanonicalKey key = canonical_key(word_to_tree(letters, op_));
      word_of_.emplace(key, w);
      keys_.push_back(key);
      cuts_.push_back(delta(CoalgebraKind::cuts, op_, LinComb<Forest>(Forest{key})));
      gamma_.push_back(coaction(op_, LinComb<Forest>(Forest{key})));
    }
  }

  const std::vector<Word>& words() const { return words_; }
  const CanonicalKey& key(std::size_t i) const { return keys_[i]; }
  const LinComb<Tensor2>& cuts(std::size_t i) const { return cuts_[i]; }
  const LinComb<Tensor2>& gamma(std::size_t i) const { return gamma_[i]; }

  Rational pair(const Mould& m, const Forest& f) const {
    Rational acc = 1;
    for (const auto& k : f.keys()) acc *= m.at(word_of_.at(k));
    return acc;
  }

  Rational convolve(const Mould& left, const Mould& right,
                    const LinComb<Tensor2>& x) const {
    Rational acc = 0;
    for (const auto& [t, c] : x.terms()) {
      acc += c * pair(left, t.left) * pair(right, t.right);
    }
    return acc;
  }

 private:
  OperadPtr op_;
  std::vector<Word> words_;
  std::vector<CanonicalKey> keys_;
  std::map<CanonicalKey, Word> word_of_;
  std::vector<LinComb<Tensor2>> cuts_;
  std::vector<LinComb<Tensor2>> gamma_;
};

}  // namespace

DualityReport mould_duality_check(std::shared_ptr<const FiniteMonoid> monoid,
                                  std::size_t max_len, std::size_t samples,
                                  std::uint64_t seed) {
  DualityReport report;
  report.samples = samples;
  const WordTrees trees(monoid, max_len);
  report.words = trees.words().size();

  auto fail = [&](bool& flag, const char* what, const Word& w,
                  const Rational& lhs, const Rational& rhs) {
    flag = false;
    if (!report.failure) report.failure = MouldWitness{what, w, lhs, rhs};
  };

  std::mt19937_64 rng(seed);
  std::vector<Mould> sample;
  for (std::size_t i = 0; i < samples; ++i) {
    sample.push_back(Mould::random(monoid, max_len, rng));
  }

  const Mould unit = Mould::unit(monoid, max_len);
  const Mould id = Mould::identity(monoid, max_len);
  for (std::size_t i = 0; i < trees.words().size(); ++i) {
    const Word& w = trees.words()[i];
    const Forest single{trees.key(i)};
    if (unit.at(w) != counit(CoalgebraKind::cuts, single)) {
      fail(report.unit_duality, "unit mould = cut counit", w, unit.at(w),
           counit(CoalgebraKind::cuts, single));
    }
    if (id.at(w) != counit(CoalgebraKind::blobs, single)) {
      fail(report.unit_duality, "identity mould = blob counit", w, id.at(w),
           counit(CoalgebraKind::blobs, single));
    }
  }

  for (std::size_t s = 0; s < samples; ++s) {
    const Mould& m = sample[s];
    const Mould& n = sample[(s + 1) % samples];
    const Mould& p = sample[(s + 2) % samples];
    const Mould product = mould_product(m, n);
    const Mould composite = mould_compose(m, n);
    const Mould left = mould_compose(product, p);
    const Mould right = mould_product(mould_compose(m, p), mould_compose(n, p));
    for (std::size_t i = 0; i < trees.words().size(); ++i) {
      const Word& w = trees.words()[i];
      const Rational via_cuts = trees.convolve(m, n, trees.cuts(i));
      if (via_cuts != product.at(w)) {
        fail(report.product_duality, "M x N through cuts", w, via_cuts,
             product.at(w));
      }
      const Rational via_blobs = trees.convolve(n, m, trees.gamma(i));
      if (via_blobs != composite.at(w)) {
        fail(report.composition_duality, "M o N through blobs", w, via_blobs,
             composite.at(w));
      }
      if (left.at(w) != right.at(w)) {
        fail(report.left_distributivity, "(M x N) o P = (M o P) x (N o P)", w,
             left.at(w), right.at(w));
      }
    }
  }

  if (max_len >= 1) {
    report.right_witness = right_distributivity_witness(monoid, max_len);
    report.right_counterexample_fails =
        report.right_witness->lhs != report.right_witness->rhs;
  }
  return report;
}

}  // namespace optree
