#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "optree/operads.hpp"
#include "optree/rational.hpp"

namespace optree {

/// A word over a monoid, as element indices.
using Word = std::vector<std::size_t>;

/// All words of length at most `max_len`, shortest first, then
/// lexicographic.
std::vector<Word> words_up_to(std::size_t alphabet, std::size_t max_len);

/// A rational function on words of length at most max_len over a finite
/// monoid. Words not set are 0.
class Mould {
 public:
  Mould(std::shared_ptr<const FiniteMonoid> monoid, std::size_t max_len);

  const FiniteMonoid& monoid() const noexcept { return *monoid_; }
  const std::shared_ptr<const FiniteMonoid>& monoid_ptr() const noexcept {
    return monoid_;
  }
  std::size_t max_len() const noexcept { return max_len_; }

  Rational at(const Word& w) const;
  void set(const Word& w, Rational value);

  /// Product of the letters, left to right. Requires a nonempty word.
  std::size_t norm(const Word& w) const;

  friend bool operator==(const Mould& a, const Mould& b);

  /// 1 on the empty word, 0 elsewhere: the unit of the product.
  static Mould unit(std::shared_ptr<const FiniteMonoid> m, std::size_t max_len);
  /// 1 on one-letter words, 0 elsewhere: a right unit of composition.
  static Mould identity(std::shared_ptr<const FiniteMonoid> m,
                        std::size_t max_len);
  /// Values n/d with n in [-9, 9] and d in [1, 9], drawn from `rng`.
  static Mould random(std::shared_ptr<const FiniteMonoid> m,
                      std::size_t max_len, std::mt19937_64& rng);

 private:
  std::shared_ptr<const FiniteMonoid> monoid_;
  std::size_t max_len_;
  std::map<Word, Rational> values_;
};

/// (M x N)^w = sum over w = w'w'' of M^w' N^w''. Throws monoid_mismatch.
Mould mould_product(const Mould& m, const Mould& n);

/// (M o N)^w = sum over w = w_1 ... w_k, k >= 1, blocks nonempty, of
/// N^w_1 ... N^w_k M^(|w_1| ... |w_k|); on the empty word M^().
Mould mould_compose(const Mould& m, const Mould& n);

std::string word_text(const FiniteMonoid& m, const Word& w);

struct MouldWitness {
  std::string identity;  // which identity failed
  Word word;
  Rational lhs;
  Rational rhs;
};

struct DualityReport {
  std::size_t samples = 0;
  std::size_t words = 0;
  bool product_duality = true;
  bool composition_duality = true;
  bool unit_duality = true;
  bool left_distributivity = true;
  /// The stored right-distributivity counterexample fails as expected.
  bool right_counterexample_fails = false;
  std::optional<MouldWitness> right_witness;
  std::optional<MouldWitness> failure;  // first unexpected failure

  bool passed() const {
    return product_duality && composition_duality && unit_duality &&
           left_distributivity && right_counterexample_fails;
  }
};

/// Pairs sampled moulds with linear trees over the monoid operad (a mould is
/// the functional taking the tree of w to M^w, multiplicatively on forests)
/// and checks: convolution through the cut comultiplication is the product,
/// convolution through the coaction (N on blobs, M on the contracted tree)
/// is the composition, the unit moulds are the counits, and
/// (M x N) o P = (M o P) x (N o P). Also evaluates the stored
/// counterexample to M o (N x P) = (M o N) x (M o P).
DualityReport mould_duality_check(std::shared_ptr<const FiniteMonoid> monoid,
                                  std::size_t max_len, std::size_t samples,
                                  std::uint64_t seed);

/// M = 1 everywhere, N = P = identity mould, at a one-letter word: the two
/// sides of right distributivity are 0 and 2.
MouldWitness right_distributivity_witness(
    std::shared_ptr<const FiniteMonoid> monoid, std::size_t max_len);

}  // namespace optree
