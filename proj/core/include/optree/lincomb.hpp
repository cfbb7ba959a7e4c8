#pragma once

#include <algorithm>
#include <compare>
#include <functional>
#include <initializer_list>
#include <map>
#include <utility>
#include <vector>

#include "optree/ptree.hpp"
#include "optree/rational.hpp"

namespace optree {

/// Commutative monomial of trees: a sorted multiset of canonical keys. The
/// empty forest is the unit.
class Forest {
 public:
  Forest() = default;
  Forest(std::initializer_list<CanonicalKey> keys) : keys_(keys) {
    std::sort(keys_.begin(), keys_.end());
  }
  explicit Forest(std::vector<CanonicalKey> keys) : keys_(std::move(keys)) {
    std::sort(keys_.begin(), keys_.end());
  }

  const std::vector<CanonicalKey>& keys() const noexcept { return keys_; }
  std::size_t size() const noexcept { return keys_.size(); }
  bool empty() const noexcept { return keys_.empty(); }

  friend auto operator<=>(const Forest&, const Forest&) = default;
  friend bool operator==(const Forest&, const Forest&) = default;

 private:
  std::vector<CanonicalKey> keys_;
};

/// Multiset union.
Forest mul(const Forest& a, const Forest& b);

struct Tensor2 {
  Forest left;
  Forest right;

  friend auto operator<=>(const Tensor2&, const Tensor2&) = default;
  friend bool operator==(const Tensor2&, const Tensor2&) = default;
};

struct Tensor3 {
  Forest first;
  Forest second;
  Forest third;

  friend auto operator<=>(const Tensor3&, const Tensor3&) = default;
  friend bool operator==(const Tensor3&, const Tensor3&) = default;
};

/// Finite linear combination with exact rational coefficients. Zero
/// coefficients are never stored.
template <typename Basis>
class LinComb {
 public:
  using Terms = std::map<Basis, Rational>;

  LinComb() = default;
  explicit LinComb(Basis b, Rational c = 1) { add(std::move(b), c); }

  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }

  Rational coefficient(const Basis& b) const {
    const auto it = terms_.find(b);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  void add(Basis b, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(std::move(b), c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  LinComb& operator+=(const LinComb& other) {
    for (const auto& [b, c] : other.terms_) add(b, c);
    return *this;
  }
  LinComb& operator-=(const LinComb& other) {
    for (const auto& [b, c] : other.terms_) add(b, -c);
    return *this;
  }
  LinComb& operator*=(const Rational& s) {
    if (s == 0) {
      terms_.clear();
    } else {
      for (auto& [b, c] : terms_) c *= s;
    }
    return *this;
  }

  friend LinComb operator+(LinComb a, const LinComb& b) { return a += b; }
  friend LinComb operator-(LinComb a, const LinComb& b) { return a -= b; }
  friend LinComb operator*(const Rational& s, LinComb a) { return a *= s; }
  friend bool operator==(const LinComb&, const LinComb&) = default;

 private:
  Terms terms_;
};

/// Product of two tensors of forests, factor by factor.
Tensor2 mul(const Tensor2& a, const Tensor2& b);
Tensor3 mul(const Tensor3& a, const Tensor3& b);

/// Bilinear extension of a basis product.
template <typename Basis>
LinComb<Basis> mul(const LinComb<Basis>& a, const LinComb<Basis>& b) {
  LinComb<Basis> out;
  for (const auto& [x, cx] : a.terms()) {
    for (const auto& [y, cy] : b.terms()) out.add(mul(x, y), cx * cy);
  }
  return out;
}

/// Linear extension of a map defined on basis elements.
template <typename To, typename From, typename F>
LinComb<To> linear_map(const LinComb<From>& x, F&& f) {
  LinComb<To> out;
  for (const auto& [b, c] : x.terms()) {
    LinComb<To> image = f(b);
    image *= c;
    out += image;
  }
  return out;
}

/// The unit of tensor2 / tensor3.
inline Tensor2 unit_tensor2() { return {}; }

}  // namespace optree
