#include "optree/lincomb.hpp"

#include <iterator>

namespace optree {

Forest mul(const Forest& a, const Forest& b) {
  std::vector<CanonicalKey> keys;
  keys.reserve(a.size() + b.size());
  std::merge(a.keys().begin(), a.keys().end(), b.keys().begin(),
             b.keys().end(), std::back_inserter(keys));
  return Forest(std::move(keys));
}

Tensor2 mul(const Tensor2& a, const Tensor2& b) {
  return {mul(a.left, b.left), mul(a.right, b.right)};
}

Tensor3 mul(const Tensor3& a, const Tensor3& b) {
  return {mul(a.first, b.first), mul(a.second, b.second),
          mul(a.third, b.third)};
}

}  // namespace optree
