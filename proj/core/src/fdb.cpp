#include "optree/special/fdb.hpp"

#include "optree/error.hpp"
#include "optree/operads.hpp"

namespace optree {

std::string_view to_string(FdbKind kind) noexcept {
  return kind == FdbKind::mult ? "mult" : "subst";
}

std::optional<FdbKind> parse_fdb_kind(std::string_view text) {
  if (text == "mult" || text == "cuts") return FdbKind::mult;
  if (text == "subst" || text == "blobs") return FdbKind::subst;
  return std::nullopt;
}

CanonicalKey linear_key(std::size_t n) {
  static const OperadPtr id = identity_operad();
  return canonical_key(decorate(linear_shape(n), std::vector<Operation>(n, "id"),
                                std::vector<Colour>(n + 1, "*"), id));
}

namespace {

// Visits every composition of n as a list of parts.
template <typename F>
void for_each_composition(std::size_t n, std::vector<std::size_t>& parts,
                          F&& visit) {
  if (n == 0) {
    visit(parts);
    return;
  }
  for (std::size_t first = 1; first <= n; ++first) {
    parts.push_back(first);
    for_each_composition(n - first, parts, visit);
    parts.pop_back();
  }
}

}  // namespace

LinComb<Tensor2> fdb_reference(FdbKind kind, std::size_t n) {
  LinComb<Tensor2> out;
  if (kind == FdbKind::mult) {
    for (std::size_t i = 0; i <= n; ++i) {
      out.add({Forest{linear_key(i)}, Forest{linear_key(n - i)}}, 1);
    }
    return out;
  }
  if (n == 0) {
    throw Error(ErrorCode::trivial_tree_in_blobs_basis,
                "the substitution formula starts at n = 1");
  }
  std::vector<std::size_t> parts;
  for_each_composition(n, parts, [&](const std::vector<std::size_t>& c) {
    std::vector<CanonicalKey> blocks;
    for (std::size_t p : c) blocks.push_back(linear_key(p));
    out.add({Forest(std::move(blocks)), Forest{linear_key(c.size())}}, 1);
  });
  return out;
}

}  // namespace optree
