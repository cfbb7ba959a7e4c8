#include "optree/operad.hpp"

#include "optree/error.hpp"

namespace optree {

Operation Operad::compose(const Operation& b,
                          std::span<const Operation> args) const {
  const Profile p = profile(b);
  if (p.arity() != args.size()) {
    throw Error(ErrorCode::arity_mismatch,
                "operation '" + display_operation(b) + "' has arity " +
                    std::to_string(p.arity()) + ", got " +
                    std::to_string(args.size()) + " arguments");
  }
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (profile(args[i]).output != p.inputs[i]) {
      throw Error(ErrorCode::colour_mismatch,
                  "argument " + std::to_string(i) + " of '" +
                      display_operation(b) + "' has the wrong output colour");
    }
  }
  return compose_checked(b, args);
}

std::optional<Operation> Operad::infer(
    std::size_t arity, const std::optional<Colour>& output,
    std::span<const std::optional<Colour>> inputs) const {
  std::optional<Colour> out = output ? output : single_colour();
  if (!out) return std::nullopt;
  std::optional<Operation> found;
  for (const auto& b : operations_into(*out, arity)) {
    const Profile p = profile(b);
    if (p.arity() != arity) continue;
    bool ok = true;
    for (std::size_t i = 0; i < inputs.size() && i < arity; ++i) {
      if (inputs[i] && *inputs[i] != p.inputs[i]) ok = false;
    }
    if (!ok) continue;
    if (found) return std::nullopt;
    found = b;
  }
  return found;
}

std::optional<Colour> Operad::single_colour() const {
  const auto cs = colours();
  if (cs && cs->size() == 1) return cs->front();
  return std::nullopt;
}

Operation op_compose(const Operad& op, const Operation& b,
                     std::span<const Operation> args) {
  return op.compose(b, args);
}

}  // namespace optree
