#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace optree {

using Colour = std::string;
using Operation = std::string;

/// Output colour and ordered input colours of an operation.
struct Profile {
  Colour output;
  std::vector<Colour> inputs;

  std::size_t arity() const noexcept { return inputs.size(); }
  friend bool operator==(const Profile&, const Profile&) = default;
};

/// A coloured operad presented by queries: colours, operation profiles, a
/// composition oracle and units. Operations and colours are opaque string
/// tokens with decidable equality. Instances are immutable and shareable.
class Operad {
 public:
  virtual ~Operad() = default;

  /// Descriptor string, e.g. "terminal" or "bd(identity)".
  virtual std::string name() const = 0;

  /// Planar operads keep child order in canonical forms; non-planar ones
  /// sort children.
  virtual bool planar() const = 0;

  /// The full colour set, or nullopt when it is infinite.
  virtual std::optional<std::vector<Colour>> colours() const = 0;
  virtual bool has_colour(const Colour& c) const = 0;

  /// Throws Error(unknown_operation) for tokens that are not operations.
  virtual Profile profile(const Operation& b) const = 0;

  /// Operations with output colour `c` and arity at most `max_arity`, in a
  /// deterministic order.
  virtual std::vector<Operation> operations_into(const Colour& c,
                                                 std::size_t max_arity) const = 0;

  /// Every operation, when there are finitely many.
  virtual std::optional<std::vector<Operation>> finite_operations() const {
    return std::nullopt;
  }

  virtual Operation unit(const Colour& c) const = 0;

  /// Substitution of `args[i]` into the i-th input of `b`. Checks arity and
  /// colours before delegating to the instance.
  Operation compose(const Operation& b, std::span<const Operation> args) const;

  /// The unique operation with the given arity and (partially known)
  /// colours, if there is exactly one.
  virtual std::optional<Operation> infer(
      std::size_t arity, const std::optional<Colour>& output,
      std::span<const std::optional<Colour>> inputs) const;

  /// All operations have arity one (monoids, categories).
  virtual bool unary_only() const { return false; }

  /// Linear trees are written with the `word:` shorthand.
  virtual bool word_syntax() const { return false; }

  virtual std::string display_operation(const Operation& b) const { return b; }
  virtual Operation parse_operation(std::string_view text) const {
    return Operation(text);
  }
  virtual std::string display_colour(const Colour& c) const { return c; }
  virtual Colour parse_colour(std::string_view text) const {
    return Colour(text);
  }

  /// The sole colour, when the colour set is a singleton.
  std::optional<Colour> single_colour() const;

 protected:
  virtual Operation compose_checked(const Operation& b,
                                    std::span<const Operation> args) const = 0;
};

using OperadPtr = std::shared_ptr<const Operad>;

/// Free-function form of Operad::compose.
Operation op_compose(const Operad& op, const Operation& b,
                     std::span<const Operation> args);

}  // namespace optree
