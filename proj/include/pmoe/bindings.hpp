#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "pmoe/value.hpp"

namespace pmoe {

/// Persistent variable environment. Every bind returns a new environment
/// that shares its ancestors; the receiver is never modified, so sibling
/// branches of the search tree can extend a common parent freely.
///
/// A name is either scalar (`$x`) or indexed (`$x_i`, an integer-keyed map)
/// on any one branch.
class Bindings {
 public:
  enum class Kind { Unbound, Scalar, Indexed };

  Bindings() = default;

  /// MixedBinding if `name` is currently indexed.
  Bindings bind_scalar(const std::string& name, Value v) const;
  /// MixedBinding if `name` is currently scalar.
  Bindings bind_indexed(const std::string& name, std::int64_t key, Value v) const;
  /// Scalar bind that hides any earlier binding of `name`, whatever its kind.
  /// Used for lambda parameters.
  Bindings shadow(const std::string& name, Value v) const;

  Kind kind_of(const std::string& name) const;
  /// nullptr when unbound; EvalError when `name` is indexed.
  const Value* lookup(const std::string& name) const;
  /// nullptr when the key (or the name) is unbound; EvalError when `name` is scalar.
  const Value* lookup_indexed(const std::string& name, std::int64_t key) const;
  /// Current contents of an indexed variable, latest binding per key.
  std::map<std::int64_t, Value> indexed_map(const std::string& name) const;

  /// Distinct names in the order they were first bound.
  std::vector<std::string> names() const;
  bool empty() const noexcept { return !head_; }

 private:
  struct Node {
    std::string name;
    bool indexed;
    std::int64_t key;
    Value value;
    std::shared_ptr<const Node> parent;
  };
  explicit Bindings(std::shared_ptr<const Node> head) : head_(std::move(head)) {}
  const Node* first(const std::string& name) const;

  std::shared_ptr<const Node> head_;
};

}  // namespace pmoe
