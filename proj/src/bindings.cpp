#include "pmoe/bindings.hpp"

#include <algorithm>
#include <unordered_set>

#include "pmoe/error.hpp"

namespace pmoe {

const Bindings::Node* Bindings::first(const std::string& name) const {
  for (const Node* n = head_.get(); n; n = n->parent.get())
    if (n->name == name) return n;
  return nullptr;
}

Bindings::Kind Bindings::kind_of(const std::string& name) const {
  const Node* n = first(name);
  if (!n) return Kind::Unbound;
  return n->indexed ? Kind::Indexed : Kind::Scalar;
}

Bindings Bindings::bind_scalar(const std::string& name, Value v) const {
  if (kind_of(name) == Kind::Indexed) throw MixedBinding(name);
  return shadow(name, std::move(v));
}

Bindings Bindings::bind_indexed(const std::string& name, std::int64_t key, Value v) const {
  if (kind_of(name) == Kind::Scalar) throw MixedBinding(name);
  return Bindings(std::make_shared<const Node>(Node{name, true, key, std::move(v), head_}));
}

Bindings Bindings::shadow(const std::string& name, Value v) const {
  return Bindings(std::make_shared<const Node>(Node{name, false, 0, std::move(v), head_}));
}

const Value* Bindings::lookup(const std::string& name) const {
  const Node* n = first(name);
  if (!n) return nullptr;
  if (n->indexed) throw EvalError("'" + name + "' is an indexed variable; use " + name + "_<index>");
  return &n->value;
}

const Value* Bindings::lookup_indexed(const std::string& name, std::int64_t key) const {
  for (const Node* n = head_.get(); n; n = n->parent.get()) {
    if (n->name != name) continue;
    if (!n->indexed) throw EvalError("'" + name + "' is a scalar variable, not indexed");
    if (n->key == key) return &n->value;
  }
  return nullptr;
}

std::map<std::int64_t, Value> Bindings::indexed_map(const std::string& name) const {
  std::map<std::int64_t, Value> out;
  for (const Node* n = head_.get(); n; n = n->parent.get()) {
    if (n->name != name) continue;
    if (!n->indexed) break;
    out.emplace(n->key, n->value);  // first seen is the latest binding
  }
  return out;
}

std::vector<std::string> Bindings::names() const {
  std::vector<std::string> rev;
  for (const Node* n = head_.get(); n; n = n->parent.get()) rev.push_back(n->name);
  std::vector<std::string> out;
  std::unordered_set<std::string> seen;
  for (auto it = rev.rbegin(); it != rev.rend(); ++it)
    if (seen.insert(*it).second) out.push_back(*it);
  return out;
}

}  // namespace pmoe
