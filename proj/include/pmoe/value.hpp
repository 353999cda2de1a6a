#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "pmoe/stream.hpp"

namespace pmoe {

class CollNode;
struct Closure;
struct TermData;

using CollPtr = std::shared_ptr<const CollNode>;

/// Default element budget for structural equality and for materializing
/// collections.
inline constexpr std::uint64_t kDefaultEqualityFuel = 1'000'000;

/// The universal runtime value: Int | Str | Bool | Tuple | Coll | Term, plus
/// closures, which only ever appear as predicate-pattern arguments.
///
/// Values are immutable and cheap to copy; compound payloads are shared.
class Value {
 public:
  enum class Kind { Int, Str, Bool, Tuple, Coll, Term, Closure };

  /// The empty tuple `()`.
  Value();

  static Value integer(std::int64_t v);
  static Value string(std::string s);
  static Value boolean(bool b);
  static Value tuple(std::vector<Value> items);
  static Value coll(CollPtr c);
  static Value coll(const std::vector<Value>& items);
  static Value term(std::string name, std::vector<Value> args = {});
  static Value closure(std::shared_ptr<const Closure> c);

  Kind kind() const noexcept { return static_cast<Kind>(data_.index()); }
  bool is_int() const noexcept { return kind() == Kind::Int; }
  bool is_str() const noexcept { return kind() == Kind::Str; }
  bool is_bool() const noexcept { return kind() == Kind::Bool; }
  bool is_tuple() const noexcept { return kind() == Kind::Tuple; }
  bool is_coll() const noexcept { return kind() == Kind::Coll; }
  bool is_term() const noexcept { return kind() == Kind::Term; }
  bool is_closure() const noexcept { return kind() == Kind::Closure; }

  // Accessors throw EvalError on a kind mismatch.
  std::int64_t as_int() const;
  const std::string& as_str() const;
  bool as_bool() const;
  const std::vector<Value>& tuple_items() const;
  const CollPtr& as_coll() const;
  const std::string& term_name() const;
  const std::vector<Value>& term_args() const;
  const Closure& as_closure() const;

 private:
  using Data = std::variant<std::int64_t, std::shared_ptr<const std::string>, bool,
                            std::shared_ptr<const std::vector<Value>>, CollPtr,
                            std::shared_ptr<const TermData>, std::shared_ptr<const Closure>>;
  explicit Value(Data d) : data_(std::move(d)) {}
  Data data_;
};

const char* kind_name(Value::Kind k) noexcept;

struct TermData {
  std::string name;
  std::vector<Value> args;
};

/// One cell of a memoizing lazy list. The thunk runs at most once, even
/// under concurrent readers; afterwards the cell is immutable.
class CollNode {
 public:
  struct Cell {
    Value head;
    CollPtr tail;
  };
  using Thunk = std::function<std::optional<Cell>()>;

  explicit CollNode(Thunk thunk) : thunk_(std::move(thunk)) {}
  explicit CollNode(std::optional<Cell> cell);
  ~CollNode();

  CollNode(const CollNode&) = delete;
  CollNode& operator=(const CollNode&) = delete;

  /// nullptr when the list ends here.
  const Cell* force() const;

 private:
  mutable std::once_flag once_;
  mutable std::optional<Cell> cell_;
  mutable Thunk thunk_;
};

namespace coll {

CollPtr nil();
CollPtr cons(Value head, CollPtr tail);
CollPtr lazy(CollNode::Thunk thunk);
CollPtr from_vector(const std::vector<Value>& items);
/// `prefix ++ rest`, with the prefix materialized eagerly.
CollPtr prepend(const std::vector<Value>& prefix, CollPtr rest);
CollPtr from_stream(Stream<Value> s);
CollPtr concat(CollPtr a, CollPtr b);
/// The first `k` elements, sharing the memo of `c`.
CollPtr take(CollPtr c, std::size_t k);
/// [from, from+1, ...]
CollPtr naturals(std::int64_t from = 1);
/// [lo .. hi], inclusive.
CollPtr range(std::int64_t lo, std::int64_t hi);

bool empty(const CollPtr& c);
/// Materializes the collection; FuelExhausted if it has more than `limit`
/// elements.
std::vector<Value> to_vector(const CollPtr& c, std::uint64_t limit = kDefaultEqualityFuel);
std::vector<Value> prefix(const CollPtr& c, std::size_t n);

}  // namespace coll

/// Structural (list) equality. Collections compare element-wise in order.
/// FuelExhausted after `fuel` compared elements.
bool value_equal(const Value& a, const Value& b, std::uint64_t fuel = kDefaultEqualityFuel);

/// Canonical printed form: `(a, b)`, `[a, b]`, `Name a b`, `"str"`, `True`.
std::string to_string(const Value& v);
std::ostream& operator<<(std::ostream& os, const Value& v);

}  // namespace pmoe
