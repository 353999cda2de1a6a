#pragma once

#include <functional>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "pmoe/bindings.hpp"
#include "pmoe/value.hpp"

namespace pmoe {

struct ExprNode;

/// The small expression language used inside value patterns, predicate
/// patterns, loop ranges and match-clause bodies. Immutable and shareable.
class Expr {
 public:
  Expr() = default;
  explicit Expr(std::shared_ptr<const ExprNode> n) : node_(std::move(n)) {}

  const ExprNode& node() const { return *node_; }
  explicit operator bool() const noexcept { return static_cast<bool>(node_); }
  const void* identity() const noexcept { return node_.get(); }

 private:
  std::shared_ptr<const ExprNode> node_;
};

enum class ArithOp { Add, Sub, Mul, Negate, Abs };
enum class CmpOp { Eq, Lt, Le, Gt, Ge };

using HostBody = std::function<Value(const Bindings&)>;

namespace expr_node {
struct Lit { Value value; };
struct Var { std::string name; };
struct IndexedVar { std::string name; Expr index; };
struct Arith { ArithOp op; std::vector<Expr> operands; };
struct Cmp { CmpOp op; Expr lhs; Expr rhs; };
struct TupleE { std::vector<Expr> items; };
struct CollE { std::vector<Expr> items; };
struct Lambda { std::string param; Expr body; };
struct Apply { Expr fn; Expr arg; };
/// Opaque host computation. Only embedded (library) code builds these.
struct HostFn { HostBody fn; std::string label; };
}  // namespace expr_node

struct ExprNode {
  std::variant<expr_node::Lit, expr_node::Var, expr_node::IndexedVar, expr_node::Arith, expr_node::Cmp,
               expr_node::TupleE, expr_node::CollE, expr_node::Lambda, expr_node::Apply, expr_node::HostFn>
      v;
};

/// A function value: either a lambda closed over its environment or a host
/// function.
struct Closure {
  std::string param;
  Expr body;
  Bindings env;
  std::function<Value(const Value&)> host;
};

namespace ex {

Expr lit(Value v);
Expr integer(std::int64_t n);
Expr str(std::string s);
Expr boolean(bool b);
Expr var(std::string name);
Expr ivar(std::string name, Expr index);
Expr add(Expr a, Expr b);
Expr sub(Expr a, Expr b);
Expr mul(Expr a, Expr b);
Expr negate(Expr a);
Expr abs(Expr a);
Expr cmp(CmpOp op, Expr a, Expr b);
Expr tuple(std::vector<Expr> items);
Expr coll(std::vector<Expr> items);
Expr lambda(std::string param, Expr body);
Expr apply(Expr fn, Expr arg);
Expr host(HostBody fn, std::string label = "<host>");

}  // namespace ex

/// Wraps a host predicate/function as a closure value.
Value host_function(std::function<Value(const Value&)> fn);
Value host_predicate(std::function<bool(const Value&)> pred);

/// Evaluates `e` under `env`. UnboundVariable names the missing variable;
/// OverflowError on 64-bit overflow; EvalError on type errors.
Value eval(const Expr& e, const Bindings& env);
/// Applies a closure value to one argument.
Value apply(const Value& fn, const Value& arg);

/// Source form accepted by the textual parser.
std::string to_source(const Expr& e);
bool structurally_equal(const Expr& a, const Expr& b);

}  // namespace pmoe
