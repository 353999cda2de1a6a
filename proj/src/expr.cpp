#include "pmoe/expr.hpp"

#include <sstream>

#include "overloaded.hpp"
#include "pmoe/error.hpp"

namespace pmoe {

using detail::Overloaded;

namespace {

template <class T>
Expr make(T node) {
  return Expr(std::make_shared<const ExprNode>(ExprNode{std::move(node)}));
}

std::int64_t checked(ArithOp op, std::int64_t a, std::int64_t b) {
  std::int64_t r = 0;
  bool overflow = false;
  switch (op) {
    case ArithOp::Add: overflow = __builtin_add_overflow(a, b, &r); break;
    case ArithOp::Sub: overflow = __builtin_sub_overflow(a, b, &r); break;
    case ArithOp::Mul: overflow = __builtin_mul_overflow(a, b, &r); break;
    default: throw EvalError("not a binary arithmetic operator");
  }
  if (overflow) throw OverflowError("integer overflow in arithmetic");
  return r;
}

const char* op_symbol(ArithOp op) {
  switch (op) {
    case ArithOp::Add: return "+";
    case ArithOp::Sub: return "-";
    case ArithOp::Mul: return "*";
    case ArithOp::Negate: return "negate";
    case ArithOp::Abs: return "abs";
  }
  return "?";
}

const char* op_symbol(CmpOp op) {
  switch (op) {
    case CmpOp::Eq: return "==";
    case CmpOp::Lt: return "<";
    case CmpOp::Le: return "<=";
    case CmpOp::Gt: return ">";
    case CmpOp::Ge: return ">=";
  }
  return "?";
}

Value eval_arith(const expr_node::Arith& a, const Bindings& env) {
  if (a.op == ArithOp::Negate || a.op == ArithOp::Abs) {
    if (a.operands.size() != 1) throw EvalError(std::string(op_symbol(a.op)) + " takes one operand");
    std::int64_t x = eval(a.operands[0], env).as_int();
    if (x == INT64_MIN) throw OverflowError("integer overflow in " + std::string(op_symbol(a.op)));
    if (a.op == ArithOp::Negate) return Value::integer(-x);
    return Value::integer(x < 0 ? -x : x);
  }
  if (a.operands.empty()) throw EvalError("arithmetic with no operands");
  std::int64_t acc = eval(a.operands[0], env).as_int();
  for (std::size_t i = 1; i < a.operands.size(); ++i) acc = checked(a.op, acc, eval(a.operands[i], env).as_int());
  return Value::integer(acc);
}

bool compare(CmpOp op, const Value& x, const Value& y) {
  if (op == CmpOp::Eq) return value_equal(x, y);
  int c = 0;
  if (x.is_int() && y.is_int())
    c = x.as_int() < y.as_int() ? -1 : (x.as_int() > y.as_int() ? 1 : 0);
  else if (x.is_str() && y.is_str())
    c = x.as_str().compare(y.as_str());
  else
    throw EvalError(std::string("cannot order ") + kind_name(x.kind()) + " and " + kind_name(y.kind()));
  switch (op) {
    case CmpOp::Lt: return c < 0;
    case CmpOp::Le: return c <= 0;
    case CmpOp::Gt: return c > 0;
    case CmpOp::Ge: return c >= 0;
    case CmpOp::Eq: break;
  }
  return c == 0;
}

}  // namespace

namespace ex {

Expr lit(Value v) { return make(expr_node::Lit{std::move(v)}); }
Expr integer(std::int64_t n) { return lit(Value::integer(n)); }
Expr str(std::string s) { return lit(Value::string(std::move(s))); }
Expr boolean(bool b) { return lit(Value::boolean(b)); }
Expr var(std::string name) { return make(expr_node::Var{std::move(name)}); }
Expr ivar(std::string name, Expr index) { return make(expr_node::IndexedVar{std::move(name), std::move(index)}); }
Expr add(Expr a, Expr b) { return make(expr_node::Arith{ArithOp::Add, {std::move(a), std::move(b)}}); }
Expr sub(Expr a, Expr b) { return make(expr_node::Arith{ArithOp::Sub, {std::move(a), std::move(b)}}); }
Expr mul(Expr a, Expr b) { return make(expr_node::Arith{ArithOp::Mul, {std::move(a), std::move(b)}}); }
Expr negate(Expr a) { return make(expr_node::Arith{ArithOp::Negate, {std::move(a)}}); }
Expr abs(Expr a) { return make(expr_node::Arith{ArithOp::Abs, {std::move(a)}}); }
Expr cmp(CmpOp op, Expr a, Expr b) { return make(expr_node::Cmp{op, std::move(a), std::move(b)}); }
Expr tuple(std::vector<Expr> items) { return make(expr_node::TupleE{std::move(items)}); }
Expr coll(std::vector<Expr> items) { return make(expr_node::CollE{std::move(items)}); }
Expr lambda(std::string param, Expr body) { return make(expr_node::Lambda{std::move(param), std::move(body)}); }
Expr apply(Expr fn, Expr arg) { return make(expr_node::Apply{std::move(fn), std::move(arg)}); }
Expr host(HostBody fn, std::string label) { return make(expr_node::HostFn{std::move(fn), std::move(label)}); }

}  // namespace ex

Value host_function(std::function<Value(const Value&)> fn) {
  auto c = std::make_shared<Closure>();
  c->host = std::move(fn);
  return Value::closure(std::move(c));
}

Value host_predicate(std::function<bool(const Value&)> pred) {
  return host_function([pred = std::move(pred)](const Value& v) { return Value::boolean(pred(v)); });
}

Value eval(const Expr& e, const Bindings& env) {
  if (!e) throw EvalError("empty expression");
  return std::visit(
      Overloaded{
          [](const expr_node::Lit& n) { return n.value; },
          [&](const expr_node::Var& n) {
            const Value* v = env.lookup(n.name);
            if (!v) throw UnboundVariable(n.name);
            return *v;
          },
          [&](const expr_node::IndexedVar& n) {
            std::int64_t key = eval(n.index, env).as_int();
            const Value* v = env.lookup_indexed(n.name, key);
            if (!v) throw UnboundVariable(n.name + "_" + std::to_string(key));
            return *v;
          },
          [&](const expr_node::Arith& n) { return eval_arith(n, env); },
          [&](const expr_node::Cmp& n) {
            return Value::boolean(compare(n.op, eval(n.lhs, env), eval(n.rhs, env)));
          },
          [&](const expr_node::TupleE& n) {
            std::vector<Value> items;
            items.reserve(n.items.size());
            for (const auto& i : n.items) items.push_back(eval(i, env));
            return Value::tuple(std::move(items));
          },
          [&](const expr_node::CollE& n) {
            std::vector<Value> items;
            items.reserve(n.items.size());
            for (const auto& i : n.items) items.push_back(eval(i, env));
            return Value::coll(items);
          },
          [&](const expr_node::Lambda& n) {
            auto c = std::make_shared<Closure>();
            c->param = n.param;
            c->body = n.body;
            c->env = env;
            return Value::closure(std::move(c));
          },
          [&](const expr_node::Apply& n) { return apply(eval(n.fn, env), eval(n.arg, env)); },
          [&](const expr_node::HostFn& n) { return n.fn(env); },
      },
      e.node().v);
}

Value apply(const Value& fn, const Value& arg) {
  if (!fn.is_closure()) throw EvalError(std::string("cannot apply a ") + kind_name(fn.kind()));
  const Closure& c = fn.as_closure();
  if (c.host) return c.host(arg);
  return eval(c.body, c.env.shadow(c.param, arg));
}

std::string to_source(const Expr& e) {
  std::ostringstream os;
  std::visit(Overloaded{
                 [&](const expr_node::Lit& n) { os << n.value; },
                 [&](const expr_node::Var& n) { os << n.name; },
                 [&](const expr_node::IndexedVar& n) {
                   os << n.name << '_';
                   const auto& idx = n.index.node().v;
                   bool bare = std::holds_alternative<expr_node::Var>(idx) ||
                               (std::holds_alternative<expr_node::Lit>(idx) &&
                                std::get<expr_node::Lit>(idx).value.is_int() &&
                                std::get<expr_node::Lit>(idx).value.as_int() >= 0);
                   bool wrapped = std::holds_alternative<expr_node::Arith>(idx) ||
                                  std::holds_alternative<expr_node::Cmp>(idx) ||
                                  std::holds_alternative<expr_node::Apply>(idx);
                   if (bare || wrapped)
                     os << to_source(n.index);
                   else
                     os << '(' << to_source(n.index) << ')';
                 },
                 [&](const expr_node::Arith& n) {
                   if (n.op == ArithOp::Negate || n.op == ArithOp::Abs) {
                     os << '(' << op_symbol(n.op) << ' ' << to_source(n.operands.at(0)) << ')';
                     return;
                   }
                   os << '(';
                   for (std::size_t i = 0; i < n.operands.size(); ++i) {
                     if (i) os << ' ' << op_symbol(n.op) << ' ';
                     os << to_source(n.operands[i]);
                   }
                   os << ')';
                 },
                 [&](const expr_node::Cmp& n) {
                   os << '(' << to_source(n.lhs) << ' ' << op_symbol(n.op) << ' ' << to_source(n.rhs) << ')';
                 },
                 [&](const expr_node::TupleE& n) {
                   os << '(';
                   for (std::size_t i = 0; i < n.items.size(); ++i) os << (i ? ", " : "") << to_source(n.items[i]);
                   os << ')';
                 },
                 [&](const expr_node::CollE& n) {
                   os << '[';
                   for (std::size_t i = 0; i < n.items.size(); ++i) os << (i ? ", " : "") << to_source(n.items[i]);
                   os << ']';
                 },
                 [&](const expr_node::Lambda& n) { os << "(\\" << n.param << " -> " << to_source(n.body) << ')'; },
                 [&](const expr_node::Apply& n) { os << '(' << to_source(n.fn) << ' ' << to_source(n.arg) << ')'; },
                 [&](const expr_node::HostFn& n) { os << "<host:" << n.label << '>'; },
             },
             e.node().v);
  return os.str();
}

namespace {

bool all_equal(const std::vector<Expr>& a, const std::vector<Expr>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!structurally_equal(a[i], b[i])) return false;
  return true;
}

}  // namespace

bool structurally_equal(const Expr& a, const Expr& b) {
  if (!a || !b) return !a && !b;
  if (a.identity() == b.identity()) return true;
  const auto& x = a.node().v;
  const auto& y = b.node().v;
  if (x.index() != y.index()) return false;
  return std::visit(
      Overloaded{
          [&](const expr_node::Lit& n) { return value_equal(n.value, std::get<expr_node::Lit>(y).value); },
          [&](const expr_node::Var& n) { return n.name == std::get<expr_node::Var>(y).name; },
          [&](const expr_node::IndexedVar& n) {
            const auto& m = std::get<expr_node::IndexedVar>(y);
            return n.name == m.name && structurally_equal(n.index, m.index);
          },
          [&](const expr_node::Arith& n) {
            const auto& m = std::get<expr_node::Arith>(y);
            return n.op == m.op && all_equal(n.operands, m.operands);
          },
          [&](const expr_node::Cmp& n) {
            const auto& m = std::get<expr_node::Cmp>(y);
            return n.op == m.op && structurally_equal(n.lhs, m.lhs) && structurally_equal(n.rhs, m.rhs);
          },
          [&](const expr_node::TupleE& n) { return all_equal(n.items, std::get<expr_node::TupleE>(y).items); },
          [&](const expr_node::CollE& n) { return all_equal(n.items, std::get<expr_node::CollE>(y).items); },
          [&](const expr_node::Lambda& n) {
            const auto& m = std::get<expr_node::Lambda>(y);
            return n.param == m.param && structurally_equal(n.body, m.body);
          },
          [&](const expr_node::Apply& n) {
            const auto& m = std::get<expr_node::Apply>(y);
            return structurally_equal(n.fn, m.fn) && structurally_equal(n.arg, m.arg);
          },
          [&](const expr_node::HostFn&) { return false; },
      },
      x);
}

}  // namespace pmoe
