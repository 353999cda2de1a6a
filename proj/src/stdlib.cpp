#include "pmoe/stdlib.hpp"

#include "pmoe/engine.hpp"
#include "pmoe/parser.hpp"

namespace pmoe::pml {

namespace m = matchers;

namespace {

Value lazy(Stream<Value> s) { return Value::coll(coll::from_stream(std::move(s))); }

Value var(const Bindings& env, const char* name) { return *env.lookup(name); }

MatchConfig with(std::initializer_list<std::pair<const char*, Value>> vars) {
  MatchConfig cfg;
  for (const auto& [k, v] : vars) cfg.env = cfg.env.bind_scalar(k, v);
  return cfg;
}

Value indexed_list(const Bindings& env, const char* name, std::int64_t n) {
  std::vector<Value> out;
  for (std::int64_t i = 1; i <= n; ++i) out.push_back(*env.lookup_indexed(name, i));
  return Value::coll(out);
}

Body constant(Value v) {
  return [v = std::move(v)](const Bindings&) { return v; };
}

const Value kTrue = Value::boolean(true);
const Value kFalse = Value::boolean(false);

}  // namespace

Value map(Fn f, const Value& xs) {
  static const Pattern p = parse_pattern("_ ++ $x : _");
  return lazy(match_all_dfs(xs, m::list(m::something()),
                            {Clause(p, [f = std::move(f)](const Bindings& e) { return f(var(e, "x")); })}));
}

Value map_with_both_sides(Fn3 f, const Value& xs) {
  static const Pattern p = parse_pattern("$hs ++ $x : $ts");
  return lazy(match_all_dfs(
      xs, m::list(m::something()),
      {Clause(p, [f = std::move(f)](const Bindings& e) { return f(var(e, "hs"), var(e, "x"), var(e, "ts")); })}));
}

Value filter(Pred pred, const Value& xs) {
  static const Pattern p = parse_pattern("_ ++ (and ?pred $x) : _");
  return lazy(match_all_dfs(xs, m::list(m::something()), {Clause(p, [](const Bindings& e) { return var(e, "x"); })},
                            with({{"pred", host_predicate(std::move(pred))}})));
}

bool elem(const Value& x, const Value& xs) {
  static const Pattern p = parse_pattern("_ ++ #x : _");
  static const Pattern other = parse_pattern("_");
  return match_first(xs, m::list(m::eq()), {Clause(p, constant(kTrue)), Clause(other, constant(kFalse))},
                     with({{"x", x}}))
      .as_bool();
}

Value delete_first(const Value& x, const Value& xs) {
  static const Pattern p = parse_pattern("$hs ++ #x : $ts");
  static const Pattern other = parse_pattern("_");
  return match_first(xs, m::list(m::eq()),
                     {Clause(p,
                             [](const Bindings& e) {
                               return Value::coll(coll::concat(var(e, "hs").as_coll(), var(e, "ts").as_coll()));
                             }),
                      Clause(other, constant(xs))},
                     with({{"x", x}}));
}

bool any(Pred pred, const Value& xs) {
  static const Pattern p = parse_pattern("_ ++ ?pred : _");
  static const Pattern other = parse_pattern("_");
  return match_first(xs, m::list(m::something()), {Clause(p, constant(kTrue)), Clause(other, constant(kFalse))},
                     with({{"pred", host_predicate(std::move(pred))}}))
      .as_bool();
}

bool every(Pred pred, const Value& xs) {
  static const Pattern p = parse_pattern("_ ++ !?pred : _");
  static const Pattern other = parse_pattern("_");
  return match_first(xs, m::list(m::something()), {Clause(p, constant(kFalse)), Clause(other, constant(kTrue))},
                     with({{"pred", host_predicate(std::move(pred))}}))
      .as_bool();
}

Value unique_last(const Value& xs) {
  static const Pattern p = parse_pattern("_ ++ $x : !(_ ++ #x : _)");
  return lazy(match_all_dfs(xs, m::list(m::eq()), {Clause(p, [](const Bindings& e) { return var(e, "x"); })}));
}

Value unique_first(const Value& xs) {
  static const Pattern p = parse_pattern("seq [@ ++ $x : _, !(_ ++ #x : _)]");
  return lazy(match_all_dfs(xs, m::list(m::eq()), {Clause(p, [](const Bindings& e) { return var(e, "x"); })}));
}

Value concat(const Value& xss) {
  static const Pattern p = parse_pattern("_ ++ (_ ++ $x : _) : _");
  return lazy(match_all_dfs(xss, m::list(m::list(m::something())),
                            {Clause(p, [](const Bindings& e) { return var(e, "x"); })}));
}

Value concat_bfs(const Value& xss) {
  static const Pattern p = parse_pattern("_ ++ (_ ++ $x : _) : _");
  return lazy(
      match_all(xss, m::list(m::list(m::something())), {Clause(p, [](const Bindings& e) { return var(e, "x"); })}));
}

Value lookup(const Value& k, const Value& assoc) {
  static const Pattern p = parse_pattern("(#k, $x) : _");
  return match_first(assoc, m::multiset(m::tuple({m::eq(), m::something()})),
                     {Clause(p, [](const Bindings& e) { return var(e, "x"); })}, with({{"k", k}}));
}

Value intersect(const Value& xs, const Value& ys) {
  static const Pattern p = parse_pattern("($x : _, #x : _)");
  return Value::coll(match_all(Value::tuple({xs, ys}), m::tuple({m::multiset(m::eq()), m::multiset(m::eq())}),
                               {Clause(p, [](const Bindings& e) { return var(e, "x"); })})
                         .collect());
}

Value difference(const Value& xs, const Value& ys) {
  static const Pattern p = parse_pattern("($x : _, !(#x : _))");
  return Value::coll(match_all(Value::tuple({xs, ys}), m::tuple({m::multiset(m::eq()), m::multiset(m::eq())}),
                               {Clause(p, [](const Bindings& e) { return var(e, "x"); })})
                         .collect());
}

bool single_common_elem(const Value& xs, const Value& ys) {
  static const Pattern p = parse_pattern("seq [($x : @, #x : @), !($y : _, #y : _)]");
  static const Pattern other = parse_pattern("_");
  return match_first(Value::tuple({xs, ys}), m::tuple({m::multiset(m::eq()), m::multiset(m::eq())}),
                     {Clause(p, constant(kTrue)), Clause(other, constant(kFalse))})
      .as_bool();
}

Value common_prefix(const Value& xs, const Value& ys) {
  static const Pattern p = parse_pattern("loop $i (1, $n) seq [($x_i : @, #x_i : @), ...] !($y : _, #y : _)");
  return match_first(Value::tuple({xs, ys}), m::tuple({m::list(m::eq()), m::list(m::eq())}),
                     {Clause(p, [](const Bindings& e) { return indexed_list(e, "x", var(e, "n").as_int()); })});
}

Value comb(std::int64_t n, const Value& xs) {
  static const Pattern p = parse_pattern("loop $i (1, n) (_ ++ $x_i : ...) _");
  return Value::coll(match_all(xs, m::list(m::something()),
                               {Clause(p, [n](const Bindings& e) { return indexed_list(e, "x", n); })},
                               with({{"n", Value::integer(n)}}))
                         .collect());
}

}  // namespace pmoe::pml
