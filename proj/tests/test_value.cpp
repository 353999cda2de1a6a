#include <doctest.h>

#include <atomic>
#include <random>
#include <thread>

#include "pmoe/bindings.hpp"
#include "pmoe/error.hpp"
#include "pmoe/expr.hpp"
#include "support.hpp"

using namespace pmoe;
using t::I;
using t::ints;

TEST_SUITE("value") {
  TEST_CASE("list equality is order sensitive") {
    CHECK_FALSE(value_equal(ints({1, 2, 3}), ints({2, 1, 3})));
    CHECK(value_equal(Value::term("Edge", {I(1), I(2)}), Value::term("Edge", {I(1), I(2)})));
    CHECK_FALSE(value_equal(Value::tuple({I(1), Value::tuple({I(2), I(3)})}),
                            Value::tuple({I(1), Value::tuple({I(2), I(4)})})));
    CHECK_FALSE(value_equal(I(1), t::S("1")));
    CHECK_FALSE(value_equal(ints({1, 2}), ints({1, 2, 3})));
  }

  TEST_CASE("equality on infinite collections runs out of fuel") {
    Value nat = Value::coll(coll::naturals(1));
    CHECK_THROWS_AS(value_equal(nat, nat, 1000), FuelExhausted);
  }

  TEST_CASE("equality is reflexive and symmetric on random values") {
    std::mt19937 rng(7);
    std::function<Value(int)> gen = [&](int depth) -> Value {
      int k = depth > 2 ? rng() % 3 : rng() % 6;
      switch (k) {
        case 0: return I(rng() % 3);
        case 1: return t::S(std::string(1, 'a' + rng() % 2));
        case 2: return Value::boolean(rng() % 2);
        case 3: return Value::tuple({gen(depth + 1), gen(depth + 1)});
        case 4: {
          std::vector<Value> xs;
          for (unsigned i = 0, n = rng() % 3; i < n; ++i) xs.push_back(gen(depth + 1));
          return Value::coll(xs);
        }
        default: return Value::term(rng() % 2 ? "A" : "B", {gen(depth + 1)});
      }
    };
    for (int i = 0; i < 500; ++i) {
      Value a = gen(0), b = gen(0);
      CHECK(value_equal(a, a));
      CHECK(value_equal(a, b) == value_equal(b, a));
      CHECK(value_equal(a, b) == (to_string(a) == to_string(b)));
    }
  }

  TEST_CASE("printing") {
    CHECK(t::show(Value::tuple({I(1), ints({2, 3})})) == "(1, [2, 3])");
    CHECK(t::show(Value::term("Card", {Value::term("Heart"), I(5)})) == "Card Heart 5");
    CHECK(t::show(Value::term("Node", {t::S("a"), Value::coll(std::vector<Value>{Value::term("Leaf", {t::S("b")})})})) ==
          "Node \"a\" [Leaf \"b\"]");
    CHECK(t::show(Value::term("Edge", {I(-1), Value::term("Succ", {I(2)})})) == "Edge (-1) (Succ 2)");
    CHECK(t::show(Value::boolean(true)) == "True");
    CHECK(t::show(Value()) == "()");
  }

  TEST_CASE("collections memoize") {
    std::atomic<int> calls{0};
    std::function<CollPtr(int)> from = [&](int n) {
      return coll::lazy([&, n]() -> std::optional<CollNode::Cell> {
        ++calls;
        return CollNode::Cell{I(n), from(n + 1)};
      });
    };
    CollPtr c = from(0);
    auto a = coll::prefix(c, 50);
    auto b = coll::prefix(c, 50);
    CHECK(calls == 50);
    for (int i = 0; i < 50; ++i) CHECK(value_equal(a[i], b[i]));
  }

  TEST_CASE("concurrent readers see one fill") {
    std::atomic<int> calls{0};
    std::function<CollPtr(int)> from = [&](int n) {
      return coll::lazy([&, n]() -> std::optional<CollNode::Cell> {
        ++calls;
        if (n == 2000) return std::nullopt;
        return CollNode::Cell{I(n), from(n + 1)};
      });
    };
    CollPtr c = from(0);
    std::vector<std::thread> ts;
    std::vector<std::int64_t> sums(8);
    for (int k = 0; k < 8; ++k)
      ts.emplace_back([&, k] {
        for (const auto& v : coll::to_vector(c)) sums[k] += v.as_int();
      });
    for (auto& th : ts) th.join();
    CHECK(calls == 2001);
    for (auto s : sums) CHECK(s == 1999 * 2000 / 2);
  }
}

TEST_SUITE("bindings") {
  TEST_CASE("scalar binds are persistent") {
    Bindings e0;
    Bindings e1 = e0.bind_scalar("x", I(1));
    Bindings e2 = e1.bind_scalar("x", I(2));
    CHECK(e1.lookup("x")->as_int() == 1);
    CHECK(e2.lookup("x")->as_int() == 2);
    CHECK(e0.lookup("x") == nullptr);
  }

  TEST_CASE("indexed binds accumulate") {
    Bindings e = Bindings().bind_indexed("x", 1, I(10)).bind_indexed("x", 2, I(20));
    CHECK(e.lookup_indexed("x", 1)->as_int() == 10);
    CHECK(e.lookup_indexed("x", 2)->as_int() == 20);
    CHECK(e.indexed_map("x").size() == 2);
    CHECK(e.lookup_indexed("x", 3) == nullptr);
  }

  TEST_CASE("a name is scalar or indexed, not both") {
    CHECK_THROWS_AS(Bindings().bind_indexed("a", 1, I(7)).bind_scalar("a", I(3)), MixedBinding);
    CHECK_THROWS_AS(Bindings().bind_scalar("x", I(5)).bind_indexed("x", 1, I(10)), MixedBinding);
    CHECK(Bindings().bind_scalar("x", I(5)).shadow("x", I(6)).lookup("x")->as_int() == 6);
  }

  TEST_CASE("names keep first-binding order") {
    Bindings e = Bindings().bind_scalar("b", I(1)).bind_indexed("a", 1, I(2)).bind_scalar("b", I(3));
    CHECK(e.names() == std::vector<std::string>{"b", "a"});
  }

  TEST_CASE("binding never changes what an earlier env evaluates to") {
    std::mt19937 rng(3);
    Expr e = parse_expr("x + y_1 * 2");
    for (int trial = 0; trial < 200; ++trial) {
      Bindings base = Bindings().bind_scalar("x", I(rng() % 100)).bind_indexed("y", 1, I(rng() % 100));
      Value before = eval(e, base);
      Bindings ext = base;
      for (int k = 0; k < 10; ++k) {
        if (rng() % 2)
          ext = ext.bind_scalar("x", I(rng() % 1000));
        else
          ext = ext.bind_indexed("y", rng() % 3, I(rng() % 1000));
      }
      CHECK(value_equal(eval(e, base), before));
    }
  }
}

TEST_SUITE("expr") {
  TEST_CASE("evaluation") {
    Bindings env = Bindings().bind_scalar("p", I(3));
    CHECK(eval(parse_expr("p + 2"), env).as_int() == 5);
    CHECK_THROWS_AS(eval(parse_expr("x"), Bindings()), UnboundVariable);
    Bindings a = Bindings().bind_indexed("a", 1, I(7)).bind_indexed("a", 2, I(9));
    CHECK(eval(parse_expr("a_2"), a).as_int() == 9);
    CHECK(eval(parse_expr("a_(3 - 2)"), a).as_int() == 7);
    CHECK(eval(parse_expr("(\\k -> k * k) 7"), Bindings()).as_int() == 49);
    CHECK(eval(parse_expr("negate 4"), Bindings()).as_int() == -4);
    CHECK(eval(parse_expr("abs (0 - 4)"), Bindings()).as_int() == 4);
    CHECK(eval(parse_expr("3 <= 3"), Bindings()).as_bool());
    CHECK(t::show(eval(parse_expr("(1, [2, 3])"), Bindings())) == "(1, [2, 3])");
  }

  TEST_CASE("unbound variable names the variable") {
    try {
      eval(parse_expr("q + 1"), Bindings());
      FAIL("expected an error");
    } catch (const UnboundVariable& e) {
      CHECK(e.name() == "q");
    }
  }

  TEST_CASE("overflow is an error") {
    Bindings env = Bindings().bind_scalar("m", I(INT64_MAX));
    CHECK_THROWS_AS(eval(parse_expr("m + 1"), env), OverflowError);
    CHECK_THROWS_AS(eval(parse_expr("m * 2"), env), OverflowError);
    CHECK_THROWS_AS(eval(parse_expr("negate (0 - m - 1)"), env), OverflowError);
  }

  TEST_CASE("applying a non-function fails") {
    CHECK_THROWS_AS(eval(parse_expr("3 4"), Bindings()), EvalError);
  }

  TEST_CASE("host functions") {
    Value sq = host_function([](const Value& v) { return I(v.as_int() * v.as_int()); });
    CHECK(apply(sq, I(6)).as_int() == 36);
    Expr h = ex::host([](const Bindings& env) { return I(env.lookup("x")->as_int() + 1); }, "inc");
    CHECK(eval(h, Bindings().bind_scalar("x", I(1))).as_int() == 2);
  }
}
