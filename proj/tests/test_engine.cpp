#include <doctest.h>

#include <algorithm>
#include <set>

#include "pmoe/error.hpp"
#include "pmoe/stdlib.hpp"
#include "support.hpp"

using namespace pmoe;
using t::I;
using t::ints;
using t::query;

namespace {

Value naturals() { return Value::coll(coll::naturals(1)); }

std::vector<std::string> sorted_results(const char* matcher, const char* pattern, const Value& target, const char* body,
                                        Order order) {
  auto run = order == Order::BFS ? match_all : match_all_dfs;
  std::vector<std::string> out;
  for (const auto& v : run(target, parse_matcher(matcher), {Clause(parse_pattern(pattern), parse_expr(body))}, {})
                           .collect())
    out.push_back(to_string(v));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_SUITE("engine") {
  TEST_CASE("cons is polymorphic over the matcher") {
    CHECK(query("list integer", "$x : $xs", ints({1, 2, 3}), "(x, xs)") == "[(1, [2, 3])]");
    CHECK(query("multiset integer", "$x : $xs", ints({1, 2, 3}), "(x, xs)") ==
          "[(1, [2, 3]), (2, [1, 3]), (3, [1, 2])]");
    CHECK(query("set integer", "$x : $xs", ints({1, 2, 3}), "(x, xs)") ==
          "[(1, [1, 2, 3]), (2, [1, 2, 3]), (3, [1, 2, 3])]");
  }

  TEST_CASE("value patterns are polymorphic over the matcher") {
    CHECK(query("list integer", "#[2, 1, 3]", ints({1, 2, 3}), "\"Matched\"") == "[]");
    CHECK(query("multiset integer", "#[2, 1, 3]", ints({1, 2, 3}), "\"Matched\"") == "[\"Matched\"]");
    CHECK(query("set integer", "#[1, 1, 2]", ints({2, 1}), "\"Matched\"") == "[\"Matched\"]");
  }

  TEST_CASE("breadth-first and depth-first pair orders") {
    CHECK(query("set something", "$x : $y : _", naturals(), "(x, y)", Order::BFS, 6) ==
          "[(1, 1), (1, 2), (2, 1), (1, 3), (2, 2), (3, 1)]");
    CHECK(query("set something", "$x : $y : _", naturals(), "(x, y)", Order::DFS, 6) ==
          "[(1, 1), (1, 2), (1, 3), (1, 4), (1, 5), (1, 6)]");
  }

  TEST_CASE("breadth-first enumeration follows the diagonals") {
    auto got = match_all(naturals(), matchers::set(matchers::something()),
                         {Clause(parse_pattern("$x : $y : _"), parse_expr("(x, y)"))})
                   .take(55);
    std::set<std::pair<std::int64_t, std::int64_t>> seen;
    for (std::size_t k = 0; k < got.size(); ++k) {
      std::int64_t i = got[k].tuple_items()[0].as_int(), j = got[k].tuple_items()[1].as_int();
      std::int64_t d = i + j - 1;
      CHECK(static_cast<std::int64_t>(k + 1) == (d - 1) * d / 2 + i);
      seen.insert({i, j});
    }
    for (int i = 1; i <= 5; ++i)
      for (int j = 1; j <= 5; ++j) CHECK(seen.count({i, j}));
  }

  TEST_CASE("interleaved concat") {
    Value negs = pml::map([](const Value& v) { return I(-v.as_int()); }, naturals());
    Value xss = Value::coll(std::vector<Value>{naturals(), negs});
    CHECK(query("list (list something)", "_ ++ (_ ++ $x : _) : _", xss, "x", Order::BFS, 10) ==
          "[1, 2, -1, 3, -2, 4, -3, 5, -4, 6]");
    CHECK(query("list (list something)", "_ ++ (_ ++ $x : _) : _", xss, "x", Order::DFS, 5) == "[1, 2, 3, 4, 5]");
  }

  TEST_CASE("value patterns only see earlier bindings") {
    CHECK(query("list integer", "$x : #x : _", ints({2, 2, 3}), "x") == "[2]");
    try {
      query("list integer", "#x : $x : _", ints({2, 2, 3}), "x");
      FAIL("expected an unbound variable");
    } catch (const UnboundVariable& e) {
      CHECK(e.name() == "x");
    }
  }

  TEST_CASE("predicate patterns") {
    CHECK(query("list integer", "_ ++ $p : ?(\\q -> q == p + 2) : _", ints({3, 5, 7, 11, 13}), "(p, p + 2)") ==
          "[(3, 5), (5, 7), (11, 13)]");
    CHECK_THROWS_AS(query("list integer", "?3 : _", ints({1}), "0"), EvalError);
  }

  TEST_CASE("and, or and not") {
    CHECK(query("list integer", "_ ++ $p : (and (or #(p + 2) #(p + 4)) $m) : #(p + 6) : _",
                ints({5, 7, 11, 13, 17, 19, 23}), "(p, m, p + 6)") ==
          "[(5, 7, 11), (7, 11, 13), (11, 13, 17), (13, 17, 19), (17, 19, 23)]");
    CHECK(query("list integer", "_ ++ $p : (and !#(p + 2) $q) : _", ints({2, 3, 5, 7, 11}), "(p, q)") ==
          "[(2, 3), (7, 11)]");
    CHECK(query("eq", "!#1", I(2), "0") == "[0]");
    CHECK(query("something", "!_", I(2), "0") == "[]");
    CHECK(query("(multiset eq, multiset eq)", "!($x : _, #x : _)", Value::tuple({ints({1, 2}), ints({3, 4})}), "0") ==
          "[0]");
  }

  TEST_CASE("divergent not-pattern runs out of fuel") {
    MatchConfig cfg;
    cfg.options.not_fuel = 5000;
    auto s = match_all(naturals(), matchers::list(matchers::integer()),
                       {Clause(parse_pattern("!(_ ++ #0 : _)"), parse_expr("0"))}, cfg);
    CHECK_THROWS_AS(s.next(), FuelExhausted);
  }

  TEST_CASE("state budget") {
    MatchConfig cfg;
    cfg.options.max_states = 1000;
    auto s = match_all(naturals(), matchers::list(matchers::integer()),
                       {Clause(parse_pattern("_ ++ #0 : _"), parse_expr("0"))}, cfg);
    CHECK_THROWS_AS(s.next(), FuelExhausted);
  }

  TEST_CASE("stats count states and branches") {
    MatchConfig cfg;
    cfg.stats = std::make_shared<EngineStats>();
    auto s = match_all(ints({1, 2, 3}), matchers::multiset(matchers::integer()),
                       {Clause(parse_pattern("$x : $y : _"), parse_expr("(x, y)"))}, cfg);
    std::uint64_t last = 0;
    while (s.next()) {
      CHECK(cfg.stats->states_expanded >= last);
      last = cfg.stats->states_expanded;
    }
    CHECK(cfg.stats->states_expanded > 0);
    CHECK(cfg.stats->branches_created > 0);
  }

  TEST_CASE("first clause wins in match") {
    std::vector<Clause> clauses = {Clause(parse_pattern("$x : _"), parse_expr("\"first\"")),
                                   Clause(parse_pattern("_"), parse_expr("\"second\""))};
    CHECK(match_first(ints({1}), matchers::list(matchers::integer()), clauses).as_str() == "first");
    CHECK(match_first(ints({}), matchers::list(matchers::integer()), clauses).as_str() == "second");
    CHECK_THROWS_AS(match_first(ints({}), matchers::list(matchers::integer()), {clauses[0]}), NoMatch);
  }

  TEST_CASE("clauses concatenate in order") {
    auto got = match_all(ints({1, 2}), matchers::multiset(matchers::integer()),
                         {Clause(parse_pattern("$x : _"), parse_expr("x")),
                          Clause(parse_pattern("$x : _"), parse_expr("x * 10"))})
                   .collect();
    CHECK(t::show(got) == "[1, 2, 10, 20]");
  }

  TEST_CASE("sequential patterns") {
    CHECK(query("list integer", "seq [@ : @ : $x : _, (#(x + 1), @), #(x + 2)]", ints({2, 3, 1, 4, 5}),
                "\"Matched\"") == "[\"Matched\"]");
    CHECK(query("list integer", "seq [@ : @ : $x : _, (#(x + 1), @), #(x + 2)]", ints({2, 4, 1, 4, 5}),
                "\"Matched\"") == "[]");
    // No later variable: the next stage sees the empty tuple.
    CHECK(query("list integer", "seq [$x : _, ()]", ints({7}), "x") == "[7]");
    CHECK(query("list integer", "seq [$x : _, _]", ints({7}), "x") == "[7]");
    // A lone later variable is matched bare, under its own matcher.
    CHECK(query("list integer", "seq [$x : @, #[8, 9]]", ints({7, 8, 9}), "x") == "[7]");
    // Stages nest.
    CHECK(query("list integer", "seq [$x : @, seq [$y : @, #(x + y) : _]]", ints({1, 2, 3}), "(x, y)") ==
          "[(1, 2)]");
  }

  TEST_CASE("later-variable targets pair up in order") {
    Value cnf = t::int_lists({{1, 2}, {-1, 3}, {-1, -2}});
    CHECK(query("multiset (multiset integer)",
                "seq [(#1 : (and @ $xs)) : (#(negate 1) : (and @ $ys)) : _, !($x : _, #(negate x) : _)]", cnf,
                "(xs, ys)") == "[([2], [3])]");
  }

  TEST_CASE("loops") {
    CHECK(query("list something", "loop $i (1, $n) ($x_i : ...) _", ints({1, 2, 3, 4}), "n") == "[0, 1, 2, 3, 4]");
    CHECK(query("list something", "loop $i (1, $n) ($x_i : ...) _", ints({1, 2, 3, 4}), "n", Order::DFS) ==
          "[0, 1, 2, 3, 4]");
    CHECK(query("list something", "loop $i (1, 0) ($x_i : ...) $r", ints({1, 2}), "r") == "[[1, 2]]");
    CHECK(query("list something", "loop $i (1, 2) ($x_i : ...) $r", ints({1, 2, 3}), "(x_1, x_2, r)") ==
          "[(1, 2, [3])]");
    CHECK(query("list something", "loop $i (1, 2) (_ ++ $x_i : ...) _", ints({1, 2, 3, 4}), "(x_1, x_2)") ==
          "[(1, 2), (1, 3), (2, 3), (1, 4), (2, 4), (3, 4)]");
    CHECK(query("list something", "loop _ (1, _) (_ : ...) []", ints({1, 2, 3}), "0") == "[0]");
    CHECK_THROWS_AS(query("list something", "loop $i (1, \"a\") ($x_i : ...) _", ints({1}), "0"), EvalError);
  }

  TEST_CASE("let patterns") {
    CHECK(query("list integer", "let $k = 2 in _ ++ #k : $r", ints({1, 2, 3}), "r") == "[[3]]");
    CHECK(query("list integer", "let $x_1 = 5 in $x_2 : _", ints({6}), "x_1 + x_2") == "[11]");
  }

  TEST_CASE("mixed scalar and indexed use of a name is an error") {
    CHECK_THROWS_AS(query("list integer", "$x : $x_1 : _", ints({1, 2}), "0"), MixedBinding);
  }

  TEST_CASE("breadth-first and depth-first agree on finite searches") {
    struct Q {
      const char* m;
      const char* p;
      Value t;
      const char* b;
    };
    std::vector<Q> qs = {
        {"list eq", "_ ++ $x : !(_ ++ #x : _)", ints({1, 2, 3, 2, 4}), "x"},
        {"list eq", "seq [@ ++ $x : _, !(_ ++ #x : _)]", ints({1, 2, 3, 2, 4}), "x"},
        {"list (list something)", "_ ++ (_ ++ $x : _) : _", t::int_lists({{1, 2}, {3}, {}, {4, 5}}), "x"},
        {"list integer", "_ ++ $x : _ ++ $y : _", ints({1, 2, 3}), "(x, y)"},
        {"multiset integer", "$x : $y : _", ints({1, 2, 3}), "(x, y)"},
        {"multiset (eq, something)", "(#2, $x) : _",
         Value::coll(std::vector<Value>{Value::tuple({I(1), t::S("a")}), Value::tuple({I(2), t::S("b")})}), "x"},
        {"(multiset eq, multiset eq)", "($x : _, #x : _)", Value::tuple({ints({1, 2, 3}), ints({2, 3, 4})}), "x"},
        {"(multiset eq, multiset eq)", "($x : _, !(#x : _))", Value::tuple({ints({1, 2, 3}), ints({2, 3, 4})}), "x"},
        {"(multiset eq, multiset eq)", "seq [($x : @, #x : @), !($y : _, #y : _)]",
         Value::tuple({ints({1, 2}), ints({2, 3})}), "x"},
        {"(list eq, list eq)", "loop $i (1, $n) seq [($x_i : @, #x_i : @), ...] !($y : _, #y : _)",
         Value::tuple({ints({1, 2, 9}), ints({1, 2, 7})}), "n"},
        {"list something", "loop $i (1, 3) (_ ++ $x_i : ...) _", ints({1, 2, 3, 4, 5}), "[x_1, x_2, x_3]"},
        {"multiset integer",
         "$a_1 : (loop $i (2, 5) ((loop $j (1, i - 1) (and !#(a_j - (i - j)) !#(a_j + (i - j)) ...) $a_i) : ...) [])",
         ints({1, 2, 3, 4, 5}), "[a_1, a_2, a_3, a_4, a_5]"},
    };
    for (const auto& q : qs) {
      CAPTURE(q.p);
      CHECK(sorted_results(q.m, q.p, q.t, q.b, Order::BFS) == sorted_results(q.m, q.p, q.t, q.b, Order::DFS));
    }
  }

  TEST_CASE("results are lazy") {
    MatchConfig cfg;
    cfg.stats = std::make_shared<EngineStats>();
    auto s = match_all(naturals(), matchers::list(matchers::integer()),
                       {Clause(parse_pattern("_ ++ $x : _"), parse_expr("x"))}, cfg);
    s.take(5);
    CHECK(cfg.stats->states_expanded < 100);
  }
}
