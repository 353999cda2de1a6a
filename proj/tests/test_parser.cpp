#include <doctest.h>

#include <fstream>

#include "pmoe/error.hpp"
#include "pmoe/parser.hpp"
#include "support.hpp"

using namespace pmoe;
using t::show;

namespace {

std::vector<std::string> corpus() {
  std::ifstream in(PMOE_SOURCE_DIR "/docs/patterns.txt");
  std::vector<std::string> out;
  for (std::string line; std::getline(in, line);)
    if (!line.empty() && line[0] != '#') out.push_back(line);
  return out;
}

std::pair<int, int> where(const char* src) {
  try {
    parse_pattern(src);
  } catch (const ParseError& e) {
    return {e.line(), e.column()};
  }
  return {0, 0};
}

}  // namespace

TEST_SUITE("parser") {
  TEST_CASE("pattern shapes") {
    using namespace pat;
    Expr p2 = ex::add(ex::var("p"), ex::integer(2));
    CHECK(structurally_equal(parse_pattern("_ ++ $p : #(p + 2) : _"),
                             join(wildcard(), cons(var("p"), cons(val(p2), wildcard())))));
    // `:` and `++` share a level and nest to the right.
    CHECK(structurally_equal(parse_pattern("$a : $b ++ $c : $d"),
                             cons(var("a"), join(var("b"), cons(var("c"), var("d"))))));
    CHECK(structurally_equal(parse_pattern("($a : $b) ++ $c"), join(cons(var("a"), var("b")), var("c"))));
    CHECK(to_source(join(cons(var("a"), var("b")), var("c"))) == "($a : $b) ++ $c");
    CHECK(structurally_equal(parse_pattern("$a ++ $b ++ $c"), join(var("a"), join(var("b"), var("c")))));

    Pattern l = parse_pattern("loop $i (1,$n) ($x_i : ...) _");
    auto lp = l.as<pat_node::LoopPat>();
    REQUIRE(lp);
    CHECK(lp->index_var == std::optional<std::string>("i"));
    CHECK_FALSE(lp->end.is_fixed());
    CHECK(structurally_equal(lp->end.pattern, var("n")));
    CHECK(structurally_equal(lp->repeat, cons(ivar("x", ex::var("i")), ellipsis())));

    Pattern s = parse_pattern("seq [@ ++ $x : _, !(_ ++ #x : _)]");
    auto sp = s.as<pat_node::SeqPat>();
    REQUIRE(sp);
    CHECK(sp->items.size() == 2);
    CHECK(structurally_equal(sp->items[1], not_(join(wildcard(), cons(val(ex::var("x")), wildcard())))));

    CHECK(structurally_equal(parse_pattern("(and $x ?(\\q -> q > 1))"),
                             and_({var("x"), pred(ex::lambda("q", ex::cmp(CmpOp::Gt, ex::var("q"), ex::integer(1))))})));
    CHECK(structurally_equal(parse_pattern("Edge $a #b"), ctor("Edge", {var("a"), val(ex::var("b"))})));
    CHECK(structurally_equal(parse_pattern("Leaf"), ctor("Leaf")));
    CHECK(structurally_equal(parse_pattern("($a, [])"), tuple({var("a"), nil()})));
    CHECK(structurally_equal(parse_pattern("let $x = 1 in $y"), let("x", ex::integer(1), var("y"))));
  }

  TEST_CASE("syntax errors carry line and column") {
    CHECK(where("$x : ") == std::pair{1, 6});
    CHECK(where("$x :\n  )") == std::pair{2, 3});
    CHECK(where("(and $x") == std::pair{1, 8});
    CHECK_THROWS_AS(parse_pattern("seq []"), ParseError);
    CHECK_THROWS_AS(parse_pattern("$"), ParseError);
    CHECK_THROWS_AS(parse_pattern("#"), ParseError);
    CHECK_THROWS_AS(parse_pattern("_ _"), ParseError);
    CHECK_THROWS_AS(parse_pattern("..."), PatternError);
    CHECK_THROWS_AS(parse_pattern("@"), PatternError);
  }

  TEST_CASE("matcher expressions") {
    CHECK(parse_matcher("list integer")->name() == "list integer");
    CHECK(parse_matcher("(multiset eq, multiset eq)")->name() == "(multiset eq, multiset eq)");
    CHECK(parse_matcher("multiset (string, multiset (string, integer))")->name() ==
          "multiset (string, multiset (string, integer))");
    CHECK(parse_matcher("sortedList integer")->name() == "sortedList integer");
    CHECK(parse_matcher("set (list something)")->name() == "set (list something)");
    CHECK_THROWS_AS(parse_matcher("bag integer"), ParseError);
    CHECK_THROWS_AS(parse_matcher("list"), ParseError);
    CHECK_THROWS_AS(parse_matcher("(integer"), ParseError);
  }

  TEST_CASE("JSON targets") {
    CHECK(show(parse_target_json("[1,2,3]")) == "[1, 2, 3]");
    Value e = parse_target_json(R"({"ctor":"Edge","args":[1,2]})");
    CHECK(e.is_term());
    CHECK(show(e) == "Edge 1 2");
    CHECK(show(parse_target_json(R"({"tuple": [1, "a", true]})")) == "(1, \"a\", True)");
    CHECK(show(parse_target_json(R"({"ctor":"Leaf"})")) == "Leaf");
    CHECK(show(parse_target_json("[]")) == "[]");
    CHECK(show(parse_target_json("-7")) == "-7");
    CHECK_THROWS_AS(parse_target_json("1.5"), ParseError);
    CHECK_THROWS_AS(parse_target_json("1e3"), ParseError);
    CHECK_THROWS_AS(parse_target_json(R"({"x": 1})"), ParseError);
    CHECK_THROWS_AS(parse_target_json(R"({"ctor": 1, "args": []})"), ParseError);
    CHECK_THROWS_AS(parse_target_json("null"), ParseError);
    CHECK_THROWS_AS(parse_target_json("[1,"), ParseError);
  }

  TEST_CASE("printed patterns reparse to the same tree") {
    auto ps = corpus();
    REQUIRE(ps.size() > 40);
    for (const auto& src : ps) {
      CAPTURE(src);
      Pattern p = parse_pattern(src);
      std::string printed = to_source(p);
      CAPTURE(printed);
      Pattern q = parse_pattern(printed);
      CHECK(structurally_equal(p, q));
      CHECK(to_source(q) == printed);
    }
  }
}
