#include "pmoe/demos.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "pmoe/engine.hpp"
#include "pmoe/error.hpp"
#include "pmoe/parser.hpp"
#include "pmoe/stdlib.hpp"

namespace pmoe::demos {

namespace m = matchers;

namespace {

Value lazy(Stream<Value> s) { return Value::coll(coll::from_stream(std::move(s))); }
Value collected(Stream<Value> s) { return Value::coll(s.collect()); }

Value var(const Bindings& env, const char* name) { return *env.lookup(name); }

Value indexed_list(const Bindings& env, const char* name, std::int64_t lo, std::int64_t hi) {
  std::vector<Value> out;
  for (std::int64_t i = lo; i <= hi; ++i) out.push_back(*env.lookup_indexed(name, i));
  return Value::coll(out);
}

MatchConfig with(std::initializer_list<std::pair<const char*, Value>> vars, Order order = Order::BFS) {
  MatchConfig cfg;
  cfg.order = order;
  for (const auto& [k, v] : vars) cfg.env = cfg.env.bind_scalar(k, v);
  return cfg;
}

Value I(std::int64_t n) { return Value::integer(n); }
Value S(std::string s) { return Value::string(std::move(s)); }

// Incremental sieve: each composite waiting in `next` maps to its step 2p.
struct Sieve {
  std::map<std::int64_t, std::int64_t> next;
  std::int64_t candidate = 1;

  std::int64_t step() {
    if (candidate == 1) return candidate = 2;
    if (candidate == 2) {
      next.emplace(9, 6);
      return candidate = 3;
    }
    for (;;) {
      candidate += 2;
      auto it = next.find(candidate);
      if (it == next.end()) {
        next.emplace(candidate * candidate, 2 * candidate);
        return candidate;
      }
      std::int64_t stride = it->second;
      next.erase(it);
      std::int64_t c = candidate + stride;
      while (next.count(c)) c += stride;
      next.emplace(c, stride);
    }
  }
};

CollPtr sieve_from(std::shared_ptr<Sieve> s) {
  return coll::lazy([s]() -> std::optional<CollNode::Cell> {
    std::int64_t p = s->step();
    return CollNode::Cell{I(p), sieve_from(s)};
  });
}

const Matcher& list_int() {
  static const Matcher mt = m::list(m::integer());
  return mt;
}

const Matcher& cnf_matcher() {
  static const Matcher mt = m::multiset(m::multiset(m::integer()));
  return mt;
}

}  // namespace

const Value& primes() {
  static const Value v = Value::coll(sieve_from(std::make_shared<Sieve>()));
  return v;
}

Value twin_primes() {
  static const Pattern p = parse_pattern("_ ++ $p : #(p + 2) : _");
  return lazy(match_all(primes(), list_int(), {Clause(p, parse_expr("(p, p + 2)"))}));
}

Value prime_triples() {
  static const Pattern p = parse_pattern("_ ++ $p : (and (or #(p + 2) #(p + 4)) $m) : #(p + 6) : _");
  return lazy(match_all(primes(), list_int(), {Clause(p, parse_expr("(p, m, p + 6)"))}));
}

Value non_twin_pairs() {
  static const Pattern p = parse_pattern("_ ++ $p : (and !#(p + 2) $q) : _");
  return lazy(match_all(primes(), list_int(), {Clause(p, parse_expr("(p, q)"))}));
}

Value sextile_pairs() {
  static const Pattern p = parse_pattern("_ ++ $p : (_ ++ #(p + 6) : _)");
  return lazy(match_all(primes(), m::sorted_list(m::integer()), {Clause(p, parse_expr("(p, p + 6)"))}));
}

Value n_queens(std::int64_t n) {
  static const Pattern p = parse_pattern(
      "$a_1 : (loop $i (2, n) ((loop $j (1, i - 1) (and !#(a_j - (i - j)) !#(a_j + (i - j)) ...) $a_i) : ...) [])");
  return collected(match_all(Value::coll(coll::range(1, n)), m::multiset(m::integer()),
                             {Clause(p, [n](const Bindings& e) { return indexed_list(e, "a", 1, n); })},
                             with({{"n", I(n)}})));
}

// ---- SAT

Value assign_true(std::int64_t lit, const Value& cnf) {
  static const Pattern p = parse_pattern("_ ++ (and !(#lit : _) $c) : _");
  return collected(match_all_dfs(cnf, m::list(m::multiset(m::integer())),
                                 {Clause(p,
                                         [lit](const Bindings& e) {
                                           return pml::filter([lit](const Value& x) { return x.as_int() != -lit; },
                                                              var(e, "c"));
                                         })},
                                 with({{"lit", I(lit)}})));
}

Value delete_clauses_with(const Value& lits, const Value& cnf) {
  static const Pattern p = parse_pattern("_ ++ (and !?hits $c) : _");
  Value hits = host_predicate([lits](const Value& c) { return !coll::empty(pml::intersect(lits, c).as_coll()); });
  return collected(match_all_dfs(cnf, m::list(m::multiset(m::integer())),
                                 {Clause(p, [](const Bindings& e) { return var(e, "c"); })},
                                 with({{"hits", hits}})));
}

Value resolve_on(std::int64_t v, const Value& cnf) {
  static const Pattern p = parse_pattern(
      "seq [(#v : (and @ $xs)) : (#(negate v) : (and @ $ys)) : _, !($x : _, #(negate x) : _)]");
  return collected(match_all(cnf, cnf_matcher(),
                             {Clause(p,
                                     [](const Bindings& e) {
                                       return pml::unique_first(Value::coll(
                                           coll::concat(var(e, "xs").as_coll(), var(e, "ys").as_coll())));
                                     })},
                             with({{"v", I(v)}})));
}

Value resolve_on_naive(std::int64_t v, const Value& cnf) {
  static const Pattern p = parse_pattern("(#v : $xs) : (#(negate v) : $ys) : _");
  auto tautology = [](const Value& c) {
    static const Pattern t = parse_pattern("$x : #(negate x) : _");
    return match_envs(c, m::multiset(m::integer()), t).next().has_value();
  };
  auto all = match_all(cnf, cnf_matcher(),
                       {Clause(p,
                               [](const Bindings& e) {
                                 return pml::unique_first(
                                     Value::coll(coll::concat(var(e, "xs").as_coll(), var(e, "ys").as_coll())));
                               })},
                       with({{"v", I(v)}}))
                 .collect();
  std::vector<Value> kept;
  for (auto& c : all)
    if (!tautology(c)) kept.push_back(c);
  return Value::coll(kept);
}

namespace {

// Sorted literals, so equal clauses compare equal as lists.
Value normal_clause(const Value& c) {
  std::vector<std::int64_t> ls;
  for (const auto& l : coll::to_vector(c.as_coll())) ls.push_back(l.as_int());
  std::sort(ls.begin(), ls.end());
  ls.erase(std::unique(ls.begin(), ls.end()), ls.end());
  std::vector<Value> out;
  for (auto l : ls) out.push_back(I(l));
  return Value::coll(out);
}

Value normal_cnf(const Value& cnf) { return pml::unique_first(pml::map(normal_clause, cnf)); }

bool dp(const Value& vars, const Value& cnf);

}  // namespace

bool sat_solve(const Value& vars, const Value& cnf) {
  std::set<std::int64_t> known;
  for (const auto& v : coll::to_vector(vars.as_coll())) known.insert(v.as_int());
  for (const auto& c : coll::to_vector(cnf.as_coll()))
    for (const auto& l : coll::to_vector(c.as_coll())) {
      std::int64_t x = l.as_int();
      if (x == 0) throw Error("sat: literal 0");
      if (!known.count(x < 0 ? -x : x)) throw Error("sat: literal " + std::to_string(x) + " has no variable");
    }
  return dp(vars, normal_cnf(cnf));
}

namespace {

bool dp(const Value& vars, const Value& cnf) {
  static const Matcher mt = m::tuple({m::multiset(m::integer()), cnf_matcher()});
  static const Pattern empty = parse_pattern("(_, [])");
  static const Pattern has_empty = parse_pattern("(_, [] : _)");
  static const Pattern unit = parse_pattern("(_, ($x : []) : _)");
  static const Pattern pure_pos = parse_pattern("($v : $vs, !((#(negate v) : _) : _))");
  static const Pattern pure_neg = parse_pattern("($v : $vs, !((#v : _) : _))");
  static const Pattern split = parse_pattern("($v : $vs, _)");

  auto b = [](bool x) { return Value::boolean(x); };
  return match_first(Value::tuple({vars, cnf}), mt,
                     {
                         Clause(empty, [&](const Bindings&) { return b(true); }),
                         Clause(has_empty, [&](const Bindings&) { return b(false); }),
                         Clause(unit,
                                [&](const Bindings& e) {
                                  std::int64_t x = var(e, "x").as_int();
                                  return b(dp(pml::delete_first(I(x < 0 ? -x : x), vars), assign_true(x, cnf)));
                                }),
                         Clause(pure_pos,
                                [&](const Bindings& e) {
                                  return b(dp(var(e, "vs"), assign_true(var(e, "v").as_int(), cnf)));
                                }),
                         Clause(pure_neg,
                                [&](const Bindings& e) {
                                  return b(dp(var(e, "vs"), assign_true(-var(e, "v").as_int(), cnf)));
                                }),
                         Clause(split,
                                [&](const Bindings& e) {
                                  std::int64_t v = var(e, "v").as_int();
                                  Value rest = delete_clauses_with(Value::coll({I(v), I(-v)}), cnf);
                                  Value next = normal_cnf(Value::coll(coll::concat(rest.as_coll(), resolve_on(v, cnf).as_coll())));
                                  return b(dp(var(e, "vs"), next));
                                }),
                     })
      .as_bool();
}

}  // namespace

// ---- poker

Matcher suit_matcher() {
  static const Matcher mt = m::algebraic("suit", [](const Matcher&) {
    return std::vector<m::CtorSpec>{{"Diamond", {}}, {"Clover", {}}, {"Heart", {}}, {"Spade", {}}};
  });
  return mt;
}

Matcher card_matcher() {
  static const Matcher mt = m::algebraic("card", [](const Matcher&) {
    return std::vector<m::CtorSpec>{{"Card", {suit_matcher(), m::integer()}}};
  });
  return mt;
}

Value card(const std::string& suit, std::int64_t rank) { return Value::term("Card", {Value::term(suit), I(rank)}); }

std::string poker_hand(const Value& cards) {
  auto n = coll::to_vector(cards.as_coll()).size();
  if (n != 5) throw Error("poker: expected 5 cards, got " + std::to_string(n));
  static const std::vector<std::pair<const char*, const char*>> hands = {
      {"(Card $s $n) : (Card #s #(n - 1)) : (Card #s #(n - 2)) : (Card #s #(n - 3)) : (Card #s #(n - 4)) : []",
       "Straight flush"},
      {"(Card _ $n) : (Card _ #n) : (Card _ #n) : (Card _ #n) : _", "Four of kind"},
      {"(Card _ $m) : (Card _ #m) : (Card _ #m) : (Card _ $n) : (Card _ #n) : []", "Full house"},
      {"(Card $s _) : (Card #s _) : (Card #s _) : (Card #s _) : (Card #s _) : []", "Flush"},
      {"(Card _ $n) : (Card _ #(n - 1)) : (Card _ #(n - 2)) : (Card _ #(n - 3)) : (Card _ #(n - 4)) : []",
       "Straight"},
      {"(Card _ $n) : (Card _ #n) : (Card _ #n) : _", "Three of kind"},
      {"(Card _ $m) : (Card _ #m) : (Card _ $n) : (Card _ #n) : _", "Two pair"},
      {"(Card _ $n) : (Card _ #n) : _", "One pair"},
      {"_", "Nothing"},
  };
  static const std::vector<Clause> clauses = [] {
    std::vector<Clause> out;
    for (const auto& [src, name] : hands) out.emplace_back(parse_pattern(src), Body([v = S(name)](const Bindings&) { return v; }));
    return out;
  }();
  static const Matcher mt = m::multiset(card_matcher());
  return match_first(cards, mt, clauses).as_str();
}

// ---- trees

Matcher tree_matcher(Matcher leaf) {
  return m::algebraic("tree", [leaf](const Matcher& self) {
    return std::vector<m::CtorSpec>{{"Leaf", {leaf}}, {"Node", {leaf, m::multiset(self)}}};
  });
}

namespace {

Value leaf(const char* s) { return Value::term("Leaf", {S(s)}); }
Value node(const char* s, std::vector<Value> kids) { return Value::term("Node", {S(s), Value::coll(kids)}); }

}  // namespace

const Value& category_tree() {
  static const Value t = node(
      "Programming language",
      {node("pattern-match-oriented", {leaf("Egison")}),
       node("Functional language",
            {node("Strictly typed", {leaf("OCaml"), leaf("Haskell"), leaf("Curry"), leaf("Coq")}),
             node("Dynamically typed", {leaf("Egison"), leaf("Lisp"), leaf("Scheme"), leaf("Racket")})}),
       node("Logic programming", {leaf("Prolog"), leaf("Curry")}),
       node("Object oriented", {leaf("C++"), leaf("Java"), leaf("Ruby"), leaf("Python"), leaf("OCaml")})});
  return t;
}

Value ancestors(const std::string& x, const Value& tree) {
  static const Pattern p = parse_pattern("loop $i (1, $n) (Node $c_i (... : _)) (Leaf #x)");
  return collected(match_all(tree, tree_matcher(m::string()),
                             {Clause(p,
                                     [](const Bindings& e) {
                                       return indexed_list(e, "c", 1, var(e, "n").as_int());
                                     })},
                             with({{"x", S(x)}})));
}

Value descendants(const std::string& x, const Value& tree) {
  static const Pattern p = parse_pattern(
      "loop _ (1, _) (Node _ (... : _)) (Node #x ((loop _ (1, _) (Node _ (... : _)) (Leaf $y)) : _))");
  return collected(match_all_dfs(tree, tree_matcher(m::string()),
                                 {Clause(p, [](const Bindings& e) { return var(e, "y"); })}, with({{"x", S(x)}})));
}

// ---- graphs

Matcher edge_matcher() {
  static const Matcher mt = m::algebraic("edge", [](const Matcher&) {
    return std::vector<m::CtorSpec>{{"Edge", {m::integer(), m::integer()}}};
  });
  return mt;
}

const Value& graph_data() {
  static const Value g = [] {
    static const int pairs[][2] = {{1, 2}, {1, 4}, {2, 1}, {2, 3}, {2, 4}, {3, 4}, {4, 5}, {4, 6}, {4, 7}, {5, 4}, {5, 6},
                                   {5, 7}, {6, 4}, {6, 5}, {6, 7}, {7, 4}, {7, 5}, {7, 6}, {7, 8}, {9, 10}, {10, 7}};
    std::vector<Value> edges;
    for (const auto& [a, b] : pairs) edges.push_back(Value::term("Edge", {I(a), I(b)}));
    return Value::coll(edges);
  }();
  return g;
}

namespace {

const Matcher& graph_matcher() {
  static const Matcher mt = m::set(edge_matcher());
  return mt;
}

}  // namespace

Value two_hop_nodes(std::int64_t s, const Value& g) {
  static const Pattern p = parse_pattern("Edge (and #s $x_1) $x_2 : Edge #x_2 $x_3 : _");
  return collected(match_all(g, graph_matcher(), {Clause(p, parse_expr("x_3"))}, with({{"s", I(s)}})));
}

Value unrequited_from(std::int64_t s, const Value& g) {
  static const Pattern p = parse_pattern("Edge #s $x : !(Edge #x #s : _)");
  return collected(match_all(g, graph_matcher(), {Clause(p, parse_expr("x"))}, with({{"s", I(s)}})));
}

Value routes(std::int64_t s, std::int64_t e, const Value& g) {
  // Each step must reach a node not yet on the path, so the set of answers is finite.
  static const Pattern p = parse_pattern(
      "let $x_1 = s in loop $i (2, (and ?(\\k -> k >= 2) $n))"
      " ((Edge #x_(i - 1) (loop $j (1, i - 1) (and !#x_j ...) $x_i)) : ...)"
      " ?(\\g -> x_n == e)");
  return collected(match_all(g, graph_matcher(),
                             {Clause(p, [](const Bindings& env) {
                               return indexed_list(env, "x", 1, var(env, "n").as_int());
                             })},
                             with({{"s", I(s)}, {"e", I(e)}})));
}

Value cliques(std::int64_t n, const Value& g) {
  static const Pattern p = parse_pattern(
      "Edge $x_1 $x_2 : loop $i (3, n) (Edge #x_1 $x_i : loop $j (2, i - 1) ((Edge #x_j #x_i) : ...) ...) _");
  return collected(match_all(g, graph_matcher(),
                             {Clause(p, [n](const Bindings& env) { return indexed_list(env, "x", 1, n); })},
                             with({{"n", I(n)}})));
}

const Value& airline_data() {
  static const Value g = [] {
    auto row = [](const char* city, std::vector<std::pair<const char*, int>> links) {
      std::vector<Value> out;
      for (const auto& [to, cost] : links) out.push_back(Value::tuple({S(to), I(cost)}));
      return Value::tuple({S(city), Value::coll(out)});
    };
    return Value::coll({
        row("Berlin", {{"New York", 14}, {"London", 2}, {"Tokyo", 14}, {"Vancouver", 13}}),
        row("New York", {{"Berlin", 14}, {"London", 12}, {"Tokyo", 18}, {"Vancouver", 6}}),
        row("London", {{"Berlin", 2}, {"New York", 12}, {"Tokyo", 15}, {"Vancouver", 10}}),
        row("Tokyo", {{"Berlin", 14}, {"New York", 18}, {"London", 15}, {"Vancouver", 12}}),
        row("Vancouver", {{"Berlin", 13}, {"New York", 6}, {"London", 10}, {"Tokyo", 12}}),
    });
  }();
  return g;
}

Value tsp_tours(const Value& g, const std::string& home) {
  static const Matcher mt = m::multiset(m::tuple({m::string(), m::multiset(m::tuple({m::string(), m::integer()}))}));
  static const Pattern p = parse_pattern(
      "(#home, ($s_1, $p_1) : _) : loop $i (2, n - 1) ((#s_(i - 1), ($s_i, $p_i) : _) : ...)"
      " ((#s_(n - 1), ((and #home $s_n), $p_n) : _) : [])");
  static const Pattern lone = parse_pattern("(#home, _) : []");
  std::int64_t n = static_cast<std::int64_t>(coll::to_vector(g.as_coll()).size());
  if (n == 1)
    return collected(match_all(g, mt, {Clause(lone, [](const Bindings&) { return Value::tuple({Value::coll(std::vector<Value>{}), I(0)}); })},
                               with({{"home", S(home)}})));
  return collected(match_all(g, mt,
                             {Clause(p,
                                     [n](const Bindings& e) {
                                       std::int64_t cost = 0;
                                       for (std::int64_t i = 1; i <= n; ++i) cost += e.lookup_indexed("p", i)->as_int();
                                       return Value::tuple({indexed_list(e, "s", 1, n), I(cost)});
                                     })},
                             with({{"home", S(home)}, {"n", I(n)}})));
}

Value tsp_best(const Value& g, const std::string& home) {
  auto tours = coll::to_vector(tsp_tours(g, home).as_coll());
  if (tours.empty()) throw NoMatch();
  auto key = [](const Value& t) {
    std::vector<std::string> route;
    for (const auto& c : coll::to_vector(t.tuple_items()[0].as_coll())) route.push_back(c.as_str());
    return std::make_pair(t.tuple_items()[1].as_int(), route);
  };
  return *std::min_element(tours.begin(), tours.end(),
                           [&](const Value& a, const Value& b) { return key(a) < key(b); });
}

// ---- social network

namespace {

m::MatcherClause field(const char* ctor, std::size_t i, Matcher next) {
  return {PrimPatPat::ctor(ctor, {PrimPatPat::hole()}),
          {std::move(next)},
          [i](const Value& t, const std::map<std::string, Value>&, const SearchContext&) {
            return single_stream(std::vector<Value>{t.term_args().at(i)});
          }};
}

}  // namespace

Matcher user_matcher() {
  static const Matcher mt = m::clause_matcher("user", [](const Matcher&) {
    return std::vector<m::MatcherClause>{field("ID", 0, m::integer()), field("Name", 1, m::string())};
  });
  return mt;
}

Matcher follow_matcher() {
  static const Matcher mt = m::clause_matcher("follow", [](const Matcher&) {
    return std::vector<m::MatcherClause>{field("FromID", 0, m::integer()), field("ToID", 1, m::integer())};
  });
  return mt;
}

Value user(std::int64_t id, const std::string& name) { return Value::term("User", {I(id), S(name)}); }
Value follow(std::int64_t from, std::int64_t to) { return Value::term("Follow", {I(from), I(to)}); }

Value unfollowed_followees(const std::string& name, const Value& users, const Value& follows) {
  static const Matcher mt = m::tuple({m::set(user_matcher()), m::set(follow_matcher()), m::set(user_matcher())});
  static const Pattern p = parse_pattern(
      "((and (Name #who) (ID $uid)) : _,"
      " (and (FromID #uid) (ToID $fid)) : !((and (FromID #fid) (ToID #uid)) : _),"
      " (and (ID #fid) (Name $fname)) : _)");
  return collected(match_all(Value::tuple({users, follows, users}), mt, {Clause(p, parse_expr("(fid, fname)"))},
                             with({{"who", S(name)}})));
}

// ---- registry

namespace {

Value social_users() {
  return Value::coll({user(1, "Egison_Lang"), user(2, "Alice"), user(3, "Bob"), user(4, "Carol")});
}

Value social_follows() {
  return Value::coll({follow(1, 2), follow(1, 3), follow(1, 4), follow(3, 1), follow(2, 4), follow(4, 2)});
}

Stream<Value> items(const Value& v) { return vector_stream(coll::to_vector(v.as_coll())); }

Stream<Value> elements(Value v) {
  return make_stream<Value>([c = v.as_coll()]() mutable -> std::optional<Value> {
    const auto* cell = c->force();
    if (!cell) return std::nullopt;
    Value h = cell->head;
    c = cell->tail;
    return h;
  });
}

Stream<Value> poker_samples() {
  std::vector<std::vector<Value>> hands = {
      {card("Heart", 5), card("Heart", 6), card("Heart", 7), card("Heart", 8), card("Heart", 9)},
      {card("Spade", 7), card("Heart", 7), card("Clover", 7), card("Diamond", 7), card("Spade", 2)},
      {card("Spade", 3), card("Heart", 3), card("Clover", 3), card("Diamond", 9), card("Spade", 9)},
      {card("Clover", 2), card("Clover", 9), card("Clover", 4), card("Clover", 12), card("Clover", 6)},
      {card("Spade", 10), card("Heart", 9), card("Clover", 8), card("Diamond", 7), card("Spade", 6)},
      {card("Spade", 4), card("Heart", 4), card("Clover", 4), card("Diamond", 9), card("Spade", 11)},
      {card("Spade", 4), card("Heart", 4), card("Clover", 9), card("Diamond", 9), card("Spade", 11)},
      {card("Spade", 4), card("Heart", 4), card("Clover", 8), card("Diamond", 9), card("Spade", 11)},
      {card("Diamond", 2), card("Clover", 3), card("Heart", 5), card("Spade", 8), card("Diamond", 12)},
  };
  std::vector<Value> out;
  for (auto& h : hands) {
    Value cs = Value::coll(h);
    out.push_back(Value::tuple({cs, S(poker_hand(cs))}));
  }
  return vector_stream(std::move(out));
}

}  // namespace

const std::vector<Demo>& registry() {
  static const std::vector<Demo> all = {
      {"twin-primes", "twin primes (p, p + 2)", 10, [] { return elements(twin_primes()); }},
      {"prime-triples", "prime triples (p, p + 2 or p + 4, p + 6)", 8, [] { return elements(prime_triples()); }},
      {"non-twin", "adjacent primes that are not twins", 10, [] { return elements(non_twin_pairs()); }},
      {"sextile-pairs", "prime pairs (p, p + 6) through the sorted-list matcher", 10,
       [] { return elements(sextile_pairs()); }},
      {"queens", "solutions of the 4-queens puzzle", 0, [] { return items(n_queens(4)); }},
      {"sat", "satisfiability of (p or q) and (not p or r) and (not p or not r)", 0,
       [] {
         Value cnf = Value::coll({Value::coll({I(1), I(2)}), Value::coll({I(-1), I(3)}), Value::coll({I(-1), I(-3)})});
         return single_stream(Value::boolean(sat_solve(Value::coll({I(1), I(2), I(3)}), cnf)));
       }},
      {"poker", "sample hands and their classification", 0, poker_samples},
      {"ancestors", "categories containing \"Egison\"", 0, [] { return items(ancestors("Egison", category_tree())); }},
      {"descendants", "languages under \"Functional language\"", 0,
       [] { return items(descendants("Functional language", category_tree())); }},
      {"two-hop", "nodes two edges away from node 1", 0, [] { return items(two_hop_nodes(1, graph_data())); }},
      {"unrequited", "nodes 1 points to that do not point back", 0,
       [] { return items(unrequited_from(1, graph_data())); }},
      {"routes", "simple paths from node 1 to node 8", 0, [] { return items(routes(1, 8, graph_data())); }},
      {"cliques", "4-cliques of the edge graph", 0, [] { return items(cliques(4, graph_data())); }},
      {"tsp", "cheapest round trip from Berlin", 0,
       [] { return single_stream(tsp_best(airline_data(), "Berlin")); }},
      {"social", "users followed by Egison_Lang who do not follow back", 0,
       [] { return items(unfollowed_followees("Egison_Lang", social_users(), social_follows())); }},
  };
  return all;
}

const Demo* find(const std::string& name) {
  for (const auto& d : registry())
    if (d.name == name) return &d;
  return nullptr;
}

}  // namespace pmoe::demos
