#pragma once

#include <functional>
#include <vector>

#include "pmoe/bindings.hpp"
#include "pmoe/expr.hpp"
#include "pmoe/matcher.hpp"
#include "pmoe/pattern.hpp"
#include "pmoe/stream.hpp"
#include "pmoe/value.hpp"

namespace pmoe {

enum class Order { BFS, DFS };

using Body = std::function<Value(const Bindings&)>;

struct Clause {
  Clause(Pattern p, Body b) : pattern(std::move(p)), body(std::move(b)) {}
  Clause(Pattern p, Expr e);

  Pattern pattern;
  Body body;
};

struct MatchConfig {
  Order order = Order::BFS;
  Bindings env;  // visible to every expression in the patterns and bodies
  MatchOptions options;
  /// Filled during the enumeration; supply one to read the counters.
  std::shared_ptr<EngineStats> stats;
};

/// Lazily enumerates the result environments of matching `p` against `t`.
Stream<Bindings> match_envs(const Value& t, const Matcher& m, const Pattern& p, MatchConfig cfg = {});

/// Results of every clause, clause by clause, each breadth-first.
Stream<Value> match_all(const Value& t, const Matcher& m, std::vector<Clause> clauses, MatchConfig cfg = {});
/// As match_all, depth-first.
Stream<Value> match_all_dfs(const Value& t, const Matcher& m, std::vector<Clause> clauses, MatchConfig cfg = {});
/// First result of match_all. Throws NoMatch when every clause is exhausted.
Value match_first(const Value& t, const Matcher& m, std::vector<Clause> clauses, MatchConfig cfg = {});

/// True iff `p` has no match against `t` under `env`. Searches depth-first
/// and throws FuelExhausted once more than `ctx.options.not_fuel` states are
/// expanded.
bool not_matches(const Pattern& p, const Value& t, const Matcher& m, const Bindings& env, const SearchContext& ctx);

/// Depth-first existence check sharing the caller's counters and state
/// budget. Used by matchers that need a nested match.
bool has_match(const Pattern& p, const Value& t, const Matcher& m, const Bindings& env, const SearchContext& ctx);

}  // namespace pmoe
