#include "pmoe/engine.hpp"

#include <algorithm>
#include <atomic>
#include <deque>

#include "overloaded.hpp"
#include "pmoe/error.hpp"

namespace pmoe {

using detail::Overloaded;

namespace {

template <class T>
struct PNode {
  T head;
  std::shared_ptr<const PNode> tail;
};
template <class T>
using PList = std::shared_ptr<const PNode<T>>;

template <class T>
PList<T> push(PList<T> l, T v) {
  return std::make_shared<const PNode<T>>(PNode<T>{std::move(v), std::move(l)});
}

struct Atom {
  Pattern pattern;
  Value target;
  Matcher matcher;
  std::uint64_t ctx;  // id of the segment that collects `@` targets, 0 for none
};

struct Collected {
  Value target;
  Matcher matcher;
};

struct Segment {
  std::uint64_t id;
  Pattern pending;
  PList<Collected> collected;  // newest first
  std::uint64_t next_ctx;
};

struct State {
  PList<Atom> stack;
  Bindings env;
  PList<Segment> segments;

  bool success() const { return !stack && !segments; }
};

std::atomic<std::uint64_t> g_segment_ids{1};

void count_state(const SearchContext& ctx) {
  auto n = ++ctx.stats->states_expanded;
  if (ctx.options.max_states && n > ctx.options.max_states)
    throw FuelExhausted("search exceeded the state budget of " + std::to_string(ctx.options.max_states));
}

Stream<State> one(State s) { return single_stream<State>(std::move(s)); }

Pattern raw_loop(const pat_node::LoopPat& lp, std::int64_t start) {
  pat_node::LoopPat next = lp;
  next.start = ex::integer(start);
  return Pattern(std::make_shared<const PatternNode>(PatternNode{std::move(next)}));
}

Stream<State> reduce_loop(const pat_node::LoopPat& lp, const Atom& a, const PList<Atom>& rest, const State& s) {
  std::int64_t i = eval(lp.start, s.env).as_int();
  auto expand_repeat = [lp, a, rest, s, i]() {
    Bindings env = lp.index_var ? s.env.bind_scalar(*lp.index_var, Value::integer(i)) : s.env;
    if (i == INT64_MAX) throw OverflowError("loop index overflow");
    Pattern body = substitute_ellipsis(lp.repeat, raw_loop(lp, i + 1));
    return State{push(rest, Atom{body, a.target, a.matcher, a.ctx}), env, s.segments};
  };
  if (lp.end.is_fixed()) {
    std::int64_t n = eval(lp.end.fixed, s.env).as_int();
    if (i <= n) return one(expand_repeat());
    return one(State{push(rest, Atom{lp.final, a.target, a.matcher, a.ctx}), s.env, s.segments});
  }
  // Stop first: the count atom sits on top so the final pattern can refer to it.
  auto stack = push(rest, Atom{lp.final, a.target, a.matcher, a.ctx});
  stack = push(stack, Atom{lp.end.pattern, Value::integer(i - 1), matchers::eq(), a.ctx});
  State stop{stack, s.env, s.segments};
  return make_stream<State>([stop = std::optional<State>(std::move(stop)), expand_repeat,
                             step = 0]() mutable -> std::optional<State> {
    switch (step++) {
      case 0: return std::move(stop);
      case 1: return expand_repeat();
      default: return std::nullopt;
    }
  });
}

Stream<State> reduce_sequence(const pat_node::SeqPat& sp, const Atom& a, const PList<Atom>& rest, const State& s) {
  if (sp.items.size() == 1) return one(State{push(rest, Atom{sp.items[0], a.target, a.matcher, a.ctx}), s.env, s.segments});
  std::vector<std::uint64_t> ids(sp.items.size());
  for (std::size_t k = 1; k < sp.items.size(); ++k) ids[k] = g_segment_ids.fetch_add(1);
  PList<Segment> segs = s.segments;
  for (std::size_t k = sp.items.size() - 1; k >= 1; --k) {
    std::uint64_t next = k + 1 < sp.items.size() ? ids[k + 1] : a.ctx;
    segs = push(segs, Segment{ids[k], sp.items[k], nullptr, next});
  }
  return one(State{push(rest, Atom{sp.items[0], a.target, a.matcher, ids[1]}), s.env, segs});
}

PList<Segment> collect_later(const PList<Segment>& segs, std::uint64_t id, const Atom& a) {
  if (!segs) throw PatternError("'@' has no later stage to defer to");
  if (segs->head.id == id) {
    Segment seg = segs->head;
    seg.collected = push(seg.collected, Collected{a.target, a.matcher});
    return push(segs->tail, std::move(seg));
  }
  return push(collect_later(segs->tail, id, a), segs->head);
}

Stream<State> pop_segment(const State& s) {
  const Segment& seg = s.segments->head;
  std::vector<Value> targets;
  std::vector<Matcher> ms;
  for (auto c = seg.collected; c; c = c->tail) {
    targets.push_back(c->head.target);
    ms.push_back(c->head.matcher);
  }
  std::reverse(targets.begin(), targets.end());
  std::reverse(ms.begin(), ms.end());
  Atom next{seg.pending, Value(), nullptr, seg.next_ctx};
  if (targets.size() == 1) {
    next.target = targets[0];
    next.matcher = ms[0];
  } else {
    next.target = Value::tuple(std::move(targets));
    next.matcher = matchers::tuple(std::move(ms));
  }
  return one(State{push(PList<Atom>{}, std::move(next)), s.env, s.segments->tail});
}

Stream<State> reduce(const State& s, const SearchContext& ctx) {
  count_state(ctx);
  if (!s.stack) return pop_segment(s);
  const Atom& a = s.stack->head;
  const PList<Atom>& rest = s.stack->tail;
  const Bindings& env = s.env;
  auto with = [&](PList<Atom> stack, Bindings e) { return one(State{std::move(stack), std::move(e), s.segments}); };

  return std::visit(
      Overloaded{
          [&](const pat_node::Wildcard&) { return with(rest, env); },
          [&](const pat_node::PatVar& n) { return with(rest, env.bind_scalar(n.name, a.target)); },
          [&](const pat_node::IndexedPatVar& n) {
            return with(rest, env.bind_indexed(n.name, eval(n.index, env).as_int(), a.target));
          },
          [&](const pat_node::PredPat& n) {
            Value f = eval(n.expr, env);
            if (!f.is_closure()) throw EvalError("predicate pattern needs a function, got " + to_string(f));
            Value r = apply(f, a.target);
            if (!r.is_bool()) throw EvalError("predicate returned a non-boolean " + to_string(r));
            return r.as_bool() ? with(rest, env) : empty_stream<State>();
          },
          [&](const pat_node::AndPat& n) {
            PList<Atom> stack = rest;
            for (auto it = n.items.rbegin(); it != n.items.rend(); ++it)
              stack = push(stack, Atom{*it, a.target, a.matcher, a.ctx});
            return with(stack, env);
          },
          [&](const pat_node::OrPat& n) {
            std::vector<State> out;
            for (const auto& p : n.items)
              out.push_back(State{push(rest, Atom{p, a.target, a.matcher, a.ctx}), env, s.segments});
            return vector_stream(std::move(out));
          },
          [&](const pat_node::NotPat& n) {
            return not_matches(n.inner, a.target, a.matcher, env, ctx) ? with(rest, env) : empty_stream<State>();
          },
          [&](const pat_node::LoopPat& n) { return reduce_loop(n, a, rest, s); },
          [&](const pat_node::SeqPat& n) { return reduce_sequence(n, a, rest, s); },
          [&](const pat_node::LaterVar&) {
            return one(State{rest, env, collect_later(s.segments, a.ctx, a)});
          },
          [&](const pat_node::LetPat& n) {
            Value v = eval(n.value, env);
            Bindings e = n.index ? env.bind_indexed(n.name, eval(n.index, env).as_int(), std::move(v))
                                 : env.bind_scalar(n.name, std::move(v));
            return with(push(rest, Atom{n.body, a.target, a.matcher, a.ctx}), std::move(e));
          },
          [&](const pat_node::Ellipsis&) -> Stream<State> { throw PatternError("'...' outside a loop"); },
          [&](const auto&) {
            if (!a.matcher) throw MatcherError("no matcher for pattern " + to_source(a.pattern));
            auto branches = a.matcher->decompose(a.pattern, a.target, env, ctx);
            return map_stream(std::move(branches), [rest, env, segs = s.segments, c = a.ctx](Branch b) {
              PList<Atom> stack = rest;
              for (auto it = b.rbegin(); it != b.rend(); ++it)
                stack = push(stack, Atom{std::move(it->pattern), std::move(it->target), std::move(it->matcher), c});
              return State{stack, env, segs};
            });
          },
      },
      a.pattern.node().v);
}

Stream<State> counted(Stream<State> s, const SearchContext& ctx) {
  return map_stream(std::move(s), [stats = ctx.stats](State st) {
    ++stats->branches_created;
    return st;
  });
}

Stream<State> lazy_children(State s, const SearchContext& ctx) {
  return make_stream<State>(
      [s = std::move(s), ctx, kids = std::optional<Stream<State>>()]() mutable -> std::optional<State> {
        if (!kids) kids = counted(reduce(s, ctx), ctx);
        return kids->next();
      });
}

class BfsSource final : public Stream<Bindings>::Source {
 public:
  BfsSource(State root, SearchContext ctx, Matcher keep) : ctx_(std::move(ctx)), keep_(std::move(keep)) {
    queue_.push_back(single_stream(std::move(root)));
  }

  std::optional<Bindings> next() override {
    while (!queue_.empty()) {
      Stream<State> spine = std::move(queue_.front());
      queue_.pop_front();
      auto head = spine.next();
      if (!head) continue;
      if (head->success()) {
        queue_.push_back(std::move(spine));
        return head->env;
      }
      queue_.push_back(lazy_children(std::move(*head), ctx_));
      queue_.push_back(std::move(spine));
    }
    return std::nullopt;
  }

 private:
  SearchContext ctx_;
  Matcher keep_;
  std::deque<Stream<State>> queue_;
};

class DfsSource final : public Stream<Bindings>::Source {
 public:
  DfsSource(State root, SearchContext ctx, Matcher keep, std::uint64_t fuel = 0)
      : ctx_(std::move(ctx)), keep_(std::move(keep)), fuel_(fuel) {
    stack_.push_back(single_stream(std::move(root)));
  }

  std::optional<Bindings> next() override {
    while (!stack_.empty()) {
      auto head = stack_.back().next();
      if (!head) {
        stack_.pop_back();
        continue;
      }
      if (head->success()) return head->env;
      if (fuel_ && ++used_ > fuel_)
        throw FuelExhausted("not-pattern sub-search exceeded " + std::to_string(fuel_) + " states");
      stack_.push_back(counted(reduce(*head, ctx_), ctx_));
    }
    return std::nullopt;
  }

 private:
  SearchContext ctx_;
  Matcher keep_;
  std::uint64_t fuel_;
  std::uint64_t used_ = 0;
  std::vector<Stream<State>> stack_;
};

State root_state(const Pattern& p, const Value& t, const Matcher& m, const Bindings& env) {
  return State{push(PList<Atom>{}, Atom{p, t, m, 0}), env, nullptr};
}

SearchContext context_of(const MatchConfig& cfg) {
  SearchContext ctx;
  if (cfg.stats) ctx.stats = cfg.stats;
  ctx.options = cfg.options;
  return ctx;
}

Stream<Value> run_clauses(const Value& t, const Matcher& m, std::vector<Clause> clauses, MatchConfig cfg) {
  for (const auto& c : clauses) validate(c.pattern);
  if (!cfg.stats) cfg.stats = std::make_shared<EngineStats>();
  return make_stream<Value>([t, m, clauses = std::move(clauses), cfg, i = std::size_t{0},
                             cur = std::optional<Stream<Bindings>>()]() mutable -> std::optional<Value> {
    while (i < clauses.size()) {
      if (!cur) cur = match_envs(t, m, clauses[i].pattern, cfg);
      if (auto env = cur->next()) return clauses[i].body(*env);
      cur.reset();
      ++i;
    }
    return std::nullopt;
  });
}

}  // namespace

Clause::Clause(Pattern p, Expr e)
    : pattern(std::move(p)), body([e = std::move(e)](const Bindings& env) { return eval(e, env); }) {}

Stream<Bindings> match_envs(const Value& t, const Matcher& m, const Pattern& p, MatchConfig cfg) {
  validate(p);
  SearchContext ctx = context_of(cfg);
  State root = root_state(p, t, m, cfg.env);
  if (cfg.order == Order::BFS) return Stream<Bindings>(std::make_shared<BfsSource>(std::move(root), ctx, m));
  return Stream<Bindings>(std::make_shared<DfsSource>(std::move(root), ctx, m));
}

Stream<Value> match_all(const Value& t, const Matcher& m, std::vector<Clause> clauses, MatchConfig cfg) {
  cfg.order = Order::BFS;
  return run_clauses(t, m, std::move(clauses), std::move(cfg));
}

Stream<Value> match_all_dfs(const Value& t, const Matcher& m, std::vector<Clause> clauses, MatchConfig cfg) {
  cfg.order = Order::DFS;
  return run_clauses(t, m, std::move(clauses), std::move(cfg));
}

Value match_first(const Value& t, const Matcher& m, std::vector<Clause> clauses, MatchConfig cfg) {
  auto s = run_clauses(t, m, std::move(clauses), std::move(cfg));
  if (auto v = s.next()) return *v;
  throw NoMatch();
}

bool not_matches(const Pattern& p, const Value& t, const Matcher& m, const Bindings& env, const SearchContext& ctx) {
  DfsSource search(root_state(p, t, m, env), ctx, m, ctx.options.not_fuel);
  return !search.next();
}

bool has_match(const Pattern& p, const Value& t, const Matcher& m, const Bindings& env, const SearchContext& ctx) {
  DfsSource search(root_state(p, t, m, env), ctx, m);
  return search.next().has_value();
}

}  // namespace pmoe
