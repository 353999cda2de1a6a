#include "pmoe/pattern.hpp"

#include <sstream>

#include "overloaded.hpp"
#include "pmoe/error.hpp"

namespace pmoe {

using detail::Overloaded;

namespace {

template <class T>
Pattern make(T node) {
  return Pattern(std::make_shared<const PatternNode>(PatternNode{std::move(node)}));
}

std::size_t count_all(const std::vector<Pattern>& ps);

}  // namespace

std::size_t count_own_ellipses(const Pattern& p) {
  if (!p) return 0;
  return std::visit(Overloaded{
                        [](const pat_node::Ellipsis&) -> std::size_t { return 1; },
                        [](const pat_node::IndexedPatVar&) -> std::size_t { return 0; },
                        [](const pat_node::AndPat& n) { return count_all(n.items); },
                        [](const pat_node::OrPat& n) { return count_all(n.items); },
                        [](const pat_node::TuplePat& n) { return count_all(n.items); },
                        [](const pat_node::SeqPat& n) { return count_all(n.items); },
                        [](const pat_node::CtorPat& n) { return count_all(n.args); },
                        [](const pat_node::NotPat& n) { return count_own_ellipses(n.inner); },
                        [](const pat_node::LetPat& n) { return count_own_ellipses(n.body); },
                        [](const pat_node::LoopPat& n) {
                          // the nested repeat pattern owns its own ellipsis
                          return count_own_ellipses(n.final) + count_own_ellipses(n.end.pattern);
                        },
                        [](const auto&) -> std::size_t { return 0; },
                    },
                    p.node().v);
}

namespace {

std::size_t count_all(const std::vector<Pattern>& ps) {
  std::size_t c = 0;
  for (const auto& p : ps) c += count_own_ellipses(p);
  return c;
}

Pattern subst(const Pattern& p, const Pattern& repl);

std::vector<Pattern> subst_all(const std::vector<Pattern>& ps, const Pattern& repl, bool& changed) {
  std::vector<Pattern> out;
  out.reserve(ps.size());
  for (const auto& p : ps) {
    out.push_back(subst(p, repl));
    if (out.back().identity() != p.identity()) changed = true;
  }
  return out;
}

// Returns `p` itself when it holds no owned ellipsis, so untouched subtrees stay shared.
Pattern subst(const Pattern& p, const Pattern& repl) {
  if (!p || count_own_ellipses(p) == 0) return p;
  bool changed = false;
  return std::visit(
      Overloaded{
          [&](const pat_node::Ellipsis&) { return repl; },
          [&](const pat_node::AndPat& n) { return make(pat_node::AndPat{subst_all(n.items, repl, changed)}); },
          [&](const pat_node::OrPat& n) { return make(pat_node::OrPat{subst_all(n.items, repl, changed)}); },
          [&](const pat_node::TuplePat& n) { return make(pat_node::TuplePat{subst_all(n.items, repl, changed)}); },
          [&](const pat_node::SeqPat& n) { return make(pat_node::SeqPat{subst_all(n.items, repl, changed)}); },
          [&](const pat_node::CtorPat& n) {
            return make(pat_node::CtorPat{n.name, subst_all(n.args, repl, changed)});
          },
          [&](const pat_node::NotPat& n) { return make(pat_node::NotPat{subst(n.inner, repl)}); },
          [&](const pat_node::LetPat& n) {
            return make(pat_node::LetPat{n.name, n.index, n.value, subst(n.body, repl)});
          },
          [&](const pat_node::LoopPat& n) {
            pat_node::LoopPat out = n;
            out.final = subst(n.final, repl);
            if (n.end.pattern) out.end.pattern = subst(n.end.pattern, repl);
            return make(std::move(out));
          },
          [&](const auto&) { return p; },
      },
      p.node().v);
}

void validate_rec(const Pattern& p, bool in_repeat, bool later_ok) {
  if (!p) throw PatternError("empty pattern");
  auto all = [&](const std::vector<Pattern>& ps) {
    for (const auto& q : ps) validate_rec(q, in_repeat, later_ok);
  };
  std::visit(Overloaded{
                 [&](const pat_node::Ellipsis&) {
                   if (!in_repeat) throw PatternError("'...' outside a loop repeat pattern");
                 },
                 [&](const pat_node::LaterVar&) {
                   if (!later_ok) throw PatternError("'@' outside a sequential pattern with a later stage");
                 },
                 [&](const pat_node::AndPat& n) { all(n.items); },
                 [&](const pat_node::OrPat& n) { all(n.items); },
                 [&](const pat_node::TuplePat& n) { all(n.items); },
                 [&](const pat_node::CtorPat& n) { all(n.args); },
                 [&](const pat_node::NotPat& n) { validate_rec(n.inner, in_repeat, later_ok); },
                 [&](const pat_node::LetPat& n) { validate_rec(n.body, in_repeat, later_ok); },
                 [&](const pat_node::SeqPat& n) {
                   if (n.items.empty()) throw PatternError("empty sequential pattern");
                   for (std::size_t i = 0; i < n.items.size(); ++i)
                     validate_rec(n.items[i], in_repeat, i + 1 < n.items.size() || later_ok);
                 },
                 [&](const pat_node::LoopPat& n) {
                   if (count_own_ellipses(n.repeat) != 1)
                     throw PatternError("loop repeat pattern must contain exactly one '...'");
                   validate_rec(n.repeat, true, later_ok);
                   validate_rec(n.final, in_repeat, later_ok);
                   if (n.end.pattern) validate_rec(n.end.pattern, in_repeat, later_ok);
                 },
                 [&](const auto&) {},
             },
             p.node().v);
}

bool all_equal(const std::vector<Pattern>& a, const std::vector<Pattern>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!structurally_equal(a[i], b[i])) return false;
  return true;
}

bool ppp_rec(const PrimPatPat& ppp, const Pattern& p, PppMatch& out) {
  switch (ppp.kind) {
    case PrimPatPat::Kind::Hole:
      out.holes.push_back(p);
      return true;
    case PrimPatPat::Kind::ValueHole:
      if (const auto* v = p.as<pat_node::ValuePat>()) {
        out.values[ppp.name] = v->expr;
        return true;
      }
      return false;
    case PrimPatPat::Kind::Nil: {
      const auto* c = p.as<pat_node::CtorPat>();
      return c && c->name == kNil && c->args.empty();
    }
    case PrimPatPat::Kind::Ctor: {
      const auto* c = p.as<pat_node::CtorPat>();
      if (!c || c->name != ppp.name || c->args.size() != ppp.args.size()) return false;
      for (std::size_t i = 0; i < c->args.size(); ++i)
        if (!ppp_rec(ppp.args[i], c->args[i], out)) return false;
      return true;
    }
  }
  return false;
}

// Printing precedence: 0 join / let, 1 cons, 2 application, 3 atom.
void print(std::ostream& os, const Pattern& p, int ctx);

void print_expr_atom(std::ostream& os, const Expr& e) {
  std::string s = to_source(e);
  if (!s.empty() && s[0] == '-')
    os << '(' << s << ')';
  else
    os << s;
}

void print_list(std::ostream& os, const std::vector<Pattern>& ps) {
  for (std::size_t i = 0; i < ps.size(); ++i) {
    if (i) os << ", ";
    print(os, ps[i], 0);
  }
}

void print(std::ostream& os, const Pattern& p, int ctx) {
  std::visit(
      Overloaded{
          [&](const pat_node::Wildcard&) { os << '_'; },
          [&](const pat_node::PatVar& n) { os << '$' << n.name; },
          [&](const pat_node::IndexedPatVar& n) { os << '$' << to_source(ex::ivar(n.name, n.index)); },
          [&](const pat_node::ValuePat& n) {
            os << '#';
            print_expr_atom(os, n.expr);
          },
          [&](const pat_node::PredPat& n) {
            os << '?';
            print_expr_atom(os, n.expr);
          },
          [&](const pat_node::AndPat& n) {
            os << "(and";
            for (const auto& q : n.items) {
              os << ' ';
              print(os, q, 3);
            }
            os << ')';
          },
          [&](const pat_node::OrPat& n) {
            os << "(or";
            for (const auto& q : n.items) {
              os << ' ';
              print(os, q, 3);
            }
            os << ')';
          },
          [&](const pat_node::NotPat& n) {
            os << '!';
            print(os, n.inner, 3);
          },
          [&](const pat_node::TuplePat& n) {
            os << '(';
            print_list(os, n.items);
            os << ')';
          },
          [&](const pat_node::CtorPat& n) {
            if (n.name == kNil && n.args.empty()) {
              os << "[]";
              return;
            }
            if ((n.name == kCons || n.name == kJoin) && n.args.size() == 2) {
              if (ctx > 1) os << '(';
              print(os, n.args[0], 2);
              os << (n.name == kCons ? " : " : " ++ ");
              print(os, n.args[1], 1);
              if (ctx > 1) os << ')';
              return;
            }
            if (n.args.empty()) {
              os << n.name;
              return;
            }
            if (ctx > 2) os << '(';
            os << n.name;
            for (const auto& a : n.args) {
              os << ' ';
              print(os, a, 3);
            }
            if (ctx > 2) os << ')';
          },
          [&](const pat_node::LoopPat& n) {
            if (ctx > 2) os << '(';
            os << "loop " << (n.index_var ? "$" + *n.index_var : std::string("_")) << " (" << to_source(n.start)
               << ", ";
            if (n.end.is_fixed())
              os << to_source(n.end.fixed);
            else
              print(os, n.end.pattern, 0);
            os << ") ";
            print(os, n.repeat, 3);
            os << ' ';
            print(os, n.final, 3);
            if (ctx > 2) os << ')';
          },
          [&](const pat_node::Ellipsis&) { os << "..."; },
          [&](const pat_node::SeqPat& n) {
            os << "seq [";
            print_list(os, n.items);
            os << ']';
          },
          [&](const pat_node::LaterVar&) { os << '@'; },
          [&](const pat_node::LetPat& n) {
            if (ctx > 0) os << '(';
            os << "let $" << (n.index ? to_source(ex::ivar(n.name, n.index)) : n.name) << " = "
               << to_source(n.value) << " in ";
            print(os, n.body, 0);
            if (ctx > 0) os << ')';
          },
      },
      p.node().v);
}

}  // namespace

namespace pat {

Pattern wildcard() { return make(pat_node::Wildcard{}); }
Pattern var(std::string name) { return make(pat_node::PatVar{std::move(name)}); }
Pattern ivar(std::string name, Expr index) { return make(pat_node::IndexedPatVar{std::move(name), std::move(index)}); }
Pattern val(Expr e) { return make(pat_node::ValuePat{std::move(e)}); }
Pattern pred(Expr e) { return make(pat_node::PredPat{std::move(e)}); }
Pattern and_(std::vector<Pattern> items) { return make(pat_node::AndPat{std::move(items)}); }
Pattern or_(std::vector<Pattern> items) { return make(pat_node::OrPat{std::move(items)}); }
Pattern not_(Pattern p) { return make(pat_node::NotPat{std::move(p)}); }
Pattern tuple(std::vector<Pattern> items) { return make(pat_node::TuplePat{std::move(items)}); }
Pattern ctor(std::string name, std::vector<Pattern> args) {
  return make(pat_node::CtorPat{std::move(name), std::move(args)});
}
Pattern nil() { return ctor(kNil); }
Pattern cons(Pattern head, Pattern tail) { return ctor(kCons, {std::move(head), std::move(tail)}); }
Pattern join(Pattern front, Pattern back) { return ctor(kJoin, {std::move(front), std::move(back)}); }

Pattern loop(std::optional<std::string> index_var, Expr start, pat_node::LoopEnd end, Pattern repeat,
             Pattern final) {
  if (count_own_ellipses(repeat) != 1) throw PatternError("loop repeat pattern must contain exactly one '...'");
  return make(
      pat_node::LoopPat{std::move(index_var), std::move(start), std::move(end), std::move(repeat), std::move(final)});
}

pat_node::LoopEnd fixed_end(Expr e) { return {std::move(e), {}}; }
pat_node::LoopEnd pattern_end(Pattern p) { return {{}, std::move(p)}; }
Pattern ellipsis() { return make(pat_node::Ellipsis{}); }
Pattern seq(std::vector<Pattern> items) { return make(pat_node::SeqPat{std::move(items)}); }
Pattern later() { return make(pat_node::LaterVar{}); }
Pattern let(std::string name, Expr value, Pattern body) {
  return make(pat_node::LetPat{std::move(name), {}, std::move(value), std::move(body)});
}
Pattern let_indexed(std::string name, Expr index, Expr value, Pattern body) {
  return make(pat_node::LetPat{std::move(name), std::move(index), std::move(value), std::move(body)});
}

}  // namespace pat

Pattern substitute_ellipsis(const Pattern& repeat, const Pattern& replacement) {
  std::size_t n = count_own_ellipses(repeat);
  if (n != 1) throw PatternError("expected exactly one '...' in repeat pattern, found " + std::to_string(n));
  return subst(repeat, replacement);
}

void validate(const Pattern& root) { validate_rec(root, false, false); }

bool structurally_equal(const Pattern& a, const Pattern& b) {
  if (!a || !b) return !a && !b;
  if (a.identity() == b.identity()) return true;
  const auto& y = b.node().v;
  if (a.node().v.index() != y.index()) return false;
  return std::visit(
      Overloaded{
          [&](const pat_node::Wildcard&) { return true; },
          [&](const pat_node::Ellipsis&) { return true; },
          [&](const pat_node::LaterVar&) { return true; },
          [&](const pat_node::PatVar& n) { return n.name == std::get<pat_node::PatVar>(y).name; },
          [&](const pat_node::IndexedPatVar& n) {
            const auto& m = std::get<pat_node::IndexedPatVar>(y);
            return n.name == m.name && structurally_equal(n.index, m.index);
          },
          [&](const pat_node::ValuePat& n) { return structurally_equal(n.expr, std::get<pat_node::ValuePat>(y).expr); },
          [&](const pat_node::PredPat& n) { return structurally_equal(n.expr, std::get<pat_node::PredPat>(y).expr); },
          [&](const pat_node::AndPat& n) { return all_equal(n.items, std::get<pat_node::AndPat>(y).items); },
          [&](const pat_node::OrPat& n) { return all_equal(n.items, std::get<pat_node::OrPat>(y).items); },
          [&](const pat_node::NotPat& n) { return structurally_equal(n.inner, std::get<pat_node::NotPat>(y).inner); },
          [&](const pat_node::TuplePat& n) { return all_equal(n.items, std::get<pat_node::TuplePat>(y).items); },
          [&](const pat_node::SeqPat& n) { return all_equal(n.items, std::get<pat_node::SeqPat>(y).items); },
          [&](const pat_node::CtorPat& n) {
            const auto& m = std::get<pat_node::CtorPat>(y);
            return n.name == m.name && all_equal(n.args, m.args);
          },
          [&](const pat_node::LoopPat& n) {
            const auto& m = std::get<pat_node::LoopPat>(y);
            return n.index_var == m.index_var && structurally_equal(n.start, m.start) &&
                   structurally_equal(n.end.fixed, m.end.fixed) && structurally_equal(n.end.pattern, m.end.pattern) &&
                   structurally_equal(n.repeat, m.repeat) && structurally_equal(n.final, m.final);
          },
          [&](const pat_node::LetPat& n) {
            const auto& m = std::get<pat_node::LetPat>(y);
            return n.name == m.name && structurally_equal(n.index, m.index) && structurally_equal(n.value, m.value) &&
                   structurally_equal(n.body, m.body);
          },
      },
      a.node().v);
}

std::string to_source(const Pattern& p) {
  std::ostringstream os;
  print(os, p, 0);
  return os.str();
}

std::optional<PppMatch> ppp_match(const PrimPatPat& ppp, const Pattern& p) {
  PppMatch out;
  if (!ppp_rec(ppp, p, out)) return std::nullopt;
  return out;
}

}  // namespace pmoe
