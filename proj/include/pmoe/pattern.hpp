#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "pmoe/expr.hpp"

namespace pmoe {

struct PatternNode;

/// Immutable, shareable pattern tree.
class Pattern {
 public:
  Pattern() = default;
  explicit Pattern(std::shared_ptr<const PatternNode> n) : node_(std::move(n)) {}

  const PatternNode& node() const { return *node_; }
  explicit operator bool() const noexcept { return static_cast<bool>(node_); }
  const void* identity() const noexcept { return node_.get(); }

  template <class T>
  const T* as() const;

 private:
  std::shared_ptr<const PatternNode> node_;
};

namespace pat_node {

struct Wildcard {};
struct PatVar { std::string name; };
struct IndexedPatVar { std::string name; Expr index; };
struct ValuePat { Expr expr; };
/// `expr` must evaluate to a unary predicate.
struct PredPat { Expr expr; };
struct AndPat { std::vector<Pattern> items; };
struct OrPat { std::vector<Pattern> items; };
struct NotPat { Pattern inner; };
struct TuplePat { std::vector<Pattern> items; };
/// nil (`[]`), cons (`:`), join (`++`) and user constructors alike; each
/// matcher decides which names it understands.
struct CtorPat { std::string name; std::vector<Pattern> args; };

/// Fixed(expr) when `pattern` is empty, otherwise EndPat(pattern).
struct LoopEnd {
  Expr fixed;
  Pattern pattern;
  bool is_fixed() const noexcept { return static_cast<bool>(fixed); }
};

struct LoopPat {
  std::optional<std::string> index_var;  // nullopt for `_`
  Expr start;
  LoopEnd end;
  Pattern repeat;
  Pattern final;
};

struct Ellipsis {};
struct SeqPat { std::vector<Pattern> items; };
struct LaterVar {};

struct LetPat {
  std::string name;
  Expr index;  // empty for a scalar binder
  Expr value;
  Pattern body;
};

}  // namespace pat_node

struct PatternNode {
  std::variant<pat_node::Wildcard, pat_node::PatVar, pat_node::IndexedPatVar, pat_node::ValuePat,
               pat_node::PredPat, pat_node::AndPat, pat_node::OrPat, pat_node::NotPat, pat_node::TuplePat,
               pat_node::CtorPat, pat_node::LoopPat, pat_node::Ellipsis, pat_node::SeqPat, pat_node::LaterVar,
               pat_node::LetPat>
      v;
};

template <class T>
const T* Pattern::as() const {
  return node_ ? std::get_if<T>(&node_->v) : nullptr;
}

inline constexpr const char* kNil = "nil";
inline constexpr const char* kCons = "cons";
inline constexpr const char* kJoin = "join";

/// Pattern builders.
namespace pat {

Pattern wildcard();
Pattern var(std::string name);
Pattern ivar(std::string name, Expr index);
Pattern val(Expr e);
Pattern pred(Expr e);
Pattern and_(std::vector<Pattern> items);
Pattern or_(std::vector<Pattern> items);
Pattern not_(Pattern p);
Pattern tuple(std::vector<Pattern> items);
Pattern ctor(std::string name, std::vector<Pattern> args = {});
Pattern nil();
Pattern cons(Pattern head, Pattern tail);
Pattern join(Pattern front, Pattern back);
/// PatternError unless `repeat` holds exactly one ellipsis of its own
/// (ellipses inside nested loops' repeat patterns belong to those loops).
Pattern loop(std::optional<std::string> index_var, Expr start, pat_node::LoopEnd end, Pattern repeat,
             Pattern final);
pat_node::LoopEnd fixed_end(Expr e);
pat_node::LoopEnd pattern_end(Pattern p);
Pattern ellipsis();
Pattern seq(std::vector<Pattern> items);
Pattern later();
Pattern let(std::string name, Expr value, Pattern body);
Pattern let_indexed(std::string name, Expr index, Expr value, Pattern body);

}  // namespace pat

/// Number of ellipses owned by the pattern (not counting those inside nested
/// loops' repeat patterns).
std::size_t count_own_ellipses(const Pattern& p);

/// Replaces the single owned ellipsis of `repeat` with `replacement`.
/// PatternError on zero or several ellipses.
Pattern substitute_ellipsis(const Pattern& repeat, const Pattern& replacement);

/// Rejects an ellipsis outside any loop repeat pattern and a later variable
/// outside any sequential pattern. Throws PatternError.
void validate(const Pattern& root);

bool structurally_equal(const Pattern& a, const Pattern& b);

/// Textual form accepted by the pattern parser.
std::string to_source(const Pattern& p);

// ---------------------------------------------------------------------------
// Primitive-pattern patterns: patterns over patterns, used by matcher clauses
// to dispatch on the shape of the pattern they are given.

struct PrimPatPat {
  enum class Kind { Hole, ValueHole, Nil, Ctor };
  Kind kind = Kind::Hole;
  std::string name;  // value-hole variable or constructor name
  std::vector<PrimPatPat> args;

  static PrimPatPat hole() { return {Kind::Hole, {}, {}}; }
  static PrimPatPat value_hole(std::string var) { return {Kind::ValueHole, std::move(var), {}}; }
  static PrimPatPat nil() { return {Kind::Nil, {}, {}}; }
  static PrimPatPat ctor(std::string name, std::vector<PrimPatPat> args) {
    return {Kind::Ctor, std::move(name), std::move(args)};
  }
};

struct PppMatch {
  std::vector<Pattern> holes;          // left-to-right
  std::map<std::string, Expr> values;  // value-hole captures
};

std::optional<PppMatch> ppp_match(const PrimPatPat& ppp, const Pattern& p);

}  // namespace pmoe
