#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "pmoe/bindings.hpp"
#include "pmoe/pattern.hpp"
#include "pmoe/stream.hpp"
#include "pmoe/value.hpp"

namespace pmoe {

class MatcherImpl;
using Matcher = std::shared_ptr<const MatcherImpl>;

struct MatchAtom {
  Pattern pattern;
  Value target;
  Matcher matcher;
};

/// Next matching atoms produced by one decomposition, leftmost first.
using Branch = std::vector<MatchAtom>;

struct EngineStats {
  std::uint64_t states_expanded = 0;
  std::uint64_t branches_created = 0;
};

inline constexpr std::uint64_t kDefaultNotFuel = 10'000'000;

struct MatchOptions {
  std::uint64_t max_states = 0;  // 0: unbounded
  std::uint64_t not_fuel = kDefaultNotFuel;
};

/// Shared by every decomposition of one enumeration, including searches
/// that matchers start internally.
struct SearchContext {
  std::shared_ptr<EngineStats> stats = std::make_shared<EngineStats>();
  MatchOptions options;
};

/// A decomposition strategy. The engine only hands over value patterns,
/// constructor patterns and tuple patterns; everything else is engine-level.
class MatcherImpl : public std::enable_shared_from_this<MatcherImpl> {
 public:
  virtual ~MatcherImpl() = default;
  virtual std::string name() const = 0;
  virtual Stream<Branch> decompose(const Pattern& p, const Value& target, const Bindings& env,
                                   const SearchContext& ctx) const = 0;

  Matcher self() const { return shared_from_this(); }
};

namespace matchers {

Matcher something();
Matcher eq();
Matcher integer();
Matcher string();
Matcher list(Matcher elem);
Matcher multiset(Matcher elem);
Matcher set(Matcher elem);
Matcher sorted_list(Matcher elem);
Matcher tuple(std::vector<Matcher> items);

struct CtorSpec {
  std::string name;
  std::vector<Matcher> fields;
};

/// Matcher for constructor terms. `spec` receives a handle to the matcher
/// being defined, for recursive types such as `Node string (multiset tree)`.
Matcher algebraic(std::string name, const std::function<std::vector<CtorSpec>(const Matcher& self)>& spec);

/// One matcher clause: a primitive-pattern pattern, the matchers for its
/// holes and a function from the target (and the captured value-hole
/// values) to the tuples of next targets.
struct MatcherClause {
  using NextTargets = std::function<Stream<std::vector<Value>>(
      const Value& target, const std::map<std::string, Value>& captured, const SearchContext& ctx)>;

  PrimPatPat ppp;
  std::vector<Matcher> next_matchers;
  NextTargets next_targets;
};

/// Generic clause-based matcher. The first clause whose primitive-pattern
/// pattern fits wins; no fitting clause is a MatcherError.
Matcher clause_matcher(std::string name, const std::function<std::vector<MatcherClause>(const Matcher& self)>& clauses);

}  // namespace matchers

/// Throws MatcherError naming the matcher and the unsupported pattern.
[[noreturn]] void unsupported(const MatcherImpl& m, const Pattern& p);

}  // namespace pmoe
