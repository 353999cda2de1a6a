#pragma once

#include <string>
#include <vector>

#include "pmoe/engine.hpp"
#include "pmoe/parser.hpp"
#include "pmoe/value.hpp"

namespace t {

using pmoe::Value;

inline Value I(std::int64_t n) { return Value::integer(n); }
inline Value S(std::string s) { return Value::string(std::move(s)); }

inline Value ints(const std::vector<std::int64_t>& xs) {
  std::vector<Value> out;
  for (auto x : xs) out.push_back(I(x));
  return Value::coll(out);
}

inline Value int_lists(const std::vector<std::vector<std::int64_t>>& xss) {
  std::vector<Value> out;
  for (const auto& xs : xss) out.push_back(ints(xs));
  return Value::coll(out);
}

inline std::vector<Value> items(const Value& v, std::size_t limit = 1'000'000) {
  return pmoe::coll::to_vector(v.as_coll(), limit);
}

inline std::vector<std::int64_t> as_ints(const Value& v) {
  std::vector<std::int64_t> out;
  for (const auto& x : items(v)) out.push_back(x.as_int());
  return out;
}

inline std::string show(const Value& v) { return pmoe::to_string(v); }

inline std::string show(const std::vector<Value>& vs) { return show(Value::coll(vs)); }

/// Runs a textual query and prints up to `take` results (0 = all).
inline std::string query(const char* matcher, const char* pattern, const Value& target, const char* body,
                         pmoe::Order order = pmoe::Order::BFS, std::size_t take = 0) {
  auto run = order == pmoe::Order::BFS ? pmoe::match_all : pmoe::match_all_dfs;
  auto s = run(target, pmoe::parse_matcher(matcher),
               {pmoe::Clause(pmoe::parse_pattern(pattern), pmoe::parse_expr(body))}, {});
  return show(take ? s.take(take) : s.collect());
}

}  // namespace t
