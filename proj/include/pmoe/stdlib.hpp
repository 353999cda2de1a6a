#pragma once

#include <functional>

#include "pmoe/value.hpp"

// List and collection functions, each a single match over the engine.
// Collection results are lazy and memoized, so they work on infinite inputs
// where that makes sense (map, filter, concat).
namespace pmoe::pml {

using Fn = std::function<Value(const Value&)>;
using Pred = std::function<bool(const Value&)>;
using Fn3 = std::function<Value(const Value& before, const Value& x, const Value& after)>;

Value map(Fn f, const Value& xs);
Value map_with_both_sides(Fn3 f, const Value& xs);
Value filter(Pred p, const Value& xs);
bool elem(const Value& x, const Value& xs);
/// Removes the first occurrence of x.
Value delete_first(const Value& x, const Value& xs);
bool any(Pred p, const Value& xs);
bool every(Pred p, const Value& xs);
/// Keeps the last occurrence of each element.
Value unique_last(const Value& xs);
/// Keeps the first occurrence of each element.
Value unique_first(const Value& xs);
Value concat(const Value& xss);
/// Breadth-first concat: interleaves the inner lists.
Value concat_bfs(const Value& xss);
/// Value paired with k in an association list of pairs. NoMatch when absent.
Value lookup(const Value& k, const Value& assoc);
Value intersect(const Value& xs, const Value& ys);
Value difference(const Value& xs, const Value& ys);
bool single_common_elem(const Value& xs, const Value& ys);
Value common_prefix(const Value& xs, const Value& ys);
/// All n-element combinations, as collections.
Value comb(std::int64_t n, const Value& xs);

}  // namespace pmoe::pml
