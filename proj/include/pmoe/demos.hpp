#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "pmoe/matcher.hpp"
#include "pmoe/stream.hpp"
#include "pmoe/value.hpp"

namespace pmoe::demos {

/// 2, 3, 5, 7, ... Shared and memoized; safe to read from several threads.
const Value& primes();

Value twin_primes();
Value prime_triples();
Value non_twin_pairs();
/// Pairs (p, p + 6) over the primes, matched as a sorted list.
Value sextile_pairs();

/// Each solution lists the row of the queen in column 1..n.
Value n_queens(std::int64_t n);

// Davis-Putnam SAT. A CNF is a collection of clauses, a clause a collection
// of nonzero literals (-v is the negation of v).
bool sat_solve(const Value& vars, const Value& cnf);
Value resolve_on(std::int64_t v, const Value& cnf);
/// Same resolvents, tautologies filtered in the body instead of the pattern.
Value resolve_on_naive(std::int64_t v, const Value& cnf);
Value assign_true(std::int64_t lit, const Value& cnf);
Value delete_clauses_with(const Value& lits, const Value& cnf);

Matcher suit_matcher();
Matcher card_matcher();
/// `cards` holds five `Card <suit> <rank>` terms; suits are Diamond, Clover,
/// Heart and Spade.
std::string poker_hand(const Value& cards);
Value card(const std::string& suit, std::int64_t rank);

Matcher tree_matcher(Matcher leaf);
const Value& category_tree();
Value ancestors(const std::string& x, const Value& tree);
Value descendants(const std::string& x, const Value& tree);

Matcher edge_matcher();
const Value& graph_data();
Value two_hop_nodes(std::int64_t s, const Value& g);
Value unrequited_from(std::int64_t s, const Value& g);
/// Simple paths from s to e.
Value routes(std::int64_t s, std::int64_t e, const Value& g);
Value cliques(std::int64_t n, const Value& g);

const Value& airline_data();
/// Every tour from home through all cities and back, as (route, cost). The
/// route omits the start and ends with home.
Value tsp_tours(const Value& g, const std::string& home);
/// The cheapest tour; ties go to the lexicographically smaller route.
Value tsp_best(const Value& g, const std::string& home);

Matcher user_matcher();
Matcher follow_matcher();
Value user(std::int64_t id, const std::string& name);
Value follow(std::int64_t from, std::int64_t to);
/// (id, name) of every user followed by `name` who does not follow back.
Value unfollowed_followees(const std::string& name, const Value& users, const Value& follows);

struct Demo {
  std::string name;
  std::string summary;
  /// Results printed when no --take is given; 0 means all.
  std::size_t default_take;
  std::function<Stream<Value>()> run;
};

const std::vector<Demo>& registry();
/// nullptr when unknown.
const Demo* find(const std::string& name);

}  // namespace pmoe::demos
