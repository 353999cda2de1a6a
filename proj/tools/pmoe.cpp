#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "pmoe/demos.hpp"
#include "pmoe/engine.hpp"
#include "pmoe/error.hpp"
#include "pmoe/parser.hpp"

using namespace pmoe;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read target file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Tuple of every bound variable in first-binding order; a lone variable
// prints bare. Indexed variables print as {x_1 ↦ v, ...}.
std::string default_body(const Bindings& env) {
  std::vector<std::string> parts;
  for (const auto& name : env.names()) {
    if (env.kind_of(name) == Bindings::Kind::Scalar) {
      parts.push_back(to_string(*env.lookup(name)));
      continue;
    }
    std::string s = "{";
    bool first = true;
    for (const auto& [k, v] : env.indexed_map(name)) {
      if (!first) s += ", ";
      first = false;
      s += name + "_" + std::to_string(k) + " ↦ " + to_string(v);
    }
    parts.push_back(s + "}");
  }
  if (parts.size() == 1) return parts[0];
  std::string s = "(";
  for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? ", " : "") + parts[i];
  return s + ")";
}

struct QueryArgs {
  std::string matcher, pattern, body, target_file, builtin, mode = "bfs";
  std::size_t take = 0;
  bool stats = false;
  std::uint64_t max_states = 10'000'000;
};

int run_query(const QueryArgs& q) {
  Matcher m = parse_matcher(q.matcher);
  Pattern p = parse_pattern(q.pattern);
  Expr body = q.body.empty() ? Expr() : parse_expr(q.body);
  Value target;
  if (!q.builtin.empty())
    target = q.builtin == "primes" ? demos::primes() : Value::coll(coll::naturals(1));
  else
    target = parse_target_json(read_file(q.target_file));

  MatchConfig cfg;
  cfg.order = q.mode == "dfs" ? Order::DFS : Order::BFS;
  cfg.options.max_states = q.max_states;
  cfg.stats = std::make_shared<EngineStats>();
  auto stats = cfg.stats;
  auto report = [&] {
    if (q.stats)
      std::cerr << "states_expanded=" << stats->states_expanded << " branches_created=" << stats->branches_created
                << "\n";
  };

  std::size_t printed = 0;
  try {
    auto envs = match_envs(target, m, p, cfg);
    while (q.take == 0 || printed < q.take) {
      auto env = envs.next();
      if (!env) break;
      std::cout << (body ? to_string(eval(body, *env)) : default_body(*env)) << "\n" << std::flush;
      ++printed;
    }
  } catch (...) {
    report();
    throw;
  }
  report();
  return printed ? 0 : 1;
}

int run_demo(const std::string& name, std::size_t take, bool list) {
  if (list || name.empty()) {
    for (const auto& d : demos::registry()) std::cout << d.name << "  " << d.summary << "\n";
    return 0;
  }
  const demos::Demo* d = demos::find(name);
  if (!d) throw Error("unknown demo '" + name + "' (see pmoe demo --list)");
  std::size_t limit = take ? take : d->default_take;
  auto results = d->run();
  std::size_t printed = 0;
  while (limit == 0 || printed < limit) {
    auto v = results.next();
    if (!v) break;
    std::cout << to_string(*v) << "\n" << std::flush;
    ++printed;
  }
  return printed ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"pattern-match-oriented query engine"};
  app.require_subcommand(1);

  QueryArgs q;
  auto* query = app.add_subcommand("query", "match a pattern against a target");
  query->add_option("--matcher", q.matcher, "matcher expression, e.g. \"multiset integer\"")->required();
  query->add_option("--pattern", q.pattern, "pattern, e.g. \"$x : $xs\"")->required();
  query->add_option("--body", q.body, "expression printed per result");
  auto* file = query->add_option("--target", q.target_file, "JSON target file");
  auto* builtin = query->add_option("--target-builtin", q.builtin, "infinite builtin target")
                      ->check(CLI::IsMember({"primes", "naturals"}));
  file->excludes(builtin);
  builtin->excludes(file);
  query->add_option("--mode", q.mode, "search order")->check(CLI::IsMember({"bfs", "dfs"}));
  query->add_option("--take", q.take, "print at most N results")->check(CLI::PositiveNumber);
  query->add_flag("--stats", q.stats, "print search counters to stderr");
  query->add_option("--max-states", q.max_states, "state budget for the whole search (0 = none)");

  std::string demo_name;
  std::size_t demo_take = 0;
  bool demo_list = false;
  auto* demo = app.add_subcommand("demo", "run a bundled demo");
  demo->add_option("name", demo_name, "demo name");
  demo->add_option("--take", demo_take, "print at most N results")->check(CLI::PositiveNumber);
  demo->add_flag("--list", demo_list, "list demos");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (*query) {
      if (q.target_file.empty() && q.builtin.empty()) throw Error("query needs --target or --target-builtin");
      return run_query(q);
    }
    return run_demo(demo_name, demo_take, demo_list);
  } catch (const std::exception& e) {
    std::cerr << "pmoe: error: " << e.what() << "\n";
    return 2;
  }
}
