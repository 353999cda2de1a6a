#include "pmoe/matcher.hpp"

#include "pmoe/engine.hpp"
#include "pmoe/error.hpp"

namespace pmoe {

void unsupported(const MatcherImpl& m, const Pattern& p) {
  throw MatcherError("pattern " + to_source(p) + " is not supported by matcher " + m.name());
}

namespace {

// Argument position in a matcher name: compound names get parentheses.
std::string wrap(const std::string& s) {
  return s.find(' ') == std::string::npos || s.front() == '(' ? s : "(" + s + ")";
}

Stream<Branch> none() { return empty_stream<Branch>(); }
Stream<Branch> unit() { return single_stream<Branch>(Branch{}); }
Stream<Branch> one(Branch b) { return single_stream<Branch>(std::move(b)); }

const CollPtr& coll_target(const MatcherImpl& m, const Value& t) {
  if (!t.is_coll()) throw MatcherError("matcher " + m.name() + " expects a collection, got " + to_string(t));
  return t.as_coll();
}

const pat_node::CtorPat* ctor_of(const Pattern& p, const char* name, std::size_t arity) {
  const auto* c = p.as<pat_node::CtorPat>();
  return c && c->name == name && c->args.size() == arity ? c : nullptr;
}

Pattern value_of(const Value& v) { return pat::val(ex::lit(v)); }

class Something final : public MatcherImpl {
 public:
  std::string name() const override { return "something"; }
  Stream<Branch> decompose(const Pattern& p, const Value&, const Bindings&, const SearchContext&) const override {
    throw MatcherError("something supports only variables and wildcards, got " + to_source(p));
  }
};

class Eq final : public MatcherImpl {
 public:
  explicit Eq(std::string name) : name_(std::move(name)) {}
  std::string name() const override { return name_; }
  Stream<Branch> decompose(const Pattern& p, const Value& t, const Bindings& env,
                           const SearchContext&) const override {
    const auto* v = p.as<pat_node::ValuePat>();
    if (!v) unsupported(*this, p);
    return value_equal(eval(v->expr, env), t) ? unit() : none();
  }

 private:
  std::string name_;
};

// Split points of a collection: ([], c), ([c1], rest), ... shortest prefix first.
Stream<Branch> joins(const CollPtr& c, Pattern front, Pattern back, Matcher m) {
  return make_stream<Branch>([c, cur = c, k = std::size_t{0}, front = std::move(front), back = std::move(back),
                              m = std::move(m), done = false]() mutable -> std::optional<Branch> {
    if (done) return std::nullopt;
    Branch b{{front, Value::coll(coll::take(c, k)), m}, {back, Value::coll(cur), m}};
    if (const auto* cell = cur->force()) {
      cur = cell->tail;
      ++k;
    } else {
      done = true;
    }
    return b;
  });
}

bool ordered_less(const Value& a, const Value& b) {
  if (a.is_int() && b.is_int()) return a.as_int() < b.as_int();
  if (a.is_str() && b.is_str()) return a.as_str() < b.as_str();
  throw EvalError("sorted list elements must be integers or strings, got " + to_string(a) + " and " + to_string(b));
}

class ListLike final : public MatcherImpl {
 public:
  ListLike(Matcher elem, bool sorted) : elem_(std::move(elem)), sorted_(sorted) {}

  std::string name() const override { return std::string(sorted_ ? "sortedList " : "list ") + wrap(elem_->name()); }

  Stream<Branch> decompose(const Pattern& p, const Value& t, const Bindings& env,
                           const SearchContext& ctx) const override {
    const CollPtr& c = coll_target(*this, t);
    if (sorted_) {
      if (const auto* j = ctor_of(p, kJoin, 2)) {
        if (const auto* k = ctor_of(j->args[1], kCons, 2)) {
          if (const auto* px = k->args[0].as<pat_node::ValuePat>())
            return scan_to(c, eval(px->expr, env), j->args[0], k->args[1]);
        }
      }
    }
    if (ctor_of(p, kNil, 0)) return coll::empty(c) ? unit() : none();
    if (const auto* k = ctor_of(p, kCons, 2)) {
      const auto* cell = c->force();
      if (!cell) return none();
      return one({{k->args[0], cell->head, elem_}, {k->args[1], Value::coll(cell->tail), self()}});
    }
    if (const auto* j = ctor_of(p, kJoin, 2)) return joins(c, j->args[0], j->args[1], self());
    if (const auto* v = p.as<pat_node::ValuePat>()) {
      Value want = eval(v->expr, env);
      if (!want.is_coll()) return none();
      CollPtr a = want.as_coll();
      CollPtr b = c;
      for (;;) {
        const auto* x = a->force();
        const auto* y = b->force();
        if (!x || !y) return !x && !y ? unit() : none();
        if (!has_match(value_of(x->head), y->head, elem_, {}, ctx)) return none();
        a = x->tail;
        b = y->tail;
      }
    }
    unsupported(*this, p);
  }

 private:

  // Collects the elements below px; one branch when px itself comes next.
  Stream<Branch> scan_to(const CollPtr& c, const Value& px, const Pattern& front, const Pattern& back) const {
    std::vector<Value> before;
    CollPtr cur = c;
    while (const auto* cell = cur->force()) {
      if (!ordered_less(cell->head, px)) {
        if (!value_equal(cell->head, px)) return none();
        return one({{front, Value::coll(before), self()}, {back, Value::coll(cell->tail), self()}});
      }
      before.push_back(cell->head);
      cur = cell->tail;
    }
    return none();
  }

  Matcher elem_;
  bool sorted_;
};

class Multiset final : public MatcherImpl {
 public:
  explicit Multiset(Matcher elem) : elem_(std::move(elem)) {}

  std::string name() const override {
    auto e = elem_->name();
    return "multiset " + wrap(e);
  }

  Stream<Branch> decompose(const Pattern& p, const Value& t, const Bindings& env,
                           const SearchContext& ctx) const override {
    const CollPtr& c = coll_target(*this, t);
    if (ctor_of(p, kNil, 0)) return coll::empty(c) ? unit() : none();
    if (const auto* k = ctor_of(p, kCons, 2)) {
      return make_stream<Branch>([c, cur = c, k = std::size_t{0}, head = k->args[0], tail = k->args[1],
                                  elem = elem_, me = self()]() mutable -> std::optional<Branch> {
        const auto* cell = cur->force();
        if (!cell) return std::nullopt;
        Branch b{{head, cell->head, elem}, {tail, Value::coll(coll::concat(coll::take(c, k), cell->tail)), me}};
        cur = cell->tail;
        ++k;
        return b;
      });
    }
    if (const auto* v = p.as<pat_node::ValuePat>()) {
      Value want = eval(v->expr, env);
      if (!want.is_coll()) return none();
      return equal_as_multisets(want, t, ctx) ? unit() : none();
    }
    unsupported(*this, p);
  }

 private:
  // (val, tgt) as (list a, multiset a): both empty, or the head of val
  // occurs in tgt and the remainders are equal again.
  bool equal_as_multisets(const Value& want, const Value& t, const SearchContext& ctx) const {
    static const Pattern both_empty = pat::tuple({pat::nil(), pat::nil()});
    static const Pattern head_in_target =
        pat::tuple({pat::cons(pat::var("x"), pat::var("xs")), pat::cons(pat::val(ex::var("x")), pat::val(ex::var("xs")))});
    Matcher m = matchers::tuple({matchers::list(elem_), self()});
    Value pair = Value::tuple({want, t});
    return has_match(both_empty, pair, m, {}, ctx) || has_match(head_in_target, pair, m, {}, ctx);
  }

  Matcher elem_;
};

class Set final : public MatcherImpl {
 public:
  explicit Set(Matcher elem) : elem_(std::move(elem)) {}

  std::string name() const override {
    auto e = elem_->name();
    return "set " + wrap(e);
  }

  Stream<Branch> decompose(const Pattern& p, const Value& t, const Bindings& env,
                           const SearchContext& ctx) const override {
    const CollPtr& c = coll_target(*this, t);
    if (ctor_of(p, kNil, 0)) return coll::empty(c) ? unit() : none();
    if (const auto* k = ctor_of(p, kCons, 2)) {
      return make_stream<Branch>([t, cur = c, head = k->args[0], tail = k->args[1], elem = elem_,
                                  me = self()]() mutable -> std::optional<Branch> {
        const auto* cell = cur->force();
        if (!cell) return std::nullopt;
        Branch b{{head, cell->head, elem}, {tail, t, me}};
        cur = cell->tail;
        return b;
      });
    }
    if (const auto* v = p.as<pat_node::ValuePat>()) {
      Value want = eval(v->expr, env);
      if (!want.is_coll()) return none();
      auto xs = coll::to_vector(want.as_coll());
      auto ys = coll::to_vector(c);
      return covers(xs, ys, ctx) && covers(ys, xs, ctx) ? unit() : none();
    }
    unsupported(*this, p);
  }

 private:
  bool covers(const std::vector<Value>& xs, const std::vector<Value>& ys, const SearchContext& ctx) const {
    for (const auto& x : xs) {
      bool found = false;
      for (const auto& y : ys)
        if ((found = has_match(value_of(x), y, elem_, {}, ctx))) break;
      if (!found) return false;
    }
    return true;
  }

  Matcher elem_;
};

class Tuple final : public MatcherImpl {
 public:
  explicit Tuple(std::vector<Matcher> items) : items_(std::move(items)) {}

  std::string name() const override {
    std::string s = "(";
    for (std::size_t i = 0; i < items_.size(); ++i) s += (i ? ", " : "") + items_[i]->name();
    return s + ")";
  }

  Stream<Branch> decompose(const Pattern& p, const Value& t, const Bindings& env,
                           const SearchContext&) const override {
    if (!t.is_tuple()) throw MatcherError("matcher " + name() + " expects a tuple, got " + to_string(t));
    const auto& vs = t.tuple_items();
    if (vs.size() != items_.size())
      throw MatcherError("matcher " + name() + " got a " + std::to_string(vs.size()) + "-tuple");
    if (const auto* tp = p.as<pat_node::TuplePat>()) {
      if (tp->items.size() != items_.size())
        throw MatcherError("tuple pattern " + to_source(p) + " does not fit matcher " + name());
      Branch b;
      for (std::size_t i = 0; i < vs.size(); ++i) b.push_back({tp->items[i], vs[i], items_[i]});
      return one(std::move(b));
    }
    if (const auto* v = p.as<pat_node::ValuePat>()) {
      Value want = eval(v->expr, env);
      if (!want.is_tuple() || want.tuple_items().size() != vs.size()) return none();
      Branch b;
      for (std::size_t i = 0; i < vs.size(); ++i) b.push_back({value_of(want.tuple_items()[i]), vs[i], items_[i]});
      return one(std::move(b));
    }
    unsupported(*this, p);
  }

 private:
  std::vector<Matcher> items_;
};

// Stands in for a matcher inside its own definition without owning it.
class SelfRef final : public MatcherImpl {
 public:
  SelfRef(std::weak_ptr<const MatcherImpl> target, std::string name)
      : target_(std::move(target)), name_(std::move(name)) {}
  std::string name() const override { return name_; }
  Stream<Branch> decompose(const Pattern& p, const Value& t, const Bindings& env,
                           const SearchContext& ctx) const override {
    auto m = target_.lock();
    if (!m) throw MatcherError("matcher " + name_ + " was released during matching");
    return m->decompose(p, t, env, ctx);
  }

 private:
  std::weak_ptr<const MatcherImpl> target_;
  std::string name_;
};

class Algebraic final : public MatcherImpl {
 public:
  explicit Algebraic(std::string name) : name_(std::move(name)) {}
  std::string name() const override { return name_; }

  void define(std::vector<matchers::CtorSpec> specs) { specs_ = std::move(specs); }

  Stream<Branch> decompose(const Pattern& p, const Value& t, const Bindings& env,
                           const SearchContext&) const override {
    if (const auto* c = p.as<pat_node::CtorPat>()) {
      const auto* spec = find(c->name);
      if (!spec) throw MatcherError("unknown constructor " + c->name + " for matcher " + name_);
      if (c->args.size() != spec->fields.size())
        throw MatcherError("constructor " + c->name + " takes " + std::to_string(spec->fields.size()) + " arguments");
      if (!t.is_term()) throw MatcherError("matcher " + name_ + " expects a constructor term, got " + to_string(t));
      if (t.term_name() != c->name || t.term_args().size() != c->args.size()) return none();
      Branch b;
      for (std::size_t i = 0; i < c->args.size(); ++i) b.push_back({c->args[i], t.term_args()[i], spec->fields[i]});
      return one(std::move(b));
    }
    if (const auto* v = p.as<pat_node::ValuePat>()) {
      Value want = eval(v->expr, env);
      if (!want.is_term() || !t.is_term() || want.term_name() != t.term_name() ||
          want.term_args().size() != t.term_args().size())
        return none();
      const auto* spec = find(t.term_name());
      if (!spec) throw MatcherError("unknown constructor " + t.term_name() + " for matcher " + name_);
      if (spec->fields.size() != t.term_args().size()) return none();
      Branch b;
      for (std::size_t i = 0; i < spec->fields.size(); ++i)
        b.push_back({value_of(want.term_args()[i]), t.term_args()[i], spec->fields[i]});
      return one(std::move(b));
    }
    unsupported(*this, p);
  }

 private:
  const matchers::CtorSpec* find(const std::string& ctor) const {
    for (const auto& s : specs_)
      if (s.name == ctor) return &s;
    return nullptr;
  }

  std::string name_;
  std::vector<matchers::CtorSpec> specs_;
};

class ClauseBased final : public MatcherImpl {
 public:
  explicit ClauseBased(std::string name) : name_(std::move(name)) {}
  std::string name() const override { return name_; }

  void define(std::vector<matchers::MatcherClause> clauses) { clauses_ = std::move(clauses); }

  Stream<Branch> decompose(const Pattern& p, const Value& t, const Bindings& env,
                           const SearchContext& ctx) const override {
    for (const auto& c : clauses_) {
      auto m = ppp_match(c.ppp, p);
      if (!m) continue;
      if (m->holes.size() != c.next_matchers.size())
        throw MatcherError("matcher " + name_ + ": clause has " + std::to_string(m->holes.size()) + " holes but " +
                           std::to_string(c.next_matchers.size()) + " next matchers");
      std::map<std::string, Value> captured;
      for (const auto& [k, e] : m->values) captured.emplace(k, eval(e, env));
      auto targets = c.next_targets(t, captured, ctx);
      return map_stream(std::move(targets), [holes = m->holes, ms = c.next_matchers, n = name_](std::vector<Value> vs) {
        if (vs.size() != holes.size())
          throw MatcherError("matcher " + n + ": next targets do not fit the clause's holes");
        Branch b;
        for (std::size_t i = 0; i < vs.size(); ++i) b.push_back({holes[i], std::move(vs[i]), ms[i]});
        return b;
      });
    }
    unsupported(*this, p);
  }

 private:
  std::string name_;
  std::vector<matchers::MatcherClause> clauses_;
};

}  // namespace

namespace matchers {

Matcher something() {
  static const Matcher m = std::make_shared<Something>();
  return m;
}
Matcher eq() {
  static const Matcher m = std::make_shared<Eq>("eq");
  return m;
}
Matcher integer() {
  static const Matcher m = std::make_shared<Eq>("integer");
  return m;
}
Matcher string() {
  static const Matcher m = std::make_shared<Eq>("string");
  return m;
}
Matcher list(Matcher elem) { return std::make_shared<ListLike>(std::move(elem), false); }
Matcher sorted_list(Matcher elem) { return std::make_shared<ListLike>(std::move(elem), true); }
Matcher multiset(Matcher elem) { return std::make_shared<Multiset>(std::move(elem)); }
Matcher set(Matcher elem) { return std::make_shared<Set>(std::move(elem)); }
Matcher tuple(std::vector<Matcher> items) { return std::make_shared<Tuple>(std::move(items)); }

Matcher algebraic(std::string name, const std::function<std::vector<CtorSpec>(const Matcher& self)>& spec) {
  auto m = std::make_shared<Algebraic>(name);
  m->define(spec(std::make_shared<SelfRef>(m, name)));
  return m;
}

Matcher clause_matcher(std::string name, const std::function<std::vector<MatcherClause>(const Matcher& self)>& clauses) {
  auto m = std::make_shared<ClauseBased>(name);
  m->define(clauses(std::make_shared<SelfRef>(m, name)));
  return m;
}

}  // namespace matchers

}  // namespace pmoe
