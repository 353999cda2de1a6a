#include "pmoe/value.hpp"

#include <ostream>
#include <sstream>
#include <utility>

#include "pmoe/error.hpp"

namespace pmoe {

Value::Value() : data_(std::make_shared<const std::vector<Value>>()) {}

Value Value::integer(std::int64_t v) { return Value(Data(std::in_place_index<0>, v)); }

Value Value::string(std::string s) {
  return Value(Data(std::in_place_index<1>, std::make_shared<const std::string>(std::move(s))));
}

Value Value::boolean(bool b) { return Value(Data(std::in_place_index<2>, b)); }

Value Value::tuple(std::vector<Value> items) {
  return Value(Data(std::in_place_index<3>, std::make_shared<const std::vector<Value>>(std::move(items))));
}

Value Value::coll(CollPtr c) { return Value(Data(std::in_place_index<4>, std::move(c))); }

Value Value::coll(const std::vector<Value>& items) { return coll(coll::from_vector(items)); }

Value Value::term(std::string name, std::vector<Value> args) {
  return Value(Data(std::in_place_index<5>,
                    std::make_shared<const TermData>(TermData{std::move(name), std::move(args)})));
}

Value Value::closure(std::shared_ptr<const Closure> c) {
  return Value(Data(std::in_place_index<6>, std::move(c)));
}

const char* kind_name(Value::Kind k) noexcept {
  switch (k) {
    case Value::Kind::Int: return "integer";
    case Value::Kind::Str: return "string";
    case Value::Kind::Bool: return "boolean";
    case Value::Kind::Tuple: return "tuple";
    case Value::Kind::Coll: return "collection";
    case Value::Kind::Term: return "term";
    case Value::Kind::Closure: return "closure";
  }
  return "?";
}

namespace {

[[noreturn]] void kind_mismatch(Value::Kind want, Value::Kind got) {
  throw EvalError(std::string("expected ") + kind_name(want) + ", got " + kind_name(got));
}

}  // namespace

std::int64_t Value::as_int() const {
  if (!is_int()) kind_mismatch(Kind::Int, kind());
  return std::get<0>(data_);
}

const std::string& Value::as_str() const {
  if (!is_str()) kind_mismatch(Kind::Str, kind());
  return *std::get<1>(data_);
}

bool Value::as_bool() const {
  if (!is_bool()) kind_mismatch(Kind::Bool, kind());
  return std::get<2>(data_);
}

const std::vector<Value>& Value::tuple_items() const {
  if (!is_tuple()) kind_mismatch(Kind::Tuple, kind());
  return *std::get<3>(data_);
}

const CollPtr& Value::as_coll() const {
  if (!is_coll()) kind_mismatch(Kind::Coll, kind());
  return std::get<4>(data_);
}

const std::string& Value::term_name() const {
  if (!is_term()) kind_mismatch(Kind::Term, kind());
  return std::get<5>(data_)->name;
}

const std::vector<Value>& Value::term_args() const {
  if (!is_term()) kind_mismatch(Kind::Term, kind());
  return std::get<5>(data_)->args;
}

const Closure& Value::as_closure() const {
  if (!is_closure()) kind_mismatch(Kind::Closure, kind());
  return *std::get<6>(data_);
}

// ---------------------------------------------------------------------------
// CollNode

CollNode::CollNode(std::optional<Cell> cell) : cell_(std::move(cell)) {
  std::call_once(once_, [] {});
}

CollNode::~CollNode() {
  // Unlink long forced chains iteratively so destroying a million-element
  // list does not recurse a million frames deep.
  if (!cell_) return;
  CollPtr next = std::move(cell_->tail);
  while (next && next.use_count() == 1) {
    CollPtr after;
    if (next->cell_) after = std::move(next->cell_->tail);
    next = std::move(after);
  }
}

const CollNode::Cell* CollNode::force() const {
  std::call_once(once_, [this] {
    cell_ = thunk_();
    thunk_ = nullptr;
  });
  return cell_ ? &*cell_ : nullptr;
}

namespace coll {

CollPtr nil() {
  static const CollPtr empty = std::make_shared<CollNode>(std::optional<CollNode::Cell>());
  return empty;
}

CollPtr cons(Value head, CollPtr tail) {
  return std::make_shared<CollNode>(
      std::optional<CollNode::Cell>(CollNode::Cell{std::move(head), std::move(tail)}));
}

CollPtr lazy(CollNode::Thunk thunk) { return std::make_shared<CollNode>(std::move(thunk)); }

CollPtr from_vector(const std::vector<Value>& items) { return prepend(items, nil()); }

CollPtr prepend(const std::vector<Value>& prefix, CollPtr rest) {
  CollPtr out = std::move(rest);
  for (auto it = prefix.rbegin(); it != prefix.rend(); ++it) out = cons(*it, std::move(out));
  return out;
}

CollPtr from_stream(Stream<Value> s) {
  return lazy([s = std::move(s)]() mutable -> std::optional<CollNode::Cell> {
    auto v = s.next();
    if (!v) return std::nullopt;
    return CollNode::Cell{std::move(*v), from_stream(s)};
  });
}

CollPtr concat(CollPtr a, CollPtr b) {
  return lazy([a = std::move(a), b = std::move(b)]() -> std::optional<CollNode::Cell> {
    if (const auto* cell = a->force()) return CollNode::Cell{cell->head, concat(cell->tail, b)};
    if (const auto* cell = b->force()) return *cell;
    return std::nullopt;
  });
}

CollPtr take(CollPtr c, std::size_t k) {
  if (k == 0) return nil();
  return lazy([c = std::move(c), k]() -> std::optional<CollNode::Cell> {
    const auto* cell = c->force();
    if (!cell) return std::nullopt;
    return CollNode::Cell{cell->head, take(cell->tail, k - 1)};
  });
}

CollPtr naturals(std::int64_t from) {
  return lazy([from]() -> std::optional<CollNode::Cell> {
    return CollNode::Cell{Value::integer(from), naturals(from + 1)};
  });
}

CollPtr range(std::int64_t lo, std::int64_t hi) {
  std::vector<Value> items;
  for (std::int64_t i = lo; i <= hi; ++i) items.push_back(Value::integer(i));
  return from_vector(items);
}

bool empty(const CollPtr& c) { return c->force() == nullptr; }

std::vector<Value> to_vector(const CollPtr& c, std::uint64_t limit) {
  std::vector<Value> out;
  for (const CollNode::Cell* cell = c->force(); cell; cell = cell->tail->force()) {
    if (out.size() >= limit) throw FuelExhausted("collection longer than " + std::to_string(limit) + " elements");
    out.push_back(cell->head);
  }
  return out;
}

std::vector<Value> prefix(const CollPtr& c, std::size_t n) {
  std::vector<Value> out;
  CollPtr cur = c;
  while (out.size() < n) {
    const CollNode::Cell* cell = cur->force();
    if (!cell) break;
    out.push_back(cell->head);
    cur = cell->tail;
  }
  return out;
}

}  // namespace coll

// ---------------------------------------------------------------------------
// Equality

namespace {

struct EqualityCheck {
  std::uint64_t fuel;

  void spend() {
    if (fuel == 0) throw FuelExhausted("equality fuel exhausted (possibly infinite collection)");
    --fuel;
  }

  bool operator()(const Value& a, const Value& b) {
    spend();
    if (a.kind() != b.kind()) return false;
    switch (a.kind()) {
      case Value::Kind::Int: return a.as_int() == b.as_int();
      case Value::Kind::Str: return a.as_str() == b.as_str();
      case Value::Kind::Bool: return a.as_bool() == b.as_bool();
      case Value::Kind::Tuple: return items(a.tuple_items(), b.tuple_items());
      case Value::Kind::Term:
        return a.term_name() == b.term_name() && items(a.term_args(), b.term_args());
      case Value::Kind::Coll: {
        const auto* x = a.as_coll()->force();
        const auto* y = b.as_coll()->force();
        while (x && y) {
          if (!(*this)(x->head, y->head)) return false;
          x = x->tail->force();
          y = y->tail->force();
        }
        return !x && !y;
      }
      case Value::Kind::Closure: throw EvalError("closures cannot be compared for equality");
    }
    return false;
  }

  bool items(const std::vector<Value>& xs, const std::vector<Value>& ys) {
    if (xs.size() != ys.size()) return false;
    for (std::size_t i = 0; i < xs.size(); ++i)
      if (!(*this)(xs[i], ys[i])) return false;
    return true;
  }
};

void print(std::ostream& os, const Value& v, bool as_arg);

void print_quoted(std::ostream& os, const std::string& s) {
  os << '"';
  for (char c : s) {
    switch (c) {
      case '"': os << "\\\""; break;
      case '\\': os << "\\\\"; break;
      case '\n': os << "\\n"; break;
      case '\t': os << "\\t"; break;
      default: os << c;
    }
  }
  os << '"';
}

void print(std::ostream& os, const Value& v, bool as_arg) {
  switch (v.kind()) {
    case Value::Kind::Int:
      if (as_arg && v.as_int() < 0)
        os << '(' << v.as_int() << ')';
      else
        os << v.as_int();
      break;
    case Value::Kind::Str: print_quoted(os, v.as_str()); break;
    case Value::Kind::Bool: os << (v.as_bool() ? "True" : "False"); break;
    case Value::Kind::Tuple: {
      os << '(';
      const auto& xs = v.tuple_items();
      for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) os << ", ";
        print(os, xs[i], false);
      }
      os << ')';
      break;
    }
    case Value::Kind::Coll: {
      os << '[';
      bool first = true;
      std::uint64_t n = 0;
      for (const auto* cell = v.as_coll()->force(); cell; cell = cell->tail->force()) {
        if (++n > kDefaultEqualityFuel) throw FuelExhausted("refusing to print an unbounded collection");
        if (!first) os << ", ";
        first = false;
        print(os, cell->head, false);
      }
      os << ']';
      break;
    }
    case Value::Kind::Term: {
      const auto& args = v.term_args();
      bool parens = as_arg && !args.empty();
      if (parens) os << '(';
      os << v.term_name();
      for (const auto& a : args) {
        os << ' ';
        print(os, a, true);
      }
      if (parens) os << ')';
      break;
    }
    case Value::Kind::Closure: os << "<closure>"; break;
  }
}

}  // namespace

bool value_equal(const Value& a, const Value& b, std::uint64_t fuel) {
  return EqualityCheck{fuel}(a, b);
}

std::string to_string(const Value& v) {
  std::ostringstream os;
  print(os, v, false);
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Value& v) {
  print(os, v, false);
  return os;
}

}  // namespace pmoe
