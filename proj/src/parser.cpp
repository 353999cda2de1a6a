#include "pmoe/parser.hpp"

#include <charconv>
#include <json.hpp>

#include "pmoe/error.hpp"

namespace pmoe {

namespace {

enum class Tok {
  Ident,  // lower-case start
  Ctor,   // upper-case start
  Int,
  Str,
  Punct,
  End,
};

struct Token {
  Tok kind;
  std::string text;
  std::int64_t ival = 0;
  int line = 1;
  int col = 1;
  bool space_before = false;
};

bool is_ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '\''; }

std::vector<Token> lex(std::string_view src) {
  static const char* puncts[] = {"...", "++", "->", "==", "<=", ">=", "_", "$", "#", "?", "!", "@", "(", ")",
                                 "[",   "]",  ",",  ":",  "+",  "-",  "*", "<", ">", "\\", "="};
  std::vector<Token> out;
  int line = 1, col = 1;
  std::size_t i = 0;
  bool space = true;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k, ++i) {
      if (src[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
  };
  while (i < src.size()) {
    char c = src[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      space = true;
      continue;
    }
    if (c == '-' && i + 1 < src.size() && src[i + 1] == '-') {  // comment to end of line
      while (i < src.size() && src[i] != '\n') advance(1);
      space = true;
      continue;
    }
    Token t{Tok::Punct, "", 0, line, col, space};
    space = false;
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
      t.kind = Tok::Int;
      t.text = std::string(src.substr(i, j - i));
      auto [p, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), t.ival);
      if (ec != std::errc()) throw ParseError("integer literal out of range", line, col);
      advance(j - i);
    } else if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < src.size() && is_ident_char(src[j])) ++j;
      t.kind = std::isupper(static_cast<unsigned char>(c)) ? Tok::Ctor : Tok::Ident;
      t.text = std::string(src.substr(i, j - i));
      advance(j - i);
    } else if (c == '"') {
      t.kind = Tok::Str;
      advance(1);
      for (;;) {
        if (i >= src.size()) throw ParseError("unterminated string literal", t.line, t.col);
        char d = src[i];
        if (d == '"') {
          advance(1);
          break;
        }
        if (d == '\\') {
          if (i + 1 >= src.size()) throw ParseError("unterminated string literal", t.line, t.col);
          char e = src[i + 1];
          switch (e) {
            case 'n': t.text += '\n'; break;
            case 't': t.text += '\t'; break;
            case '"': t.text += '"'; break;
            case '\\': t.text += '\\'; break;
            default: throw ParseError(std::string("unknown escape \\") + e, line, col);
          }
          advance(2);
          continue;
        }
        t.text += d;
        advance(1);
      }
    } else {
      const char* found = nullptr;
      for (const char* p : puncts) {
        std::string_view sv(p);
        if (src.substr(i, sv.size()) == sv) {
          found = p;
          break;
        }
      }
      if (!found) throw ParseError(std::string("unexpected character '") + c + "'", line, col);
      t.text = found;
      advance(t.text.size());
    }
    out.push_back(std::move(t));
  }
  out.push_back(Token{Tok::End, "", 0, line, col, true});
  return out;
}

bool is_keyword(const std::string& s) {
  return s == "and" || s == "or" || s == "loop" || s == "seq" || s == "let" || s == "in";
}

class Parser {
 public:
  explicit Parser(std::string_view src) : toks_(lex(src)) {}

  Pattern whole_pattern() {
    Pattern p = pattern();
    expect_end();
    return p;
  }

  Expr whole_expr() {
    Expr e = expr();
    expect_end();
    return e;
  }

  Matcher whole_matcher() {
    Matcher m = matcher();
    expect_end();
    return m;
  }

 private:
  const Token& peek(std::size_t k = 0) const { return toks_[std::min(pos_ + k, toks_.size() - 1)]; }
  const Token& take() { return toks_[pos_ < toks_.size() - 1 ? pos_++ : pos_]; }

  bool is(const char* punct, std::size_t k = 0) const {
    return peek(k).kind == Tok::Punct && peek(k).text == punct;
  }
  bool is_word(const char* w, std::size_t k = 0) const {
    return peek(k).kind == Tok::Ident && peek(k).text == w;
  }

  bool accept(const char* punct) {
    if (!is(punct)) return false;
    take();
    return true;
  }

  [[noreturn]] void fail(const std::string& msg, const Token& at) const {
    std::string got = at.kind == Tok::End ? "end of input" : "'" + at.text + "'";
    throw ParseError(msg + ", got " + got, at.line, at.col);
  }

  void expect(const char* punct) {
    if (!accept(punct)) fail(std::string("expected '") + punct + "'", peek());
  }

  void expect_word(const char* w) {
    if (!is_word(w)) fail(std::string("expected '") + w + "'", peek());
    take();
  }

  void expect_end() {
    if (peek().kind != Tok::End) fail("unexpected trailing input", peek());
  }

  std::string ident() {
    if (peek().kind != Tok::Ident || is_keyword(peek().text)) fail("expected an identifier", peek());
    return take().text;
  }

  // `_` glued to the preceding name and followed by an index.
  bool index_follows() const {
    if (!is("_") || peek().space_before) return false;
    const Token& n = peek(1);
    return !n.space_before && (n.kind == Tok::Ident || n.kind == Tok::Int || (n.kind == Tok::Punct && n.text == "("));
  }

  Expr index() {
    expect("_");
    const Token& t = peek();
    if (t.kind == Tok::Int) return ex::integer(take().ival);
    if (t.kind == Tok::Ident) return ex::var(ident());
    expect("(");
    Expr e = expr();
    expect(")");
    return e;
  }

  // ---- patterns

  Pattern pattern() {
    if (is_word("let")) {
      take();
      accept("$");
      std::string name = ident();
      Expr idx = index_follows() ? index() : Expr();
      expect("=");
      Expr value = expr();
      expect_word("in");
      Pattern body = pattern();
      return idx ? pat::let_indexed(name, idx, value, body) : pat::let(name, value, body);
    }
    // `:` and `++` share one right-associative level.
    Pattern left = app_pattern();
    if (accept(":")) return pat::cons(left, pattern());
    if (accept("++")) return pat::join(left, pattern());
    return left;
  }

  bool atom_starts() const {
    const Token& t = peek();
    if (t.kind == Tok::Ctor) return true;
    if (t.kind == Tok::Ident) return t.text == "seq";
    if (t.kind != Tok::Punct) return false;
    static const char* starts[] = {"_", "$", "#", "?", "!", "@", "...", "(", "["};
    for (const char* s : starts)
      if (t.text == s) return true;
    return false;
  }

  Pattern app_pattern() {
    if (peek().kind == Tok::Ctor) {
      std::string name = take().text;
      std::vector<Pattern> args;
      while (atom_starts()) args.push_back(atom_pattern());
      return pat::ctor(name, std::move(args));
    }
    if (is_word("loop")) return loop_pattern();
    return atom_pattern();
  }

  bool end_is_pattern() const {
    if (peek().kind != Tok::Punct) return false;
    const std::string& t = peek().text;
    if (t == "$" || t == "_" || t == "#" || t == "?" || t == "!") return true;
    return t == "(" && (is_word("and", 1) || is_word("or", 1));
  }

  Pattern loop_pattern() {
    const Token& at = take();
    std::optional<std::string> var;
    if (accept("$"))
      var = ident();
    else if (!accept("_"))
      fail("expected '$name' or '_' after loop", peek());
    expect("(");
    Expr start = expr();
    expect(",");
    pat_node::LoopEnd end = end_is_pattern() ? pat::pattern_end(pattern()) : pat::fixed_end(expr());
    expect(")");
    Pattern repeat = atom_pattern();
    Pattern final = atom_pattern();
    try {
      return pat::loop(var, start, end, repeat, final);
    } catch (const PatternError& e) {
      throw ParseError(e.what(), at.line, at.col);
    }
  }

  std::vector<Pattern> pattern_list(const char* close) {
    std::vector<Pattern> items;
    if (accept(close)) return items;
    for (;;) {
      items.push_back(pattern());
      if (accept(close)) return items;
      expect(",");
    }
  }

  Pattern atom_pattern() {
    const Token& t = peek();
    if (t.kind == Tok::Ctor) return pat::ctor(take().text);
    if (is_word("seq")) {
      take();
      expect("[");
      auto items = pattern_list("]");
      if (items.empty()) fail("empty sequential pattern", t);
      return pat::seq(std::move(items));
    }
    if (t.kind != Tok::Punct) fail("expected a pattern", t);
    if (accept("_")) return pat::wildcard();
    if (accept("...")) return pat::ellipsis();
    if (accept("@")) return pat::later();
    if (accept("$")) {
      std::string name = ident();
      if (index_follows()) return pat::ivar(name, index());
      return pat::var(name);
    }
    if (accept("#")) return pat::val(primary());
    if (accept("?")) return pat::pred(primary());
    if (accept("!")) return pat::not_(atom_pattern());
    if (accept("[")) {
      auto items = pattern_list("]");
      Pattern p = pat::nil();
      for (auto it = items.rbegin(); it != items.rend(); ++it) p = pat::cons(*it, p);
      return p;
    }
    if (accept("(")) {
      if (is_word("and") || is_word("or")) {
        bool is_and = take().text == "and";
        std::vector<Pattern> items;
        while (!accept(")")) {
          if (!atom_starts()) fail("expected a pattern or ')'", peek());
          items.push_back(atom_pattern());
        }
        return is_and ? pat::and_(std::move(items)) : pat::or_(std::move(items));
      }
      auto items = pattern_list(")");
      if (items.size() == 1) return items[0];
      return pat::tuple(std::move(items));
    }
    fail("expected a pattern", t);
  }

  // ---- expressions

  Expr expr() {
    if (accept("\\")) {
      std::string param = ident();
      expect("->");
      return ex::lambda(param, expr());
    }
    Expr lhs = additive();
    static const std::pair<const char*, CmpOp> ops[] = {
        {"==", CmpOp::Eq}, {"<=", CmpOp::Le}, {">=", CmpOp::Ge}, {"<", CmpOp::Lt}, {">", CmpOp::Gt}};
    for (const auto& [s, op] : ops)
      if (accept(s)) return ex::cmp(op, lhs, additive());
    return lhs;
  }

  Expr additive() {
    Expr e = multiplicative();
    for (;;) {
      if (accept("+"))
        e = ex::add(e, multiplicative());
      else if (accept("-"))
        e = ex::sub(e, multiplicative());
      else
        return e;
    }
  }

  Expr multiplicative() {
    Expr e = unary();
    while (accept("*")) e = ex::mul(e, unary());
    return e;
  }

  Expr unary() {
    if (accept("-")) {
      if (peek().kind == Tok::Int) return ex::integer(-take().ival);
      return ex::negate(unary());
    }
    return application();
  }

  bool primary_starts() const {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::Int:
      case Tok::Str: return true;
      case Tok::Ctor: return t.text == "True" || t.text == "False";
      case Tok::Ident: return !is_keyword(t.text);
      case Tok::Punct: return t.text == "(" || t.text == "[";
      case Tok::End: return false;
    }
    return false;
  }

  Expr application() {
    const Token& head = peek();
    Expr fn = primary();
    bool builtin = head.kind == Tok::Ident && (head.text == "negate" || head.text == "abs");
    if (builtin && primary_starts()) {
      fn = head.text == "negate" ? ex::negate(primary()) : ex::abs(primary());
    }
    while (primary_starts()) fn = ex::apply(fn, primary());
    return fn;
  }

  Expr primary() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::Int: return ex::integer(take().ival);
      case Tok::Str: return ex::str(take().text);
      case Tok::Ctor:
        if (t.text == "True" || t.text == "False") return ex::boolean(take().text == "True");
        fail("constructors are not expressions", t);
      case Tok::Ident: {
        std::string name = ident();
        if (index_follows()) return ex::ivar(name, index());
        return ex::var(name);
      }
      case Tok::Punct:
        if (accept("(")) {
          std::vector<Expr> items;
          if (accept(")")) return ex::tuple({});
          for (;;) {
            items.push_back(expr());
            if (accept(")")) break;
            expect(",");
          }
          return items.size() == 1 ? items[0] : ex::tuple(std::move(items));
        }
        if (accept("[")) {
          std::vector<Expr> items;
          if (accept("]")) return ex::coll({});
          for (;;) {
            items.push_back(expr());
            if (accept("]")) break;
            expect(",");
          }
          return ex::coll(std::move(items));
        }
        if (t.text == "-") return unary();
        break;
      case Tok::End: break;
    }
    fail("expected an expression", t);
  }

  // ---- matchers

  Matcher matcher() {
    const Token& t = peek();
    if (t.kind == Tok::Ident) {
      const std::string& w = t.text;
      if (w == "list" || w == "multiset" || w == "set" || w == "sortedList") {
        take();
        Matcher inner = matcher_atom();
        if (w == "list") return matchers::list(inner);
        if (w == "multiset") return matchers::multiset(inner);
        if (w == "set") return matchers::set(inner);
        return matchers::sorted_list(inner);
      }
    }
    return matcher_atom();
  }

  Matcher matcher_atom() {
    const Token& t = peek();
    if (accept("(")) {
      std::vector<Matcher> items;
      if (accept(")")) return matchers::tuple({});
      for (;;) {
        items.push_back(matcher());
        if (accept(")")) break;
        expect(",");
      }
      return items.size() == 1 ? items[0] : matchers::tuple(std::move(items));
    }
    if (t.kind == Tok::Ident) {
      std::string w = take().text;
      if (w == "something") return matchers::something();
      if (w == "eq") return matchers::eq();
      if (w == "integer") return matchers::integer();
      if (w == "string") return matchers::string();
      if (w == "list" || w == "multiset" || w == "set" || w == "sortedList")
        fail("matcher '" + w + "' needs an element matcher", peek());
      throw ParseError("unknown matcher '" + w + "'", t.line, t.col);
    }
    fail("expected a matcher", t);
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

Value from_json(const nlohmann::json& j) {
  using nlohmann::json;
  switch (j.type()) {
    case json::value_t::number_integer: return Value::integer(j.get<std::int64_t>());
    case json::value_t::number_unsigned: {
      auto u = j.get<std::uint64_t>();
      if (u > static_cast<std::uint64_t>(INT64_MAX)) throw ParseError("target: integer " + j.dump() + " out of range");
      return Value::integer(static_cast<std::int64_t>(u));
    }
    case json::value_t::number_float: throw ParseError("target: " + j.dump() + " is not an integer");
    case json::value_t::string: return Value::string(j.get<std::string>());
    case json::value_t::boolean: return Value::boolean(j.get<bool>());
    case json::value_t::array: {
      std::vector<Value> items;
      for (const auto& x : j) items.push_back(from_json(x));
      return Value::coll(items);
    }
    case json::value_t::object: {
      if (j.size() == 1 && j.contains("tuple") && j["tuple"].is_array()) {
        std::vector<Value> items;
        for (const auto& x : j["tuple"]) items.push_back(from_json(x));
        return Value::tuple(std::move(items));
      }
      if (j.contains("ctor") && j["ctor"].is_string() && (j.size() == 1 || (j.size() == 2 && j.contains("args")))) {
        std::vector<Value> args;
        if (j.contains("args")) {
          if (!j["args"].is_array()) throw ParseError("target: \"args\" must be an array");
          for (const auto& x : j["args"]) args.push_back(from_json(x));
        }
        return Value::term(j["ctor"].get<std::string>(), std::move(args));
      }
      throw ParseError("target: unsupported object " + j.dump());
    }
    default: throw ParseError("target: unsupported JSON value " + j.dump());
  }
}

}  // namespace

Pattern parse_pattern(std::string_view src) {
  Pattern p = Parser(src).whole_pattern();
  validate(p);
  return p;
}

Expr parse_expr(std::string_view src) { return Parser(src).whole_expr(); }

Matcher parse_matcher(std::string_view src) { return Parser(src).whole_matcher(); }

Value parse_target_json(std::string_view src) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(src);
  } catch (const nlohmann::json::parse_error& e) {
    int line = 1, col = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < src.size(); ++i) {
      if (src[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw ParseError("invalid JSON target", line, col);
  }
  return from_json(j);
}

}  // namespace pmoe
