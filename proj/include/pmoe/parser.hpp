#pragma once

#include <string_view>

#include "pmoe/expr.hpp"
#include "pmoe/matcher.hpp"
#include "pmoe/pattern.hpp"
#include "pmoe/value.hpp"

namespace pmoe {

/// Parses the textual pattern language (grammar in docs/grammar.md).
/// Throws ParseError with line/column, or PatternError when the pattern is
/// well-formed text but misplaces `...` or `@`.
Pattern parse_pattern(std::string_view src);

Expr parse_expr(std::string_view src);

/// Matcher expressions: something, eq, integer, string, list M, multiset M,
/// set M, sortedList M and tuples (M1, M2, ...).
Matcher parse_matcher(std::string_view src);

/// JSON to Value: integers, strings, booleans, arrays (collections),
/// {"ctor": name, "args": [...]} and {"tuple": [...]}.
Value parse_target_json(std::string_view src);

}  // namespace pmoe
