#pragma once

#include <stdexcept>
#include <string>

namespace pmoe {

/// Base class of every error raised by the engine, the matchers and the
/// front-end. Callers that only care about "something went wrong" catch this.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

class UnboundVariable : public Error {
 public:
  explicit UnboundVariable(std::string name)
      : Error("unbound variable '" + name + "'"), name_(std::move(name)) {}
  const std::string& name() const noexcept { return name_; }

 private:
  std::string name_;
};

/// A name was used both as a scalar and as an indexed variable.
class MixedBinding : public Error {
 public:
  explicit MixedBinding(const std::string& name)
      : Error("variable '" + name + "' is bound both as scalar and as indexed") {}
};

class EvalError : public Error {
 public:
  using Error::Error;
};

class OverflowError : public EvalError {
 public:
  using EvalError::EvalError;
};

/// A step budget (equality fuel, not-pattern sub-search fuel, --max-states)
/// ran out.
class FuelExhausted : public Error {
 public:
  using Error::Error;
};

class MatcherError : public Error {
 public:
  using Error::Error;
};

class PatternError : public Error {
 public:
  using Error::Error;
};

class NoMatch : public Error {
 public:
  NoMatch() : Error("no match clause produced a result") {}
};

class ParseError : public Error {
 public:
  ParseError(const std::string& msg, int line, int column)
      : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + msg),
        line_(line),
        column_(column) {}
  /// No position: the input parsed but has the wrong shape.
  explicit ParseError(const std::string& msg) : Error(msg), line_(0), column_(0) {}
  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  int line_;
  int column_;
};

}  // namespace pmoe
