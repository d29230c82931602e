#pragma once

#include <stdexcept>
#include <string>

namespace skh {

class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Malformed diagram source. Line and column are 1-based.
class ParseError : public Error {
public:
  ParseError(int line, int column, const std::string& what)
      : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
        line_(line), column_(column) {}

  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

private:
  int line_;
  int column_;
};

/// Structurally invalid diagram (width underflow, bad position, orientation clash, ...).
class DiagramError : public Error {
public:
  using Error::Error;
};

/// A Morse move requested at a location where it is not legal.
class MoveError : public Error {
public:
  using Error::Error;
};

/// Diagram is valid but not acceptable for the requested computation.
class IncompatibleInput : public Error {
public:
  using Error::Error;
};

class SizeCapError : public Error {
public:
  using Error::Error;
};

/// Broken internal invariant, e.g. a differential that does not square to zero.
class InternalError : public Error {
public:
  using Error::Error;
};

}  // namespace skh
