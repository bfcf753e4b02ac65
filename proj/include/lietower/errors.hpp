#ifndef LIETOWER_ERRORS_HPP
#define LIETOWER_ERRORS_HPP

#include <array>
#include <cstddef>
#include <stdexcept>
#include <string>

namespace lietower {

/// Bad input or a violated precondition. The CLI maps this to exit code 1.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A verified invariant did not hold. This signals a bug, never bad input;
/// the CLI maps it to exit code 2.
class InvariantError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// The Jacobi identity fails on the basis triple (i, j, k), 0-based.
class JacobiError : public InputError {
 public:
  JacobiError(std::array<std::size_t, 3> triple, const std::string& what)
      : InputError(what), triple_(triple) {}

  const std::array<std::size_t, 3>& triple() const noexcept { return triple_; }

 private:
  std::array<std::size_t, 3> triple_;
};

class ParseError : public InputError {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& what)
      : InputError(what), line_(line), column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace lietower

#endif  // LIETOWER_ERRORS_HPP
