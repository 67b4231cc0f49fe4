#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace grz {

// Base class for everything thrown by the library.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Lexer/parser failure; `position` is a byte offset into the input.
class ParseError : public Error {
public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " (at offset " + std::to_string(position) + ")"),
        position_(position) {}
  std::size_t position() const { return position_; }

private:
  std::size_t position_;
};

// A rule or transformer was applied to a sequent/proof of the wrong shape.
class RuleError : public Error {
public:
  using Error::Error;
};

// A node budget ran out while materialising a non-well-founded proof.
class BudgetError : public Error {
public:
  using Error::Error;
};

}  // namespace grz
