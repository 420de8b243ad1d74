#pragma once

#include <stdexcept>
#include <string>

namespace crystalr {

// Malformed text input.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An argument violates an operation's stated precondition.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A column/letter configuration matched none of the insertion cases.
class InsertionUndefined : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// An internal consistency assumption failed (graph disconnected, transport clash, ...).
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace crystalr
