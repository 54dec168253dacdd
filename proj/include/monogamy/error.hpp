#pragma once

#include <stdexcept>
#include <string>

namespace monogamy {

// Raised when an operation is called outside its documented domain.
class ContractViolation : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Raised by routes that only support low-rank inputs (e.g. Koashi-Winter
// with a single purifying qubit).
class UnsupportedRank : public std::runtime_error {
 public:
  UnsupportedRank(const std::string& what, int rank)
      : std::runtime_error(what), rank_(rank) {}
  int rank() const noexcept { return rank_; }

 private:
  int rank_;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, int line)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line_(line) {}
  int line() const noexcept { return line_; }

 private:
  int line_;
};

}  // namespace monogamy
