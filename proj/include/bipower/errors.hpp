#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

#include <nlohmann/json.hpp>

namespace bipower {

/// Malformed or out-of-range caller input (bad index, unknown label, size mismatch).
class InputError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Input text that failed to parse. Line and column are 1-based.
class ParseError : public InputError {
public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : InputError(what + " (line " + std::to_string(line) + ", column " +
                   std::to_string(column) + ")"),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

private:
  std::size_t line_;
  std::size_t column_;
};

/// An operation was called outside its documented precondition.
class ContractError : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

/// A search refused to run because the instance exceeds its size cap.
class CapacityError : public std::length_error {
public:
  using std::length_error::length_error;
};

/// The requested value does not exist for this instance (e.g. unreachable vertex).
class DomainError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

/// Two independently computed answers disagreed. Always a library bug.
class InternalDefect : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

/// A closure property failed on a concrete instance. Carries a
/// self-contained JSON record of the instance so it can be replayed.
class CounterexampleError : public std::runtime_error {
public:
  CounterexampleError(std::string theorem, nlohmann::json record)
      : std::runtime_error("counterexample to " + theorem),
        theorem_(std::move(theorem)),
        record_(std::move(record)) {}

  const std::string& theorem() const noexcept { return theorem_; }
  const nlohmann::json& record() const noexcept { return record_; }

private:
  std::string theorem_;
  nlohmann::json record_;
};

inline void require_odd_power(long long k) {
  if (k < 1 || k % 2 == 0) {
    throw ContractError("bipartite power requires an odd k >= 1 (got " + std::to_string(k) +
                        "); even powers of a bigraph are not bipartite");
  }
}

}  // namespace bipower
