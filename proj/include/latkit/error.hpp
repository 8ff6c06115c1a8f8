#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace latkit {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when a computation would exceed its configured work budget.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

/// Malformed textual input (lattice files, terms, corpus files).
class ParseError : public Error {
 public:
  ParseError(std::string message, std::size_t line, std::size_t column = 0)
      : Error(format(message, line, column)),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  static std::string format(const std::string& m, std::size_t line,
                            std::size_t column) {
    std::string out = "line " + std::to_string(line);
    if (column != 0) out += ", column " + std::to_string(column);
    return out + ": " + m;
  }

  std::size_t line_;
  std::size_t column_;
};

enum class CheckKind {
  not_antisymmetric,
  not_transitive,
  not_reflexive,
  no_meet,
  no_join,
  unknown_id,
  duplicate_id,
  empty,
};

inline const char* to_string(CheckKind k) {
  switch (k) {
    case CheckKind::not_antisymmetric: return "not-antisymmetric";
    case CheckKind::not_transitive: return "not-transitive";
    case CheckKind::not_reflexive: return "not-reflexive";
    case CheckKind::no_meet: return "no-meet";
    case CheckKind::no_join: return "no-join";
    case CheckKind::unknown_id: return "unknown-id";
    case CheckKind::duplicate_id: return "duplicate-id";
    case CheckKind::empty: return "empty";
  }
  return "?";
}

/// A poset or lattice failed validation. The witness names the offending
/// element ids (a pair for cycles and missing bounds, a triple for
/// transitivity).
class LatticeCheckFailure : public Error {
 public:
  LatticeCheckFailure(CheckKind kind, std::vector<std::string> witness, std::size_t line = 0)
      : Error(describe(kind, witness, line)), kind_(kind), witness_(std::move(witness)), line_(line) {}

  CheckKind kind() const noexcept { return kind_; }
  const std::vector<std::string>& witness() const noexcept { return witness_; }
  /// Source line of the offending input, or 0 when not read from text.
  std::size_t line() const noexcept { return line_; }

 private:
  static std::string describe(CheckKind kind, const std::vector<std::string>& w, std::size_t line) {
    std::string s = line ? "line " + std::to_string(line) + ": " : "";
    s += std::string(to_string(kind)) + " (";
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (i) s += ", ";
      s += w[i];
    }
    return s + ")";
  }

  CheckKind kind_;
  std::vector<std::string> witness_;
  std::size_t line_;
};

}  // namespace latkit
