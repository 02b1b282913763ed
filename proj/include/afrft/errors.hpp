#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace afrft {

// Base error carrying a stable machine-readable kind tag next to the
// human-readable message, so callers (and the CLI) can map failures
// without string-matching what().
class Error : public std::runtime_error {
 public:
  Error(const char* kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  const char* kind() const noexcept { return kind_; }

 private:
  const char* kind_;
};

class NotInvertible : public Error {
 public:
  NotInvertible(std::int64_t value, std::int64_t modulus, std::int64_t gcd)
      : Error("NotInvertible", "value " + std::to_string(value) +
                                   " is not invertible mod " +
                                   std::to_string(modulus) + " (gcd " +
                                   std::to_string(gcd) + ")"),
        gcd_(gcd) {}
  std::int64_t gcd() const noexcept { return gcd_; }

 private:
  std::int64_t gcd_;
};

class EvenModulus : public Error {
 public:
  explicit EvenModulus(const std::string& what) : Error("EvenModulus", what) {}
};

class UnsupportedModulus : public Error {
 public:
  explicit UnsupportedModulus(const std::string& what)
      : Error("UnsupportedModulus", what) {}
};

class InvalidModulus : public Error {
 public:
  explicit InvalidModulus(const std::string& what)
      : Error("InvalidModulus", what) {}
};

class InvalidElement : public Error {
 public:
  explicit InvalidElement(const std::string& what)
      : Error("InvalidElement", what) {}
};

class ModulusMismatch : public Error {
 public:
  explicit ModulusMismatch(const std::string& what)
      : Error("ModulusMismatch", what) {}
};

class SearchExhausted : public Error {
 public:
  explicit SearchExhausted(const std::string& what)
      : Error("SearchExhausted", what) {}
};

class NoFourierPower : public Error {
 public:
  explicit NoFourierPower(const std::string& what)
      : Error("NoFourierPower", what) {}
};

class DecompositionFailure : public Error {
 public:
  explicit DecompositionFailure(const std::string& what)
      : Error("DecompositionFailure", what) {}
};

class NonInvertibleC : public Error {
 public:
  explicit NonInvertibleC(const std::string& what)
      : Error("NonInvertibleC", what) {}
};

class DegenerateRotation : public Error {
 public:
  explicit DegenerateRotation(const std::string& what)
      : Error("DegenerateRotation", what) {}
};

class NotProportional : public Error {
 public:
  explicit NotProportional(const std::string& what)
      : Error("NotProportional", what) {}
};

class DimensionMismatch : public Error {
 public:
  explicit DimensionMismatch(const std::string& what)
      : Error("DimensionMismatch", what) {}
};

class InvalidGate : public Error {
 public:
  explicit InvalidGate(const std::string& what) : Error("InvalidGate", what) {}
};

class DimensionCap : public Error {
 public:
  explicit DimensionCap(const std::string& what)
      : Error("DimensionCap", what) {}
};

class IndexRange : public Error {
 public:
  explicit IndexRange(const std::string& what) : Error("IndexRange", what) {}
};

class NonCoprimeB : public Error {
 public:
  explicit NonCoprimeB(const std::string& what)
      : Error("NonCoprimeB", what) {}
};

// Parse failures carry a 1-based line/column when the position is known
// (0/0 for semantic errors discovered after parsing).
class ParseError : public Error {
 public:
  ParseError(const std::string& what, int line, int column)
      : Error("ParseError", what + " (line " + std::to_string(line) +
                                ", column " + std::to_string(column) + ")"),
        line_(line),
        column_(column) {}
  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  int line_;
  int column_;
};

}  // namespace afrft
