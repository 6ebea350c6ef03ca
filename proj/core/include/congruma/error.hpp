#pragma once

#include <stdexcept>
#include <string>

namespace congruma {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed input text; carries the 1-based line number of the offense.
class ParseError : public Error {
 public:
  ParseError(int line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

/// Raised when an enumeration is refused because the carrier exceeds the
/// configured element cap.
class CapExceeded : public Error {
 public:
  CapExceeded(int size, int cap)
      : Error("carrier has " + std::to_string(size) +
              " elements, exceeding the enumeration cap of " +
              std::to_string(cap) +
              " (raise it with --cap or CONGRUMA_CAP)") {}
};

}  // namespace congruma
