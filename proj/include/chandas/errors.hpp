#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace chandas {

// Base of every input or domain error raised by the library. Out-of-range
// inputs are rejected, never clamped.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct EmptyInput : Error {
  EmptyInput() : Error("empty input") {}
};

struct InvalidCharacter : Error {
  InvalidCharacter(std::size_t position, char character)
      : Error("invalid character '" + std::string(1, character) +
              "' at position " + std::to_string(position)),
        position(position),
        character(character) {}

  std::size_t position;  // 1-based, leftmost = 1
  char character;
};

struct GuardExceeded : Error {
  GuardExceeded(unsigned n, unsigned guard)
      : Error("n = " + std::to_string(n) + " exceeds the enumeration guard " +
              std::to_string(guard) + " (2^n rows would not fit desk scale)"),
        n(n),
        guard(guard) {}

  unsigned n;
  unsigned guard;
};

struct IndexOutOfRange : Error {
  using Error::Error;
};

struct DigitOutOfRange : Error {
  DigitOutOfRange(std::size_t index, unsigned digit, unsigned base)
      : Error("digit " + std::to_string(digit) + " at index " +
              std::to_string(index) + " is out of range for base " +
              std::to_string(base)),
        index(index),
        digit(digit),
        base(base) {}

  std::size_t index;  // 0-based position within the digit list
  unsigned digit;
  unsigned base;
};

struct InvalidBase : Error {
  explicit InvalidBase(unsigned base)
      : Error("base must be at least 2, got " + std::to_string(base)),
        base(base) {}

  unsigned base;
};

struct InvalidArgs : Error {
  using Error::Error;
};

struct Overflow : Error {
  using Error::Error;
};

}  // namespace chandas
