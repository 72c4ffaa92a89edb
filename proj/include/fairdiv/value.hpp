#pragma once

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>

namespace fairdiv {

// All magnitudes in the library (utilities, market values, prices, shares,
// densities) are exact rationals. GMP keeps results canonical (lowest terms,
// positive denominator), so equality and ordering are exact.
using Value = mpq_class;

class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

class BoundExceeded : public Error {
 public:
  explicit BoundExceeded(const std::string& what) : Error(what) {}
};

// Canonicalized num/den. Throws Error on zero denominator.
Value make_value(long num, long den = 1);

// Accepts "a", "-a" or "a/b". Returns nullopt on malformed input.
std::optional<Value> parse_value(const std::string& text);

// "a" when the denominator is 1, otherwise "a/b".
std::string value_to_string(const Value& v);

}  // namespace fairdiv
