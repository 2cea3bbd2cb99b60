#pragma once

#include <stdexcept>
#include <string>

namespace morsecat {

/// Argument outside the supported enumeration range.
class RangeError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// An object violates its structural invariants.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Input has a shape the operation cannot work with (e.g. odd edge count).
class StructuralError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A referenced vertex, block, or id does not exist.
class LookupError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

}  // namespace morsecat
