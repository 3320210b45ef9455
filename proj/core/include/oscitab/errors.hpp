#pragma once

#include <stdexcept>

namespace oscitab {

/// Input violates a structural invariant (malformed partition, bad text, ...).
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An operation addressed an empty tableau set.
class EmptySetError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A closed-form identifier that the library does not know.
class UnknownFormulaError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An exact identity failed; the message names the offending case.
class AssertionFailure : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace oscitab
