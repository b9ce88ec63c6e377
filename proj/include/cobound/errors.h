#pragma once

#include <stdexcept>
#include <string>

namespace cobound {

// Base of every error raised by the library. Each subclass is one of the
// failure kinds a caller can react to; the CLI maps them onto exit codes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input value (bad partition, mismatched dimensions, ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class NotMeanZero : public Error {
 public:
  using Error::Error;
};

class RowNotMeanZero : public Error {
 public:
  using Error::Error;
};

// A constructed object failed its post-verification. Never a valid outcome.
class BoundViolated : public Error {
 public:
  using Error::Error;
};

class EmptyInput : public Error {
 public:
  using Error::Error;
};

class TooLarge : public Error {
 public:
  using Error::Error;
};

class ConvexHullViolation : public Error {
 public:
  using Error::Error;
};

class BreakpointHit : public Error {
 public:
  using Error::Error;
};

class UnequalIntervals : public Error {
 public:
  using Error::Error;
};

class DimensionTooLarge : public Error {
 public:
  using Error::Error;
};

class SearchExhausted : public Error {
 public:
  using Error::Error;
};

}  // namespace cobound
