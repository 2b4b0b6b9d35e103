#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cantor {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

/// A documented precondition was violated by the caller.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class EmptyTree : public Error {
 public:
  EmptyTree() : Error("tree is empty: the root is not an in-node") {}
};

class AlphabetMismatch : public Error {
 public:
  using Error::Error;
};

class NodeNotInTree : public Error {
 public:
  using Error::Error;
};

/// An explicit enumeration would exceed its configured cap; callers should
/// switch to counting or block mode.
class EnumerationCapExceeded : public Error {
 public:
  using Error::Error;
};

class LevelSearchExhausted : public Error {
 public:
  LevelSearchExhausted(std::size_t stage, const std::string& detail)
      : Error("level search exhausted at stage " + std::to_string(stage) + ": " + detail),
        stage_(stage) {}
  std::size_t stage() const noexcept { return stage_; }

 private:
  std::size_t stage_;
};

class NotShiftInvariant : public Error {
 public:
  using Error::Error;
};

class NotStronglyLinkedFamily : public Error {
 public:
  using Error::Error;
};

}  // namespace cantor
