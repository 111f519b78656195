#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace sktgc {

// Base for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Words i and i+1 (or last and first for the wrap step) are not a single
// +-1 step.
class NotAGrayStep : public Error {
 public:
  NotAGrayStep(std::size_t index, const std::string& what)
      : Error(what), index_(index) {}
  std::size_t index() const noexcept { return index_; }

 private:
  std::size_t index_;
};

class EmptyResult : public Error {
 public:
  using Error::Error;
};

class InvalidLength : public Error {
 public:
  using Error::Error;
};

class InvalidParameters : public Error {
 public:
  using Error::Error;
};

class InvalidAlphabet : public Error {
 public:
  using Error::Error;
};

class NotInCode : public Error {
 public:
  using Error::Error;
};

class RankOutOfRange : public Error {
 public:
  using Error::Error;
};

class PositionOutOfRange : public Error {
 public:
  using Error::Error;
};

class NotSkewTolerant : public Error {
 public:
  using Error::Error;
};

class MalformedStream : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

// One violated admissibility condition of a base case, with a witness.
struct BaseViolation {
  enum class Condition {
    kShape,          // wrong alphabet, length or nonsensical L/R
    kFirstChange,    // first change not at position R
    kLastChange,     // last change not at position -L
    kStaircase,      // does not open with 0, e_R, e_{R-1}+e_R, ...
    kForbiddenWord,  // contains sum_{i<=j} e_{-i} + sum_{i<=R} e_i
    kNotSkewTolerant,
    kRepeatedWord,
  };
  Condition condition;
  std::string witness;
};

const char* to_string(BaseViolation::Condition condition);

class InvalidBase : public Error {
 public:
  explicit InvalidBase(std::vector<BaseViolation> violations);
  const std::vector<BaseViolation>& violations() const noexcept {
    return violations_;
  }

 private:
  std::vector<BaseViolation> violations_;
};

using ConditionViolated = InvalidBase;

}  // namespace sktgc
