#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fvlab {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed expression text.  `position` is a 0-based byte offset.
class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t position, std::string expected)
      : Error("syntax error at position " + std::to_string(position) +
              ": expected " + expected),
        position_(position),
        expected_(std::move(expected)) {}

  std::size_t position() const { return position_; }
  const std::string& expected() const { return expected_; }

 private:
  std::size_t position_;
  std::string expected_;
};

class UnknownIdentifier : public Error {
 public:
  UnknownIdentifier(std::string name, std::size_t position)
      : Error("unknown identifier '" + name + "' at position " +
              std::to_string(position)),
        name_(std::move(name)),
        position_(position) {}

  const std::string& name() const { return name_; }
  std::size_t position() const { return position_; }

 private:
  std::string name_;
  std::size_t position_;
};

class BadParameter : public Error {
 public:
  using Error::Error;
};

class BadStep : public BadParameter {
 public:
  using BadParameter::BadParameter;
};

class BadOrder : public BadParameter {
 public:
  using BadParameter::BadParameter;
};

class BadSchedule : public BadParameter {
 public:
  using BadParameter::BadParameter;
};

class BadPitch : public BadParameter {
 public:
  using BadParameter::BadParameter;
};

class BadPrototype : public BadParameter {
 public:
  using BadParameter::BadParameter;
};

class UndefinedSign : public Error {
 public:
  UndefinedSign() : Error("sign of an undefined value") {}
};

class NonFiniteInput : public Error {
 public:
  using Error::Error;
};

class DegenerateEta : public Error {
 public:
  DegenerateEta() : Error("substitution increment eta is zero") {}
};

class NegativeBase : public Error {
 public:
  using Error::Error;
};

class TooFewSamples : public Error {
 public:
  TooFewSamples(std::size_t have, std::size_t need)
      : Error("too few usable samples: have " + std::to_string(have) +
              ", need " + std::to_string(need)) {}
};

class LocallyConstant : public Error {
 public:
  LocallyConstant() : Error("function is locally constant at the probe point") {}
};

class NotSingular : public Error {
 public:
  using Error::Error;
};

class QuadratureFailure : public Error {
 public:
  using Error::Error;
};

}  // namespace fvlab
