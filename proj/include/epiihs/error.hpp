// Copyright 2026 The epiihs Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace epiihs {

enum class ErrorCode {
  InvalidArgument,
  EnumerationTooLarge,
  Pole,
  Domain,
  DivisionByZero,
  Config,
};

const char* to_string(ErrorCode code) noexcept;

/// Base of every error raised by the library. The code is what the C API and
/// the CLI map onto status values and exit codes.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

class InvalidArgumentError : public Error {
 public:
  explicit InvalidArgumentError(const std::string& what)
      : Error(ErrorCode::InvalidArgument, what) {}
};

class EnumerationTooLargeError : public Error {
 public:
  explicit EnumerationTooLargeError(const std::string& what)
      : Error(ErrorCode::EnumerationTooLarge, what) {}
};

class PoleError : public Error {
 public:
  explicit PoleError(const std::string& what) : Error(ErrorCode::Pole, what) {}
};

class DomainError : public Error {
 public:
  explicit DomainError(const std::string& what)
      : Error(ErrorCode::Domain, what) {}
};

class DivisionByZeroError : public Error {
 public:
  explicit DivisionByZeroError(const std::string& what)
      : Error(ErrorCode::DivisionByZero, what) {}
};

class ConfigError : public Error {
 public:
  explicit ConfigError(const std::string& what)
      : Error(ErrorCode::Config, what) {}
};

}  // namespace epiihs
