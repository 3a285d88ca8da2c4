// Copyright 2026 The epiihs Authors
// SPDX-License-Identifier: Apache-2.0

#include "epiihs/error.hpp"

namespace epiihs {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument: return "invalid argument";
    case ErrorCode::EnumerationTooLarge: return "enumeration too large";
    case ErrorCode::Pole: return "pole";
    case ErrorCode::Domain: return "domain error";
    case ErrorCode::DivisionByZero: return "division by zero";
    case ErrorCode::Config: return "configuration error";
  }
  return "unknown error";
}

}  // namespace epiihs
