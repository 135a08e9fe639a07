// Copyright 2026 The tanglekit Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>

namespace tanglekit {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Bad input: index out of range, malformed text, inconsistent sizes.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// A closed-form expression was requested outside the range it was derived for.
class ValidityError : public Error {
 public:
  using Error::Error;
};

/// A configured size limit (support cap, dense cap, qubit cap) would be exceeded.
class ResourceCapError : public Error {
 public:
  using Error::Error;
};

/// The eigensolver failed to converge or produced an inconsistent result.
class NumericalError : public Error {
 public:
  using Error::Error;
};

}  // namespace tanglekit
