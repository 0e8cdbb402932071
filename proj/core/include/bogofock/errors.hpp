// Copyright 2026 The bogofock Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace bogofock {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operand dimensions are inconsistent.
class ShapeError : public Error {
 public:
  using Error::Error;
};

/// Argument outside the mathematical domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A matrix that has to be inverted is (numerically) singular.
class InversionError : public Error {
 public:
  using Error::Error;
};

/// A transform fails the symplectic identities, or an elementary factor is
/// not unitary.
class InvalidTransformError : public Error {
 public:
  using Error::Error;
};

/// A computation would exceed a configured size cap.
class ResourceError : public Error {
 public:
  using Error::Error;
};

/// The requested Fock cutoff is too small for the squeezing involved.
class TruncationRiskError : public Error {
 public:
  using Error::Error;
};

/// An index lies outside a truncated Fock space.
class OutOfRangeError : public Error {
 public:
  using Error::Error;
};

/// Malformed serialized input.
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace bogofock
