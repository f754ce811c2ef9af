// Copyright 2026 The smzi Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace smzi {

/// Base class for all smzi errors.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Incompatible matrix or layer shapes.
class DimensionError : public Error {
  public:
    using Error::Error;
};

/// A mode/column/row index outside its valid range.
class IndexError : public Error {
  public:
    using Error::Error;
};

/// An input value violates a documented precondition (non-unitary, non-finite, ...).
class ValidationError : public Error {
  public:
    using Error::Error;
};

/// A mesh circuit violates its structural invariants.
class LayoutError : public Error {
  public:
    using Error::Error;
};

/// A file does not match its documented schema.
class SchemaError : public Error {
  public:
    using Error::Error;
};

/// A pending phase could not be moved to an edge slot.
class RelocationError : public Error {
  public:
    using Error::Error;
};

/// An internal invariant failed (a bug, not a user error).
class InternalError : public Error {
  public:
    using Error::Error;
};

/// An elimination step failed to zero its target element. Carries the
/// diagonal/step indices (j, k) and the matrix position (x, y) it was
/// working on.
class NumericalError : public Error {
  public:
    NumericalError(const std::string& msg, int j, int k, int x, int y)
        : Error(msg + " at j=" + std::to_string(j) + " k=" + std::to_string(k) +
                " x=" + std::to_string(x) + " y=" + std::to_string(y)),
          j(j), k(k), x(x), y(y) {}

    int j, k, x, y;
};

} // namespace smzi
