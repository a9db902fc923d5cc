// Copyright 2026 The slitspin Authors
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

namespace slitspin {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Non-finite amplitudes, zero-norm states, malformed ensembles or grids.
class InvalidInputError : public Error {
 public:
  using Error::Error;
};

/// A pair-state operation received a vector with a component outside span{u, v}.
class NotInUvSpanError : public Error {
 public:
  using Error::Error;
};

/// Slit layout or screen point violates its invariants, or an operation
/// needs a different slit count.
class GeometryError : public Error {
 public:
  using Error::Error;
};

class SlitIndexError : public Error {
 public:
  using Error::Error;
};

/// Which-way collapse requested on a state it is not defined for.
class UnsupportedCollapseError : public Error {
 public:
  using Error::Error;
};

}  // namespace slitspin
