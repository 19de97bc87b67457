// Copyright 2026 The qtele Authors
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

namespace qtele {

// Base for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed arguments: wrong dimensions, invalid indices, invariants violated.
class InputError : public Error {
 public:
  using Error::Error;
};

// An operation that needs commuting inputs received noncommuting ones.
class NonCommutingError : public Error {
 public:
  using Error::Error;
};

// Raised by the two-state decomposition, which only exists for noncommuting pairs.
class CommutingError : public Error {
 public:
  using Error::Error;
};

// Broadcast input is not diagonal in the channel basis.
class NonCommutingInputError : public NonCommutingError {
 public:
  using NonCommutingError::NonCommutingError;
};

// Side marginals of a set do not pairwise commute, so no local operation
// on that side disentangles the set exactly.
class NonCommutingMarginalsError : public NonCommutingError {
 public:
  using NonCommutingError::NonCommutingError;
};

}  // namespace qtele
