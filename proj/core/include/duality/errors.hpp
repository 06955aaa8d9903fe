// Copyright 2026 The duality-lab Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef DUALITY_ERRORS_HPP
#define DUALITY_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace duality {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Shape problems: non-square input, n < 2, mismatched path counts.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// A scalar argument or index outside its admissible range.
class RangeError : public Error {
 public:
  using Error::Error;
};

/// Amplitude vector whose squared norm is not 1 within tolerance.
class NormalizationError : public Error {
 public:
  using Error::Error;
};

/// Malformed state or report documents.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Interference pattern with no intensity at all.
class DegeneratePatternError : public Error {
 public:
  using Error::Error;
};

}  // namespace duality

#endif  // DUALITY_ERRORS_HPP
