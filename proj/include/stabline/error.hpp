// Copyright 2026 The stabline Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS-IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef STABLINE_ERROR_HPP
#define STABLINE_ERROR_HPP

#include <stdexcept>
#include <string>

namespace stabline {

// Base of every error the library throws.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ZeroDenominatorError : public Error {
 public:
  using Error::Error;
};

// Two points with equal abscissae do not determine a line y = m*x + b.
class VerticalLineError : public Error {
 public:
  using Error::Error;
};

class InsufficientSegmentsError : public Error {
 public:
  using Error::Error;
};

// Malformed segment or family (lo > hi, unsorted abscissae, empty family).
class InvalidFamilyError : public Error {
 public:
  using Error::Error;
};

// The family admits no non-vertical transversal.
class NoTransversalError : public Error {
 public:
  using Error::Error;
};

// Bad instance text: JSON syntax, numerals, schema.
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace stabline

#endif  // STABLINE_ERROR_HPP
