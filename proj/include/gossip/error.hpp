// Copyright 2026 The gossip-tools Authors
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

#ifndef GOSSIP_ERROR_HPP_
#define GOSSIP_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace gossip {

// Base class for every error raised by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Incompatible or out-of-range dimensions and indices.
class DimensionError : public Error {
 public:
  using Error::Error;
};

// Text that does not conform to one of the on-disk formats.
class ParseError : public Error {
 public:
  using Error::Error;
};

// Invalid node budgets and enumeration requests beyond the built-in caps.
class BudgetError : public Error {
 public:
  using Error::Error;
};

// Syntactically well-formed input that violates a problem-instance
// precondition (e.g. the maximal column condition, or a witness that does
// not multiply to its claimed product).
class InstanceFormatError : public Error {
 public:
  using Error::Error;
};

// A factorization whose shape contradicts a structural guarantee of one of
// the reductions.  The message names the violated guarantee.
class StructuralError : public Error {
 public:
  using Error::Error;
};

}  // namespace gossip

#endif  // GOSSIP_ERROR_HPP_
