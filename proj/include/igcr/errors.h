// Copyright 2026 The igcr Authors
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

// Exception types raised by the library. Every error derives from
// igcr::Error so callers can catch the whole family at once.

#ifndef IGCR_ERRORS_H_
#define IGCR_ERRORS_H_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace igcr {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Operand shapes do not agree (non-square, length mismatch).
class DimensionError : public Error {
 public:
  using Error::Error;
};

class SingularMatrixError : public Error {
 public:
  using Error::Error;
};

// Argument outside the operation's domain (nonpositive modulus, bad index).
class DomainError : public Error {
 public:
  using Error::Error;
};

class UnsupportedInputError : public Error {
 public:
  using Error::Error;
};

// Instance data violates a model invariant (rank deficiency, m > n).
class ValidationError : public Error {
 public:
  using Error::Error;
};

// Caller-supplied point does not satisfy an operation's precondition.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

// An enumeration grew past its configured limit.
class CapacityError : public Error {
 public:
  CapacityError(const std::string& what, std::size_t reached)
      : Error(what), reached_(reached) {}

  std::size_t reached() const { return reached_; }

 private:
  std::size_t reached_;
};

// A brute-force search found no feasible point inside its finite box. This
// says nothing about feasibility of the unrestricted problem.
class BoxInfeasibleError : public Error {
 public:
  using Error::Error;
};

}  // namespace igcr

#endif  // IGCR_ERRORS_H_
