// Copyright 2026 The Authors.
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

#ifndef WEYLRET_ERRORS_H_
#define WEYLRET_ERRORS_H_

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace weylret {

// Root of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed external input (JSON, window strings, rationals).
class ParseError : public Error {
 public:
  using Error::Error;
};

// A documented precondition of an operation does not hold.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

class InvalidElement : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

class DescriptorMismatch : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

class CapExceeded : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

// The vector lies on a wall between Weyl chambers.
class BoundaryPoint : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

class DimensionMismatch : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

class NotAProduct : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

class NotComparable : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

class SingularMatrix : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

// Two admissible Plücker tuples have the same weight under the chosen
// cocharacter, so the limit cannot be read off.
class TieDetected : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

class GiveUp : public Error {
 public:
  using Error::Error;
};

class InconsistentLineality : public Error {
 public:
  using Error::Error;
};

class AmbiguousBoundary : public Error {
 public:
  using Error::Error;
};

// No unique <=^u-minimal element exists for the twisting element `u`.
// `minimal` holds the windows of the minimal elements that were found.
class NotAMatroidAt : public Error {
 public:
  NotAMatroidAt(std::vector<int> u, std::vector<std::vector<int>> minimal,
                const std::string& what)
      : Error(what), u_(std::move(u)), minimal_(std::move(minimal)) {}

  const std::vector<int>& u() const { return u_; }
  const std::vector<std::vector<int>>& minimal() const { return minimal_; }

 private:
  std::vector<int> u_;
  std::vector<std::vector<int>> minimal_;
};

}  // namespace weylret

#endif  // WEYLRET_ERRORS_H_
