// Copyright 2026 The ghzstab Authors
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

#ifndef GHZSTAB_ERRORS_HPP
#define GHZSTAB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace ghz {

// Base of every error the library raises. Input problems derive from
// ValidationError; ConsistencyError means a self-check failed (a bug, not bad input).
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ValidationError : public Error {
 public:
  using Error::Error;
};

class ShapeError : public ValidationError {
 public:
  explicit ShapeError(const std::string& what) : ValidationError("shape error: " + what) {}
};

class SizeError : public ValidationError {
 public:
  explicit SizeError(const std::string& what) : ValidationError("size error: " + what) {}
};

class DomainError : public ValidationError {
 public:
  explicit DomainError(const std::string& what) : ValidationError("domain error: " + what) {}
};

class PreconditionError : public ValidationError {
 public:
  explicit PreconditionError(const std::string& what)
      : ValidationError("precondition error: " + what) {}
};

class ConsistencyError : public Error {
 public:
  explicit ConsistencyError(const std::string& what)
      : Error("internal consistency error: " + what) {}
};

// Throws ShapeError(what) unless cond holds.
void require_shape(bool cond, const std::string& what);

}  // namespace ghz

#endif  // GHZSTAB_ERRORS_HPP
