/*
   Copyright 2026 The frobinc Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <stdexcept>
#include <string>

namespace frobinc {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Parameters outside the documented domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Mismatched ambient dimensions or fields.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// Frobenius power that is not a power of the characteristic.
class InvalidFrobenius : public Error {
 public:
  using Error::Error;
};

/// An enumeration would exceed its configured budget.
class CapacityError : public Error {
 public:
  using Error::Error;
};

/// An exact computation produced an impossible intermediate (non-integral
/// quotient, non-integral Gram entry, ...). Always a bug or bad input data.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

/// Gram matrix is singular where a nondegenerate one is required.
class DegenerateError : public Error {
 public:
  DegenerateError(const std::string& what, int kernel_dim)
      : Error(what), kernel_dim_(kernel_dim) {}
  int kernel_dim() const noexcept { return kernel_dim_; }

 private:
  int kernel_dim_;
};

}  // namespace frobinc
