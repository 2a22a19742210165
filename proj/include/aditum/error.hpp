// Copyright 2026 The ADITUM Authors
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

namespace aditum {

/// Base of every exception thrown by the library.  The C API maps each
/// subclass onto one error code.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input data: bad edge records, values outside a domain, ...
class FormatError : public Error {
 public:
  using Error::Error;
};

/// Inputs are individually valid but cannot be combined (empty target set,
/// a node without a class, LT weights summing above one).
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// The caller broke an API precondition.
class UsageError : public Error {
 public:
  using Error::Error;
};

/// File could not be opened or written.
class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace aditum
