// Copyright 2026 The hyperpath Authors
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

namespace hyperpath {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bad parameters or violated preconditions (wrong uniformity, out-of-range
// vertex, unknown construction name, ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// Malformed ".hg" input.
class FormatError : public Error {
 public:
  using Error::Error;
};

// The requested object does not exist (e.g. more edges than any P-free graph
// on n vertices can carry).
class Infeasible : public Error {
 public:
  using Error::Error;
};

}  // namespace hyperpath
