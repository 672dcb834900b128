// Copyright 2026 The xeq Authors.
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

#ifndef XEQ_ERRORS_H_
#define XEQ_ERRORS_H_

#include <stdexcept>
#include <string>

namespace xeq {

// Shapes of matrices/vectors do not agree.
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Input text could not be parsed into a game, distribution or orbit file.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A size guard (strategy count, orbit count, N) was exceeded.
class BudgetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace xeq

#endif  // XEQ_ERRORS_H_
