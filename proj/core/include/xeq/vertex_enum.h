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

// Exact vertex enumeration of bounded polyhedra by the double description
// method.

#ifndef XEQ_VERTEX_ENUM_H_
#define XEQ_VERTEX_ENUM_H_

#include <stdexcept>
#include <vector>

#include "xeq/linear_system.h"
#include "xeq/rational.h"

namespace xeq {

class UnboundedPolyhedronError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// All vertices of the polytope described by the system, duplicate-free and
// sorted lexicographically. Returns an empty list for an empty polytope and
// throws UnboundedPolyhedronError when the polyhedron has a recession
// direction.
//
// Equalities are eliminated exactly before the double description runs on
// the homogenized cone {(t, tau) : A t <= b tau, tau >= 0}; adjacency of
// extreme rays is decided by the rank of their common tight constraints.
std::vector<RationalVector> enumerate_vertices(const LinearSystem& system);

}  // namespace xeq

#endif  // XEQ_VERTEX_ENUM_H_
