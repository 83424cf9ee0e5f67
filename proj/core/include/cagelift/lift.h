// Copyright 2026 The Cagelift Authors
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

#ifndef CAGELIFT_LIFT_H_
#define CAGELIFT_LIFT_H_

#include <string>
#include <vector>

#include "cagelift/simple_graph.h"
#include "cagelift/voltage_graph.h"

namespace cagelift {

// Least non-negative residue of `value` modulo `m` (m >= 1).
inline int Reduce(Voltage value, int m) {
  const Voltage r = value % m;
  return static_cast<int>(r < 0 ? r + m : r);
}

// Vertex numbering of the Z_m lift: base vertices in declaration order,
// each unpinned vertex expanded to its fiber v^0..v^{m-1}, each pinned
// vertex kept as a single vertex.
class LiftLayout {
 public:
  LiftLayout(const VoltageGraph& g, int m);

  int m() const { return m_; }
  int order() const { return order_; }

  // Fiber index is ignored for pinned vertices.
  int Index(int base_vertex, int fiber) const;
  int BaseVertex(int lift_vertex) const { return base_of_[lift_vertex]; }
  // -1 for a pinned vertex.
  int Fiber(int lift_vertex) const;

 private:
  int m_;
  int order_ = 0;
  std::vector<int> offset_;
  std::vector<bool> pinned_;
  std::vector<int> base_of_;
};

// Label of fiber copy `fiber` of base vertex `name`, e.g. "x_010^4".
std::string FiberLabel(const std::string& name, int fiber);

// Builds the derived graph over Z_m. Every unpinned arc (v, w, a) yields the
// edges {v^i, w^(i+a)}; an arc between pinned p and unpinned w yields
// {p, w^i} for all i. Throws LiftCollisionError when the result would not be
// simple, and InvalidArgument for m < 1.
SimpleGraph Lift(const VoltageGraph& g, int m);

}  // namespace cagelift

#endif  // CAGELIFT_LIFT_H_
