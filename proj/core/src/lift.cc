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

#include "cagelift/lift.h"

#include <cstdint>
#include <unordered_map>

#include "cagelift/error.h"

namespace cagelift {

LiftLayout::LiftLayout(const VoltageGraph& g, int m) : m_(m) {
  if (m < 1) {
    throw Error(ErrorCode::kInvalidArgument,
                "modulus must be at least 1, got " + std::to_string(m));
  }
  offset_.resize(g.num_vertices());
  pinned_.resize(g.num_vertices());
  for (int v = 0; v < g.num_vertices(); ++v) {
    offset_[v] = order_;
    pinned_[v] = g.is_pinned(v);
    const int width = pinned_[v] ? 1 : m;
    for (int i = 0; i < width; ++i) base_of_.push_back(v);
    order_ += width;
  }
}

int LiftLayout::Index(int base_vertex, int fiber) const {
  if (pinned_[base_vertex]) return offset_[base_vertex];
  return offset_[base_vertex] + fiber;
}

int LiftLayout::Fiber(int lift_vertex) const {
  const int v = base_of_[lift_vertex];
  return pinned_[v] ? -1 : lift_vertex - offset_[v];
}

std::string FiberLabel(const std::string& name, int fiber) {
  return name + "^" + std::to_string(fiber);
}

SimpleGraph Lift(const VoltageGraph& g, int m) {
  const LiftLayout layout(g, m);
  std::vector<std::string> labels;
  labels.reserve(layout.order());
  for (int v = 0; v < g.num_vertices(); ++v) {
    if (g.is_pinned(v)) {
      labels.push_back(g.name(v));
    } else {
      for (int i = 0; i < m; ++i) labels.push_back(FiberLabel(g.name(v), i));
    }
  }

  std::vector<Edge> edges;
  std::unordered_map<std::uint64_t, int> owner;
  auto describe = [&](int lift_vertex) { return labels[lift_vertex]; };
  auto add = [&](int a, int u, int w) {
    if (u == w) {
      throw LiftCollisionError("arc " + std::to_string(a) +
                                   " induces a self-loop at " + describe(u) +
                                   " for m = " + std::to_string(m),
                               {a});
    }
    if (u > w) std::swap(u, w);
    const std::uint64_t key = static_cast<std::uint64_t>(u) *
                                  static_cast<std::uint64_t>(layout.order()) +
                              static_cast<std::uint64_t>(w);
    auto [it, inserted] = owner.emplace(key, a);
    if (!inserted) {
      std::vector<int> arcs = {it->second};
      if (it->second != a) arcs.push_back(a);
      throw LiftCollisionError(
          "arcs " + std::to_string(it->second) + " and " + std::to_string(a) +
              " both induce the edge {" + describe(u) + ", " + describe(w) +
              "} for m = " + std::to_string(m),
          std::move(arcs));
    }
    edges.emplace_back(u, w);
  };

  for (int a = 0; a < g.num_arcs(); ++a) {
    const Arc& arc = g.arc(a);
    if (g.is_pinned(arc.tail) || g.is_pinned(arc.head)) {
      const int p = g.is_pinned(arc.tail) ? arc.tail : arc.head;
      const int w = g.is_pinned(arc.tail) ? arc.head : arc.tail;
      for (int i = 0; i < m; ++i)
        add(a, layout.Index(p, 0), layout.Index(w, i));
      continue;
    }
    const int shift = Reduce(arc.voltage, m);
    for (int i = 0; i < m; ++i) {
      add(a, layout.Index(arc.tail, i),
          layout.Index(arc.head, (i + shift) % m));
    }
  }
  return SimpleGraph::FromEdges(layout.order(), edges, std::move(labels));
}

}  // namespace cagelift
