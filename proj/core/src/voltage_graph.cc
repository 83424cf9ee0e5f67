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

#include "cagelift/voltage_graph.h"

#include <algorithm>
#include <utility>

#include "cagelift/error.h"

namespace cagelift {

VoltageGraph VoltageGraph::Create(std::vector<VertexSpec> vertices,
                                  const std::vector<ArcSpec>& arcs,
                                  std::string description) {
  VoltageGraph g;
  g.description_ = std::move(description);
  g.vertices_.reserve(vertices.size());
  for (auto& spec : vertices) {
    if (g.by_name_.contains(spec.name)) {
      throw Error(ErrorCode::kDuplicateName,
                  "vertex '" + spec.name + "' declared twice");
    }
    g.by_name_.emplace(spec.name, static_cast<int>(g.vertices_.size()));
    g.vertices_.push_back({std::move(spec.name), spec.pinned});
  }
  g.arcs_.reserve(arcs.size());
  for (const ArcSpec& spec : arcs) {
    const int tail = g.Require(spec.tail);
    const int head = g.Require(spec.head);
    const bool tail_pinned = g.vertices_[tail].pinned;
    const bool head_pinned = g.vertices_[head].pinned;
    if (tail_pinned && head_pinned) {
      throw Error(ErrorCode::kPinnedToPinnedArc,
                  "arc " + spec.tail + " -> " + spec.head +
                      " joins two pinned vertices");
    }
    if ((tail_pinned || head_pinned) && spec.voltage != 0) {
      throw Error(ErrorCode::kNonzeroVoltageAtPinned,
                  "arc " + spec.tail + " -> " + spec.head + " has voltage " +
                      std::to_string(spec.voltage) +
                      " but touches a pinned vertex");
    }
    g.arcs_.push_back({tail, head, spec.voltage});
  }
  g.Index();
  return g;
}

void VoltageGraph::Index() {
  incidences_.assign(vertices_.size(), {});
  for (int a = 0; a < num_arcs(); ++a) {
    const Arc& arc = arcs_[a];
    incidences_[arc.tail].push_back({a, true, arc.head});
    incidences_[arc.head].push_back({a, false, arc.tail});
  }
}

int VoltageGraph::num_pinned() const {
  return static_cast<int>(
      std::count_if(vertices_.begin(), vertices_.end(),
                    [](const Vertex& v) { return v.pinned; }));
}

std::optional<int> VoltageGraph::Find(std::string_view name) const {
  auto it = by_name_.find(std::string(name));
  if (it == by_name_.end()) return std::nullopt;
  return it->second;
}

int VoltageGraph::Require(std::string_view name) const {
  auto found = Find(name);
  if (!found) {
    throw Error(ErrorCode::kUnknownEndpoint,
                "no vertex named '" + std::string(name) + "'");
  }
  return *found;
}

VoltageGraph VoltageGraph::WithVoltages(
    std::span<const int> arc_indices, std::span<const Voltage> voltages) const {
  if (arc_indices.size() != voltages.size()) {
    throw Error(ErrorCode::kInvalidArgument,
                "arc index and voltage lists differ in length");
  }
  VoltageGraph copy = *this;
  for (std::size_t i = 0; i < arc_indices.size(); ++i) {
    const int a = arc_indices[i];
    if (a < 0 || a >= num_arcs()) {
      throw Error(ErrorCode::kInvalidArgument,
                  "arc index " + std::to_string(a) + " out of range");
    }
    const Arc& arc = arcs_[a];
    if ((is_pinned(arc.tail) || is_pinned(arc.head)) && voltages[i] != 0) {
      throw Error(ErrorCode::kNonzeroVoltageAtPinned,
                  "arc " + std::to_string(a) + " touches a pinned vertex");
    }
    copy.arcs_[a].voltage = voltages[i];
  }
  return copy;
}

std::vector<ArcSpec> VoltageGraph::ArcSpecs() const {
  std::vector<ArcSpec> out;
  out.reserve(arcs_.size());
  for (const Arc& a : arcs_) {
    out.push_back({vertices_[a.tail].name, vertices_[a.head].name, a.voltage});
  }
  return out;
}

std::vector<VertexSpec> VoltageGraph::VertexSpecs() const {
  std::vector<VertexSpec> out;
  out.reserve(vertices_.size());
  for (const Vertex& v : vertices_) out.push_back({v.name, v.pinned});
  return out;
}

std::vector<SkeletonIssue> ValidateSemicubicSkeleton(const VoltageGraph& g) {
  std::vector<SkeletonIssue> issues;
  for (int v = 0; v < g.num_vertices(); ++v) {
    const int expected = g.is_pinned(v) ? 1 : 3;
    if (g.Degree(v) != expected) issues.push_back({v, g.Degree(v), expected});
  }
  return issues;
}

}  // namespace cagelift
