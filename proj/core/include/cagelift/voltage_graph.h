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

#ifndef CAGELIFT_VOLTAGE_GRAPH_H_
#define CAGELIFT_VOLTAGE_GRAPH_H_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace cagelift {

using Voltage = std::int64_t;

struct VertexSpec {
  std::string name;
  bool pinned = false;
};

struct ArcSpec {
  std::string tail;
  std::string head;
  Voltage voltage = 0;
};

struct Vertex {
  std::string name;
  bool pinned = false;

  friend bool operator==(const Vertex&, const Vertex&) = default;
};

// A directed arc. The voltage is kept unreduced and interpreted modulo m
// only when lifting, so the same graph serves every modulus.
struct Arc {
  int tail = 0;
  int head = 0;
  Voltage voltage = 0;

  bool is_loop() const { return tail == head; }
  friend bool operator==(const Arc&, const Arc&) = default;
};

// One end of an arc as seen from a vertex. `forward` is true when the vertex
// is the tail, so traversing the incidence adds the voltage. A loop produces
// two incidences, one in each direction.
struct Incidence {
  int arc = 0;
  bool forward = true;
  int other = 0;
};

// Directed multigraph with integer voltages over Z_m and pinned vertices.
// Pinned vertices lift to a single vertex instead of a fiber of m copies;
// arcs touching them carry voltage 0 and no arc may join two of them.
// Immutable after construction.
class VoltageGraph {
 public:
  VoltageGraph() = default;

  // Validates and builds a graph. Throws `Error` with DuplicateName,
  // UnknownEndpoint, PinnedToPinnedArc or NonzeroVoltageAtPinned.
  static VoltageGraph Create(std::vector<VertexSpec> vertices,
                             const std::vector<ArcSpec>& arcs,
                             std::string description = "");

  int num_vertices() const { return static_cast<int>(vertices_.size()); }
  int num_arcs() const { return static_cast<int>(arcs_.size()); }
  int num_pinned() const;
  int num_unpinned() const { return num_vertices() - num_pinned(); }

  const Vertex& vertex(int v) const { return vertices_[v]; }
  const Arc& arc(int a) const { return arcs_[a]; }
  std::span<const Vertex> vertices() const { return vertices_; }
  std::span<const Arc> arcs() const { return arcs_; }
  std::span<const Incidence> incidences(int v) const { return incidences_[v]; }

  bool is_pinned(int v) const { return vertices_[v].pinned; }
  const std::string& name(int v) const { return vertices_[v].name; }
  const std::string& description() const { return description_; }

  // Number of arc endpoints at `v`; a loop counts twice.
  int Degree(int v) const { return static_cast<int>(incidences_[v].size()); }

  std::optional<int> Find(std::string_view name) const;
  // Like Find, but throws UnknownEndpoint when the name is absent.
  int Require(std::string_view name) const;

  // Returns a copy with the voltages of the listed arcs replaced.
  VoltageGraph WithVoltages(std::span<const int> arc_indices,
                            std::span<const Voltage> voltages) const;

  std::vector<ArcSpec> ArcSpecs() const;
  std::vector<VertexSpec> VertexSpecs() const;

  friend bool operator==(const VoltageGraph& a, const VoltageGraph& b) {
    return a.vertices_ == b.vertices_ && a.arcs_ == b.arcs_;
  }

 private:
  void Index();

  std::vector<Vertex> vertices_;
  std::vector<Arc> arcs_;
  std::vector<std::vector<Incidence>> incidences_;
  std::unordered_map<std::string, int> by_name_;
  std::string description_;
};

// Positional degree complaint from `ValidateSemicubicSkeleton`.
struct SkeletonIssue {
  int vertex = 0;
  int degree = 0;
  int expected = 0;
};

// Lists every unpinned vertex whose degree is not 3 and every pinned vertex
// whose degree is not 1. Empty for the finished constructions.
std::vector<SkeletonIssue> ValidateSemicubicSkeleton(const VoltageGraph& g);

}  // namespace cagelift

#endif  // CAGELIFT_VOLTAGE_GRAPH_H_
