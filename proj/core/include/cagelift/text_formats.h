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

#ifndef CAGELIFT_TEXT_FORMATS_H_
#define CAGELIFT_TEXT_FORMATS_H_

#include <span>
#include <string>
#include <string_view>

#include "cagelift/cycle_analysis.h"
#include "cagelift/simple_graph.h"
#include "cagelift/voltage_graph.h"

namespace cagelift {

// Voltage graph text format, one declaration per line:
//
//   vertex <name> [pinned]
//   arc <tail> <head> <voltage>
//
// '#' starts a comment. Vertices must be declared before arcs use them and
// their order defines vertex indices. A name ends in '*' exactly when the
// vertex is pinned. Errors carry the line number and keep their code
// (ParseError, DuplicateName, UnknownEndpoint, PinnedToPinnedArc,
// NonzeroVoltageAtPinned).
VoltageGraph ReadVoltageGraph(std::string_view text);

// Vertices then arcs in declaration order; no comments. The description is
// not written.
std::string WriteVoltageGraph(const VoltageGraph& g);

// "arc <tail> <head> <voltage>" for one arc.
std::string ArcLine(const VoltageGraph& g, int arc);

// Edge list: "order <n>" followed by one "u v" line per edge (0-based,
// u < v, sorted). '#' comments and blank lines are ignored when reading.
std::string WriteEdgeList(const SimpleGraph& g);
SimpleGraph ReadEdgeList(std::string_view text);

// Graphviz. Voltage graphs: pinned vertices are boxes, arcs carry their
// voltage as a label and voltage-0 arcs are drawn undirected.
std::string ExportDot(const VoltageGraph& g);
std::string ExportDot(const SimpleGraph& g);

// "x -[+1]- y -[-2]- z" style rendering of a walk with signed voltages.
std::string DescribeWalk(const VoltageGraph& g, int start,
                         std::span<const Step> steps);
// One-line summary: kind, walk length, sum, wrap count, lift cycle length
// and the walk itself.
std::string DescribeWitness(const VoltageGraph& g, const Witness& w);

}  // namespace cagelift

#endif  // CAGELIFT_TEXT_FORMATS_H_
