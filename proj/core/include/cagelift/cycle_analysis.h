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

#ifndef CAGELIFT_CYCLE_ANALYSIS_H_
#define CAGELIFT_CYCLE_ANALYSIS_H_

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cagelift/graph_analysis.h"
#include "cagelift/simple_graph.h"
#include "cagelift/voltage_graph.h"
#include "cagelift/walks.h"

namespace cagelift {

// Short structures of a voltage graph that may lift to short cycles.
//
//  kClosedWalk      cyclically non-reversing closed walk avoiding pinned
//                   vertices; lifts to a closed walk of the same length
//                   whenever its sum is 0 mod m.
//  kPinnedReturn    non-reversing walk from a pinned vertex back to itself
//                   through unpinned vertices; lifts to a closed walk of its
//                   length unless it leaves and returns through the same
//                   lifted edge (same neighbour, interior sum 0 mod m).
//  kPinnedPathPair  non-reversing walk between two distinct pinned vertices;
//                   two copies in different fibres close up into a walk of
//                   twice its length for every m >= 2.
//  kLiftCollision   two arcs (or one loop) that induce a repeated edge or a
//                   self-loop in the lift; closed walk of length 1 or 2.
//
// For m >= 2 the lift's girth is the least implied length over the
// structures that apply at m, and a least one lifts to an actual cycle.
enum class WitnessKind {
  kClosedWalk,
  kPinnedReturn,
  kPinnedPathPair,
  kLiftCollision
};

std::string_view WitnessKindName(WitnessKind kind);

struct Witness {
  WitnessKind kind = WitnessKind::kClosedWalk;
  int start_vertex = 0;
  std::vector<Step> steps;
  Voltage voltage_sum = 0;
  int wrap_count = 1;         // closed walks: repetitions of the period
  int lift_cycle_length = 0;  // length of the cycle it traces in the lift

  int walk_length() const { return static_cast<int>(steps.size()); }
};

// Precomputed structures of implied length below a bound, with voltage sums
// kept symbolic in a chosen set of free arcs. Built once per skeleton; then
// answers "shortest violation at m" for any assignment of the free arcs.
class ShortStructureTable {
 public:
  // Structures with implied length <= max_value. Free arcs must not touch a
  // pinned vertex. When `with_unit_modulus`, also prepares the m = 1 case,
  // where every closed walk (pinned vertices included) closes up.
  ShortStructureTable(const VoltageGraph& g, int max_value,
                      std::span<const int> free_arcs = {},
                      bool with_unit_modulus = false);

  int max_value() const { return max_value_; }
  int size() const { return static_cast<int>(entries_.size()); }
  std::span<const int> free_arcs() const { return free_arcs_; }

  // The shortest violating structure at modulus m for the given free-arc
  // voltages (ordered like free_arcs), or nullopt when the lift has girth
  // > max_value and no collision.
  std::optional<Witness> FirstViolation(
      int m, std::span<const Voltage> free_values = {}) const;

 private:
  struct Entry {
    WitnessKind kind;
    int start_vertex;
    std::vector<Step> steps;
    int value;           // implied lift cycle length
    bool unconditional;  // applies at every m >= 2
    bool zero_violates;  // violation iff sum == 0 (else iff sum != 0)
    Voltage constant;    // sum over fixed arcs
    std::vector<std::pair<int, int>> terms;  // (free index, coefficient)
  };

  Entry MakeEntry(WitnessKind kind, int start, std::vector<Step> steps,
                  int value, bool unconditional, bool zero_violates) const;
  Witness ToWitness(const Entry& e, Voltage sum) const;
  Voltage Sum(const Entry& e, std::span<const Voltage> free_values) const;

  const VoltageGraph* g_;
  int max_value_;
  std::vector<int> free_arcs_;
  std::vector<int> free_index_;  // arc -> index in free_arcs_, or -1
  std::vector<Entry> entries_;
  std::vector<Entry> unit_entries_;
  bool with_unit_modulus_;
};

enum class Verdict { kCertified, kViolated };

struct ModulusVerdict {
  int m = 0;
  Verdict verdict = Verdict::kCertified;
  std::optional<Witness> witness;  // set when violated
};

struct CycleCensus {
  int max_len = 0;
  // Directed simple cycles (orientations distinct) by length.
  std::map<int, std::int64_t> directed_by_length;
  std::int64_t directed_total = 0;
  std::int64_t undirected_total = 0;
  // Sorted distinct voltage sums over all directed cycles.
  std::vector<Voltage> sums;
};

CycleCensus Census(const VoltageGraph& g, int max_len);

struct GirthCertificate {
  int target_girth = 0;
  std::vector<ModulusVerdict> verdicts;  // ascending m
  // Twice the shortest path between distinct pinned vertices: an upper bound
  // on the girth of every lift with m >= 2. Infinite without such a path.
  Length pinned_ceiling;
  std::optional<CycleCensus> census;  // cycles of length <= target - 2

  bool IsCertified(int m) const;
  std::vector<int> CertifiedModuli() const;
  std::vector<int> ViolatedModuli() const;
};

struct CertifyOptions {
  bool census = false;
};

// Decides for each m whether lift(g, m) has girth >= target_girth, with a
// shortest witness for every failure. Throws InvalidArgument for an odd or
// small target, or an empty set; RangeTooSmall when max m < 2.
GirthCertificate Certify(const VoltageGraph& g, int target_girth,
                         std::span<const int> moduli,
                         const CertifyOptions& options = {});
GirthCertificate Certify(const VoltageGraph& g, int target_girth, int m_min,
                         int m_max, const CertifyOptions& options = {});

// Lift vertices (LiftLayout indices) of the cycle a violation witness traces
// at modulus m; the first vertex is not repeated at the end. Collision
// witnesses trace their degenerate closed walk.
std::vector<int> TraceWitness(const VoltageGraph& g, const Witness& w, int m);

// Lift vertices visited by a walk started at fiber `fiber` of `start`
// (steps + 1 entries).
std::vector<int> TraceWalk(const VoltageGraph& g, int start,
                           std::span<const Step> steps, int m, int fiber = 0);

// The 2l-cycle formed by two fibre copies of a pinned path.
std::vector<int> TracePinnedPath(const VoltageGraph& g, const PinnedPath& p,
                                 int m);

// The (2p+q)-cycle of a lollipop: out along the path in fibre 0, around the
// cycle, back along the path shifted by the cycle sum.
std::vector<int> TraceLollipop(const VoltageGraph& g, const Lollipop& l, int m);

// True when the walk's fibre-0 lift visits no lift vertex twice before
// closing, i.e. no proper segment between repeated base vertices sums to
// 0 mod m.
bool IsMinimalZeroSum(const VoltageGraph& g, const ClosedWalk& w, int m);

// Closed-form parameter conditions of the girth-6 and girth-8 families.
bool G6Condition(Voltage alpha, Voltage beta, int m);
bool G8Condition(Voltage alpha, Voltage beta, Voltage gamma, Voltage delta,
                 int m);

}  // namespace cagelift

#endif  // CAGELIFT_CYCLE_ANALYSIS_H_
