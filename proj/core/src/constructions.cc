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

#include "cagelift/constructions.h"

#include <algorithm>
#include <cctype>
#include <set>
#include <utility>

#include "cagelift/error.h"
#include "cagelift/lift.h"

namespace cagelift {
namespace {

std::string VertexName(char letter, const std::string& bits) {
  std::string name(1, letter);
  if (!bits.empty()) name += "_" + bits;
  return name;
}

std::string PinnedName(char letter) { return std::string(1, letter) + "*"; }

// All bit strings of length <= max_len, ordered by length then
// lexicographically, that satisfy `keep`.
template <typename Keep>
std::vector<std::string> BitStrings(int max_len, Keep keep) {
  std::vector<std::string> out;
  for (int len = 0; len <= max_len; ++len) {
    for (unsigned code = 0; code < (1u << len); ++code) {
      std::string bits(len, '0');
      for (int i = 0; i < len; ++i) {
        if (code >> (len - 1 - i) & 1u) bits[i] = '1';
      }
      if (keep(bits)) out.push_back(std::move(bits));
    }
  }
  return out;
}

bool HasZeroPrefix(const std::string& bits, int zeros) {
  if (static_cast<int>(bits.size()) < zeros) return false;
  return std::all_of(bits.begin(), bits.begin() + zeros,
                     [](char c) { return c == '0'; });
}

// Accumulates vertices and arcs; trees are appended as pinned root plus
// parent -> child edges with voltage 0.
class Builder {
 public:
  void AddTree(char letter, const std::vector<std::string>& strings,
               const std::set<std::string>& removed = {}) {
    vertices_.push_back({PinnedName(letter), true});
    for (const auto& bits : strings) {
      if (removed.count(bits) == 0) {
        vertices_.push_back({VertexName(letter, bits), false});
      }
    }
    arcs_.push_back({PinnedName(letter), VertexName(letter, ""), 0});
    for (const auto& bits : strings) {
      if (bits.empty() || removed.count(bits) != 0) continue;
      const std::string parent = bits.substr(0, bits.size() - 1);
      arcs_.push_back(
          {VertexName(letter, parent), VertexName(letter, bits), 0});
    }
  }

  void Arc(std::string tail, std::string head, Voltage voltage) {
    arcs_.push_back({std::move(tail), std::move(head), voltage});
  }

  VoltageGraph Finish(std::string description) {
    return VoltageGraph::Create(std::move(vertices_), arcs_,
                                std::move(description));
  }

 private:
  std::vector<VertexSpec> vertices_;
  std::vector<ArcSpec> arcs_;
};

std::vector<std::string> XStrings(int t) {
  return BitStrings(2 * t - 1,
                    [t](const std::string& b) { return !HasZeroPrefix(b, t); });
}

std::vector<std::string> XPrimeStrings(int t) {
  return BitStrings(2 * t - 2, [t](const std::string& b) {
    return static_cast<int>(b.size()) <= t - 1 || !HasZeroPrefix(b, t - 1);
  });
}

void AddT4t2(Builder& b, int t, const std::set<std::string>& x_removed = {},
             const std::set<std::string>& y_removed = {}) {
  b.AddTree('x', XStrings(t), x_removed);
  b.AddTree('y', XStrings(t), y_removed);
  const std::string a(t - 1, '0');
  b.Arc(VertexName('x', a), VertexName('y', a), 0);
}

void AddT4t(Builder& b, int t, const std::set<std::string>& x_removed = {},
            const std::set<std::string>& y_removed = {},
            const std::set<std::string>& z_removed = {}) {
  b.AddTree('x', XPrimeStrings(t), x_removed);
  b.AddTree('y', XStrings(t - 1), y_removed);
  b.AddTree('z', XStrings(t - 1), z_removed);
  const std::string xa(t - 1, '0');
  const std::string ya(t - 2, '0');
  b.Arc(VertexName('x', xa), VertexName('y', ya), 0);
  b.Arc(VertexName('x', xa), VertexName('z', ya), 0);
}

void RequireT(int t, int min_t, int max_t, const char* family) {
  if (t < min_t || t > max_t) {
    throw Error(ErrorCode::kInvalidArgument,
                std::string(family) + " requires " + std::to_string(min_t) +
                    " <= t <= " + std::to_string(max_t) + ", got " +
                    std::to_string(t));
  }
}

// Leaf-to-leaf arcs given as (x bits, target letter, target bits, voltage).
struct LeafArc {
  const char* from;
  char to_letter;
  const char* to;
  Voltage voltage;
};

void AddLeafArcs(Builder& b, std::initializer_list<LeafArc> arcs) {
  for (const auto& a : arcs) {
    b.Arc(VertexName('x', a.from), VertexName(a.to_letter, a.to), a.voltage);
  }
}

}  // namespace

VoltageGraph BuildTreeX(int t, char letter) {
  RequireT(t, 1, 12, "X_t");
  Builder b;
  b.AddTree(letter, XStrings(t));
  return b.Finish("tree X_" + std::to_string(t));
}

VoltageGraph BuildTreeT4t2(int t) {
  RequireT(t, 1, 12, "T_{4t+2}");
  Builder b;
  AddT4t2(b, t);
  return b.Finish("tree T_" + std::to_string(4 * t + 2));
}

VoltageGraph BuildTreeT4t(int t) {
  RequireT(t, 2, 12, "T_{4t}");
  Builder b;
  AddT4t(b, t);
  return b.Finish("tree T_" + std::to_string(4 * t));
}

VoltageGraph BuildHeawoodBase() {
  return VoltageGraph::Create({{"A", false}, {"B", false}},
                              {{"A", "B", 0}, {"A", "B", -1}, {"A", "B", 2}},
                              "two-vertex base of the Heawood graph");
}

VoltageGraph BuildG6(Voltage alpha, Voltage beta) {
  return VoltageGraph::Create(
      {{"x*", true},
       {"x", false},
       {"x_0", false},
       {"y*", true},
       {"y", false},
       {"y_0", false}},
      {{"x*", "x", 0},
       {"x", "x_0", 0},
       {"y*", "y", 0},
       {"y", "y_0", 0},
       {"x", "y", 0},
       {"x_0", "y_0", alpha},
       {"x_0", "y_0", beta}},
      "G6(" + std::to_string(alpha) + "," + std::to_string(beta) + ")");
}

VoltageGraph BuildG8(Voltage alpha, Voltage beta, Voltage gamma,
                     Voltage delta) {
  Builder b;
  AddT4t(b, 2);
  b.Arc("x_10", "y_1", alpha);
  b.Arc("x_10", "z_1", beta);
  b.Arc("x_11", "y_1", gamma);
  b.Arc("x_11", "z_1", delta);
  return b.Finish("G8(" + std::to_string(alpha) + "," + std::to_string(beta) +
                  "," + std::to_string(gamma) + "," + std::to_string(delta) +
                  ")");
}

VoltageGraph BuildG10() {
  Builder b;
  AddT4t2(b, 2);
  AddLeafArcs(b, {{"010", 'y', "010", 1},
                  {"010", 'y', "111", 2},
                  {"011", 'y', "011", 2},
                  {"011", 'y', "110", 1},
                  {"100", 'y', "010", 2},
                  {"100", 'y', "101", 1},
                  {"101", 'y', "011", 1},
                  {"101", 'y', "100", 2},
                  {"110", 'y', "110", 2},
                  {"110", 'y', "111", 1},
                  {"111", 'y', "100", 3},
                  {"111", 'y', "101", 0}});
  return b.Finish("G10");
}

VoltageGraph BuildH10() {
  Builder b;
  AddT4t2(b, 2, {"100", "111"}, {"100", "111"});
  AddLeafArcs(b, {{"10", 'y', "10", 1},
                  {"11", 'y', "11", 2},
                  {"010", 'y', "010", 2},
                  {"010", 'y', "110", 1},
                  {"011", 'y', "101", 2},
                  {"011", 'y', "011", 3},
                  {"110", 'y', "110", 3},
                  {"110", 'y', "011", 1},
                  {"101", 'y', "010", 5},
                  {"101", 'y', "101", 3}});
  return b.Finish("H10");
}

VoltageGraph BuildG12() {
  Builder b;
  AddT4t(b, 3);
  AddLeafArcs(b, {{"0100", 'y', "010", 1},
                  {"0101", 'y', "011", 2},
                  {"0110", 'y', "100", 1},
                  {"0111", 'y', "101", 2},
                  {"1000", 'y', "010", 2},
                  {"1001", 'y', "011", 1},
                  {"1010", 'y', "110", 1},
                  {"1011", 'y', "111", 2},
                  {"1100", 'y', "100", 2},
                  {"1101", 'y', "101", 1},
                  {"1110", 'y', "110", 3},
                  {"1111", 'y', "111", -1}});
  AddLeafArcs(b, {{"0100", 'z', "110", 2},
                  {"0101", 'z', "111", 1},
                  {"0110", 'z', "100", -1},
                  {"0111", 'z', "101", 3},
                  {"1000", 'z', "010", -1},
                  {"1001", 'z', "011", 3},
                  {"1010", 'z', "100", 1},
                  {"1011", 'z', "101", -1},
                  {"1100", 'z', "010", -3},
                  {"1101", 'z', "011", -2},
                  {"1110", 'z', "110", -1},
                  {"1111", 'z', "111", 2}});
  return b.Finish("G12");
}

VoltageGraph BuildH12(Voltage v) {
  Builder b;
  AddT4t(b, 3, {"1000", "1001", "1100", "1101"}, {"100", "111"},
         {"100", "111"});
  AddLeafArcs(b, {{"100", 'y', "10", 1},
                  {"100", 'z', "10", -1},
                  {"110", 'y', "11", -1},
                  {"110", 'z', "11", 1}});
  AddLeafArcs(b, {{"0100", 'y', "010", 2},
                  {"0101", 'y', "011", 1},
                  {"0110", 'y', "101", -1},
                  {"0111", 'y', "110", 1},
                  {"1010", 'y', "110", -2},
                  {"1011", 'y', "101", -3},
                  {"1110", 'y', "011", 2},
                  {"1111", 'y', "010", 1}});
  AddLeafArcs(b, {{"0100", 'z', "101", 1},
                  {"0101", 'z', "110", -2},
                  {"0110", 'z', "010", 1},
                  {"0111", 'z', "011", v},
                  {"1010", 'z', "010", 2},
                  {"1011", 'z', "011", -6},
                  {"1110", 'z', "101", -2},
                  {"1111", 'z', "110", 2}});
  return b.Finish("H12(v=" + std::to_string(v) + ")");
}

SimpleGraph BuildK33() {
  std::vector<Edge> edges;
  for (int u = 0; u < 3; ++u) {
    for (int w = 3; w < 6; ++w) edges.emplace_back(u, w);
  }
  return SimpleGraph::FromEdges(6, edges, {"a0", "a1", "a2", "b0", "b1", "b2"});
}

SimpleGraph BuildHeawood() { return Lift(BuildG6(1, 2), 3); }

SimpleGraph BuildTutteEightCage() { return Lift(BuildG8(1, 2, 2, 1), 3); }

std::string_view FamilyName(Family family) {
  switch (family) {
    case Family::kG6:
      return "G6";
    case Family::kG8:
      return "G8";
    case Family::kG10:
      return "G10";
    case Family::kH10:
      return "H10";
    case Family::kG12:
      return "G12";
    case Family::kH12:
      return "H12";
    case Family::kT4t2:
      return "T4t2";
    case Family::kT4t:
      return "T4t";
    case Family::kK33:
      return "K33";
  }
  return "?";
}

Family ParseFamily(std::string_view name) {
  std::string lower(name);
  for (auto& c : lower) c = static_cast<char>(std::tolower(c));
  for (Family f :
       {Family::kG6, Family::kG8, Family::kG10, Family::kH10, Family::kG12,
        Family::kH12, Family::kT4t2, Family::kT4t, Family::kK33}) {
    std::string candidate(FamilyName(f));
    for (auto& c : candidate) c = static_cast<char>(std::tolower(c));
    if (candidate == lower) return f;
  }
  throw Error(ErrorCode::kInvalidArgument,
              "unknown family '" + std::string(name) + "'");
}

VoltageGraph Build(const ConstructionSpec& spec) {
  const auto expect_params = [&](size_t n) {
    if (spec.params.size() != n) {
      throw Error(ErrorCode::kInvalidArgument,
                  std::string(FamilyName(spec.family)) + " takes " +
                      std::to_string(n) + " voltage parameters, got " +
                      std::to_string(spec.params.size()));
    }
  };
  if (spec.h12_v && spec.family != Family::kH12) {
    throw Error(ErrorCode::kInvalidArgument, "v is only meaningful for H12");
  }
  switch (spec.family) {
    case Family::kG6:
      expect_params(2);
      return BuildG6(spec.params[0], spec.params[1]);
    case Family::kG8:
      expect_params(4);
      return BuildG8(spec.params[0], spec.params[1], spec.params[2],
                     spec.params[3]);
    case Family::kG10:
      expect_params(0);
      return BuildG10();
    case Family::kH10:
      expect_params(0);
      return BuildH10();
    case Family::kG12:
      expect_params(0);
      return BuildG12();
    case Family::kH12:
      expect_params(0);
      return BuildH12(spec.h12_v.value_or(kH12DefaultV));
    case Family::kT4t2:
      expect_params(0);
      return BuildTreeT4t2(spec.t);
    case Family::kT4t:
      expect_params(0);
      return BuildTreeT4t(spec.t);
    case Family::kK33:
      break;
  }
  throw Error(ErrorCode::kInvalidArgument,
              "K33 is a simple graph, not a voltage graph");
}

OrderFormula ConstructionOrder(Family family) {
  switch (family) {
    case Family::kG6:
      return {4, 2};
    case Family::kG8:
      return {9, 3};
    case Family::kG10:
      return {24, 2};
    case Family::kH10:
      return {20, 2};
    case Family::kG12:
      return {49, 3};
    case Family::kH12:
      return {41, 3};
    default:
      break;
  }
  throw Error(ErrorCode::kInvalidArgument,
              std::string(FamilyName(family)) + " has no fixed order formula");
}

}  // namespace cagelift
