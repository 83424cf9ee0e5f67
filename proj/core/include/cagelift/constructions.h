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

#ifndef CAGELIFT_CONSTRUCTIONS_H_
#define CAGELIFT_CONSTRUCTIONS_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cagelift/simple_graph.h"
#include "cagelift/voltage_graph.h"

namespace cagelift {

// Vertex names follow the bit-string scheme: the root of the x tree is "x",
// its children are "x_0" and "x_1", and the pinned vertex above it is "x*".

// The pruned binary tree X_t (or Y_t, Z_t with another letter) hanging from
// a pinned root. Strings of length 0..2t-1 are kept except those starting
// with t zeros. Leaves have degree 1, so the skeleton check fails on it.
VoltageGraph BuildTreeX(int t, char letter = 'x');

// X_t and Y_t joined by a voltage-0 edge between x_a and y_a, a = 0^(t-1).
// Requires t >= 1.
VoltageGraph BuildTreeT4t2(int t);

// X'_t, Y_{t-1} and Z_{t-1} joined by voltage-0 edges x_a -> y_a and
// x_a -> z_a, where x_a = x_{0^(t-1)} and y_a = y_{0^(t-2)}. Requires t >= 2.
VoltageGraph BuildTreeT4t(int t);

// Two vertices A -> B with voltages 0, -1 and 2; lifts to the Heawood graph
// at m = 7.
VoltageGraph BuildHeawoodBase();

VoltageGraph BuildG6(Voltage alpha, Voltage beta);
VoltageGraph BuildG8(Voltage alpha, Voltage beta, Voltage gamma, Voltage delta);
VoltageGraph BuildG10();
VoltageGraph BuildH10();
VoltageGraph BuildG12();

// The arc x_0111 -> z_011 carries `v`. kH12DefaultV is the value for which
// the lifts have girth 12 exactly from m = 10 on.
inline constexpr Voltage kH12DefaultV = -1;
inline constexpr Voltage kH12AlternateV = 5;
VoltageGraph BuildH12(Voltage v = kH12DefaultV);

SimpleGraph BuildK33();

// lift(G6(1,2), 3) and lift(G8(1,2,2,1), 3).
SimpleGraph BuildHeawood();
SimpleGraph BuildTutteEightCage();

enum class Family { kG6, kG8, kG10, kH10, kG12, kH12, kT4t2, kT4t, kK33 };

std::string_view FamilyName(Family family);
// Case-insensitive; throws InvalidArgument for an unknown name.
Family ParseFamily(std::string_view name);

struct ConstructionSpec {
  Family family = Family::kG10;
  int t = 0;                     // T4t2 and T4t only
  std::vector<Voltage> params;   // alpha, beta (G6) or alpha..delta (G8)
  std::optional<Voltage> h12_v;  // H12 only
};

// Throws InvalidArgument when the spec is inconsistent (missing or extra
// parameters, t out of range) or names K33, which is not a voltage graph.
VoltageGraph Build(const ConstructionSpec& spec);

// Lift order per unit of m and number of pinned vertices: the finished
// constructions lift to (unpinned * m + pinned) vertices.
struct OrderFormula {
  int per_m = 0;
  int pinned = 0;
};
OrderFormula ConstructionOrder(Family family);

}  // namespace cagelift

#endif  // CAGELIFT_CONSTRUCTIONS_H_
