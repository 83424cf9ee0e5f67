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

#ifndef CAGELIFT_IDENTIFICATION_H_
#define CAGELIFT_IDENTIFICATION_H_

#include <cstdint>
#include <optional>
#include <string>

#include "cagelift/simple_graph.h"

namespace cagelift {

struct IdentifySpec {
  SimpleGraph base;  // cubic, girth `girth`
  int girth = 0;     // even
  int m = 0;         // target degree, >= 3
  // Glue points in the intact copies; must be at distance >= girth / 2.
  // Defaults to the lexicographically least such pair.
  std::optional<Edge> remote_pair;
  // Edge removed from the first copy when m is not a multiple of 3.
  // Defaults to the lexicographically least edge.
  std::optional<Edge> deleted_edge;
};

// Glues copies of a cubic graph of even girth g at two remote vertices so the
// two glued vertices get degree m and everything else keeps degree 3. With
// m = 3k + t:
//   t = 0  k copies glued at the remote pair;
//   t = 2  one copy minus an edge x1y1, glued at x1 and y1 to k copies;
//   t = 1  as t = 2, plus new pendant vertices at x1 and y1 that become the
//          glue points.
// Glued vertices are labelled "x" and "y" and come first; every other vertex
// is labelled "c<i>:<base label>" with copies numbered from 1.
//
// Throws NotCubic, WrongGirth, NoRemotePair, BadM (m < 3), or
// InvalidArgument for a bad girth, pair or edge.
SimpleGraph Identify(const IdentifySpec& spec);

// k(n - 2) + {2, n + 2, n} for m = 3k + {0, 1, 2}.
std::int64_t GluedOrder(std::int64_t n, int m);

// Exact non-negative fraction in lowest terms.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  static Rational Of(std::int64_t num, std::int64_t den = 1);
  bool is_integer() const { return den == 1; }
  std::string ToString() const;

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend bool operator==(const Rational&, const Rational&) = default;
};

// Smallest known cubic graphs of girth 10, 12 and 14, used as gluing bases.
enum class BaseCage { kGirth10, kGirth12, kGirth14 };

// 70, 126 and 348.
int BaseCageOrder(BaseCage c);

// Order of the glued graph on the given base written as
// a*m + f*m + c_r with r = m mod 3 and rational f and c_r, evaluated exactly.
// Agrees with GluedOrder(BaseCageOrder(c), m). Throws BadM for m < 3.
Rational GluedOrderFormula(BaseCage c, int m);

}  // namespace cagelift

#endif  // CAGELIFT_IDENTIFICATION_H_
