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

#include "cagelift/identification.h"

#include <numeric>
#include <vector>

#include "cagelift/error.h"
#include "cagelift/graph_analysis.h"

namespace cagelift {
namespace {

void ValidateBase(const IdentifySpec& spec) {
  if (spec.m < 3) {
    throw Error(ErrorCode::kBadM,
                "m must be >= 3, got " + std::to_string(spec.m));
  }
  if (spec.girth < 4 || spec.girth % 2 != 0) {
    throw Error(
        ErrorCode::kInvalidArgument,
        "girth must be even and >= 4, got " + std::to_string(spec.girth));
  }
  const SimpleGraph& g = spec.base;
  if (g.order() == 0) throw Error(ErrorCode::kNotCubic, "empty base graph");
  for (int v = 0; v < g.order(); ++v) {
    if (g.degree(v) != 3) {
      throw Error(ErrorCode::kNotCubic, "vertex " + g.label(v) +
                                            " has degree " +
                                            std::to_string(g.degree(v)));
    }
  }
  const Length girth = Girth(g);
  if (!(girth == spec.girth)) {
    throw Error(ErrorCode::kWrongGirth, "base graph has girth " +
                                            girth.ToString() + ", expected " +
                                            std::to_string(spec.girth));
  }
}

Edge ChooseRemotePair(const IdentifySpec& spec) {
  const SimpleGraph& g = spec.base;
  const int d = spec.girth / 2;
  if (spec.remote_pair) {
    const auto [x, y] = *spec.remote_pair;
    if (x < 0 || y < 0 || x >= g.order() || y >= g.order() || x == y) {
      throw Error(ErrorCode::kInvalidArgument, "invalid remote pair");
    }
    const int dist = BfsDistances(g, x)[y];
    if (dist >= 0 && dist < d) {
      throw Error(ErrorCode::kNoRemotePair,
                  g.label(x) + " and " + g.label(y) + " are at distance " +
                      std::to_string(dist) + " < " + std::to_string(d));
    }
    return {x, y};
  }
  // The least pair is found scanning rows in order; no need for all pairs.
  for (int x = 0; x < g.order(); ++x) {
    const auto dist = BfsDistances(g, x);
    for (int y = x + 1; y < g.order(); ++y) {
      if (dist[y] < 0 || dist[y] >= d) return {x, y};
    }
  }
  throw Error(ErrorCode::kNoRemotePair,
              "no two vertices at distance >= " + std::to_string(d));
}

class Assembler {
 public:
  Assembler() { labels_ = {"x", "y"}; }

  // Appends a copy of `g`; vertices listed in `glue` map to the given
  // existing vertices, `skip_edge` (if any) is left out.
  std::vector<int> AddCopy(const SimpleGraph& g, int copy,
                           const std::vector<std::pair<int, int>>& glue,
                           std::optional<Edge> skip_edge = std::nullopt) {
    std::vector<int> index(g.order(), -1);
    for (const auto& [v, target] : glue) index[v] = target;
    for (int v = 0; v < g.order(); ++v) {
      if (index[v] >= 0) continue;
      index[v] = static_cast<int>(labels_.size());
      labels_.push_back("c" + std::to_string(copy) + ":" + g.label(v));
    }
    for (const auto& [u, v] : g.Edges()) {
      if (skip_edge && Edge{u, v} == *skip_edge) continue;
      edges_.emplace_back(index[u], index[v]);
    }
    return index;
  }

  void AddEdge(int u, int v) { edges_.emplace_back(u, v); }

  SimpleGraph Finish() {
    const int n = static_cast<int>(labels_.size());
    return SimpleGraph::FromEdges(n, edges_, std::move(labels_));
  }

 private:
  std::vector<std::string> labels_;
  std::vector<Edge> edges_;
};

constexpr int kX = 0;
constexpr int kY = 1;

}  // namespace

SimpleGraph Identify(const IdentifySpec& spec) {
  ValidateBase(spec);
  const SimpleGraph& g = spec.base;
  const auto [rx, ry] = ChooseRemotePair(spec);
  const int k = spec.m / 3;
  const int t = spec.m % 3;

  Assembler out;
  int copy = 1;
  if (t != 0) {
    Edge e;
    if (spec.deleted_edge) {
      e = *spec.deleted_edge;
      if (e.first > e.second) std::swap(e.first, e.second);
      if (e.first < 0 || e.second >= g.order() ||
          !g.HasEdge(e.first, e.second)) {
        throw Error(ErrorCode::kInvalidArgument,
                    "deleted edge is not an edge of the base graph");
      }
    } else {
      e = g.Edges().front();
    }
    if (t == 2) {
      out.AddCopy(g, copy++, {{e.first, kX}, {e.second, kY}}, e);
    } else {
      const auto index = out.AddCopy(g, copy++, {}, e);
      out.AddEdge(kX, index[e.first]);
      out.AddEdge(kY, index[e.second]);
    }
  }
  for (int i = 0; i < k; ++i) {
    out.AddCopy(g, copy++, {{rx, kX}, {ry, kY}});
  }
  return out.Finish();
}

std::int64_t GluedOrder(std::int64_t n, int m) {
  if (m < 3) {
    throw Error(ErrorCode::kBadM, "m must be >= 3, got " + std::to_string(m));
  }
  const std::int64_t k = m / 3;
  switch (m % 3) {
    case 0:
      return k * (n - 2) + 2;
    case 1:
      return k * (n - 2) + n + 2;
    default:
      return k * (n - 2) + n;
  }
}

Rational Rational::Of(std::int64_t num, std::int64_t den) {
  if (den == 0) throw Error(ErrorCode::kInvalidArgument, "zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const std::int64_t g = std::gcd(num, den);
  return {num / g, den / g};
}

std::string Rational::ToString() const {
  return den == 1 ? std::to_string(num)
                  : std::to_string(num) + "/" + std::to_string(den);
}

Rational operator+(const Rational& a, const Rational& b) {
  return Rational::Of(a.num * b.den + b.num * a.den, a.den * b.den);
}

Rational operator*(const Rational& a, const Rational& b) {
  return Rational::Of(a.num * b.num, a.den * b.den);
}

int BaseCageOrder(BaseCage c) {
  switch (c) {
    case BaseCage::kGirth10:
      return 70;
    case BaseCage::kGirth12:
      return 126;
    case BaseCage::kGirth14:
      return 348;
  }
  return 0;
}

Rational GluedOrderFormula(BaseCage c, int m) {
  if (m < 3) {
    throw Error(ErrorCode::kBadM, "m must be >= 3, got " + std::to_string(m));
  }
  // a*m + f*m + constant[m mod 3].
  struct Expression {
    std::int64_t a;
    Rational f;
    Rational constant[3];
  };
  static const Expression kGirth10{
      22,
      Rational::Of(2, 3),
      {Rational::Of(2), Rational::Of(49 * 3 + 1, 3),
       Rational::Of(24 * 3 + 2, 3)}};
  static const Expression kGirth12{
      41,
      Rational::Of(1, 3),
      {Rational::Of(2), Rational::Of(86 * 3 + 2, 3),
       Rational::Of(43 * 3 + 1, 3)}};
  static const Expression kGirth14{
      115,
      Rational::Of(1, 3),
      {Rational::Of(2), Rational::Of(234 * 3 + 2, 3),
       Rational::Of(117 * 3 + 1, 3)}};
  const Expression& e = c == BaseCage::kGirth10   ? kGirth10
                        : c == BaseCage::kGirth12 ? kGirth12
                                                  : kGirth14;
  const Rational mm = Rational::Of(m);
  return Rational::Of(e.a) * mm + e.f * mm + e.constant[m % 3];
}

}  // namespace cagelift
