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

#include "cagelift/graph_analysis.h"

#include <algorithm>
#include <atomic>
#include <limits>
#include <queue>

#include "cagelift/error.h"
#include "cagelift/parallel.h"

namespace cagelift {

std::string Length::ToString() const {
  return is_finite() ? std::to_string(*value_) : "inf";
}

namespace {

// Shortest cycle found by a BFS rooted at `root`, or kNone. The search stops
// once no cycle shorter than `bound` can still be detected from this root.
constexpr int kNone = std::numeric_limits<int>::max();

int ShortestCycleFrom(const SimpleGraph& g, int root, int bound,
                      std::vector<int>& dist, std::vector<int>& parent,
                      std::vector<int>& touched) {
  int best = kNone;
  std::queue<int> frontier;
  dist[root] = 0;
  parent[root] = -1;
  touched.push_back(root);
  frontier.push(root);
  while (!frontier.empty()) {
    const int u = frontier.front();
    frontier.pop();
    if (2 * dist[u] + 1 >= std::min(best, bound)) break;
    for (int w : g.neighbors(u)) {
      if (dist[w] < 0) {
        dist[w] = dist[u] + 1;
        parent[w] = u;
        touched.push_back(w);
        frontier.push(w);
      } else if (w != parent[u]) {
        best = std::min(best, dist[u] + dist[w] + 1);
      }
    }
  }
  for (int v : touched) dist[v] = -1;
  touched.clear();
  return best;
}

}  // namespace

Length Girth(const SimpleGraph& g) {
  const int n = g.order();
  std::atomic<int> best{kNone};
  const int workers = std::max(1, std::min(ThreadCount(), n));
  ParallelFor(workers, [&](int w) {
    std::vector<int> dist(n, -1), parent(n, -1), touched;
    for (int root = w; root < n; root += workers) {
      const int found =
          ShortestCycleFrom(g, root, best.load(), dist, parent, touched);
      int current = best.load();
      while (found < current && !best.compare_exchange_weak(current, found)) {
      }
    }
  });
  const int result = best.load();
  return result == kNone ? Length::Infinite() : Length(result);
}

Bipartition CheckBipartite(const SimpleGraph& g) {
  const int n = g.order();
  Bipartition out;
  out.color.assign(n, -1);
  std::vector<int> parent(n, -1), depth(n, 0);
  for (int s = 0; s < n; ++s) {
    if (out.color[s] >= 0) continue;
    out.color[s] = 0;
    std::queue<int> q;
    q.push(s);
    while (!q.empty()) {
      const int u = q.front();
      q.pop();
      for (int w : g.neighbors(u)) {
        if (out.color[w] < 0) {
          out.color[w] = 1 - out.color[u];
          parent[w] = u;
          depth[w] = depth[u] + 1;
          q.push(w);
        } else if (out.color[w] == out.color[u]) {
          // Walk both tree paths up to their meeting point.
          std::vector<int> left, right;
          int a = u, b = w;
          while (depth[a] > depth[b]) {
            left.push_back(a);
            a = parent[a];
          }
          while (depth[b] > depth[a]) {
            right.push_back(b);
            b = parent[b];
          }
          while (a != b) {
            left.push_back(a);
            right.push_back(b);
            a = parent[a];
            b = parent[b];
          }
          left.push_back(a);
          // Cycle: lca..u, then w..(child of lca).
          std::reverse(left.begin(), left.end());
          left.insert(left.end(), right.begin(), right.end());
          out.bipartite = false;
          out.color.clear();
          out.odd_cycle = std::move(left);
          return out;
        }
      }
    }
  }
  return out;
}

std::vector<int> BfsDistances(const SimpleGraph& g, int source) {
  if (source < 0 || source >= g.order()) {
    throw Error(ErrorCode::kInvalidArgument,
                "vertex " + std::to_string(source) + " out of range");
  }
  std::vector<int> dist(g.order(), -1);
  std::queue<int> q;
  dist[source] = 0;
  q.push(source);
  while (!q.empty()) {
    const int u = q.front();
    q.pop();
    for (int w : g.neighbors(u)) {
      if (dist[w] < 0) {
        dist[w] = dist[u] + 1;
        q.push(w);
      }
    }
  }
  return dist;
}

Length Distance(const SimpleGraph& g, int u, int v) {
  if (v < 0 || v >= g.order()) {
    throw Error(ErrorCode::kInvalidArgument,
                "vertex " + std::to_string(v) + " out of range");
  }
  const int d = BfsDistances(g, u)[v];
  return d < 0 ? Length::Infinite() : Length(d);
}

std::vector<Edge> RemotePairs(const SimpleGraph& g, int d) {
  if (d < 1) throw Error(ErrorCode::kInvalidArgument, "distance must be >= 1");
  const int n = g.order();
  std::vector<std::vector<Edge>> rows(n);
  ParallelFor(n, [&](int u) {
    const auto dist = BfsDistances(g, u);
    for (int v = u + 1; v < n; ++v) {
      if (dist[v] < 0 || dist[v] >= d) rows[u].emplace_back(u, v);
    }
  });
  std::vector<Edge> out;
  for (auto& row : rows) out.insert(out.end(), row.begin(), row.end());
  return out;
}

std::map<int, std::int64_t> DegreeHistogram(const SimpleGraph& g) {
  std::map<int, std::int64_t> hist;
  for (int v = 0; v < g.order(); ++v) ++hist[g.degree(v)];
  return hist;
}

bool IsCycle(const SimpleGraph& g, std::span<const int> cycle) {
  const int k = static_cast<int>(cycle.size());
  if (k < 3) return false;
  std::vector<int> sorted(cycle.begin(), cycle.end());
  std::sort(sorted.begin(), sorted.end());
  if (sorted.front() < 0 || sorted.back() >= g.order() ||
      std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    return false;
  }
  for (int i = 0; i < k; ++i) {
    if (!g.HasEdge(cycle[i], cycle[(i + 1) % k])) return false;
  }
  return true;
}

GraphReport Analyze(const SimpleGraph& g) {
  GraphReport r;
  const int n = g.order();
  r.order = n;
  r.size = g.size();
  r.girth = Girth(g);
  r.bipartite = IsBipartite(g);
  r.degree_histogram = DegreeHistogram(g);

  std::vector<int> component(n, -1);
  for (int s = 0; s < n; ++s) {
    if (component[s] >= 0) continue;
    const auto dist = BfsDistances(g, s);
    for (int v = 0; v < n; ++v) {
      if (dist[v] >= 0) component[v] = r.components;
    }
    ++r.components;
  }
  std::vector<int> eccentricity(n, 0);
  ParallelFor(n, [&](int u) {
    const auto dist = BfsDistances(g, u);
    eccentricity[u] = *std::max_element(dist.begin(), dist.end());
  });
  r.component_diameters.assign(r.components, 0);
  for (int v = 0; v < n; ++v) {
    r.component_diameters[component[v]] =
        std::max(r.component_diameters[component[v]], eccentricity[v]);
  }
  if (r.components == 1) {
    r.diameter = Length(r.component_diameters[0]);
  } else if (r.components == 0) {
    r.diameter = Length(0);
  }
  return r;
}

}  // namespace cagelift
