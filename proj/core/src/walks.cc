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

#include "cagelift/walks.h"

#include <algorithm>
#include <tuple>

#include "cagelift/error.h"
#include "cagelift/parallel.h"

namespace cagelift {
namespace {

// Index of a least rotation of `steps`.
int LeastRotation(std::span<const Step> steps) {
  const int n = static_cast<int>(steps.size());
  int best = 0;
  for (int r = 1; r < n; ++r) {
    for (int i = 0; i < n; ++i) {
      const Step& a = steps[(r + i) % n];
      const Step& b = steps[(best + i) % n];
      if (a == b) continue;
      if (a < b) best = r;
      break;
    }
  }
  return best;
}

bool IsLeastRotation(std::span<const Step> steps) {
  const int n = static_cast<int>(steps.size());
  for (int r = 1; r < n; ++r) {
    for (int i = 0; i < n; ++i) {
      const Step& a = steps[(r + i) % n];
      const Step& b = steps[i];
      if (a == b) continue;
      if (a < b) return false;
      break;
    }
  }
  return true;
}

std::vector<ClosedWalk> Flatten(std::vector<std::vector<ClosedWalk>> parts) {
  std::vector<ClosedWalk> out;
  for (auto& p : parts) {
    std::move(p.begin(), p.end(), std::back_inserter(out));
  }
  std::sort(out.begin(), out.end(), WalkLess);
  return out;
}

void RequireLength(int max_len, int min_len) {
  if (max_len < min_len) {
    throw Error(ErrorCode::kInvalidArgument,
                "maximum length must be at least " + std::to_string(min_len));
  }
}

class ClosedWalkSearch {
 public:
  ClosedWalkSearch(const VoltageGraph& g, int max_len, bool avoid_pinned,
                   std::vector<ClosedWalk>& out)
      : g_(g), max_len_(max_len), avoid_pinned_(avoid_pinned), out_(out) {}

  void Run(int start) {
    start_ = start;
    Extend(start, 0);
  }

 private:
  void Extend(int v, Voltage sum) {
    if (!steps_.empty() && v == start_ &&
        !IsReversal(steps_.back(), steps_.front()) && IsLeastRotation(steps_)) {
      out_.push_back({start_, steps_, sum});
    }
    if (static_cast<int>(steps_.size()) == max_len_) return;
    for (const Incidence& inc : g_.incidences(v)) {
      const Step s{inc.arc, inc.forward};
      if (!steps_.empty()) {
        if (IsReversal(steps_.back(), s) || s < steps_.front()) continue;
      }
      if (avoid_pinned_ && g_.is_pinned(inc.other)) continue;
      steps_.push_back(s);
      Extend(inc.other, sum + StepVoltage(g_, s));
      steps_.pop_back();
    }
  }

  const VoltageGraph& g_;
  const int max_len_;
  const bool avoid_pinned_;
  std::vector<ClosedWalk>& out_;
  int start_ = 0;
  std::vector<Step> steps_;
};

class CycleSearch {
 public:
  CycleSearch(const VoltageGraph& g, int max_len, std::vector<ClosedWalk>& out)
      : g_(g), max_len_(max_len), out_(out), on_path_(g.num_vertices()) {}

  // Cycles whose least vertex is `start`.
  void Run(int start) {
    start_ = start;
    on_path_[start] = true;
    Extend(start, 0);
    on_path_[start] = false;
  }

 private:
  void Extend(int v, Voltage sum) {
    if (static_cast<int>(steps_.size()) == max_len_) return;
    for (const Incidence& inc : g_.incidences(v)) {
      const Step s{inc.arc, inc.forward};
      if (!steps_.empty() && IsReversal(steps_.back(), s)) continue;
      const int w = inc.other;
      if (w == start_) {
        if (!steps_.empty() && IsReversal(s, steps_.front())) continue;
        steps_.push_back(s);
        out_.push_back(MakeClosedWalk(g_, start_, steps_));
        steps_.pop_back();
        continue;
      }
      if (w < start_ || on_path_[w]) continue;
      on_path_[w] = true;
      steps_.push_back(s);
      Extend(w, sum + StepVoltage(g_, s));
      steps_.pop_back();
      on_path_[w] = false;
    }
  }

  const VoltageGraph& g_;
  const int max_len_;
  std::vector<ClosedWalk>& out_;
  std::vector<bool> on_path_;
  int start_ = 0;
  std::vector<Step> steps_;
};

// Simple paths from a pinned vertex through unpinned interior vertices.
// `visit(steps, end)` is called for every path of length >= 1.
template <typename Visit>
void SimplePathsFromPinned(const VoltageGraph& g, int source, int max_len,
                           Visit&& visit) {
  std::vector<bool> used(g.num_vertices(), false);
  std::vector<Step> steps;
  auto extend = [&](auto&& self, int v) -> void {
    if (static_cast<int>(steps.size()) == max_len) return;
    for (const Incidence& inc : g.incidences(v)) {
      const int w = inc.other;
      if (used[w]) continue;
      steps.push_back({inc.arc, inc.forward});
      visit(steps, w);
      if (!g.is_pinned(w)) {
        used[w] = true;
        self(self, w);
        used[w] = false;
      }
      steps.pop_back();
    }
  };
  used[source] = true;
  extend(extend, source);
}

}  // namespace

bool WalkLess(const ClosedWalk& a, const ClosedWalk& b) {
  if (a.length() != b.length()) return a.length() < b.length();
  return std::lexicographical_compare(a.steps.begin(), a.steps.end(),
                                      b.steps.begin(), b.steps.end());
}

int StepTail(const VoltageGraph& g, const Step& s) {
  const Arc& a = g.arc(s.arc);
  return s.forward ? a.tail : a.head;
}

int StepHead(const VoltageGraph& g, const Step& s) {
  const Arc& a = g.arc(s.arc);
  return s.forward ? a.head : a.tail;
}

Voltage StepVoltage(const VoltageGraph& g, const Step& s) {
  const Voltage v = g.arc(s.arc).voltage;
  return s.forward ? v : -v;
}

Voltage WalkSum(const VoltageGraph& g, std::span<const Step> steps) {
  Voltage sum = 0;
  for (const Step& s : steps) sum += StepVoltage(g, s);
  return sum;
}

std::vector<int> WalkVertices(const VoltageGraph& g, int start,
                              std::span<const Step> steps) {
  std::vector<int> out{start};
  for (const Step& s : steps) {
    if (s.arc < 0 || s.arc >= g.num_arcs() || StepTail(g, s) != out.back()) {
      throw Error(ErrorCode::kInvalidArgument, "steps are not consecutive");
    }
    out.push_back(StepHead(g, s));
  }
  return out;
}

ClosedWalk MakeClosedWalk(const VoltageGraph& g, int start,
                          std::vector<Step> steps) {
  if (steps.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "empty closed walk");
  }
  const auto vertices = WalkVertices(g, start, steps);
  if (vertices.back() != start) {
    throw Error(ErrorCode::kInvalidArgument, "walk does not close up");
  }
  const int n = static_cast<int>(steps.size());
  for (int i = 0; i < n; ++i) {
    if (IsReversal(steps[i], steps[(i + 1) % n])) {
      throw Error(ErrorCode::kInvalidArgument,
                  "walk reverses at step " + std::to_string(i + 1));
    }
  }
  const int r = LeastRotation(steps);
  std::rotate(steps.begin(), steps.begin() + r, steps.end());
  ClosedWalk w;
  w.start_vertex = vertices[r];
  w.voltage_sum = WalkSum(g, steps);
  w.steps = std::move(steps);
  return w;
}

ClosedWalk Reversed(const VoltageGraph& g, const ClosedWalk& walk) {
  std::vector<Step> steps;
  steps.reserve(walk.steps.size());
  for (auto it = walk.steps.rbegin(); it != walk.steps.rend(); ++it) {
    steps.push_back({it->arc, !it->forward});
  }
  return MakeClosedWalk(g, walk.start_vertex, std::move(steps));
}

int WrapCount(const ClosedWalk& walk) {
  const int n = walk.length();
  for (int period = 1; period <= n; ++period) {
    if (n % period != 0) continue;
    bool periodic = true;
    for (int i = period; i < n && periodic; ++i) {
      periodic = walk.steps[i] == walk.steps[i - period];
    }
    if (periodic) return n / period;
  }
  return 1;
}

std::vector<ClosedWalk> EnumerateCycles(const VoltageGraph& g, int max_len) {
  RequireLength(max_len, 1);
  std::vector<std::vector<ClosedWalk>> parts(g.num_vertices());
  ParallelFor(g.num_vertices(),
              [&](int v) { CycleSearch(g, max_len, parts[v]).Run(v); });
  return Flatten(std::move(parts));
}

std::vector<ClosedWalk> EnumerateClosedWalks(const VoltageGraph& g, int max_len,
                                             bool avoid_pinned) {
  RequireLength(max_len, 1);
  std::vector<std::vector<ClosedWalk>> parts(g.num_vertices());
  ParallelFor(g.num_vertices(), [&](int v) {
    if (avoid_pinned && g.is_pinned(v)) return;
    ClosedWalkSearch(g, max_len, avoid_pinned, parts[v]).Run(v);
  });
  return Flatten(std::move(parts));
}

std::vector<PinnedPath> EnumeratePinnedPaths(const VoltageGraph& g,
                                             int max_len) {
  RequireLength(max_len, 1);
  std::vector<PinnedPath> out;
  for (int p = 0; p < g.num_vertices(); ++p) {
    if (!g.is_pinned(p)) continue;
    SimplePathsFromPinned(g, p, max_len,
                          [&](const std::vector<Step>& steps, int end) {
                            if (g.is_pinned(end) && end > p) {
                              out.push_back({p, end, steps, WalkSum(g, steps)});
                            }
                          });
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return std::make_tuple(a.length(), a.from, a.to, std::cref(a.steps)) <
           std::make_tuple(b.length(), b.from, b.to, std::cref(b.steps));
  });
  return out;
}

std::vector<Lollipop> EnumerateLollipops(const VoltageGraph& g, int max_score) {
  RequireLength(max_score, 3);
  const auto cycles = EnumerateCycles(g, max_score - 2);
  // For each vertex, the cycles through it (avoiding pinned vertices) and
  // the position of the vertex on the cycle.
  std::vector<std::vector<std::pair<int, int>>> through(g.num_vertices());
  std::vector<std::vector<int>> cycle_vertices(cycles.size());
  for (int c = 0; c < static_cast<int>(cycles.size()); ++c) {
    auto vs = WalkVertices(g, cycles[c].start_vertex, cycles[c].steps);
    vs.pop_back();
    if (std::any_of(vs.begin(), vs.end(),
                    [&](int v) { return g.is_pinned(v); })) {
      continue;
    }
    for (int i = 0; i < static_cast<int>(vs.size()); ++i) {
      through[vs[i]].emplace_back(c, i);
    }
    cycle_vertices[c] = std::move(vs);
  }

  std::vector<Lollipop> out;
  for (int p = 0; p < g.num_vertices(); ++p) {
    if (!g.is_pinned(p)) continue;
    SimplePathsFromPinned(
        g, p, (max_score - 1) / 2, [&](const std::vector<Step>& path, int end) {
          if (g.is_pinned(end)) return;
          const auto path_vertices = WalkVertices(g, p, path);
          const int budget = max_score - 2 * static_cast<int>(path.size());
          for (const auto& [c, pos] : through[end]) {
            const ClosedWalk& cycle = cycles[c];
            if (cycle.length() > budget) continue;
            const auto& cv = cycle_vertices[c];
            const bool touches = std::any_of(
                path_vertices.begin(), path_vertices.end() - 1, [&](int v) {
                  return std::find(cv.begin(), cv.end(), v) != cv.end();
                });
            if (touches) continue;
            Lollipop l;
            l.pinned = p;
            l.path = path;
            l.path_sum = WalkSum(g, path);
            l.cycle.start_vertex = end;
            l.cycle.steps = cycle.steps;
            std::rotate(l.cycle.steps.begin(), l.cycle.steps.begin() + pos,
                        l.cycle.steps.end());
            l.cycle.voltage_sum = cycle.voltage_sum;
            out.push_back(std::move(l));
          }
        });
  }
  std::sort(out.begin(), out.end(), [](const Lollipop& a, const Lollipop& b) {
    return std::make_tuple(a.score(), a.pinned, std::cref(a.path),
                           std::cref(a.cycle.steps)) <
           std::make_tuple(b.score(), b.pinned, std::cref(b.path),
                           std::cref(b.cycle.steps));
  });
  return out;
}

}  // namespace cagelift
