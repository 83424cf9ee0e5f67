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

#include "cagelift/cycle_analysis.h"

#include <algorithm>
#include <numeric>
#include <queue>
#include <set>
#include <tuple>

#include "cagelift/error.h"
#include "cagelift/lift.h"
#include "cagelift/parallel.h"

namespace cagelift {
namespace {

int KindRank(WitnessKind kind) {
  switch (kind) {
    case WitnessKind::kLiftCollision:
      return 0;
    case WitnessKind::kClosedWalk:
      return 1;
    case WitnessKind::kPinnedReturn:
      return 2;
    case WitnessKind::kPinnedPathPair:
      return 3;
  }
  return 4;
}

std::vector<Step> ReversedSteps(std::span<const Step> steps) {
  std::vector<Step> out;
  out.reserve(steps.size());
  for (auto it = steps.rbegin(); it != steps.rend(); ++it) {
    out.push_back({it->arc, !it->forward});
  }
  return out;
}

// Non-reversing walks from pinned `source` through unpinned vertices that
// end on the first pinned vertex reached, of length <= max_len.
template <typename Visit>
void PinnedSegments(const VoltageGraph& g, int source, int max_len,
                    Visit&& visit) {
  std::vector<Step> steps;
  auto extend = [&](auto&& self, int v) -> void {
    if (static_cast<int>(steps.size()) == max_len) return;
    for (const Incidence& inc : g.incidences(v)) {
      const Step s{inc.arc, inc.forward};
      if (!steps.empty() && IsReversal(steps.back(), s)) continue;
      steps.push_back(s);
      if (g.is_pinned(inc.other)) {
        visit(steps, inc.other);
      } else {
        self(self, inc.other);
      }
      steps.pop_back();
    }
  };
  extend(extend, source);
}

// Shortest path between distinct pinned vertices with unpinned interior.
Length ShortestPinnedPath(const VoltageGraph& g) {
  int best = -1;
  for (int p = 0; p < g.num_vertices(); ++p) {
    if (!g.is_pinned(p)) continue;
    std::vector<int> dist(g.num_vertices(), -1);
    std::queue<int> q;
    dist[p] = 0;
    q.push(p);
    while (!q.empty()) {
      const int u = q.front();
      q.pop();
      if (u != p && g.is_pinned(u)) {
        if (best < 0 || dist[u] < best) best = dist[u];
        continue;
      }
      for (const Incidence& inc : g.incidences(u)) {
        if (dist[inc.other] < 0) {
          dist[inc.other] = dist[u] + 1;
          q.push(inc.other);
        }
      }
    }
  }
  return best < 0 ? Length::Infinite() : Length(best);
}

}  // namespace

std::string_view WitnessKindName(WitnessKind kind) {
  switch (kind) {
    case WitnessKind::kClosedWalk:
      return "closed-walk";
    case WitnessKind::kPinnedReturn:
      return "pinned-return";
    case WitnessKind::kPinnedPathPair:
      return "pinned-path-pair";
    case WitnessKind::kLiftCollision:
      return "lift-collision";
  }
  return "?";
}

ShortStructureTable::ShortStructureTable(const VoltageGraph& g, int max_value,
                                         std::span<const int> free_arcs,
                                         bool with_unit_modulus)
    : g_(&g),
      max_value_(max_value),
      free_arcs_(free_arcs.begin(), free_arcs.end()),
      free_index_(g.num_arcs(), -1),
      with_unit_modulus_(with_unit_modulus) {
  if (max_value < 1) {
    throw Error(ErrorCode::kInvalidArgument, "length bound must be positive");
  }
  for (int i = 0; i < static_cast<int>(free_arcs_.size()); ++i) {
    const int a = free_arcs_[i];
    if (a < 0 || a >= g.num_arcs()) {
      throw Error(ErrorCode::kInvalidArgument,
                  "free arc " + std::to_string(a) + " out of range");
    }
    if (free_index_[a] >= 0) {
      throw Error(ErrorCode::kInvalidArgument,
                  "free arc " + std::to_string(a) + " listed twice");
    }
    if (g.is_pinned(g.arc(a).tail) || g.is_pinned(g.arc(a).head)) {
      throw Error(ErrorCode::kInvalidArgument,
                  "free arc " + std::to_string(a) + " touches a pinned vertex");
    }
    free_index_[a] = i;
  }

  for (ClosedWalk& w : EnumerateClosedWalks(g, max_value, true)) {
    const int len = w.length();
    const WitnessKind kind =
        len <= 2 ? WitnessKind::kLiftCollision : WitnessKind::kClosedWalk;
    entries_.push_back(
        MakeEntry(kind, w.start_vertex, std::move(w.steps), len, false, true));
  }
  for (int p = 0; p < g.num_vertices(); ++p) {
    if (!g.is_pinned(p)) continue;
    PinnedSegments(
        g, p, max_value, [&](const std::vector<Step>& steps, int end) {
          const int len = static_cast<int>(steps.size());
          if (end != p) {
            if (end > p && 2 * len <= max_value) {
              entries_.push_back(MakeEntry(WitnessKind::kPinnedPathPair, p,
                                           steps, 2 * len, true, false));
            }
            return;
          }
          if (len == 2) {
            // Two different arcs joining p to the same neighbour.
            if (steps[0].arc < steps[1].arc) {
              entries_.push_back(MakeEntry(WitnessKind::kLiftCollision, p,
                                           steps, 2, true, false));
            }
            return;
          }
          const auto reversed = ReversedSteps(steps);
          if (reversed < steps) return;  // keep one orientation
          const bool same_neighbour =
              StepHead(g, steps.front()) == StepTail(g, steps.back());
          entries_.push_back(MakeEntry(WitnessKind::kPinnedReturn, p, steps,
                                       len, !same_neighbour, false));
        });
  }
  const auto order = [](const Entry& a, const Entry& b) {
    return std::make_tuple(a.value, KindRank(a.kind), a.steps.size(),
                           std::cref(a.steps), a.start_vertex) <
           std::make_tuple(b.value, KindRank(b.kind), b.steps.size(),
                           std::cref(b.steps), b.start_vertex);
  };
  std::sort(entries_.begin(), entries_.end(), order);

  if (with_unit_modulus_) {
    // At m = 1 every closed walk closes up; pinned vertices are ordinary.
    for (ClosedWalk& w : EnumerateClosedWalks(g, max_value, false)) {
      const int len = w.length();
      const WitnessKind kind =
          len <= 2 ? WitnessKind::kLiftCollision : WitnessKind::kClosedWalk;
      unit_entries_.push_back(
          MakeEntry(kind, w.start_vertex, std::move(w.steps), len, true, true));
    }
    std::sort(unit_entries_.begin(), unit_entries_.end(), order);
  }
}

ShortStructureTable::Entry ShortStructureTable::MakeEntry(
    WitnessKind kind, int start, std::vector<Step> steps, int value,
    bool unconditional, bool zero_violates) const {
  Entry e{kind, start, std::move(steps), value, unconditional, zero_violates,
          0,    {}};
  std::vector<int> coefficient(free_arcs_.size(), 0);
  for (const Step& s : e.steps) {
    const int idx = free_index_[s.arc];
    if (idx < 0) {
      e.constant += StepVoltage(*g_, s);
    } else {
      coefficient[idx] += s.forward ? 1 : -1;
    }
  }
  for (int i = 0; i < static_cast<int>(coefficient.size()); ++i) {
    if (coefficient[i] != 0) e.terms.emplace_back(i, coefficient[i]);
  }
  return e;
}

Voltage ShortStructureTable::Sum(const Entry& e,
                                 std::span<const Voltage> free_values) const {
  Voltage sum = e.constant;
  for (const auto& [idx, coef] : e.terms) sum += coef * free_values[idx];
  return sum;
}

Witness ShortStructureTable::ToWitness(const Entry& e, Voltage sum) const {
  Witness w;
  w.kind = e.kind;
  w.start_vertex = e.start_vertex;
  w.steps = e.steps;
  w.voltage_sum = sum;
  w.lift_cycle_length = e.value;
  if (e.kind == WitnessKind::kClosedWalk) {
    ClosedWalk walk{e.start_vertex, e.steps, sum};
    w.wrap_count = WrapCount(walk);
  }
  return w;
}

std::optional<Witness> ShortStructureTable::FirstViolation(
    int m, std::span<const Voltage> free_values) const {
  if (m < 1) throw Error(ErrorCode::kInvalidArgument, "modulus must be >= 1");
  if (free_values.size() != free_arcs_.size()) {
    throw Error(ErrorCode::kInvalidArgument,
                "expected " + std::to_string(free_arcs_.size()) +
                    " free voltages, got " +
                    std::to_string(free_values.size()));
  }
  if (m == 1) {
    if (!with_unit_modulus_) {
      throw Error(ErrorCode::kInvalidArgument,
                  "table was built without m = 1 support");
    }
    if (unit_entries_.empty()) return std::nullopt;
    const Entry& e = unit_entries_.front();
    return ToWitness(e, Sum(e, free_values));
  }
  for (const Entry& e : entries_) {
    const Voltage sum = Sum(e, free_values);
    bool violated = e.unconditional;
    if (!violated) {
      const bool zero = Reduce(sum, m) == 0;
      violated = e.zero_violates ? zero : !zero;
    }
    if (violated) return ToWitness(e, sum);
  }
  return std::nullopt;
}

CycleCensus Census(const VoltageGraph& g, int max_len) {
  CycleCensus c;
  c.max_len = max_len;
  std::set<Voltage> sums;
  for (const ClosedWalk& w : EnumerateCycles(g, max_len)) {
    ++c.directed_by_length[w.length()];
    ++c.directed_total;
    sums.insert(w.voltage_sum);
  }
  c.undirected_total = c.directed_total / 2;
  c.sums.assign(sums.begin(), sums.end());
  return c;
}

bool GirthCertificate::IsCertified(int m) const {
  for (const auto& v : verdicts) {
    if (v.m == m) return v.verdict == Verdict::kCertified;
  }
  throw Error(ErrorCode::kInvalidArgument,
              "modulus " + std::to_string(m) + " not in certificate");
}

std::vector<int> GirthCertificate::CertifiedModuli() const {
  std::vector<int> out;
  for (const auto& v : verdicts) {
    if (v.verdict == Verdict::kCertified) out.push_back(v.m);
  }
  return out;
}

std::vector<int> GirthCertificate::ViolatedModuli() const {
  std::vector<int> out;
  for (const auto& v : verdicts) {
    if (v.verdict == Verdict::kViolated) out.push_back(v.m);
  }
  return out;
}

GirthCertificate Certify(const VoltageGraph& g, int target_girth,
                         std::span<const int> moduli,
                         const CertifyOptions& options) {
  if (target_girth < 4 || target_girth % 2 != 0) {
    throw Error(ErrorCode::kInvalidArgument,
                "target girth must be even and >= 4, got " +
                    std::to_string(target_girth));
  }
  if (moduli.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "empty modulus range");
  }
  std::vector<int> ms(moduli.begin(), moduli.end());
  std::sort(ms.begin(), ms.end());
  ms.erase(std::unique(ms.begin(), ms.end()), ms.end());
  if (ms.front() < 1) {
    throw Error(ErrorCode::kInvalidArgument, "moduli must be >= 1");
  }
  if (ms.back() < 2) {
    throw Error(ErrorCode::kRangeTooSmall, "largest modulus must be >= 2");
  }

  const ShortStructureTable table(g, target_girth - 1, {}, ms.front() == 1);
  GirthCertificate cert;
  cert.target_girth = target_girth;
  cert.verdicts.resize(ms.size());
  ParallelFor(static_cast<int>(ms.size()), [&](int i) {
    ModulusVerdict& v = cert.verdicts[i];
    v.m = ms[i];
    v.witness = table.FirstViolation(ms[i]);
    v.verdict = v.witness ? Verdict::kViolated : Verdict::kCertified;
  });
  const Length shortest = ShortestPinnedPath(g);
  cert.pinned_ceiling =
      shortest.is_finite() ? Length(2 * shortest.value()) : shortest;
  if (options.census) cert.census = Census(g, target_girth - 2);
  return cert;
}

GirthCertificate Certify(const VoltageGraph& g, int target_girth, int m_min,
                         int m_max, const CertifyOptions& options) {
  if (m_min > m_max) {
    throw Error(ErrorCode::kInvalidArgument, "empty modulus range");
  }
  std::vector<int> ms(m_max - m_min + 1);
  std::iota(ms.begin(), ms.end(), m_min);
  return Certify(g, target_girth, ms, options);
}

std::vector<int> TraceWalk(const VoltageGraph& g, int start,
                           std::span<const Step> steps, int m, int fiber) {
  const LiftLayout layout(g, m);
  WalkVertices(g, start, steps);  // validates consecutiveness
  int f = Reduce(fiber, m);
  std::vector<int> out{layout.Index(start, f)};
  for (const Step& s : steps) {
    f = Reduce(f + StepVoltage(g, s), m);
    out.push_back(layout.Index(StepHead(g, s), f));
  }
  return out;
}

std::vector<int> TraceWitness(const VoltageGraph& g, const Witness& w, int m) {
  if (w.kind == WitnessKind::kPinnedPathPair) {
    const auto v0 = TraceWalk(g, w.start_vertex, w.steps, m, 0);
    const auto v1 = TraceWalk(g, w.start_vertex, w.steps, m, 1);
    std::vector<int> out = v0;
    out.insert(out.end(), v1.rbegin() + 1, v1.rend() - 1);
    return out;
  }
  auto out = TraceWalk(g, w.start_vertex, w.steps, m, 0);
  out.pop_back();
  return out;
}

std::vector<int> TracePinnedPath(const VoltageGraph& g, const PinnedPath& p,
                                 int m) {
  Witness w;
  w.kind = WitnessKind::kPinnedPathPair;
  w.start_vertex = p.from;
  w.steps = p.steps;
  return TraceWitness(g, w, m);
}

std::vector<int> TraceLollipop(const VoltageGraph& g, const Lollipop& l,
                               int m) {
  const LiftLayout layout(g, m);
  const auto out_path = TraceWalk(g, l.pinned, l.path, m, 0);
  const int attach = l.cycle.start_vertex;
  const int f = layout.Fiber(out_path.back());
  const auto around = TraceWalk(g, attach, l.cycle.steps, m, f);
  const auto back = TraceWalk(g, attach, ReversedSteps(l.path), m,
                              layout.Fiber(around.back()));
  std::vector<int> out = out_path;
  out.insert(out.end(), around.begin() + 1, around.end());
  out.insert(out.end(), back.begin() + 1, back.end() - 1);
  return out;
}

bool IsMinimalZeroSum(const VoltageGraph& g, const ClosedWalk& w, int m) {
  auto lifted = TraceWalk(g, w.start_vertex, w.steps, m, 0);
  if (lifted.back() != lifted.front()) return false;
  lifted.pop_back();
  std::sort(lifted.begin(), lifted.end());
  return std::adjacent_find(lifted.begin(), lifted.end()) == lifted.end();
}

bool G6Condition(Voltage alpha, Voltage beta, int m) {
  return Reduce(alpha, m) != 0 && Reduce(beta, m) != 0 &&
         Reduce(alpha - beta, m) != 0 && Reduce(2 * (alpha - beta), m) != 0;
}

bool G8Condition(Voltage alpha, Voltage beta, Voltage gamma, Voltage delta,
                 int m) {
  for (Voltage s :
       {alpha, beta, gamma, delta, alpha - beta, gamma - delta, alpha - gamma,
        beta - delta, alpha - beta - gamma + delta}) {
    if (Reduce(s, m) == 0) return false;
  }
  return true;
}

}  // namespace cagelift
