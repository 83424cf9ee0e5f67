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

#include "cagelift/assignment_search.h"

#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>
#include <string>

#include "cagelift/cycle_analysis.h"
#include "cagelift/error.h"
#include "cagelift/graph_analysis.h"
#include "cagelift/lift.h"
#include "cagelift/parallel.h"

namespace cagelift {
namespace {

constexpr std::int64_t kChunk = 4096;

struct Prepared {
  std::vector<int> moduli;  // ascending, unique
  Voltage low = 0;
  Voltage high = 0;
};

Prepared Prepare(const SearchProblem& p) {
  if (p.target_girth < 4 || p.target_girth % 2 != 0) {
    throw Error(ErrorCode::kInvalidArgument,
                "target girth must be even and >= 4");
  }
  if (p.moduli.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "empty modulus set");
  }
  if (p.free_arcs.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "no free arcs");
  }
  if (p.budget < 1) throw Error(ErrorCode::kInvalidArgument, "budget < 1");
  Prepared out;
  out.moduli = p.moduli;
  std::sort(out.moduli.begin(), out.moduli.end());
  out.moduli.erase(std::unique(out.moduli.begin(), out.moduli.end()),
                   out.moduli.end());
  if (out.moduli.front() < 1) {
    throw Error(ErrorCode::kInvalidArgument, "moduli must be >= 1");
  }
  out.low = p.low.value_or(-p.target_girth / 2);
  out.high = p.high.value_or(p.target_girth / 2);
  if (out.low > out.high) {
    throw Error(ErrorCode::kInvalidArgument, "empty voltage range");
  }
  return out;
}

// Decodes candidate `index` in mixed radix, first free arc most significant.
std::vector<Voltage> Decode(std::int64_t index, int arity, Voltage low,
                            std::int64_t width) {
  std::vector<Voltage> x(arity);
  for (int i = arity - 1; i >= 0; --i) {
    x[i] = low + index % width;
    index /= width;
  }
  return x;
}

class Evaluator {
 public:
  Evaluator(const SearchProblem& p, const Prepared& prep)
      : problem_(p),
        prep_(prep),
        table_(p.skeleton, p.target_girth - 1, p.free_arcs,
               prep.moduli.front() == 1) {}

  bool Passes(const std::vector<Voltage>& x) const {
    for (int m : prep_.moduli) {
      if (table_.FirstViolation(m, x)) return false;
    }
    return true;
  }

  // Independent confirmation of a passing candidate.
  void Confirm(const std::vector<Voltage>& x) const {
    const VoltageGraph g =
        problem_.skeleton.WithVoltages(problem_.free_arcs, x);
    const auto cert = Certify(g, problem_.target_girth, prep_.moduli);
    const Length girth = Girth(Lift(g, prep_.moduli.front()));
    if (cert.ViolatedModuli().size() != 0 ||
        girth < Length(problem_.target_girth)) {
      throw std::logic_error(
          "candidate passed the structure table but failed re-verification");
    }
  }

 private:
  const SearchProblem& problem_;
  const Prepared& prep_;
  ShortStructureTable table_;
};

// Evaluates a batch in parallel; returns the pass flags in batch order.
std::vector<char> EvaluateBatch(
    const Evaluator& eval, const std::vector<std::vector<Voltage>>& batch) {
  std::vector<char> pass(batch.size(), 0);
  ParallelFor(static_cast<int>(batch.size()),
              [&](int i) { pass[i] = eval.Passes(batch[i]) ? 1 : 0; });
  return pass;
}

}  // namespace

std::string_view StrategyName(SearchStrategy s) {
  return s == SearchStrategy::kExhaustive ? "exhaustive" : "random";
}

SearchStrategy ParseStrategy(std::string_view name) {
  if (name == "exhaustive") return SearchStrategy::kExhaustive;
  if (name == "random" || name == "random_restart") {
    return SearchStrategy::kRandom;
  }
  throw Error(ErrorCode::kInvalidArgument,
              "unknown strategy '" + std::string(name) + "'");
}

SearchResult Search(const SearchProblem& problem) {
  const auto started = std::chrono::steady_clock::now();
  const Prepared prep = Prepare(problem);
  const Evaluator eval(problem, prep);
  const int arity = static_cast<int>(problem.free_arcs.size());
  const std::int64_t width = prep.high - prep.low + 1;

  SearchResult result;
  const auto done = [&] {
    return problem.max_solutions > 0 &&
           static_cast<std::int64_t>(result.solutions.size()) >=
               problem.max_solutions;
  };
  // Consumes an evaluated batch in order; returns false once finished.
  const auto absorb = [&](const std::vector<std::vector<Voltage>>& batch,
                          const std::vector<char>& pass) {
    for (size_t i = 0; i < batch.size(); ++i) {
      ++result.candidates_tried;
      if (!pass[i]) continue;
      eval.Confirm(batch[i]);
      result.solutions.push_back({batch[i], prep.moduli});
      if (done()) return false;
    }
    return true;
  };

  if (problem.strategy == SearchStrategy::kExhaustive) {
    std::int64_t total = 1;
    for (int i = 0; i < arity; ++i) {
      if (total > problem.budget / width) {
        total = problem.budget + 1;
        break;
      }
      total *= width;
    }
    if (total > problem.budget) {
      throw Error(ErrorCode::kInvalidArgument,
                  "exhaustive search space exceeds the budget of " +
                      std::to_string(problem.budget) + " candidates");
    }
    for (std::int64_t begin = 0; begin < total; begin += kChunk) {
      std::vector<std::vector<Voltage>> batch;
      for (std::int64_t i = begin; i < std::min(total, begin + kChunk); ++i) {
        batch.push_back(Decode(i, arity, prep.low, width));
      }
      if (!absorb(batch, EvaluateBatch(eval, batch))) break;
    }
  } else {
    std::mt19937_64 rng(problem.seed);
    std::uniform_int_distribution<Voltage> draw(prep.low, prep.high);
    std::set<std::vector<Voltage>> seen;
    // The space may be smaller than the budget; stop once it is covered.
    long double space = 1;
    for (int i = 0; i < arity; ++i) space *= static_cast<long double>(width);
    std::int64_t drawn = 0;
    bool finished = false;
    while (!finished && drawn < problem.budget &&
           static_cast<long double>(seen.size()) < space) {
      std::vector<std::vector<Voltage>> batch;
      while (static_cast<std::int64_t>(batch.size()) < kChunk &&
             drawn < problem.budget &&
             static_cast<long double>(seen.size()) < space) {
        std::vector<Voltage> x(arity);
        for (auto& v : x) v = draw(rng);
        ++drawn;
        if (seen.insert(x).second) batch.push_back(std::move(x));
      }
      finished = !absorb(batch, EvaluateBatch(eval, batch));
    }
    result.budget_exhausted = !finished && drawn >= problem.budget;
  }
  result.elapsed = std::chrono::steady_clock::now() - started;
  return result;
}

}  // namespace cagelift
