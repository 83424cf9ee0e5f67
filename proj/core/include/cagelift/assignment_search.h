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

#ifndef CAGELIFT_ASSIGNMENT_SEARCH_H_
#define CAGELIFT_ASSIGNMENT_SEARCH_H_

#include <chrono>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "cagelift/voltage_graph.h"

namespace cagelift {

enum class SearchStrategy { kExhaustive, kRandom };

std::string_view StrategyName(SearchStrategy s);
SearchStrategy ParseStrategy(std::string_view name);

struct SearchProblem {
  VoltageGraph skeleton;
  // Arc indices whose voltages are searched; their current voltages are
  // ignored. They must not touch pinned vertices.
  std::vector<int> free_arcs;
  int target_girth = 0;
  std::vector<int> moduli;  // every one must certify
  // Inclusive voltage range; defaults to -g/2 .. g/2.
  std::optional<Voltage> low;
  std::optional<Voltage> high;
  SearchStrategy strategy = SearchStrategy::kExhaustive;
  std::uint64_t seed = 0;
  std::int64_t budget = 1'000'000;  // maximum candidates
  std::int64_t max_solutions = 0;   // 0 = no limit
};

struct SearchSolution {
  std::vector<Voltage> voltages;  // ordered like free_arcs
  std::vector<int> certified_moduli;

  friend bool operator==(const SearchSolution&,
                         const SearchSolution&) = default;
};

struct SearchResult {
  std::vector<SearchSolution> solutions;  // in candidate order
  std::int64_t candidates_tried = 0;
  // Random strategy only: the budget ran out before max_solutions was met.
  bool budget_exhausted = false;
  std::chrono::nanoseconds elapsed{0};
};

// Exhaustive search visits assignments in lexicographic order and requires
// |range|^|free| <= budget (InvalidArgument otherwise). Random search draws
// each free voltage uniformly from a generator seeded with `seed`, skipping
// repeats. Every solution is re-certified from scratch and its lift girth at
// the smallest modulus is checked by breadth-first search. Results do not
// depend on the thread count.
SearchResult Search(const SearchProblem& problem);

}  // namespace cagelift

#endif  // CAGELIFT_ASSIGNMENT_SEARCH_H_
