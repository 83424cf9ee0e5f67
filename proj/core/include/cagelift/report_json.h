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

#ifndef CAGELIFT_REPORT_JSON_H_
#define CAGELIFT_REPORT_JSON_H_

#include <string>

#include "cagelift/assignment_search.h"
#include "cagelift/cycle_analysis.h"
#include "cagelift/graph_analysis.h"
#include "cagelift/voltage_graph.h"

namespace cagelift {

// Single-line JSON objects. Infinite lengths are written as null. Output is
// deterministic except for the search's elapsed time, which is omitted.
std::string GraphReportToJson(const GraphReport& r);
std::string CertificateToJson(const VoltageGraph& g,
                              const GirthCertificate& cert);
std::string SearchResultToJson(const SearchProblem& p, const SearchResult& r);

}  // namespace cagelift

#endif  // CAGELIFT_REPORT_JSON_H_
