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

#include "cagelift/report_json.h"

#include <nlohmann/json.hpp>

#include "cagelift/text_formats.h"

namespace cagelift {
namespace {

using nlohmann::json;

json LengthJson(const Length& l) {
  return l.is_finite() ? json(l.value()) : json(nullptr);
}

json StepsJson(const VoltageGraph& g, const Witness& w) {
  json steps = json::array();
  for (const Step& s : w.steps) {
    steps.push_back({{"arc", s.arc},
                     {"forward", s.forward},
                     {"from", g.name(StepTail(g, s))},
                     {"to", g.name(StepHead(g, s))},
                     {"voltage", StepVoltage(g, s)}});
  }
  return steps;
}

}  // namespace

std::string GraphReportToJson(const GraphReport& r) {
  json hist = json::object();
  for (const auto& [degree, count] : r.degree_histogram) {
    hist[std::to_string(degree)] = count;
  }
  const json j = {{"order", r.order},
                  {"size", r.size},
                  {"girth", LengthJson(r.girth)},
                  {"bipartite", r.bipartite},
                  {"degree_histogram", hist},
                  {"components", r.components},
                  {"diameter", LengthJson(r.diameter)},
                  {"component_diameters", r.component_diameters}};
  return j.dump();
}

std::string CertificateToJson(const VoltageGraph& g,
                              const GirthCertificate& cert) {
  json verdicts = json::array();
  for (const auto& v : cert.verdicts) {
    json entry = {{"m", v.m},
                  {"verdict", v.verdict == Verdict::kCertified ? "certified"
                                                               : "violated"}};
    if (v.witness) {
      const Witness& w = *v.witness;
      entry["witness"] = {{"kind", std::string(WitnessKindName(w.kind))},
                          {"start", g.name(w.start_vertex)},
                          {"length", w.walk_length()},
                          {"sum", w.voltage_sum},
                          {"wrap_count", w.wrap_count},
                          {"lift_cycle_length", w.lift_cycle_length},
                          {"steps", StepsJson(g, w)}};
    }
    verdicts.push_back(std::move(entry));
  }
  json j = {{"target_girth", cert.target_girth},
            {"pinned_ceiling", LengthJson(cert.pinned_ceiling)},
            {"verdicts", verdicts}};
  if (cert.census) {
    json by_length = json::object();
    for (const auto& [len, count] : cert.census->directed_by_length) {
      by_length[std::to_string(len)] = count;
    }
    j["census"] = {{"max_len", cert.census->max_len},
                   {"directed_by_length", by_length},
                   {"directed_total", cert.census->directed_total},
                   {"undirected_total", cert.census->undirected_total},
                   {"sums", cert.census->sums}};
  }
  return j.dump();
}

std::string SearchResultToJson(const SearchProblem& p, const SearchResult& r) {
  json solutions = json::array();
  for (const auto& s : r.solutions) {
    json arcs = json::array();
    for (size_t i = 0; i < p.free_arcs.size(); ++i) {
      const Arc& a = p.skeleton.arc(p.free_arcs[i]);
      arcs.push_back({{"arc", p.free_arcs[i]},
                      {"tail", p.skeleton.name(a.tail)},
                      {"head", p.skeleton.name(a.head)},
                      {"voltage", s.voltages[i]}});
    }
    solutions.push_back(
        {{"arcs", arcs}, {"certified_moduli", s.certified_moduli}});
  }
  const json j = {{"strategy", std::string(StrategyName(p.strategy))},
                  {"seed", p.seed},
                  {"candidates_tried", r.candidates_tried},
                  {"budget_exhausted", r.budget_exhausted},
                  {"solutions", solutions}};
  return j.dump();
}

}  // namespace cagelift
