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

#include "cli.h"

#include <CLI11.hpp>
#include <charconv>
#include <fstream>
#include <iostream>
#include <iterator>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "cagelift/assignment_search.h"
#include "cagelift/constructions.h"
#include "cagelift/cycle_analysis.h"
#include "cagelift/error.h"
#include "cagelift/graph6.h"
#include "cagelift/graph_analysis.h"
#include "cagelift/identification.h"
#include "cagelift/lift.h"
#include "cagelift/report_json.h"
#include "cagelift/text_formats.h"

namespace cagelift::cli {
namespace {

enum class Format { kAuto, kG6, kEdges, kDot, kVg };

const std::map<std::string, Format> kFormats = {{"auto", Format::kAuto},
                                                {"g6", Format::kG6},
                                                {"edges", Format::kEdges},
                                                {"dot", Format::kDot},
                                                {"vg", Format::kVg}};

struct Globals {
  std::string output;
  Format format = Format::kAuto;
  bool json = false;
};

std::string ReadInput(const std::string& path) {
  if (path == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin), {});
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kInvalidArgument, "cannot open " + path);
  return std::string(std::istreambuf_iterator<char>(in), {});
}

Format FormatFromPath(const std::string& path) {
  const auto ends_with = [&](std::string_view suffix) {
    return path.size() >= suffix.size() &&
           path.compare(path.size() - suffix.size(), suffix.size(), suffix) ==
               0;
  };
  if (ends_with(".g6")) return Format::kG6;
  if (ends_with(".vg")) return Format::kVg;
  if (ends_with(".edges") || ends_with(".txt")) return Format::kEdges;
  if (ends_with(".dot") || ends_with(".gv")) return Format::kDot;
  return Format::kAuto;
}

// Guesses from the content when the extension is not conclusive.
Format Sniff(const std::string& text) {
  std::istringstream in(text);
  std::string word;
  in >> word;
  if (word == "vertex" || word == "arc" || word.rfind('#', 0) == 0) {
    return Format::kVg;
  }
  if (word == "order") return Format::kEdges;
  return Format::kG6;
}

Format ResolveInputFormat(const std::string& path, Format requested,
                          const std::string& text) {
  if (requested != Format::kAuto) return requested;
  const Format by_path = FormatFromPath(path);
  return by_path != Format::kAuto ? by_path : Sniff(text);
}

SimpleGraph ParseSimpleGraph(const std::string& text, Format format) {
  switch (format) {
    case Format::kG6: {
      std::istringstream in(text);
      std::string line;
      while (std::getline(in, line) && line.empty()) {
      }
      return ReadGraph6(line);
    }
    case Format::kEdges:
      return ReadEdgeList(text);
    default:
      throw Error(ErrorCode::kInvalidArgument,
                  "expected a graph6 or edge-list file");
  }
}

SimpleGraph ReadSimpleGraph(const std::string& path, Format requested) {
  const std::string text = ReadInput(path);
  return ParseSimpleGraph(text, ResolveInputFormat(path, requested, text));
}

VoltageGraph ReadVoltageGraphFile(const std::string& path) {
  return ReadVoltageGraph(ReadInput(path));
}

std::string RenderSimple(const SimpleGraph& g, Format f) {
  switch (f) {
    case Format::kAuto:
    case Format::kG6:
      return WriteGraph6(g) + "\n";
    case Format::kEdges:
      return WriteEdgeList(g);
    case Format::kDot:
      return ExportDot(g);
    case Format::kVg:
      break;
  }
  throw Error(ErrorCode::kInvalidArgument,
              "a simple graph cannot be written as a voltage graph");
}

std::string RenderVoltage(const VoltageGraph& g, Format f) {
  switch (f) {
    case Format::kAuto:
    case Format::kVg:
      return WriteVoltageGraph(g);
    case Format::kDot:
      return ExportDot(g);
    default:
      break;
  }
  throw Error(ErrorCode::kInvalidArgument,
              "a voltage graph can only be written as vg or dot; lift it "
              "first");
}

void Emit(const Globals& globals, std::ostream& out, const std::string& text) {
  if (globals.output.empty() || globals.output == "-") {
    out << text;
    return;
  }
  std::ofstream file(globals.output, std::ios::binary);
  if (!file) {
    throw Error(ErrorCode::kInvalidArgument, "cannot write " + globals.output);
  }
  file << text;
}

template <typename Int>
Int ParseNumber(std::string_view token, const std::string& what) {
  Int value{};
  const auto [end, ec] =
      std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || end != token.data() + token.size()) {
    throw Error(ErrorCode::kInvalidArgument,
                "bad " + what + " '" + std::string(token) + "'");
  }
  return value;
}

std::vector<int> ParseIntList(const std::string& text,
                              const std::string& what) {
  std::vector<int> out;
  std::string_view rest = text;
  while (!rest.empty()) {
    const size_t comma = rest.find(',');
    out.push_back(ParseNumber<int>(rest.substr(0, comma), what));
    if (comma == std::string_view::npos) break;
    rest.remove_prefix(comma + 1);
  }
  if (out.empty()) throw Error(ErrorCode::kInvalidArgument, "empty " + what);
  return out;
}

std::pair<Voltage, Voltage> ParseRange(const std::string& text) {
  const size_t dots = text.find("..");
  if (dots == std::string::npos) {
    throw Error(ErrorCode::kInvalidArgument,
                "range must look like LOW..HIGH, got '" + text + "'");
  }
  return {
      ParseNumber<Voltage>(std::string_view(text).substr(0, dots), "range"),
      ParseNumber<Voltage>(std::string_view(text).substr(dots + 2), "range")};
}

int ResolveVertex(const SimpleGraph& g, const std::string& name) {
  const int by_label = g.FindLabel(name);
  if (by_label >= 0) return by_label;
  const int index = ParseNumber<int>(name, "vertex");
  if (index < 0 || index >= g.order()) {
    throw Error(ErrorCode::kInvalidArgument, "no vertex '" + name + "'");
  }
  return index;
}

std::string AnalyzeText(const GraphReport& r) {
  std::ostringstream out;
  out << "order=" << r.order << "\n"
      << "size=" << r.size << "\n"
      << "girth=" << r.girth.ToString() << "\n"
      << "bipartite=" << (r.bipartite ? "true" : "false") << "\n"
      << "degree_histogram=";
  bool first = true;
  for (const auto& [degree, count] : r.degree_histogram) {
    out << (first ? "" : ",") << degree << ":" << count;
    first = false;
  }
  out << "\ncomponents=" << r.components << "\n"
      << "diameter=" << r.diameter.ToString() << "\n";
  return out.str();
}

std::string CertifyText(const VoltageGraph& g, const GirthCertificate& cert) {
  std::ostringstream out;
  out << "# target_girth=" << cert.target_girth
      << " pinned_ceiling=" << cert.pinned_ceiling.ToString() << "\n";
  out << "m\tverdict\twitness\n";
  for (const auto& v : cert.verdicts) {
    out << v.m << "\t"
        << (v.verdict == Verdict::kCertified ? "certified" : "violated") << "\t"
        << (v.witness ? DescribeWitness(g, *v.witness) : "-") << "\n";
  }
  if (cert.census) {
    const CycleCensus& c = *cert.census;
    out << "# census max_len=" << c.max_len << " directed=" << c.directed_total
        << " undirected=" << c.undirected_total << "\n";
    for (const auto& [len, count] : c.directed_by_length) {
      out << "length " << len << ": " << count << "\n";
    }
    out << "sums:";
    for (Voltage s : c.sums) out << " " << s;
    out << "\n";
  }
  return out.str();
}

std::string SearchText(const SearchProblem& p, const SearchResult& r) {
  std::ostringstream out;
  for (const auto& s : r.solutions) {
    for (size_t i = 0; i < p.free_arcs.size(); ++i) {
      const Arc& a = p.skeleton.arc(p.free_arcs[i]);
      out << (i ? "; " : "") << "arc " << p.skeleton.name(a.tail) << " "
          << p.skeleton.name(a.head) << " " << s.voltages[i];
    }
    out << "\n";
  }
  return out.str();
}

}  // namespace

int Run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Voltage-graph lifts, girth certificates and biregular cages",
               "cagelift"};
  app.require_subcommand(1);

  Globals globals;
  app.add_option("-o,--output", globals.output, "Write output to this file");
  app.add_option("--format", globals.format, "Output format")
      ->transform(CLI::CheckedTransformer(kFormats, CLI::ignore_case));
  app.add_flag("--json", globals.json, "Print reports as JSON");

  // construct
  auto* construct = app.add_subcommand("construct", "Build a named graph");
  std::string family;
  int t = 0;
  std::optional<Voltage> alpha, beta, gamma, delta, h12_v;
  construct
      ->add_option("--family", family,
                   "G6, G8, G10, H10, G12, H12, T4t2, T4t or K33")
      ->required();
  construct->add_option("--t", t, "Tree parameter for T4t2 and T4t");
  construct->add_option("--alpha", alpha);
  construct->add_option("--beta", beta);
  construct->add_option("--gamma", gamma);
  construct->add_option("--delta", delta);
  construct->add_option("--h12-v", h12_v, "Voltage v of H12");

  // lift
  auto* lift = app.add_subcommand("lift", "Lift a voltage graph over Z_m");
  std::string lift_input;
  int lift_m = 0;
  lift->add_option("input", lift_input, "Voltage graph file ('-' = stdin)")
      ->required();
  lift->add_option("--m", lift_m, "Modulus")->required();

  // analyze
  auto* analyze = app.add_subcommand("analyze", "Report graph invariants");
  std::string analyze_input;
  Format input_format = Format::kAuto;
  std::optional<int> analyze_m;
  analyze->add_option("input", analyze_input, "Graph file ('-' = stdin)")
      ->required();
  analyze->add_option("--input-format", input_format)
      ->transform(CLI::CheckedTransformer(kFormats, CLI::ignore_case));
  analyze->add_option("--m", analyze_m, "Lift a voltage graph input first");

  // certify
  auto* certify = app.add_subcommand("certify", "Certify lift girth per m");
  std::string certify_input;
  int girth = 0, m_min = 3, m_max = 20;
  bool census = false;
  certify->add_option("input", certify_input, "Voltage graph file")->required();
  certify->add_option("--girth", girth, "Target girth")->required();
  certify->add_option("--m-min", m_min, "Smallest modulus");
  certify->add_option("--m-max", m_max, "Largest modulus");
  certify->add_flag("--census", census, "Also count short cycles");

  // identify
  auto* identify =
      app.add_subcommand("identify", "Glue copies of a cubic graph");
  std::string base_path, x_name, y_name;
  int identify_girth = 0, identify_m = 0;
  identify->add_option("--base", base_path, "Base graph (graph6 or edges)")
      ->required();
  identify->add_option("--girth", identify_girth)->required();
  identify->add_option("--m", identify_m)->required();
  identify->add_option("--x", x_name, "First glue vertex (label or index)");
  identify->add_option("--y", y_name, "Second glue vertex");

  // search
  auto* search = app.add_subcommand("search", "Search voltage assignments");
  std::string skeleton_path, free_list, m_list, range;
  std::string strategy = "exhaustive";
  int search_girth = 0;
  std::uint64_t seed = 0;
  std::int64_t budget = 1'000'000, max_solutions = 0;
  search->add_option("--skeleton", skeleton_path)->required();
  search->add_option("--free", free_list, "Comma-separated arc indices")
      ->required();
  search->add_option("--girth", search_girth)->required();
  search->add_option("--m-set", m_list, "Comma-separated moduli")->required();
  search->add_option("--range", range, "LOW..HIGH (default -g/2..g/2)");
  search->add_option("--strategy", strategy, "exhaustive or random");
  search->add_option("--seed", seed);
  search->add_option("--budget", budget);
  search->add_option("--max-solutions", max_solutions, "0 = no limit");

  // convert
  auto* convert = app.add_subcommand("convert", "Convert between formats");
  std::string convert_input;
  convert->add_option("input", convert_input)->required();
  convert->add_option("--input-format", input_format)
      ->transform(CLI::CheckedTransformer(kFormats, CLI::ignore_case));

  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code;
  }

  try {
    if (construct->parsed()) {
      const Family f = ParseFamily(family);
      if (f == Family::kK33) {
        Emit(globals, out, RenderSimple(BuildK33(), globals.format));
        return 0;
      }
      ConstructionSpec spec;
      spec.family = f;
      spec.t = t;
      spec.h12_v = h12_v;
      for (const auto& p : {alpha, beta, gamma, delta}) {
        if (p) spec.params.push_back(*p);
      }
      Emit(globals, out, RenderVoltage(Build(spec), globals.format));
    } else if (lift->parsed()) {
      const VoltageGraph g = ReadVoltageGraphFile(lift_input);
      Emit(globals, out, RenderSimple(Lift(g, lift_m), globals.format));
    } else if (analyze->parsed()) {
      SimpleGraph g;
      const std::string text = ReadInput(analyze_input);
      const Format f = ResolveInputFormat(analyze_input, input_format, text);
      if (f == Format::kVg) {
        if (!analyze_m) {
          throw Error(ErrorCode::kInvalidArgument,
                      "analyzing a voltage graph needs --m");
        }
        g = Lift(ReadVoltageGraph(text), *analyze_m);
      } else {
        g = ParseSimpleGraph(text, f);
      }
      const GraphReport r = Analyze(g);
      Emit(globals, out,
           globals.json ? GraphReportToJson(r) + "\n" : AnalyzeText(r));
    } else if (certify->parsed()) {
      const VoltageGraph g = ReadVoltageGraphFile(certify_input);
      const auto cert = Certify(g, girth, m_min, m_max, {.census = census});
      Emit(globals, out,
           globals.json ? CertificateToJson(g, cert) + "\n"
                        : CertifyText(g, cert));
    } else if (identify->parsed()) {
      IdentifySpec spec;
      spec.base = ReadSimpleGraph(base_path, Format::kAuto);
      spec.girth = identify_girth;
      spec.m = identify_m;
      if (x_name.empty() != y_name.empty()) {
        throw Error(ErrorCode::kInvalidArgument,
                    "--x and --y must be given together");
      }
      if (!x_name.empty()) {
        spec.remote_pair = Edge{ResolveVertex(spec.base, x_name),
                                ResolveVertex(spec.base, y_name)};
      }
      Emit(globals, out, RenderSimple(Identify(spec), globals.format));
    } else if (search->parsed()) {
      SearchProblem p;
      p.skeleton = ReadVoltageGraphFile(skeleton_path);
      p.free_arcs = ParseIntList(free_list, "arc index");
      p.target_girth = search_girth;
      p.moduli = ParseIntList(m_list, "modulus");
      if (!range.empty()) std::tie(p.low, p.high) = ParseRange(range);
      p.strategy = ParseStrategy(strategy);
      p.seed = seed;
      p.budget = budget;
      p.max_solutions = max_solutions;
      const SearchResult r = Search(p);
      if (r.budget_exhausted) {
        err << "cagelift: " << ErrorCodeName(ErrorCode::kBudgetExceeded)
            << ": stopped after " << r.candidates_tried << " candidates with "
            << r.solutions.size() << " solutions\n";
      }
      Emit(globals, out,
           globals.json ? SearchResultToJson(p, r) + "\n" : SearchText(p, r));
    } else if (convert->parsed()) {
      const std::string text = ReadInput(convert_input);
      const Format f = ResolveInputFormat(convert_input, input_format, text);
      if (f == Format::kVg) {
        Emit(globals, out,
             RenderVoltage(ReadVoltageGraph(text), globals.format));
      } else {
        Emit(globals, out,
             RenderSimple(ParseSimpleGraph(text, f), globals.format));
      }
    }
  } catch (const std::exception& e) {
    err << "cagelift: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace cagelift::cli
