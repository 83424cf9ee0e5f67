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

#include "cagelift/text_formats.h"

#include <cctype>
#include <charconv>
#include <sstream>
#include <unordered_map>
#include <vector>

#include "cagelift/error.h"

namespace cagelift {
namespace {

std::vector<std::string_view> Tokens(std::string_view line) {
  if (const size_t hash = line.find('#'); hash != std::string_view::npos) {
    line = line.substr(0, hash);
  }
  std::vector<std::string_view> out;
  size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i])))
      ++i;
    size_t j = i;
    while (j < line.size() &&
           !std::isspace(static_cast<unsigned char>(line[j])))
      ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

// Calls `fn(line_number, tokens)` for every non-empty line.
template <typename Fn>
void ForEachLine(std::string_view text, Fn&& fn) {
  int line_number = 0;
  while (!text.empty()) {
    const size_t nl = text.find('\n');
    const std::string_view line = text.substr(0, nl);
    text =
        nl == std::string_view::npos ? std::string_view() : text.substr(nl + 1);
    ++line_number;
    const auto tokens = Tokens(line);
    if (!tokens.empty()) fn(line_number, tokens);
  }
}

[[noreturn]] void Fail(ErrorCode code, int line, const std::string& message) {
  throw Error(code, "line " + std::to_string(line) + ": " + message);
}

template <typename Int>
Int ParseInt(std::string_view token, int line) {
  Int value{};
  const auto [end, ec] =
      std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || end != token.data() + token.size()) {
    Fail(ErrorCode::kParseError, line,
         "expected an integer, got '" + std::string(token) + "'");
  }
  return value;
}

bool EndsWithStar(std::string_view name) {
  return !name.empty() && name.back() == '*';
}

std::string Quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

}  // namespace

VoltageGraph ReadVoltageGraph(std::string_view text) {
  std::vector<VertexSpec> vertices;
  std::vector<ArcSpec> arcs;
  std::unordered_map<std::string, int> index;
  ForEachLine(text, [&](int line, const std::vector<std::string_view>& tok) {
    if (tok[0] == "vertex") {
      if (tok.size() < 2 || tok.size() > 3 ||
          (tok.size() == 3 && tok[2] != "pinned")) {
        Fail(ErrorCode::kParseError, line, "expected 'vertex <name> [pinned]'");
      }
      const std::string name(tok[1]);
      const bool pinned = tok.size() == 3;
      if (EndsWithStar(name) != pinned) {
        Fail(ErrorCode::kParseError, line,
             pinned ? "pinned vertex '" + name + "' must end in '*'"
                    : "vertex '" + name + "' ends in '*' but is not pinned");
      }
      if (!index.emplace(name, static_cast<int>(vertices.size())).second) {
        Fail(ErrorCode::kDuplicateName, line,
             "duplicate vertex '" + name + "'");
      }
      vertices.push_back({name, pinned});
    } else if (tok[0] == "arc") {
      if (tok.size() != 4) {
        Fail(ErrorCode::kParseError, line,
             "expected 'arc <tail> <head> <voltage>'");
      }
      const std::string tail(tok[1]), head(tok[2]);
      const Voltage voltage = ParseInt<Voltage>(tok[3], line);
      for (const auto& end : {tail, head}) {
        if (index.count(end) == 0) {
          Fail(ErrorCode::kUnknownEndpoint, line,
               "unknown vertex '" + end + "'");
        }
      }
      const bool tail_pinned = vertices[index[tail]].pinned;
      const bool head_pinned = vertices[index[head]].pinned;
      if (tail_pinned && head_pinned) {
        Fail(ErrorCode::kPinnedToPinnedArc, line,
             "arc joins pinned vertices '" + tail + "' and '" + head + "'");
      }
      if ((tail_pinned || head_pinned) && voltage != 0) {
        Fail(ErrorCode::kNonzeroVoltageAtPinned, line,
             "arc at a pinned vertex has voltage " + std::to_string(voltage));
      }
      arcs.push_back({tail, head, voltage});
    } else {
      Fail(ErrorCode::kParseError, line,
           "unknown declaration '" + std::string(tok[0]) + "'");
    }
  });
  return VoltageGraph::Create(std::move(vertices), arcs);
}

std::string ArcLine(const VoltageGraph& g, int arc) {
  const Arc& a = g.arc(arc);
  return "arc " + g.name(a.tail) + " " + g.name(a.head) + " " +
         std::to_string(a.voltage);
}

std::string WriteVoltageGraph(const VoltageGraph& g) {
  std::string out;
  for (const Vertex& v : g.vertices()) {
    out += "vertex " + v.name + (v.pinned ? " pinned\n" : "\n");
  }
  for (int a = 0; a < g.num_arcs(); ++a) out += ArcLine(g, a) + "\n";
  return out;
}

std::string WriteEdgeList(const SimpleGraph& g) {
  std::string out = "order " + std::to_string(g.order()) + "\n";
  for (const auto& [u, v] : g.Edges()) {
    out += std::to_string(u) + " " + std::to_string(v) + "\n";
  }
  return out;
}

SimpleGraph ReadEdgeList(std::string_view text) {
  int n = -1;
  std::vector<Edge> edges;
  ForEachLine(text, [&](int line, const std::vector<std::string_view>& tok) {
    if (tok.size() == 2 && tok[0] == "order") {
      if (n >= 0) Fail(ErrorCode::kParseError, line, "repeated order line");
      n = ParseInt<int>(tok[1], line);
      if (n < 0) Fail(ErrorCode::kParseError, line, "negative order");
      return;
    }
    if (tok.size() != 2) {
      Fail(ErrorCode::kParseError, line, "expected 'u v'");
    }
    if (n < 0) Fail(ErrorCode::kParseError, line, "missing 'order <n>' line");
    const int u = ParseInt<int>(tok[0], line);
    const int v = ParseInt<int>(tok[1], line);
    if (u < 0 || v < 0 || u >= n || v >= n) {
      Fail(ErrorCode::kParseError, line, "endpoint out of range");
    }
    edges.emplace_back(u, v);
  });
  if (n < 0) throw Error(ErrorCode::kParseError, "missing 'order <n>' line");
  return SimpleGraph::FromEdges(n, edges);
}

std::string ExportDot(const VoltageGraph& g) {
  std::ostringstream out;
  out << "digraph G {\n  node [shape=circle];\n";
  for (const Vertex& v : g.vertices()) {
    out << "  " << Quote(v.name);
    if (v.pinned) out << " [shape=box]";
    out << ";\n";
  }
  for (const Arc& a : g.arcs()) {
    out << "  " << Quote(g.name(a.tail)) << " -> " << Quote(g.name(a.head));
    if (a.voltage == 0) {
      out << " [dir=none]";
    } else {
      out << " [label=" << Quote(std::to_string(a.voltage)) << "]";
    }
    out << ";\n";
  }
  out << "}\n";
  return out.str();
}

std::string ExportDot(const SimpleGraph& g) {
  std::ostringstream out;
  out << "graph G {\n";
  for (int v = 0; v < g.order(); ++v) {
    out << "  " << v << " [label=" << Quote(g.label(v)) << "];\n";
  }
  for (const auto& [u, v] : g.Edges()) out << "  " << u << " -- " << v << ";\n";
  out << "}\n";
  return out.str();
}

std::string DescribeWalk(const VoltageGraph& g, int start,
                         std::span<const Step> steps) {
  const auto vertices = WalkVertices(g, start, steps);
  std::string out = g.name(vertices[0]);
  for (size_t i = 0; i < steps.size(); ++i) {
    const Voltage v = StepVoltage(g, steps[i]);
    out += " -[" + std::string(v >= 0 ? "+" : "") + std::to_string(v) + "]- " +
           g.name(vertices[i + 1]);
  }
  return out;
}

std::string DescribeWitness(const VoltageGraph& g, const Witness& w) {
  std::string out(WitnessKindName(w.kind));
  out += " length=" + std::to_string(w.walk_length()) +
         " sum=" + std::to_string(w.voltage_sum);
  if (w.wrap_count > 1) out += " wrap=" + std::to_string(w.wrap_count);
  out += " lift-cycle=" + std::to_string(w.lift_cycle_length) + ": " +
         DescribeWalk(g, w.start_vertex, w.steps);
  return out;
}

}  // namespace cagelift
