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

#include "cagelift/graph6.h"

#include <cstdint>
#include <vector>

#include "cagelift/error.h"

namespace cagelift {
namespace {

constexpr int kBias = 63;
constexpr std::string_view kPrefix = ">>graph6<<";

void AppendSize(std::string& out, std::uint64_t n) {
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kBias));
    return;
  }
  const int groups = n <= 258047 ? 3 : 6;
  out.append(groups == 3 ? "~" : "~~");
  for (int i = groups - 1; i >= 0; --i) {
    out.push_back(static_cast<char>(((n >> (6 * i)) & 63) + kBias));
  }
}

int Sextet(char c, size_t pos) {
  if (c < kBias || c > 126) {
    throw Error(ErrorCode::kNonPrintableChar,
                "character " + std::to_string(static_cast<unsigned char>(c)) +
                    " at offset " + std::to_string(pos));
  }
  return c - kBias;
}

}  // namespace

std::string WriteGraph6(const SimpleGraph& g) {
  const int n = g.order();
  std::string out;
  AppendSize(out, static_cast<std::uint64_t>(n));
  int bits = 0;
  int value = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      value = (value << 1) | (g.HasEdge(i, j) ? 1 : 0);
      if (++bits == 6) {
        out.push_back(static_cast<char>(value + kBias));
        bits = 0;
        value = 0;
      }
    }
  }
  if (bits > 0) out.push_back(static_cast<char>((value << (6 - bits)) + kBias));
  return out;
}

SimpleGraph ReadGraph6(std::string_view text) {
  if (text.substr(0, kPrefix.size()) == kPrefix) {
    text.remove_prefix(kPrefix.size());
  }
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r' ||
                           text.back() == ' ' || text.back() == '\t')) {
    text.remove_suffix(1);
  }
  if (text.empty()) throw Error(ErrorCode::kMalformedHeader, "empty input");

  size_t pos = 0;
  std::uint64_t n = 0;
  const auto read_groups = [&](int groups) {
    if (pos + groups > text.size()) {
      throw Error(ErrorCode::kMalformedHeader, "size field is cut short");
    }
    for (int i = 0; i < groups; ++i, ++pos) {
      n = (n << 6) | static_cast<std::uint64_t>(Sextet(text[pos], pos));
    }
  };
  if (text[0] != '~') {
    n = Sextet(text[0], 0);
    pos = 1;
  } else if (text.size() > 1 && text[1] == '~') {
    pos = 2;
    read_groups(6);
    if (n <= 258047) {
      throw Error(ErrorCode::kMalformedHeader, "non-canonical 8-byte size");
    }
  } else {
    pos = 1;
    read_groups(3);
    if (n <= 62) {
      throw Error(ErrorCode::kMalformedHeader, "non-canonical 4-byte size");
    }
  }
  if (n > (std::uint64_t{1} << 24)) {
    throw Error(ErrorCode::kMalformedHeader,
                "graph with " + std::to_string(n) + " vertices is too large");
  }

  const std::uint64_t pairs = n * (n - (n > 0 ? 1 : 0)) / 2;
  const std::uint64_t chars = (pairs + 5) / 6;
  if (text.size() - pos < chars) {
    throw Error(ErrorCode::kTruncatedBits,
                "expected " + std::to_string(chars) + " data characters, got " +
                    std::to_string(text.size() - pos));
  }
  if (text.size() - pos > chars) {
    throw Error(ErrorCode::kParseError,
                "trailing characters after graph6 data");
  }
  std::vector<Edge> edges;
  std::uint64_t k = 0;
  for (int j = 1; j < static_cast<int>(n); ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      const size_t at = pos + k / 6;
      const int bit = 5 - static_cast<int>(k % 6);
      if ((Sextet(text[at], at) >> bit) & 1) edges.emplace_back(i, j);
    }
  }
  for (size_t at = pos; at < text.size(); ++at) Sextet(text[at], at);
  return SimpleGraph::FromEdges(static_cast<int>(n), edges);
}

}  // namespace cagelift
