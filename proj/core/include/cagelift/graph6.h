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

#ifndef CAGELIFT_GRAPH6_H_
#define CAGELIFT_GRAPH6_H_

#include <string>
#include <string_view>

#include "cagelift/simple_graph.h"

namespace cagelift {

// graph6 codec (up to 2^36 - 1 vertices in the header; adjacency is built in
// memory, so practical sizes are far smaller). Labels are not encoded.
std::string WriteGraph6(const SimpleGraph& g);

// Decodes one graph6 string. An optional ">>graph6<<" prefix and trailing
// whitespace are accepted. Throws MalformedHeader, TruncatedBits or
// NonPrintableChar; extra characters after the bit field are a ParseError.
SimpleGraph ReadGraph6(std::string_view text);

}  // namespace cagelift

#endif  // CAGELIFT_GRAPH6_H_
