// Copyright 2026 The gossip-tools Authors
//
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

#include "gossip/call_sequence.hpp"

#include <fstream>
#include <istream>
#include <sstream>

namespace gossip {

BoolMatrix word_product(int n, const CallSequence& word) {
  return apply_word_right(BoolMatrix::identity(n), word);
}

BoolMatrix apply_word_right(const BoolMatrix& m, const CallSequence& word) {
  BoolMatrix out = m;
  for (const CallPair& p : word.calls) out = apply_call_right(out, p);
  return out;
}

BoolMatrix apply_word_left(const CallSequence& word, const BoolMatrix& m) {
  BoolMatrix out = m;
  // Fold from the right so each step is a single-call left product.
  for (auto it = word.calls.rbegin(); it != word.calls.rend(); ++it) {
    out = apply_call_left(out, *it);
  }
  return out;
}

CallSequence parse_witness(std::istream& in) {
  CallSequence word;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    std::istringstream fields(line);
    long a = 0, b = 0;
    if (!(fields >> a) || !(fields >> b)) {
      throw ParseError("witness line " + std::to_string(line_no) +
                       ": expected two indices, got '" + line + "'");
    }
    std::string rest;
    if (fields >> rest) {
      throw ParseError("witness line " + std::to_string(line_no) +
                       ": trailing content '" + rest + "'");
    }
    if (a < 1 || b < 1 || a == b || a > 1 << 20 || b > 1 << 20) {
      throw ParseError("witness line " + std::to_string(line_no) +
                       ": invalid call {" + std::to_string(a) + "," +
                       std::to_string(b) + "}");
    }
    word.calls.emplace_back(static_cast<int>(a), static_cast<int>(b));
  }
  return word;
}

CallSequence parse_witness(const std::string& text) {
  std::istringstream in(text);
  return parse_witness(in);
}

std::string format_witness(const CallSequence& word) {
  std::string out;
  for (const CallPair& p : word.calls) {
    out += std::to_string(p.i);
    out.push_back(' ');
    out += std::to_string(p.j);
    out.push_back('\n');
  }
  return out;
}

CallSequence read_witness_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw ParseError("cannot open witness file '" + path + "'");
  }
  try {
    return parse_witness(in);
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

void write_witness_file(const std::string& path, const CallSequence& word) {
  std::ofstream out(path);
  if (!out) {
    throw ParseError("cannot open witness file '" + path + "' for writing");
  }
  out << format_witness(word);
  if (!out) {
    throw ParseError("failed writing witness file '" + path + "'");
  }
}

}  // namespace gossip
