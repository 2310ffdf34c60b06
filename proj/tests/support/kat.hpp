// Copyright 2026 The AuthROS Simulator Authors
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

#pragma once

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "authros/bytes.hpp"

namespace authros::testing {

// One line of the known-answer file: ALG <name> IN <hex> KEY <hex> OUT <hex>,
// with "-" standing for an empty field.
struct KatVector {
  std::string alg;
  Bytes in;
  Bytes key;
  Bytes out;
};

inline std::vector<KatVector> load_kat(const std::string& path) {
  std::ifstream file(path);
  if (!file) throw std::runtime_error("cannot open " + path);
  std::vector<KatVector> out;
  std::string line;
  auto field = [](const std::string& hex) { return hex == "-" ? Bytes{} : from_hex(hex); };
  while (std::getline(file, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ss(line);
    std::string t_alg, alg, t_in, in, t_key, key, t_out, o;
    ss >> t_alg >> alg >> t_in >> in >> t_key >> key >> t_out >> o;
    if (t_alg != "ALG" || t_in != "IN" || t_key != "KEY" || t_out != "OUT")
      throw std::runtime_error("malformed vector line: " + line);
    out.push_back({alg, field(in), field(key), field(o)});
  }
  return out;
}

inline std::vector<KatVector> kat_for(const std::vector<KatVector>& all, const std::string& alg) {
  std::vector<KatVector> out;
  for (const auto& v : all)
    if (v.alg == alg) out.push_back(v);
  return out;
}

}  // namespace authros::testing
