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

#include "authros/bus/replay.hpp"

#include <fstream>
#include <map>
#include <sstream>

namespace authros::bus {

void write_replay(std::ostream& out, const std::vector<ReplayRecord>& records) {
  for (const auto& r : records)
    out << to_hex(as_bytes(r.topic)) << ' ' << to_hex(as_bytes(type_name(r.type))) << ' ' << to_hex(r.payload)
        << '\n';
}

std::vector<ReplayRecord> read_replay(std::istream& in) {
  std::vector<ReplayRecord> out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line.front() == '#') continue;
    std::istringstream fields(line);
    std::string topic_hex, type_hex, payload_hex, extra;
    if (!(fields >> topic_hex >> type_hex >> payload_hex) || (fields >> extra))
      throw ParseError("replay line " + std::to_string(lineno) + ": expected three hex fields");
    try {
      ReplayRecord r;
      r.topic = to_string(from_hex(topic_hex));
      validate_topic(r.topic);
      r.type = parse_type_name(to_string(from_hex(type_hex)));
      r.payload = from_hex(payload_hex);
      out.push_back(std::move(r));
    } catch (const std::exception& e) {
      throw ParseError("replay line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  return out;
}

std::vector<ReplayRecord> load_replay(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open replay file " + path);
  return read_replay(in);
}

void save_replay(const std::string& path, const std::vector<ReplayRecord>& records) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write replay file " + path);
  write_replay(out, records);
}

std::size_t replay_into(Master& master, const std::vector<ReplayRecord>& records) {
  std::map<std::string, NodeHandle> publishers;
  std::size_t delivered = 0;
  for (const auto& r : records) {
    auto it = publishers.find(r.topic);
    if (it == publishers.end())
      it = publishers.emplace(r.topic, master.register_node("replay:" + r.topic, r.topic, Role::kPublisher)).first;
    delivered += master.publish(it->second, RawMessage{r.type, r.payload});
  }
  for (auto& [_, h] : publishers) master.unregister(h);
  return delivered;
}

}  // namespace authros::bus
