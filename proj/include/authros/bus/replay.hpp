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

#include <iosfwd>
#include <string>
#include <vector>

#include "authros/bus/bus.hpp"

namespace authros::bus {

struct ReplayRecord {
  std::string topic;
  MessageType type = MessageType::kGeneric;
  Bytes payload;

  bool operator==(const ReplayRecord&) const = default;
};

// One record per line: hex(topic) hex(type name) hex(payload), separated by
// single spaces. Blank lines and lines starting with '#' are skipped.
void write_replay(std::ostream& out, const std::vector<ReplayRecord>& records);
std::vector<ReplayRecord> read_replay(std::istream& in);  // throws ParseError with line number
std::vector<ReplayRecord> load_replay(const std::string& path);
void save_replay(const std::string& path, const std::vector<ReplayRecord>& records);

// Publishes every record in file order from one publisher per topic
// ("replay:<topic>"). Returns the total delivery count.
std::size_t replay_into(Master& master, const std::vector<ReplayRecord>& records);

}  // namespace authros::bus
