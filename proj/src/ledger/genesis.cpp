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

#include "authros/ledger/genesis.hpp"

#include <algorithm>
#include <fstream>
#include <nlohmann/json.hpp>
#include <set>
#include <sstream>

namespace authros::ledger {

using nlohmann::json;

std::chrono::microseconds LinkModel::delay(std::size_t bytes) const {
  double ms = base_ms + per_kib_ms * static_cast<double>(bytes) / 1024.0;
  return std::chrono::microseconds(static_cast<std::int64_t>(ms * 1000.0));
}

crypto::Sm2KeyPair node_key(std::uint64_t key_seed, std::uint32_t index) {
  SeededRandom rng(key_seed * 0x9e3779b97f4a7c15ULL + index);
  return crypto::sm2_keygen(rng);
}

namespace {

void derive_keys(Genesis& g) {
  g.node_keys.clear();
  for (std::uint32_t i = 0; i < g.consensus.node_count; ++i) g.node_keys.push_back(node_key(g.key_seed, i));
}

}  // namespace

Genesis make_genesis(ConsensusMode mode, std::uint64_t difficulty, std::uint32_t node_count,
                     std::uint64_t key_seed) {
  Genesis g;
  g.consensus.mode = mode;
  g.consensus.difficulty = difficulty;
  g.consensus.node_count = node_count;
  g.key_seed = key_seed;
  derive_keys(g);
  if (mode == ConsensusMode::kPoa)
    for (const auto& k : g.node_keys) g.consensus.validators.push_back(derive_address(k.public_key));
  g.consensus.validate();
  return g;
}

std::string Genesis::to_json() const {
  json j;
  j["consensus"] = mode_name(consensus.mode);
  j["difficulty"] = consensus.difficulty;
  std::ostringstream gas;
  gas << "0x" << std::hex << consensus.block_gas_limit;
  j["gas_limit"] = gas.str();
  j["block_interval_ms"] = consensus.target_block_interval_ms;
  j["node_count"] = consensus.node_count;
  j["key_seed"] = key_seed;
  j["validators"] = json::array();
  for (const auto& v : consensus.validators) j["validators"].push_back(v.hex());
  j["link"] = {{"base_ms", link.base_ms}, {"per_kib_ms", link.per_kib_ms}};
  return j.dump(2) + "\n";
}

namespace {

std::uint64_t read_u64(const json& v, const char* name) {
  if (v.is_number_unsigned()) return v.get<std::uint64_t>();
  if (v.is_string()) {
    auto s = v.get<std::string>();
    try {
      std::size_t used = 0;
      auto n = std::stoull(s, &used, 0);
      if (used == s.size()) return n;
    } catch (const std::exception&) {
    }
  }
  throw GenesisError(std::string("field '") + name + "' must be a non-negative integer");
}

Genesis from_json(const json& j) {
  if (!j.is_object()) throw GenesisError("genesis must be a JSON object");
  for (const auto& [key, _] : j.items()) {
    static const std::set<std::string> kKnown = {"consensus",  "difficulty", "gas_limit", "block_interval_ms",
                                                 "node_count", "key_seed",   "validators", "link"};
    if (!kKnown.contains(key)) throw GenesisError("unknown genesis field '" + key + "'");
  }

  Genesis g;
  try {
    g.consensus.mode = parse_mode(j.value("consensus", std::string("poa")));
  } catch (const std::invalid_argument& e) {
    throw GenesisError(e.what());
  }
  if (j.contains("difficulty")) g.consensus.difficulty = read_u64(j["difficulty"], "difficulty");
  if (j.contains("gas_limit")) g.consensus.block_gas_limit = read_u64(j["gas_limit"], "gas_limit");
  if (j.contains("block_interval_ms"))
    g.consensus.target_block_interval_ms = read_u64(j["block_interval_ms"], "block_interval_ms");
  if (j.contains("node_count")) {
    auto n = read_u64(j["node_count"], "node_count");
    if (n < 1 || n > 64) throw GenesisError("node_count must be in [1, 64]");
    g.consensus.node_count = static_cast<std::uint32_t>(n);
  }
  if (j.contains("key_seed")) g.key_seed = read_u64(j["key_seed"], "key_seed");
  if (j.contains("link")) {
    const auto& l = j["link"];
    if (!l.is_object()) throw GenesisError("link must be an object");
    g.link.base_ms = l.value("base_ms", g.link.base_ms);
    g.link.per_kib_ms = l.value("per_kib_ms", g.link.per_kib_ms);
    if (g.link.base_ms < 0 || g.link.per_kib_ms < 0) throw GenesisError("link delays must be non-negative");
  }
  derive_keys(g);

  if (j.contains("validators")) {
    if (!j["validators"].is_array()) throw GenesisError("validators must be an array of addresses");
    for (const auto& v : j["validators"]) {
      if (!v.is_string()) throw GenesisError("validator entries must be hex strings");
      Address a;
      try {
        a = Address::from_hex(v.get<std::string>());
      } catch (const std::exception&) {
        throw GenesisError("bad validator address '" + v.get<std::string>() + "'");
      }
      bool held = std::ranges::any_of(g.node_keys, [&](const auto& k) { return derive_address(k.public_key) == a; });
      if (!held) throw GenesisError("validator " + a.hex() + " is not one of the network's nodes");
      g.consensus.validators.push_back(a);
    }
  } else if (g.consensus.mode == ConsensusMode::kPoa) {
    for (const auto& k : g.node_keys) g.consensus.validators.push_back(derive_address(k.public_key));
  }

  try {
    g.consensus.validate();
  } catch (const std::invalid_argument& e) {
    throw GenesisError(e.what());
  }
  return g;
}

}  // namespace

Genesis parse_genesis(std::string_view text) {
  try {
    return from_json(json::parse(text));
  } catch (const json::exception& e) {
    throw GenesisError(std::string("malformed genesis: ") + e.what());
  }
}

Genesis load_genesis(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw GenesisError("cannot read genesis file " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_genesis(ss.str());
}

}  // namespace authros::ledger
