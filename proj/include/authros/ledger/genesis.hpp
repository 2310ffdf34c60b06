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

#include <chrono>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

#include "authros/ledger/block.hpp"

namespace authros::ledger {

/// In-process link between two nodes: fixed latency plus a per-KiB cost.
struct LinkModel {
  double base_ms = 2.0;
  double per_kib_ms = 20.0;

  std::chrono::microseconds delay(std::size_t bytes) const;
};

class GenesisError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Network bootstrap description. Node keys are derived from key_seed, so a
/// genesis file fully determines the validator set and its signing keys.
struct Genesis {
  ConsensusConfig consensus;
  std::uint64_t key_seed = 1;
  LinkModel link;
  std::vector<crypto::Sm2KeyPair> node_keys;  // index 0 is the miner / bootstrap node

  std::string to_json() const;
};

crypto::Sm2KeyPair node_key(std::uint64_t key_seed, std::uint32_t index);

// Default 3-node layout. PoA validators are every node, in node order.
Genesis make_genesis(ConsensusMode mode, std::uint64_t difficulty = 1ULL << 16, std::uint32_t node_count = 3,
                     std::uint64_t key_seed = 1);

// Fields: consensus ("pow"|"poa"), difficulty, gas_limit (number or hex
// string), block_interval_ms, node_count, key_seed, validators (hex
// addresses; omitted = all nodes), link {base_ms, per_kib_ms}.
// Throws GenesisError on anything malformed.
Genesis parse_genesis(std::string_view text);
Genesis load_genesis(const std::filesystem::path& path);

}  // namespace authros::ledger
