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

#include <cstdint>
#include <map>
#include <mutex>
#include <optional>
#include <vector>

#include "authros/crypto/sm2.hpp"
#include "authros/protocol/frames.hpp"

namespace authros::protocol {

struct SystemKey {
  std::uint64_t epoch = 0;
  crypto::CurvePoint public_key;
};

/// Server-side system key schedule. Each epoch gets a fresh SM2 pair; an
/// epoch stays usable until grace_epochs newer epochs have been published.
class SystemKeySet {
 public:
  explicit SystemKeySet(std::uint64_t grace_epochs = 1) : grace_(grace_epochs) {}

  // Appends a new epoch; epochs must strictly increase.
  SystemKey publish(std::uint64_t epoch, RandomSource& rng);
  std::vector<SystemKey> published() const;
  std::optional<SystemKey> current() const;
  // Private key for a live epoch, nullopt when unknown or expired.
  std::optional<crypto::U256> live_private(std::uint64_t epoch) const;
  std::uint64_t grace_epochs() const { return grace_; }

 private:
  std::uint64_t grace_;
  mutable std::mutex mu_;
  std::vector<std::uint64_t> order_;
  std::map<std::uint64_t, crypto::Sm2KeyPair> keys_;
};

inline constexpr std::size_t kKeyAllocPayloadSize = 16 + 65;

/// {CT, (r,s), P_S id, command}. CT carries K_C || P_C and the signature is
/// made over CT with the client's own signing key.
struct KeyAllocMessage {
  Bytes ct;
  crypto::Sm2Signature sig;
  std::uint64_t ps_id = 0;
  Command command = Command::kKeyAlloc;

  Bytes encode() const;
  static KeyAllocMessage decode(ByteView bytes);
};

KeyAllocMessage key_alloc_client(const crypto::Sm4Key& k_c, const crypto::Sm2KeyPair& client, const SystemKey& ps,
                                 RandomSource& rng);

struct AllocatedKeys {
  crypto::Sm4Key k_c;
  crypto::CurvePoint p_c;
};

// Decrypt under the epoch's private key, then check the signature with the
// P_C found inside. Throws ProtocolError.
AllocatedKeys key_alloc_open(const SystemKeySet& keys, const KeyAllocMessage& msg);

}  // namespace authros::protocol
