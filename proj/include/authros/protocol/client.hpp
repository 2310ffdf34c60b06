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

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "authros/bus/bus.hpp"
#include "authros/protocol/server.hpp"

namespace authros::protocol {

struct SharedRecord {
  Digest32 digest;  // also the cache key
  std::uint64_t height = 0;
};

/// Client-side identity EU(d, sigma, v, Addr) plus the signing pair and
/// credential the client keeps.
struct Identity {
  std::string name;
  Bytes credential;
  crypto::Sm4Key sigma;           // own K_C
  crypto::Sm2KeyPair signing;     // (d_C, P_C)
  ledger::Address addr;
  std::map<std::string, crypto::Sm4Key> v;  // granter name -> granted K_C
  std::vector<SharedRecord> d;
};

// Generates K_C and the signing pair, runs key allocation against the
// server's current system key, then registers.
Identity enroll(AuthServer& server, const std::string& name, ByteView credential, RandomSource& rng);

struct TransferEnvelope {
  Nd1 nd1;
  Bytes nd1_bytes;
  Bytes ct1;
  crypto::Sm2Signature sig;
  Nd2 nd2;
  Bytes nd2_bytes;
  Bytes ct2;
  Nd3 nd3;
  Bytes nd3_bytes;
};

TransferEnvelope build_transfer(const Identity& id, const Nd1& captured, std::uint64_t capture_ms, Command command,
                                RandomSource& rng);

// Typed capture -> Nd1; nullopt for a capture that failed to parse.
std::optional<Nd1> nd1_from_capture(const bus::CaptureEvent& ev);

// build_transfer + receive_transfer; records the digest in id.d.
TransferReceipt share(AuthServer& server, Identity& id, const Nd1& captured, std::uint64_t capture_ms,
                      RandomSource& rng);

// Grantee side of a grant: opens the sealed key with d_C into v.
void accept_grant(Identity& grantee, const GrantDelivery& delivery);
GrantDelivery grant_authority(AuthServer& server, const Identity& granter, Identity& grantee);

// Uses the key held for target (own sigma when target is self).
std::vector<QueriedRecord> query_and_check(AuthServer& server, const Identity& requester, const std::string& target,
                                           const std::optional<Digest32>& only = std::nullopt);

// Throws ProtocolError(kDecryptFailed) on a wrong key or malformed plaintext.
Nd1 decrypt_shared(ByteView ct1, const crypto::Sm4Key& key);

}  // namespace authros::protocol
