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
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "authros/ledger/network.hpp"
#include "authros/protocol/cache.hpp"
#include "authros/protocol/errors.hpp"
#include "authros/protocol/keys.hpp"

namespace authros::protocol {

struct ServerConfig {
  std::size_t home_node = 1;  // ledger node the server submits through
  std::uint64_t rotation_period_ms = 3600 * 1000;
  std::uint64_t grace_epochs = 1;
  std::chrono::milliseconds ledger_timeout{0};  // 0 = the network's receipt timeout
  // Seeds the server's entropy and the per-name account keys. Unset draws
  // from the OS.
  std::optional<std::uint64_t> seed;
};

/// Server-side mapping N -> (t, K_C, P_C, Addr). The account key behind
/// Addr is held by the server, which submits on the user's behalf.
struct UserRecord {
  std::string name;
  Bytes credential;
  crypto::Sm4Key k_c;
  crypto::CurvePoint p_c;
  crypto::Sm2KeyPair account;
  ledger::Address addr;
};

Bytes token_commitment(const crypto::Sm4Key& k_c);  // sm3(K_C), the on-chain token

struct TransferReceipt {
  Digest32 digest;
  ledger::ReceiptResult result;
};

class UploadUnconfirmed : public ProtocolError {
 public:
  UploadUnconfirmed(Digest32 digest, ledger::PendingReceipt pending)
      : ProtocolError(ErrorCode::kUploadUnconfirmed), digest_(digest), pending_(std::move(pending)) {}
  const Digest32& digest() const { return digest_; }
  const ledger::PendingReceipt& pending() const { return pending_; }

 private:
  Digest32 digest_;
  ledger::PendingReceipt pending_;
};

struct GrantDelivery {
  std::string granter;
  Bytes sealed_key;  // SM2 ciphertext of the granter's K_C under the grantee's P_C
  ledger::ReceiptResult result;
};

struct QueriedRecord {
  Digest32 digest;
  Bytes ciphertext;
  Bytes timestamp;
};

class AuthServer {
 public:
  AuthServer(ledger::Network& network, ServerConfig config = {});

  ledger::Network& network() { return network_; }
  CiphertextCache& cache() { return cache_; }
  const SystemKeySet& system_keys() const { return keys_; }

  SystemKey publish_system_keys(std::uint64_t epoch);
  // Publishes the epoch for the given logical time if it is newer.
  SystemKey rotate_to(std::uint64_t now_ms);

  // Opens a key allocation and holds (K_C, P_C) until registration.
  AllocatedKeys key_alloc(const KeyAllocMessage& msg);

  // Binds N to the pending allocation for p_c, submits the on-chain
  // registration and waits for it.
  UserRecord register_user(const std::string& name, ByteView credential, const crypto::CurvePoint& p_c);

  // Rebuilds a mapping for a user registered in an earlier session; the
  // chain must already hold the matching registration.
  UserRecord restore_user(const std::string& name, ByteView credential, const crypto::Sm4Key& k_c,
                          const crypto::CurvePoint& p_c);

  std::optional<UserRecord> lookup(const std::string& name) const;
  ledger::Address account_address(const std::string& name) const;

  // Identity check, decrypt, signature check, credential check, cache, then
  // the on-chain upload. Throws UploadUnconfirmed when the ledger does not
  // include the upload in time; the ciphertext stays cached.
  TransferReceipt receive_transfer(ByteView nd3);

  // Submits the grant and seals the granter's key for the grantee.
  GrantDelivery grant(const std::string& granter, const std::string& grantee);

  // Fetches target's digests via the contract (read against the home
  // node's head) and checks each cached ciphertext against them.
  std::vector<QueriedRecord> query(const ledger::Address& requester, ByteView token, const std::string& target,
                                   const std::optional<Digest32>& only = std::nullopt);

 private:
  struct Account {
    UserRecord record;
    std::mutex mu;  // serializes this identity's processing
    std::uint64_t next_nonce = 0;
  };

  std::shared_ptr<Account> account(const std::string& name) const;
  crypto::Sm2KeyPair derive_account(const std::string& name) const;
  ledger::ReceiptResult submit(Account& acct, ledger::ContractCall call, ledger::PendingReceipt* pending = nullptr);
  std::chrono::milliseconds timeout() const;

  ledger::Network& network_;
  ServerConfig config_;
  std::uint64_t account_seed_;
  SystemKeySet keys_;
  CiphertextCache cache_;

  mutable std::mutex mu_;
  std::unique_ptr<RandomSource> rng_;  // guarded by mu_
  std::map<FixedBytes<65>, crypto::Sm4Key> pending_;
  std::map<std::string, std::shared_ptr<Account>> accounts_;
};

}  // namespace authros::protocol
