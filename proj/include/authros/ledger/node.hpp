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
#include <condition_variable>
#include <deque>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <set>
#include <string>

#include "authros/ledger/chain.hpp"

namespace authros::ledger {

enum class ReceiptStatus { kPending, kIncluded, kRejected, kTimedOut };

const char* status_name(ReceiptStatus status);

struct ReceiptResult {
  ReceiptStatus status = ReceiptStatus::kPending;
  std::string reason;  // rejection reason
  std::uint64_t height = 0;
  std::size_t index = 0;
  Digest32 block_hash;
  Receipt receipt;
};

/// Handle to a submitted transaction's fate. Copies share the same slot.
class PendingReceipt {
 public:
  PendingReceipt();
  explicit PendingReceipt(Digest32 tx_hash);

  const Digest32& tx_hash() const { return tx_hash_; }
  // Blocks until resolved or the timeout passes; a timeout yields kTimedOut
  // without resolving the slot.
  ReceiptResult wait(std::chrono::milliseconds timeout) const;
  std::optional<ReceiptResult> poll() const;

  void resolve(ReceiptResult result) const;  // first resolution wins

 private:
  struct Slot {
    std::mutex mu;
    std::condition_variable cv;
    std::optional<ReceiptResult> result;
  };
  Digest32 tx_hash_;
  std::shared_ptr<Slot> slot_;
};

/// One ledger participant: chain, mempool and the single-writer commit
/// path. All public methods are thread-safe.
class Node {
 public:
  enum class Admission { kLocal, kGossip };

  Node(std::string name, ConsensusConfig config, crypto::Sm2KeyPair key);

  const std::string& name() const { return name_; }
  const crypto::Sm2KeyPair& key() const { return key_; }
  const Address& address() const { return address_; }
  const ConsensusConfig& config() const { return config_; }

  // nullopt on acceptance, otherwise the rejection reason ("gas", "nonce",
  // "signature", "known"). Local admission requires the sender's exact next
  // nonce; gossip admission accepts any nonce not yet consumed.
  std::optional<std::string> admit(const Transaction& tx, Admission mode);

  Chain::ImportStatus import_block(const Block& block);

  // Resolved once a block containing the transaction is on this node's
  // canonical chain.
  void watch(const PendingReceipt& receipt);

  std::vector<Transaction> pending() const;
  std::size_t pending_count() const;
  // True if some pending transaction carries its sender's next nonce.
  bool has_includable() const;
  bool knows_tx(const Digest32& hash) const;

  struct Head {
    BlockHeader header;
    Digest32 hash;
    std::shared_ptr<const LedgerState> state;
  };
  Head head() const;
  std::uint64_t height() const;
  Digest32 state_root() const;
  std::optional<Block> block_at(std::uint64_t height) const;

  // Serializes the canonical chain while holding the commit lock.
  void export_to(std::ostream& out) const;

  // Invoked after every mempool or chain change, outside the node lock.
  void set_listener(std::function<void()> listener);

 private:
  std::optional<std::string> precheck(const Transaction& tx, const Digest32& hash, Admission mode) const;
  void prune_locked();
  void notify();

  std::string name_;
  ConsensusConfig config_;
  crypto::Sm2KeyPair key_;
  Address address_;

  mutable std::mutex mu_;
  Chain chain_;
  std::deque<std::pair<Digest32, Transaction>> mempool_;
  std::set<Digest32> in_pool_;
  std::set<Digest32> verified_;
  std::map<Digest32, PendingReceipt> watches_;
  std::map<Digest32, std::pair<std::uint64_t, std::size_t>> included_;  // tx -> (height, index)
  std::function<void()> listener_;
};

}  // namespace authros::ledger
