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

#include <atomic>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "authros/ledger/contract.hpp"
#include "authros/ledger/types.hpp"

namespace authros::ledger {

enum class ConsensusMode { kPow, kPoa };

const char* mode_name(ConsensusMode mode);
ConsensusMode parse_mode(std::string_view name);  // "pow" | "poa"

struct ConsensusConfig {
  ConsensusMode mode = ConsensusMode::kPoa;
  std::uint64_t difficulty = 1ULL << 16;
  std::uint64_t block_gas_limit = 0xffffffffULL;
  std::vector<Address> validators;
  std::uint64_t target_block_interval_ms = 1000;
  std::uint32_t node_count = 3;

  // Throws std::invalid_argument when an invariant does not hold.
  void validate() const;
  Bytes encode() const;
};

// Round-robin authority for a PoA height (heights start at 1).
const Address& slot_validator(const ConsensusConfig& config, std::uint64_t height);

struct BlockHeader {
  Digest32 parent_hash;
  std::uint64_t height = 0;
  std::uint64_t difficulty = 0;
  Address validator;  // PoA signer, or the PoW miner
  std::uint64_t timestamp = 0;
  Digest32 tx_root;
  Digest32 state_root;
  std::uint64_t gas_used = 0;
  std::uint64_t nonce = 0;

  // Everything except the nonce, which is appended last so the miner can
  // reuse the hashed prefix.
  Bytes encode_prefix() const;
  Bytes encode() const;
  static BlockHeader decode(ByteView bytes);
  Digest32 hash() const;
};

struct Block {
  BlockHeader header;
  std::optional<crypto::Sm2Signature> seal;     // PoA only
  std::optional<crypto::CurvePoint> seal_key;  // PoA only
  std::vector<Transaction> txs;

  Digest32 hash() const { return header.hash(); }
  Bytes encode() const;
  static Block decode(ByteView bytes);
  // Size on the wire when the receiver already holds every transaction.
  std::size_t compact_size() const;
};

Digest32 tx_root(std::span<const Transaction> txs);

Block genesis_block(const ConsensusConfig& config);

/// A committed block together with the state it produces.
struct ChainView {
  const BlockHeader* header;
  const LedgerState* state;
};

struct AssembledBody {
  std::vector<Transaction> txs;
  LedgerState post_state;
  std::vector<Receipt> receipts;
  std::uint64_t gas_used = 0;
};

// FIFO over candidates; a transaction is taken when its nonce is the
// sender's next one and it fits in the remaining gas. Others are skipped.
// Signatures are not checked here.
AssembledBody assemble_body(const LedgerState& parent_state, std::span<const Transaction> candidates,
                            std::uint64_t gas_limit);

struct PowOutcome {
  Block block;
  std::uint64_t trials = 0;
};

// Nonce search starts at a random offset drawn from rng. Returns nullopt
// only when cancel is set.
std::optional<PowOutcome> produce_block_pow(ChainView parent, std::span<const Transaction> candidates,
                                            const ConsensusConfig& config, const Address& miner,
                                            std::uint64_t timestamp, RandomSource& rng,
                                            const std::atomic<bool>* cancel = nullptr);

Block produce_block_poa(ChainView parent, std::span<const Transaction> candidates, const ConsensusConfig& config,
                        const crypto::Sm2KeyPair& validator_key, std::uint64_t timestamp, RandomSource& rng);

struct AppliedBlock {
  LedgerState post_state;
  std::vector<Receipt> receipts;
};

// Full validation: hash link, height, consensus predicate, transaction
// signatures, nonces, gas, tx_root and state_root. Transactions whose hash
// is in verified_signatures skip the signature check.
std::optional<AppliedBlock> apply_block(const Block& block, ChainView parent, const ConsensusConfig& config,
                                        const std::set<Digest32>* verified_signatures = nullptr);

bool verify_block(const Block& block, ChainView parent, const ConsensusConfig& config);

struct ChainTip {
  Digest32 hash;
  std::uint64_t height = 0;
};

// Highest tip wins; equal heights go to the smaller hash. Throws
// std::invalid_argument on an empty candidate list.
ChainTip select_chain(std::span<const ChainTip> candidates);

}  // namespace authros::ledger
