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

#include "authros/ledger/block.hpp"

#include <algorithm>
#include <stdexcept>

#include "authros/crypto/sm3.hpp"
#include "authros/kernels.hpp"

namespace authros::ledger {

const char* mode_name(ConsensusMode mode) { return mode == ConsensusMode::kPow ? "pow" : "poa"; }

ConsensusMode parse_mode(std::string_view name) {
  if (name == "pow") return ConsensusMode::kPow;
  if (name == "poa") return ConsensusMode::kPoa;
  throw std::invalid_argument("consensus must be pow or poa, got '" + std::string(name) + "'");
}

void ConsensusConfig::validate() const {
  if (difficulty < 1) throw std::invalid_argument("difficulty must be >= 1");
  if (mode == ConsensusMode::kPoa && validators.empty())
    throw std::invalid_argument("poa requires at least one validator");
  if (node_count < 1) throw std::invalid_argument("node_count must be >= 1");
  if (target_block_interval_ms < 1) throw std::invalid_argument("block interval must be >= 1 ms");
  if (block_gas_limit < kTxBaseGas) throw std::invalid_argument("gas limit below the base transaction cost");
}

Bytes ConsensusConfig::encode() const {
  Bytes out;
  append(out, as_bytes(mode_name(mode)));
  append_u64_be(out, difficulty);
  append_u64_be(out, block_gas_limit);
  append_u32_be(out, static_cast<std::uint32_t>(validators.size()));
  for (const auto& v : validators) append(out, v.view());
  append_u64_be(out, target_block_interval_ms);
  append_u32_be(out, node_count);
  return out;
}

const Address& slot_validator(const ConsensusConfig& config, std::uint64_t height) {
  if (config.validators.empty() || height == 0) throw std::invalid_argument("no validator for this slot");
  return config.validators[(height - 1) % config.validators.size()];
}

Bytes BlockHeader::encode_prefix() const {
  Bytes out;
  append(out, parent_hash.view());
  append_u64_be(out, height);
  append_u64_be(out, difficulty);
  append(out, validator.view());
  append_u64_be(out, timestamp);
  append(out, tx_root.view());
  append(out, state_root.view());
  append_u64_be(out, gas_used);
  return out;
}

Bytes BlockHeader::encode() const {
  Bytes out = encode_prefix();
  append_u64_be(out, nonce);
  return out;
}

namespace {

BlockHeader read_header(ByteReader& r) {
  BlockHeader h;
  h.parent_hash = Digest32::from(r.take(32));
  h.height = r.u64_be();
  h.difficulty = r.u64_be();
  h.validator = Address::from(r.take(20));
  h.timestamp = r.u64_be();
  h.tx_root = Digest32::from(r.take(32));
  h.state_root = Digest32::from(r.take(32));
  h.gas_used = r.u64_be();
  h.nonce = r.u64_be();
  return h;
}

constexpr std::size_t kHeaderSize = 32 + 8 + 8 + 20 + 8 + 32 + 32 + 8 + 8;

}  // namespace

BlockHeader BlockHeader::decode(ByteView bytes) {
  ByteReader r(bytes);
  auto h = read_header(r);
  r.expect_done();
  return h;
}

Digest32 BlockHeader::hash() const { return crypto::sm3_hash(encode()); }

Bytes Block::encode() const {
  Bytes out = header.encode();
  if (seal && seal_key) {
    out.push_back(1);
    append(out, seal->encode().view());
    append(out, crypto::encode_point(*seal_key).view());
  } else {
    out.push_back(0);
  }
  append_u32_be(out, static_cast<std::uint32_t>(txs.size()));
  for (const auto& tx : txs) append_field(out, tx.encode());
  return out;
}

Block Block::decode(ByteView bytes) {
  ByteReader r(bytes);
  Block b;
  b.header = read_header(r);
  switch (r.u8()) {
    case 0:
      break;
    case 1:
      b.seal = crypto::Sm2Signature::decode(r.take(64));
      try {
        b.seal_key = crypto::decode_point(r.take(65));
      } catch (const crypto::CryptoError& e) {
        throw DecodeError(e.what());
      }
      break;
    default:
      throw DecodeError("bad seal flag");
  }
  std::uint32_t n = r.u32_be();
  if (n > r.remaining() / 4) throw DecodeError("transaction count exceeds block size");
  b.txs.reserve(n);
  for (std::uint32_t i = 0; i < n; ++i) b.txs.push_back(Transaction::decode(r.field()));
  r.expect_done();
  return b;
}

std::size_t Block::compact_size() const { return kHeaderSize + 1 + (seal ? 129 : 0) + 4 + 32 * txs.size(); }

Digest32 tx_root(std::span<const Transaction> txs) {
  crypto::Sm3 h;
  for (const auto& tx : txs) h.update(tx.hash().view());
  return h.finish();
}

Block genesis_block(const ConsensusConfig& config) {
  Block g;
  g.header.parent_hash = crypto::sm3_hash(config.encode());
  g.header.difficulty = config.mode == ConsensusMode::kPow ? config.difficulty : 0;
  g.header.tx_root = tx_root({});
  g.header.state_root = state_root(LedgerState{});
  return g;
}

AssembledBody assemble_body(const LedgerState& parent_state, std::span<const Transaction> candidates,
                            std::uint64_t gas_limit) {
  AssembledBody body;
  body.post_state = parent_state;
  for (const auto& tx : candidates) {
    if (tx.nonce != body.post_state.next_nonce(tx.sender)) continue;
    std::uint64_t gas = tx.intrinsic_gas();
    if (tx.gas_limit < gas || gas > gas_limit - body.gas_used) continue;
    body.receipts.push_back(apply_transaction(body.post_state, tx));
    body.gas_used += gas;
    body.txs.push_back(tx);
  }
  return body;
}

namespace {

BlockHeader child_header(ChainView parent, const AssembledBody& body, std::uint64_t timestamp) {
  BlockHeader h;
  h.parent_hash = parent.header->hash();
  h.height = parent.header->height + 1;
  h.timestamp = std::max(timestamp, parent.header->timestamp + 1);
  h.tx_root = tx_root(body.txs);
  h.state_root = state_root(body.post_state);
  h.gas_used = body.gas_used;
  return h;
}

}  // namespace

std::optional<PowOutcome> produce_block_pow(ChainView parent, std::span<const Transaction> candidates,
                                            const ConsensusConfig& config, const Address& miner,
                                            std::uint64_t timestamp, RandomSource& rng,
                                            const std::atomic<bool>* cancel) {
  auto body = assemble_body(*parent.state, candidates, config.block_gas_limit);
  PowOutcome out;
  out.block.header = child_header(parent, body, timestamp);
  out.block.header.difficulty = config.difficulty;
  out.block.header.validator = miner;
  out.block.txs = std::move(body.txs);

  const Bytes prefix = out.block.header.encode_prefix();
  const auto boundary = kernels::pow_boundary(config.difficulty);
  constexpr std::uint64_t kChunk = 1ULL << 14;
  for (std::uint64_t start = rng.next_u64();; start += kChunk) {
    auto r = kernels::pow_search_omp(prefix, boundary, start, kChunk, cancel);
    if (cancel && cancel->load()) return std::nullopt;
    out.trials += r.trials;
    if (r.nonce) {
      out.block.header.nonce = *r.nonce;
      return out;
    }
  }
}

Block produce_block_poa(ChainView parent, std::span<const Transaction> candidates, const ConsensusConfig& config,
                        const crypto::Sm2KeyPair& validator_key, std::uint64_t timestamp, RandomSource& rng) {
  auto body = assemble_body(*parent.state, candidates, config.block_gas_limit);
  Block b;
  b.header = child_header(parent, body, timestamp);
  b.header.validator = derive_address(validator_key.public_key);
  b.txs = std::move(body.txs);
  b.seal_key = validator_key.public_key;
  b.seal = crypto::sm2_sign(validator_key, as_bytes(crypto::kDefaultSm2Id), b.hash().view(), rng);
  return b;
}

namespace {

bool consensus_ok(const Block& block, const ConsensusConfig& config) {
  const auto& h = block.header;
  if (config.mode == ConsensusMode::kPow) {
    if (block.seal || block.seal_key || h.difficulty != config.difficulty) return false;
    return crypto::U256::from_be(block.hash().view()) <= kernels::pow_boundary(config.difficulty);
  }
  if (!block.seal || !block.seal_key || h.difficulty != 0) return false;
  if (h.validator != slot_validator(config, h.height)) return false;
  if (!crypto::is_on_curve(*block.seal_key) || derive_address(*block.seal_key) != h.validator) return false;
  return crypto::sm2_verify(*block.seal_key, as_bytes(crypto::kDefaultSm2Id), block.hash().view(), *block.seal);
}

bool signatures_ok(const Block& block, const std::set<Digest32>* verified) {
  std::vector<Bytes> payloads;
  std::vector<const Transaction*> pending;
  for (const auto& tx : block.txs) {
    if (verified && verified->contains(tx.hash())) continue;
    if (!crypto::is_on_curve(tx.sender_key) || derive_address(tx.sender_key) != tx.sender) return false;
    pending.push_back(&tx);
    payloads.push_back(tx.signing_payload());
  }
  std::vector<kernels::SignatureJob> jobs;
  jobs.reserve(pending.size());
  for (std::size_t i = 0; i < pending.size(); ++i)
    jobs.push_back({&pending[i]->sender_key, as_bytes(crypto::kDefaultSm2Id), payloads[i], &pending[i]->signature});
  auto ok = kernels::verify_batch_omp(jobs);
  return std::ranges::all_of(ok, [](std::uint8_t v) { return v == 1; });
}

}  // namespace

std::optional<AppliedBlock> apply_block(const Block& block, ChainView parent, const ConsensusConfig& config,
                                        const std::set<Digest32>* verified_signatures) {
  const auto& h = block.header;
  if (h.parent_hash != parent.header->hash()) return std::nullopt;
  if (h.height != parent.header->height + 1) return std::nullopt;
  if (h.timestamp <= parent.header->timestamp) return std::nullopt;
  if (!consensus_ok(block, config)) return std::nullopt;
  if (h.tx_root != tx_root(block.txs)) return std::nullopt;
  if (!signatures_ok(block, verified_signatures)) return std::nullopt;

  AppliedBlock out;
  out.post_state = *parent.state;
  std::uint64_t gas = 0;
  try {
    for (const auto& tx : block.txs) {
      out.receipts.push_back(apply_transaction(out.post_state, tx));
      gas += out.receipts.back().gas_used;
    }
  } catch (const InvalidTransaction&) {
    return std::nullopt;
  }
  if (gas > config.block_gas_limit || gas != h.gas_used) return std::nullopt;
  if (state_root(out.post_state) != h.state_root) return std::nullopt;
  return out;
}

bool verify_block(const Block& block, ChainView parent, const ConsensusConfig& config) {
  return apply_block(block, parent, config).has_value();
}

ChainTip select_chain(std::span<const ChainTip> candidates) {
  if (candidates.empty()) throw std::invalid_argument("select_chain needs at least one tip");
  ChainTip best = candidates.front();
  for (const auto& c : candidates.subspan(1)) {
    if (c.height > best.height || (c.height == best.height && c.hash < best.hash)) best = c;
  }
  return best;
}

}  // namespace authros::ledger
