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

#include "authros/ledger/node.hpp"

#include <algorithm>
#include <ostream>

namespace authros::ledger {

const char* status_name(ReceiptStatus status) {
  switch (status) {
    case ReceiptStatus::kPending:
      return "pending";
    case ReceiptStatus::kIncluded:
      return "included";
    case ReceiptStatus::kRejected:
      return "rejected";
    case ReceiptStatus::kTimedOut:
      return "timed out";
  }
  return "?";
}

PendingReceipt::PendingReceipt() : slot_(std::make_shared<Slot>()) {}

PendingReceipt::PendingReceipt(Digest32 tx_hash) : tx_hash_(tx_hash), slot_(std::make_shared<Slot>()) {}

ReceiptResult PendingReceipt::wait(std::chrono::milliseconds timeout) const {
  std::unique_lock lock(slot_->mu);
  if (!slot_->cv.wait_for(lock, timeout, [&] { return slot_->result.has_value(); })) {
    ReceiptResult r;
    r.status = ReceiptStatus::kTimedOut;
    return r;
  }
  return *slot_->result;
}

std::optional<ReceiptResult> PendingReceipt::poll() const {
  std::lock_guard lock(slot_->mu);
  return slot_->result;
}

void PendingReceipt::resolve(ReceiptResult result) const {
  {
    std::lock_guard lock(slot_->mu);
    if (slot_->result) return;
    slot_->result = std::move(result);
  }
  slot_->cv.notify_all();
}

Node::Node(std::string name, ConsensusConfig config, crypto::Sm2KeyPair key)
    : name_(std::move(name)),
      config_(config),
      key_(key),
      address_(derive_address(key.public_key)),
      chain_(std::move(config)) {}

std::optional<std::string> Node::precheck(const Transaction& tx, const Digest32& hash, Admission mode) const {
  if (tx.gas_limit > config_.block_gas_limit || tx.gas_limit < tx.intrinsic_gas()) return "gas";
  const std::uint64_t committed = chain_.head().state->next_nonce(tx.sender);
  if (tx.nonce < committed) return "nonce";
  if (mode == Admission::kLocal) {
    std::uint64_t expected = committed;
    for (const auto& [h, p] : mempool_)
      if (p.sender == tx.sender && p.nonce == expected) ++expected;
    if (tx.nonce != expected) return "nonce";
  } else if (in_pool_.contains(hash)) {
    return "known";
  }
  return std::nullopt;
}

std::optional<std::string> Node::admit(const Transaction& tx, Admission mode) {
  const auto hash = tx.hash();
  bool known_valid = false;
  {
    std::lock_guard lock(mu_);
    if (auto r = precheck(tx, hash, mode)) return r;
    known_valid = verified_.contains(hash);
  }
  // Signature work happens outside the lock so imports are not stalled.
  if (!known_valid && !tx.signature_valid()) return "signature";
  {
    std::lock_guard lock(mu_);
    if (auto r = precheck(tx, hash, mode)) return r;
    verified_.insert(hash);
    mempool_.emplace_back(hash, tx);
    in_pool_.insert(hash);
  }
  notify();
  return std::nullopt;
}

void Node::prune_locked() {
  const auto& state = *chain_.head().state;
  std::erase_if(mempool_, [&](const auto& entry) {
    if (entry.second.nonce >= state.next_nonce(entry.second.sender)) return false;
    in_pool_.erase(entry.first);
    return true;
  });
}

Chain::ImportStatus Node::import_block(const Block& block) {
  Chain::ImportStatus status;
  {
    std::lock_guard lock(mu_);
    status = chain_.import(block, &verified_);
    if (status != Chain::ImportStatus::kImported) return status;
    for (const auto* e : chain_.last_connected()) {
      for (std::size_t i = 0; i < e->block.txs.size(); ++i) {
        const auto h = e->receipts[i].tx_hash;
        verified_.insert(h);
        included_[h] = {e->block.header.height, i};
        if (auto w = watches_.find(h); w != watches_.end()) {
          ReceiptResult r;
          r.status = ReceiptStatus::kIncluded;
          r.height = e->block.header.height;
          r.index = i;
          r.block_hash = e->hash;
          r.receipt = e->receipts[i];
          w->second.resolve(std::move(r));
          watches_.erase(w);
        }
      }
    }
    prune_locked();
  }
  notify();
  return status;
}

void Node::watch(const PendingReceipt& receipt) {
  std::lock_guard lock(mu_);
  auto it = included_.find(receipt.tx_hash());
  if (it == included_.end()) {
    watches_.emplace(receipt.tx_hash(), receipt);
    return;
  }
  // Already committed: resolve from the stored block.
  for (const auto* e : chain_.canonical()) {
    if (e->block.header.height != it->second.first) continue;
    ReceiptResult r;
    r.status = ReceiptStatus::kIncluded;
    r.height = it->second.first;
    r.index = it->second.second;
    r.block_hash = e->hash;
    r.receipt = e->receipts[r.index];
    receipt.resolve(std::move(r));
    return;
  }
}

std::vector<Transaction> Node::pending() const {
  std::lock_guard lock(mu_);
  std::vector<Transaction> out;
  out.reserve(mempool_.size());
  for (const auto& [h, tx] : mempool_) out.push_back(tx);
  return out;
}

std::size_t Node::pending_count() const {
  std::lock_guard lock(mu_);
  return mempool_.size();
}

bool Node::has_includable() const {
  std::lock_guard lock(mu_);
  const auto& state = *chain_.head().state;
  return std::ranges::any_of(mempool_,
                             [&](const auto& e) { return e.second.nonce == state.next_nonce(e.second.sender); });
}

bool Node::knows_tx(const Digest32& hash) const {
  std::lock_guard lock(mu_);
  return in_pool_.contains(hash) || included_.contains(hash);
}

Node::Head Node::head() const {
  std::lock_guard lock(mu_);
  const auto& h = chain_.head();
  return {h.block.header, h.hash, h.state};
}

std::uint64_t Node::height() const {
  std::lock_guard lock(mu_);
  return chain_.head().block.header.height;
}

Digest32 Node::state_root() const {
  std::lock_guard lock(mu_);
  return chain_.head().block.header.state_root;
}

std::optional<Block> Node::block_at(std::uint64_t height) const {
  std::lock_guard lock(mu_);
  if (height > chain_.head().block.header.height) return std::nullopt;
  if (height == 0) return chain_.genesis().block;
  return chain_.canonical()[height - 1]->block;
}

void Node::export_to(std::ostream& out) const {
  std::lock_guard lock(mu_);
  export_chain(chain_, out);
}

void Node::set_listener(std::function<void()> listener) {
  std::lock_guard lock(mu_);
  listener_ = std::move(listener);
}

void Node::notify() {
  std::function<void()> l;
  {
    std::lock_guard lock(mu_);
    l = listener_;
  }
  if (l) l();
}

}  // namespace authros::ledger
