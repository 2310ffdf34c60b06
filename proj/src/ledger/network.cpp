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

#include "authros/ledger/network.hpp"

#include <algorithm>
#include <istream>
#include <stdexcept>
#include <string>

namespace authros::ledger {

Network::Network(Genesis genesis, std::uint64_t seed) : genesis_(std::move(genesis)), rng_(seed) {
  genesis_.consensus.validate();
  if (genesis_.node_keys.size() != genesis_.consensus.node_count)
    throw std::invalid_argument("genesis must carry one key per node");
  for (std::size_t i = 0; i < genesis_.node_keys.size(); ++i) {
    nodes_.push_back(std::make_unique<Node>("N" + std::to_string(i + 1), genesis_.consensus, genesis_.node_keys[i]));
    nodes_.back()->set_listener([this] { wake_producer(); });
  }
  if (genesis_.consensus.mode == ConsensusMode::kPoa) {
    for (const auto& v : genesis_.consensus.validators) {
      bool held = std::ranges::any_of(nodes_, [&](const auto& n) { return n->address() == v; });
      if (!held) throw std::invalid_argument("validator " + v.hex() + " has no node");
    }
  }
}

Network::~Network() { stop(); }

void Network::start() {
  if (running_.exchange(true)) return;
  cancel_ = false;
  produced_height_ = nodes_[0]->height();
  delivery_thread_ = std::thread([this] { delivery_loop(); });
  producer_thread_ = std::thread([this] { producer_loop(); });
}

void Network::load_chain(std::istream& in) {
  if (running_) throw std::logic_error("load_chain after start");
  Chain chain = import_chain(genesis_.consensus, in);
  for (const auto* e : chain.canonical())
    for (auto& n : nodes_)
      if (n->import_block(e->block) != Chain::ImportStatus::kImported)
        throw std::runtime_error("node rejected replayed block " + std::to_string(e->block.header.height));
}

void Network::stop() {
  if (!running_.exchange(false)) return;
  cancel_ = true;
  queue_cv_.notify_all();
  wake_producer();
  if (producer_thread_.joinable()) producer_thread_.join();
  if (delivery_thread_.joinable()) delivery_thread_.join();
  std::lock_guard lock(queue_mu_);
  block_queue_ = {};
  tx_queue_ = {};
  in_flight_ = 0;
}

std::chrono::milliseconds Network::receipt_timeout() const {
  return std::chrono::milliseconds(10 * genesis_.consensus.target_block_interval_ms);
}

PendingReceipt Network::submit(std::size_t node_index, const Transaction& tx) {
  PendingReceipt receipt(tx.hash());
  Node& origin = node(node_index);
  if (auto reason = origin.admit(tx, Node::Admission::kLocal)) {
    ReceiptResult r;
    r.status = ReceiptStatus::kRejected;
    r.reason = *reason;
    receipt.resolve(std::move(r));
    return receipt;
  }
  origin.watch(receipt);
  auto shared = std::make_shared<const Transaction>(tx);
  const auto at = Clock::now() + genesis_.link.delay(tx.encode().size());
  {
    std::lock_guard lock(queue_mu_);
    gossip_arrival_[receipt.tx_hash()] = at;
  }
  for (std::size_t j = 0; j < nodes_.size(); ++j) {
    if (j == node_index) continue;
    schedule(Lane::kTx, at, [this, j, shared] { nodes_[j]->admit(*shared, Node::Admission::kGossip); });
  }
  return receipt;
}

void Network::schedule(Lane lane, Clock::time_point at, std::function<void()> fn) {
  {
    std::lock_guard lock(queue_mu_);
    (lane == Lane::kBlock ? block_queue_ : tx_queue_).push({at, seq_++, std::move(fn)});
    ++in_flight_;
  }
  queue_cv_.notify_all();
}

void Network::broadcast_block(std::size_t from, const Block& block) {
  auto shared = std::make_shared<const Block>(block);
  std::vector<Digest32> hashes;
  for (const auto& tx : block.txs) hashes.push_back(tx.hash());
  const auto now = Clock::now();
  for (std::size_t j = 0; j < nodes_.size(); ++j) {
    if (j == from) continue;
    // Compact relay: the peer rebuilds the block once every transaction it
    // lacks has arrived. Transactions not in flight travel with the block.
    auto at = now + genesis_.link.delay(block.compact_size());
    std::size_t extra = 0;
    {
      std::lock_guard lock(queue_mu_);
      for (std::size_t k = 0; k < hashes.size(); ++k) {
        if (nodes_[j]->knows_tx(hashes[k])) continue;
        auto it = gossip_arrival_.find(hashes[k]);
        if (it != gossip_arrival_.end())
          at = std::max(at, it->second);
        else
          extra += block.txs[k].encode().size();
      }
    }
    if (extra > 0) at += genesis_.link.delay(extra) - genesis_.link.delay(0);
    schedule(Lane::kBlock, at, [this, j, shared] { nodes_[j]->import_block(*shared); });
  }
}

void Network::delivery_loop() {
  std::unique_lock lock(queue_mu_);
  while (running_) {
    if (block_queue_.empty() && tx_queue_.empty()) {
      queue_cv_.wait(lock, [&] { return !running_ || !block_queue_.empty() || !tx_queue_.empty(); });
      continue;
    }
    const auto now = Clock::now();
    EventQueue* lane = nullptr;
    if (!block_queue_.empty() && block_queue_.top().at <= now) {
      lane = &block_queue_;
    } else if (!tx_queue_.empty() && tx_queue_.top().at <= now) {
      lane = &tx_queue_;
    } else {
      auto next = Clock::time_point::max();
      if (!block_queue_.empty()) next = block_queue_.top().at;
      if (!tx_queue_.empty()) next = std::min(next, tx_queue_.top().at);
      queue_cv_.wait_until(lock, next);
      continue;
    }
    auto fn = lane->top().fn;
    lane->pop();
    lock.unlock();
    fn();
    lock.lock();
    --in_flight_;
    std::lock_guard s(stats_mu_);
    ++stats_.messages_delivered;
  }
}

void Network::wake_producer() {
  {
    std::lock_guard lock(producer_mu_);
    ++activity_;
  }
  producer_cv_.notify_all();
}

bool Network::produce_once(std::size_t producer, std::uint64_t parent_height) {
  Node& n = *nodes_[producer];
  if (n.height() != parent_height || !n.has_includable()) return false;
  auto head = n.head();
  if (head.header.height != parent_height) return false;
  auto candidates = n.pending();

  ChainView parent{&head.header, head.state.get()};
  Block block;
  std::uint64_t trials = 0;
  if (genesis_.consensus.mode == ConsensusMode::kPow) {
    auto mined = produce_block_pow(parent, candidates, genesis_.consensus, n.address(), tick(), rng_, &cancel_);
    if (!mined) return false;
    block = std::move(mined->block);
    trials = mined->trials;
  } else {
    block = produce_block_poa(parent, candidates, genesis_.consensus, n.key(), tick(), rng_);
  }
  if (n.import_block(block) != Chain::ImportStatus::kImported) return false;
  broadcast_block(producer, block);
  std::lock_guard s(stats_mu_);
  ++stats_.blocks_produced;
  stats_.pow_trials += trials;
  return true;
}

void Network::producer_loop() {
  while (running_) {
    std::uint64_t seen;
    {
      std::lock_guard lock(producer_mu_);
      seen = activity_;
    }
    const std::uint64_t next = produced_height_ + 1;
    std::size_t producer = 0;
    if (genesis_.consensus.mode == ConsensusMode::kPoa) {
      const auto& v = slot_validator(genesis_.consensus, next);
      while (nodes_[producer]->address() != v) ++producer;
    }
    if (produce_once(producer, produced_height_)) {
      produced_height_ = next;
      continue;
    }
    std::unique_lock lock(producer_mu_);
    producer_cv_.wait_for(lock, std::chrono::milliseconds(50), [&] { return !running_ || activity_ != seen; });
  }
}

bool Network::settle(std::chrono::milliseconds timeout) {
  const auto deadline = Clock::now() + timeout;
  while (Clock::now() < deadline) {
    bool idle;
    {
      std::lock_guard lock(queue_mu_);
      idle = in_flight_ == 0;
    }
    if (idle) {
      auto h = nodes_[0]->head().hash;
      bool same = std::ranges::all_of(nodes_, [&](const auto& n) { return n->head().hash == h; });
      if (same) return true;
    }
    std::this_thread::sleep_for(std::chrono::milliseconds(1));
  }
  return false;
}

NetworkStats Network::stats() const {
  std::lock_guard lock(stats_mu_);
  return stats_;
}

}  // namespace authros::ledger
