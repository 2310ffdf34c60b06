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
#include <chrono>
#include <condition_variable>
#include <functional>
#include <iosfwd>
#include <map>
#include <memory>
#include <mutex>
#include <queue>
#include <thread>
#include <vector>

#include "authros/ledger/genesis.hpp"
#include "authros/ledger/node.hpp"

namespace authros::ledger {

struct NetworkStats {
  std::uint64_t blocks_produced = 0;
  std::uint64_t pow_trials = 0;
  std::uint64_t messages_delivered = 0;
};

/// In-process network of Nodes. Messages travel through a delay queue
/// driven by one delivery thread; a single producer thread seals blocks
/// (node 0 mines under PoW, the slot validator signs under PoA).
class Network {
 public:
  explicit Network(Genesis genesis, std::uint64_t seed = 1);
  ~Network();
  Network(const Network&) = delete;
  Network& operator=(const Network&) = delete;

  void start();
  void stop();
  // Replays an exported chain into every node; only before start(). Throws
  // std::runtime_error if the file does not verify against this genesis.
  void load_chain(std::istream& in);
  bool running() const { return running_; }

  const Genesis& genesis() const { return genesis_; }
  const ConsensusConfig& config() const { return genesis_.consensus; }
  std::size_t size() const { return nodes_.size(); }
  Node& node(std::size_t i) { return *nodes_.at(i); }
  const Node& node(std::size_t i) const { return *nodes_.at(i); }

  // Local admission at the given node followed by gossip to its peers. A
  // rejected transaction yields an already-resolved receipt.
  PendingReceipt submit(std::size_t node_index, const Transaction& tx);

  // 10x the target block interval.
  std::chrono::milliseconds receipt_timeout() const;

  // Monotonic logical clock shared by the harness and block producer.
  std::uint64_t tick() { return clock_.fetch_add(1) + 1; }

  // Blocks until every node's head equals node 0's head and all in-flight
  // messages are delivered, or the timeout passes.
  bool settle(std::chrono::milliseconds timeout);

  NetworkStats stats() const;

 private:
  using Clock = std::chrono::steady_clock;
  struct Event {
    Clock::time_point at;
    std::uint64_t seq;
    std::function<void()> fn;
    bool operator>(const Event& o) const { return at != o.at ? at > o.at : seq > o.seq; }
  };

  enum class Lane { kBlock, kTx };
  void schedule(Lane lane, Clock::time_point at, std::function<void()> fn);
  void broadcast_block(std::size_t from, const Block& block);
  void delivery_loop();
  void producer_loop();
  bool produce_once(std::size_t producer, std::uint64_t expected_parent_height);
  void wake_producer();

  Genesis genesis_;
  std::vector<std::unique_ptr<Node>> nodes_;
  std::atomic<std::uint64_t> clock_{0};
  SeededRandom rng_;

  mutable std::mutex queue_mu_;
  std::condition_variable queue_cv_;
  // Due blocks are delivered before due transactions.
  using EventQueue = std::priority_queue<Event, std::vector<Event>, std::greater<>>;
  EventQueue block_queue_;
  EventQueue tx_queue_;
  std::uint64_t seq_ = 0;
  std::map<Digest32, Clock::time_point> gossip_arrival_;  // when a tx reaches the origin's peers
  std::size_t in_flight_ = 0;

  std::mutex producer_mu_;
  std::condition_variable producer_cv_;
  std::uint64_t activity_ = 0;
  std::uint64_t produced_height_ = 0;

  std::atomic<bool> running_{false};
  std::atomic<bool> cancel_{false};
  std::thread delivery_thread_;
  std::thread producer_thread_;

  mutable std::mutex stats_mu_;
  NetworkStats stats_;
};

}  // namespace authros::ledger
