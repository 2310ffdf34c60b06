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

#include <iosfwd>
#include <map>
#include <memory>
#include <set>
#include <vector>

#include "authros/ledger/block.hpp"

namespace authros::ledger {

/// Block tree rooted at genesis with longest-chain head selection. Not
/// thread-safe; Node serializes access.
class Chain {
 public:
  struct Entry {
    Block block;
    Digest32 hash;
    std::shared_ptr<const LedgerState> state;
    std::vector<Receipt> receipts;
  };

  enum class ImportStatus { kImported, kKnown, kOrphan, kInvalid };

  explicit Chain(ConsensusConfig config);

  const ConsensusConfig& config() const { return config_; }
  const Entry& genesis() const { return *genesis_; }
  const Entry& head() const { return *head_; }
  ChainView head_view() const { return {&head_->block.header, head_->state.get()}; }
  const Entry* find(const Digest32& hash) const;

  // Imports a block and any buffered descendants. Blocks with an unknown
  // parent are held until the parent arrives.
  ImportStatus import(const Block& block, const std::set<Digest32>* verified_signatures = nullptr);

  // Entries imported onto the canonical chain by the most recent import call.
  const std::vector<const Entry*>& last_connected() const { return last_connected_; }

  std::vector<ChainTip> tips() const;
  std::vector<const Entry*> canonical() const;  // heights 1..head
  std::size_t orphan_count() const { return orphans_.size(); }

 private:
  ImportStatus connect(const Block& block, const std::set<Digest32>* verified);

  ConsensusConfig config_;
  std::map<Digest32, std::unique_ptr<Entry>> blocks_;
  std::set<Digest32> tips_;
  std::multimap<Digest32, Block> orphans_;  // keyed by parent hash
  const Entry* genesis_ = nullptr;
  const Entry* head_ = nullptr;
  std::vector<const Entry*> last_connected_;
};

// One hex-encoded block per line, heights 1..head of the canonical chain.
void export_chain(const Chain& chain, std::ostream& out);
// Rebuilds a chain from genesis; throws std::runtime_error on a line that
// does not decode or does not verify.
Chain import_chain(const ConsensusConfig& config, std::istream& in);

}  // namespace authros::ledger
