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

#include "authros/ledger/chain.hpp"

#include <istream>
#include <ostream>
#include <string>

namespace authros::ledger {

Chain::Chain(ConsensusConfig config) : config_(std::move(config)) {
  config_.validate();
  auto g = std::make_unique<Entry>();
  g->block = genesis_block(config_);
  g->hash = g->block.hash();
  g->state = std::make_shared<const LedgerState>();
  genesis_ = head_ = g.get();
  tips_.insert(g->hash);
  blocks_.emplace(g->hash, std::move(g));
}

const Chain::Entry* Chain::find(const Digest32& hash) const {
  auto it = blocks_.find(hash);
  return it == blocks_.end() ? nullptr : it->second.get();
}

Chain::ImportStatus Chain::connect(const Block& block, const std::set<Digest32>* verified) {
  auto hash = block.hash();
  if (blocks_.contains(hash)) return ImportStatus::kKnown;
  const Entry* parent = find(block.header.parent_hash);
  if (!parent) {
    orphans_.emplace(block.header.parent_hash, block);
    return ImportStatus::kOrphan;
  }
  auto applied = apply_block(block, {&parent->block.header, parent->state.get()}, config_, verified);
  if (!applied) return ImportStatus::kInvalid;

  auto e = std::make_unique<Entry>();
  e->block = block;
  e->hash = hash;
  e->state = std::make_shared<const LedgerState>(std::move(applied->post_state));
  e->receipts = std::move(applied->receipts);
  const Entry* added = e.get();
  blocks_.emplace(hash, std::move(e));
  tips_.erase(parent->hash);
  tips_.insert(hash);

  auto best = select_chain(tips());
  const Entry* old_head = head_;
  head_ = find(best.hash);
  if (head_ != old_head) {
    if (head_ == added && parent == old_head) {
      last_connected_.push_back(added);
    } else {
      // Reorganization: report the new branch back to the fork point.
      std::set<const Entry*> old_chain;
      for (const Entry* x = old_head; x != genesis_; x = find(x->block.header.parent_hash)) old_chain.insert(x);
      std::vector<const Entry*> branch;
      for (const Entry* x = head_; x != genesis_ && !old_chain.contains(x); x = find(x->block.header.parent_hash))
        branch.push_back(x);
      last_connected_.insert(last_connected_.end(), branch.rbegin(), branch.rend());
    }
  }
  return ImportStatus::kImported;
}

Chain::ImportStatus Chain::import(const Block& block, const std::set<Digest32>* verified) {
  last_connected_.clear();
  auto status = connect(block, verified);
  if (status != ImportStatus::kImported) return status;
  std::vector<Digest32> ready{block.hash()};
  while (!ready.empty()) {
    auto parent = ready.back();
    ready.pop_back();
    auto [lo, hi] = orphans_.equal_range(parent);
    std::vector<Block> children;
    for (auto it = lo; it != hi; ++it) children.push_back(it->second);
    orphans_.erase(lo, hi);
    for (const auto& child : children) {
      if (connect(child, verified) == ImportStatus::kImported) ready.push_back(child.hash());
    }
  }
  return status;
}

std::vector<ChainTip> Chain::tips() const {
  std::vector<ChainTip> out;
  for (const auto& h : tips_) out.push_back({h, find(h)->block.header.height});
  return out;
}

std::vector<const Chain::Entry*> Chain::canonical() const {
  std::vector<const Entry*> out;
  for (const Entry* e = head_; e != genesis_; e = find(e->block.header.parent_hash)) out.push_back(e);
  return {out.rbegin(), out.rend()};
}

void export_chain(const Chain& chain, std::ostream& out) {
  for (const auto* e : chain.canonical()) out << to_hex(e->block.encode()) << '\n';
}

Chain import_chain(const ConsensusConfig& config, std::istream& in) {
  Chain chain(config);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    Block b;
    try {
      b = Block::decode(from_hex(line));
    } catch (const std::exception& e) {
      throw std::runtime_error("chain line " + std::to_string(lineno) + ": " + e.what());
    }
    if (b.header.parent_hash != chain.head().hash || chain.import(b) != Chain::ImportStatus::kImported)
      throw std::runtime_error("chain line " + std::to_string(lineno) + ": block does not extend the head");
  }
  return chain;
}

}  // namespace authros::ledger
