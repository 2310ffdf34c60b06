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

#include "authros/protocol/cache.hpp"

#include <fstream>
#include <sstream>

#include "authros/crypto/sm3.hpp"

namespace authros::protocol {

Digest32 CiphertextCache::insert(Bytes ciphertext, const ledger::Address& owner, std::uint64_t uploaded_ms) {
  Digest32 key = crypto::sm3_hash(ciphertext);
  std::lock_guard lock(mu_);
  store_.try_emplace(key, CacheEntry{std::move(ciphertext), owner, uploaded_ms});
  return key;
}

std::optional<CacheEntry> CiphertextCache::get(const Digest32& digest) const {
  std::lock_guard lock(mu_);
  auto it = store_.find(digest);
  if (it == store_.end()) return std::nullopt;
  return it->second;
}

bool CiphertextCache::contains(const Digest32& digest) const {
  std::lock_guard lock(mu_);
  return store_.contains(digest);
}

std::size_t CiphertextCache::size() const {
  std::lock_guard lock(mu_);
  return store_.size();
}

std::vector<Digest32> CiphertextCache::keys() const {
  std::lock_guard lock(mu_);
  std::vector<Digest32> out;
  for (const auto& [k, _] : store_) out.push_back(k);
  return out;
}

void CiphertextCache::quarantine(const Digest32& digest) {
  std::lock_guard lock(mu_);
  quarantine_.insert(digest);
}

bool CiphertextCache::quarantined(const Digest32& digest) const {
  std::lock_guard lock(mu_);
  return quarantine_.contains(digest);
}

bool CiphertextCache::restore(const Digest32& digest, Bytes ciphertext) {
  if (crypto::sm3_hash(ciphertext) != digest) return false;
  std::lock_guard lock(mu_);
  auto it = store_.find(digest);
  if (it == store_.end()) return false;
  it->second.ciphertext = std::move(ciphertext);
  quarantine_.erase(digest);
  return true;
}

bool CiphertextCache::tamper(const Digest32& digest, std::size_t pos, std::uint8_t mask) {
  std::lock_guard lock(mu_);
  auto it = store_.find(digest);
  if (it == store_.end() || pos >= it->second.ciphertext.size() || mask == 0) return false;
  it->second.ciphertext[pos] ^= mask;
  return true;
}

bool CiphertextCache::erase(const Digest32& digest) {
  std::lock_guard lock(mu_);
  return store_.erase(digest) > 0;
}

void CiphertextCache::save(const std::filesystem::path& path) const {
  std::lock_guard lock(mu_);
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write cache snapshot " + path.string());
  for (const auto& [k, e] : store_) {
    out << k.hex() << ' ' << e.owner.hex() << ' ' << e.uploaded_ms << ' ' << to_hex(e.ciphertext);
    if (quarantine_.contains(k)) out << " q";
    out << '\n';
  }
}

void CiphertextCache::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open cache snapshot " + path.string());
  std::map<Digest32, CacheEntry> store;
  std::set<Digest32> q;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    std::istringstream f(line);
    std::string key, owner, ct, flag;
    std::uint64_t ms = 0;
    try {
      if (!(f >> key >> owner >> ms >> ct)) throw std::invalid_argument("missing field");
      auto k = Digest32::from_hex(key);
      store[k] = CacheEntry{from_hex(ct), ledger::Address::from_hex(owner), ms};
      if (f >> flag) {
        if (flag != "q") throw std::invalid_argument("unknown flag");
        q.insert(k);
      }
    } catch (const std::exception& e) {
      throw std::runtime_error("cache snapshot line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  std::lock_guard lock(mu_);
  store_ = std::move(store);
  quarantine_ = std::move(q);
}

}  // namespace authros::protocol
