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

#include <filesystem>
#include <map>
#include <mutex>
#include <optional>
#include <set>
#include <vector>

#include "authros/ledger/types.hpp"

namespace authros::protocol {

struct CacheEntry {
  Bytes ciphertext;
  ledger::Address owner;
  std::uint64_t uploaded_ms = 0;
};

/// In-memory ciphertext store keyed by the SM3 digest of the ciphertext at
/// insertion time. Nothing is evicted.
class CiphertextCache {
 public:
  Digest32 insert(Bytes ciphertext, const ledger::Address& owner, std::uint64_t uploaded_ms);
  std::optional<CacheEntry> get(const Digest32& digest) const;
  bool contains(const Digest32& digest) const;
  std::size_t size() const;
  std::vector<Digest32> keys() const;

  void quarantine(const Digest32& digest);
  bool quarantined(const Digest32& digest) const;
  // Operator repair: replaces an existing entry's bytes and lifts its
  // quarantine, only if the bytes hash to the digest.
  bool restore(const Digest32& digest, Bytes ciphertext);

  // Test hooks: corrupt one stored byte in place, or drop an entry.
  bool tamper(const Digest32& digest, std::size_t pos, std::uint8_t mask = 0x01);
  bool erase(const Digest32& digest);

  // Line format: digest owner uploaded_ms ciphertext [q], all hex but the
  // decimal time. Stored bytes are written as-is, tampered or not.
  void save(const std::filesystem::path& path) const;
  void load(const std::filesystem::path& path);  // replaces current contents

 private:
  mutable std::mutex mu_;
  std::map<Digest32, CacheEntry> store_;
  std::set<Digest32> quarantine_;
};

}  // namespace authros::protocol
