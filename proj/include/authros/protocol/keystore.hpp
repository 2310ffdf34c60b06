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

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include "authros/protocol/client.hpp"

namespace authros::protocol {

class KeystoreError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr std::uint32_t kKeystoreIterations = 4096;

// Iterated SM3 over salt and passphrase, truncated to an SM4 key.
crypto::Sm4Key passphrase_key(std::string_view passphrase, ByteView salt, std::uint32_t iterations);

/// JSON keystore. Name, address and P_C are in the clear; d_C, K_C, the
/// credential and the shared-record list are SM4-sealed under the
/// passphrase key. Granted keys (v) are not stored.
std::string seal_identity(const Identity& id, std::string_view passphrase, RandomSource& rng,
                          std::uint32_t iterations = kKeystoreIterations);

// Throws KeystoreError on a wrong passphrase or a malformed file.
Identity open_identity(std::string_view text, std::string_view passphrase);

}  // namespace authros::protocol
