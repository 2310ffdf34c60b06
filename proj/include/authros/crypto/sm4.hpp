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

#include <array>
#include <cstdint>
#include <stdexcept>

#include "authros/bytes.hpp"
#include "authros/random.hpp"

namespace authros::crypto {

using Sm4Key = FixedBytes<16>;
using Sm4Iv = FixedBytes<16>;

class CryptoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Expanded SM4 key (GB/T 32907). Cheap to copy.
class Sm4Cipher {
 public:
  static constexpr std::size_t kBlockSize = 16;

  explicit Sm4Cipher(const Sm4Key& key);

  void encrypt_block(const std::uint8_t* in, std::uint8_t* out) const;
  void decrypt_block(const std::uint8_t* in, std::uint8_t* out) const;

 private:
  void crypt(const std::uint8_t* in, std::uint8_t* out, bool reverse) const;

  std::array<std::uint32_t, 32> round_keys_;
};

// CBC with byte-value (PKCS#7) padding; output is exactly
// ceil((|m|+1)/16)*16 bytes and carries no IV.
Bytes sm4_cbc_encrypt(const Sm4Key& key, ByteView plaintext, const Sm4Iv& iv);
// Throws CryptoError("corrupt ciphertext") on bad length or padding.
Bytes sm4_cbc_decrypt(const Sm4Key& key, ByteView ciphertext, const Sm4Iv& iv);

// Strip PKCS#7 padding in place; throws CryptoError on malformed padding.
void sm4_strip_padding(Bytes& padded);

// Random IV prepended: IV(16) || CBC ciphertext.
Bytes sm4_seal(const Sm4Key& key, ByteView plaintext, RandomSource& rng);
Bytes sm4_open(const Sm4Key& key, ByteView sealed);

}  // namespace authros::crypto
