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

// Data-parallel hot loops. Every kernel has a serial reference twin that
// the tests hold the OpenMP version to, bit for bit.

#include <atomic>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "authros/bytes.hpp"
#include "authros/crypto/bigint.hpp"
#include "authros/crypto/sm2.hpp"
#include "authros/crypto/sm4.hpp"

namespace authros::kernels {

/// Largest hash value satisfying hash < 2^256 / difficulty, i.e.
/// floor((2^256 - 1) / difficulty). difficulty must be >= 1.
crypto::U256 pow_boundary(std::uint64_t difficulty);

// True iff sm3(prefix || nonce_be64) <= boundary.
bool pow_check(ByteView header_prefix, std::uint64_t nonce, const crypto::U256& boundary);

struct PowResult {
  std::optional<std::uint64_t> nonce;  // smallest valid nonce in the range
  std::uint64_t trials = 0;            // nonces evaluated up to and including it
};

// Search [start, start + count). Both return the smallest valid nonce, so
// results are independent of thread count. A set cancel flag ends the search
// early with no nonce.
PowResult pow_search_serial(ByteView header_prefix, const crypto::U256& boundary, std::uint64_t start,
                            std::uint64_t count, const std::atomic<bool>* cancel = nullptr);
PowResult pow_search_omp(ByteView header_prefix, const crypto::U256& boundary, std::uint64_t start,
                         std::uint64_t count, const std::atomic<bool>* cancel = nullptr);

// CBC decryption is block-independent; the result is the still-padded
// plaintext. ciphertext size must be a multiple of 16.
Bytes sm4_cbc_decrypt_raw_serial(const crypto::Sm4Cipher& cipher, const crypto::Sm4Iv& iv, ByteView ciphertext);
Bytes sm4_cbc_decrypt_raw_omp(const crypto::Sm4Cipher& cipher, const crypto::Sm4Iv& iv, ByteView ciphertext);

// Parallel drop-in for crypto::sm4_open.
Bytes sm4_open_omp(const crypto::Sm4Key& key, ByteView sealed);

struct SignatureJob {
  const crypto::CurvePoint* public_key;
  ByteView identity;
  ByteView message;
  const crypto::Sm2Signature* signature;
};

// One flag per job (1 = valid).
std::vector<std::uint8_t> verify_batch_serial(std::span<const SignatureJob> jobs);
std::vector<std::uint8_t> verify_batch_omp(std::span<const SignatureJob> jobs);

}  // namespace authros::kernels
