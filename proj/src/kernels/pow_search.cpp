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

#include <omp.h>

#include <limits>

#include "authros/crypto/sm3.hpp"
#include "authros/kernels.hpp"

namespace authros::kernels {

using crypto::U256;

U256 pow_boundary(std::uint64_t difficulty) {
  if (difficulty == 0) throw std::invalid_argument("difficulty must be >= 1");
  // Long division of 2^256 - 1 by a 64-bit divisor.
  U256 q;
  unsigned __int128 rem = 0;
  for (int i = 3; i >= 0; --i) {
    unsigned __int128 cur = (rem << 64) | std::numeric_limits<std::uint64_t>::max();
    q.limb[i] = static_cast<std::uint64_t>(cur / difficulty);
    rem = cur % difficulty;
  }
  return q;
}

namespace {

// The prefix is absorbed once; each trial only feeds the nonce and the
// padding block(s).
class NonceHasher {
 public:
  explicit NonceHasher(ByteView prefix) { base_.update(prefix); }

  bool check(std::uint64_t nonce, const U256& boundary) const {
    std::uint8_t be[8];
    for (int i = 0; i < 8; ++i) be[i] = static_cast<std::uint8_t>(nonce >> (56 - 8 * i));
    crypto::Sm3 h = base_;
    auto digest = h.update({be, 8}).finish();
    return U256::from_be(digest.view()) <= boundary;
  }

 private:
  crypto::Sm3 base_;
};

}  // namespace

bool pow_check(ByteView header_prefix, std::uint64_t nonce, const U256& boundary) {
  return NonceHasher(header_prefix).check(nonce, boundary);
}

PowResult pow_search_serial(ByteView header_prefix, const U256& boundary, std::uint64_t start, std::uint64_t count,
                            const std::atomic<bool>* cancel) {
  const NonceHasher hasher(header_prefix);
  PowResult result;
  for (std::uint64_t i = 0; i < count; ++i) {
    if (cancel && (i & 0xff) == 0 && cancel->load(std::memory_order_relaxed)) return result;
    ++result.trials;
    if (hasher.check(start + i, boundary)) {
      result.nonce = start + i;
      return result;
    }
  }
  return result;
}

PowResult pow_search_omp(ByteView header_prefix, const U256& boundary, std::uint64_t start, std::uint64_t count,
                         const std::atomic<bool>* cancel) {
  const std::uint64_t round = 1024ULL * static_cast<std::uint64_t>(omp_get_max_threads());
  const NonceHasher hasher(header_prefix);
  PowResult result;
  for (std::uint64_t base = 0; base < count; base += round) {
    if (cancel && cancel->load(std::memory_order_relaxed)) return {};
    const std::int64_t span = static_cast<std::int64_t>(std::min(round, count - base));
    std::uint64_t best = std::numeric_limits<std::uint64_t>::max();
#pragma omp parallel reduction(min : best)
    {
#pragma omp for schedule(static)
      for (std::int64_t i = 0; i < span; ++i) {
        std::uint64_t offset = base + static_cast<std::uint64_t>(i);
        if (offset < best && hasher.check(start + offset, boundary)) best = offset;
      }
    }
    if (best != std::numeric_limits<std::uint64_t>::max()) {
      result.nonce = start + best;
      result.trials = best + 1;
      return result;
    }
  }
  result.trials = count;
  return result;
}

}  // namespace authros::kernels
