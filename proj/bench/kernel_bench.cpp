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

// Serial vs OpenMP twins of the hot loops. Run with
//   OMP_NUM_THREADS=<n> ./kernel_bench
// On a single-core host the OpenMP rows only show the threading overhead.

#include <benchmark/benchmark.h>
#include <omp.h>

#include "authros/kernels.hpp"
#include "authros/random.hpp"

using namespace authros;

namespace {

Bytes header_prefix() {
  Bytes b(140);
  SeededRandom(3).fill(b);
  return b;
}

// No nonce in range meets this difficulty, so every call walks the whole
// range and both twins do identical work.
template <auto Search>
void BM_PowSearch(benchmark::State& state) {
  const Bytes prefix = header_prefix();
  const auto boundary = kernels::pow_boundary(~0ULL);
  const auto count = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) {
    auto r = Search(prefix, boundary, 0, count, nullptr);
    benchmark::DoNotOptimize(r);
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * count));
  state.counters["threads"] = omp_get_max_threads();
}

struct Sm4Fixture {
  crypto::Sm4Key key;
  crypto::Sm4Iv iv;
  Bytes ct;
  explicit Sm4Fixture(std::size_t size) {
    SeededRandom rng(4);
    rng.fill(key.bytes);
    rng.fill(iv.bytes);
    Bytes plain(size);
    rng.fill(plain);
    ct = crypto::sm4_cbc_encrypt(key, plain, iv);
  }
};

template <auto Decrypt>
void BM_Sm4CbcDecrypt(benchmark::State& state) {
  Sm4Fixture fx(static_cast<std::size_t>(state.range(0)));
  const crypto::Sm4Cipher cipher(fx.key);
  for (auto _ : state) {
    auto out = Decrypt(cipher, fx.iv, fx.ct);
    benchmark::DoNotOptimize(out.data());
  }
  state.SetBytesProcessed(static_cast<std::int64_t>(state.iterations() * fx.ct.size()));
  state.counters["threads"] = omp_get_max_threads();
}

struct VerifyFixture {
  std::vector<crypto::Sm2KeyPair> keys;
  std::vector<Bytes> messages;
  std::vector<crypto::Sm2Signature> sigs;
  std::vector<kernels::SignatureJob> jobs;
  explicit VerifyFixture(std::size_t n) {
    SeededRandom rng(5);
    for (std::size_t i = 0; i < n; ++i) {
      keys.push_back(crypto::sm2_keygen(rng));
      messages.push_back(to_bytes("tx-" + std::to_string(i)));
      sigs.push_back(crypto::sm2_sign(keys[i], as_bytes(crypto::kDefaultSm2Id), messages[i], rng));
    }
    for (std::size_t i = 0; i < n; ++i)
      jobs.push_back({&keys[i].public_key, as_bytes(crypto::kDefaultSm2Id), messages[i], &sigs[i]});
  }
};

template <auto Verify>
void BM_VerifyBatch(benchmark::State& state) {
  VerifyFixture fx(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    auto flags = Verify(fx.jobs);
    benchmark::DoNotOptimize(flags.data());
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * fx.jobs.size()));
  state.counters["threads"] = omp_get_max_threads();
}

}  // namespace

BENCHMARK(BM_PowSearch<kernels::pow_search_serial>)->Name("pow_search/serial")->Arg(1 << 14);
BENCHMARK(BM_PowSearch<kernels::pow_search_omp>)->Name("pow_search/omp")->Arg(1 << 14);
BENCHMARK(BM_Sm4CbcDecrypt<kernels::sm4_cbc_decrypt_raw_serial>)
    ->Name("sm4_cbc_decrypt/serial")
    ->Arg(1 << 10)
    ->Arg(58 << 10)
    ->Arg(800 << 10);
BENCHMARK(BM_Sm4CbcDecrypt<kernels::sm4_cbc_decrypt_raw_omp>)
    ->Name("sm4_cbc_decrypt/omp")
    ->Arg(1 << 10)
    ->Arg(58 << 10)
    ->Arg(800 << 10);
BENCHMARK(BM_VerifyBatch<kernels::verify_batch_serial>)->Name("verify_batch/serial")->Arg(64);
BENCHMARK(BM_VerifyBatch<kernels::verify_batch_omp>)->Name("verify_batch/omp")->Arg(64);

BENCHMARK_MAIN();
