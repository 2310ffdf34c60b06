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

#include <gtest/gtest.h>

#include <boost/multiprecision/cpp_int.hpp>

#include "authros/crypto/sm3.hpp"
#include "authros/kernels.hpp"

namespace authros::kernels {
namespace {

using crypto::U256;

TEST(PowBoundary, MatchesDivisionOracle) {
  using boost::multiprecision::cpp_int;
  const cpp_int max = (cpp_int(1) << 256) - 1;
  for (std::uint64_t d : {1ULL, 2ULL, 3ULL, 65536ULL, 0x4cccc8ULL, 0xffffffffffffffffULL}) {
    cpp_int expect = max / d;
    auto got = pow_boundary(d);
    cpp_int g = 0;
    for (int i = 3; i >= 0; --i) g = (g << 64) | cpp_int(got.limb[i]);
    EXPECT_EQ(g, expect) << d;
  }
  EXPECT_THROW(pow_boundary(0), std::invalid_argument);
}

TEST(PowSearch, DifficultyOneAcceptsFirstNonce) {
  auto r = pow_search_serial(as_bytes("header"), pow_boundary(1), 0, 10);
  ASSERT_TRUE(r.nonce);
  EXPECT_EQ(*r.nonce, 0u);
  EXPECT_EQ(r.trials, 1u);
}

TEST(PowSearch, OmpMatchesSerial) {
  for (int h = 0; h < 8; ++h) {
    Bytes prefix = to_bytes("block-header-" + std::to_string(h));
    auto boundary = pow_boundary(1 << 10);
    auto s = pow_search_serial(prefix, boundary, 5, 1 << 16);
    auto p = pow_search_omp(prefix, boundary, 5, 1 << 16);
    ASSERT_TRUE(s.nonce);
    EXPECT_EQ(s.nonce, p.nonce);
    EXPECT_EQ(s.trials, p.trials);
    EXPECT_TRUE(pow_check(prefix, *s.nonce, boundary));
  }
}

TEST(PowSearch, ExhaustedRangeAndCancel) {
  auto boundary = pow_boundary(~0ULL);
  auto s = pow_search_serial(as_bytes("x"), boundary, 0, 100);
  EXPECT_FALSE(s.nonce);
  EXPECT_EQ(s.trials, 100u);
  auto p = pow_search_omp(as_bytes("x"), boundary, 0, 100);
  EXPECT_FALSE(p.nonce);
  std::atomic<bool> cancel{true};
  EXPECT_FALSE(pow_search_omp(as_bytes("x"), boundary, 0, 1 << 20, &cancel).nonce);
  EXPECT_FALSE(pow_search_serial(as_bytes("x"), boundary, 0, 1 << 20, &cancel).nonce);
}

TEST(Sm4Kernel, ParallelDecryptMatchesSerial) {
  SeededRandom rng(3);
  crypto::Sm4Key key;
  rng.fill(key.bytes);
  for (std::size_t len : {0u, 1u, 16u, 4095u, 8192u, 100000u}) {
    Bytes m(len);
    rng.fill(m);
    auto sealed = crypto::sm4_seal(key, m, rng);
    crypto::Sm4Cipher cipher(key);
    auto iv = crypto::Sm4Iv::from(ByteView(sealed).first(16));
    auto body = ByteView(sealed).subspan(16);
    EXPECT_EQ(sm4_cbc_decrypt_raw_serial(cipher, iv, body), sm4_cbc_decrypt_raw_omp(cipher, iv, body));
    EXPECT_EQ(sm4_open_omp(key, sealed), m);
    EXPECT_EQ(crypto::sm4_open(key, sealed), m);
  }
  EXPECT_THROW(sm4_open_omp(key, Bytes(33)), crypto::CryptoError);
}

TEST(VerifyBatch, OmpMatchesSerial) {
  SeededRandom rng(5);
  std::vector<crypto::Sm2KeyPair> keys;
  std::vector<Bytes> msgs;
  std::vector<crypto::Sm2Signature> sigs;
  for (int i = 0; i < 40; ++i) {
    keys.push_back(crypto::sm2_keygen(rng));
    Bytes m(32);
    rng.fill(m);
    msgs.push_back(m);
    sigs.push_back(crypto::sm2_sign(keys.back(), as_bytes(crypto::kDefaultSm2Id), m, rng));
  }
  for (int i = 0; i < 40; i += 3) msgs[i][0] ^= 1;
  std::vector<SignatureJob> jobs;
  for (int i = 0; i < 40; ++i)
    jobs.push_back({&keys[i].public_key, as_bytes(crypto::kDefaultSm2Id), msgs[i], &sigs[i]});
  auto serial = verify_batch_serial(jobs);
  EXPECT_EQ(serial, verify_batch_omp(jobs));
  for (int i = 0; i < 40; ++i) EXPECT_EQ(serial[i], i % 3 == 0 ? 0 : 1);
}

}  // namespace
}  // namespace authros::kernels
