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
#include <set>

#include "authros/crypto/bigint.hpp"
#include "authros/crypto/keccak.hpp"
#include "authros/crypto/sm2.hpp"
#include "authros/crypto/sm3.hpp"
#include "authros/crypto/sm4.hpp"
#include "support/kat.hpp"

namespace authros::crypto {
namespace {

using authros::testing::kat_for;
using authros::testing::load_kat;
using boost::multiprecision::cpp_int;

const auto& vectors() {
  static const auto v = load_kat(std::string(AUTHROS_VECTORS_DIR) + "/sm_kat.txt");
  return v;
}

cpp_int to_cpp(const U256& v) {
  cpp_int r = 0;
  for (int i = 3; i >= 0; --i) r = (r << 64) | cpp_int(v.limb[i]);
  return r;
}

U256 from_cpp(cpp_int v) {
  U256 r;
  for (int i = 0; i < 4; ++i) {
    r.limb[i] = static_cast<std::uint64_t>(v & cpp_int(0xffffffffffffffffULL));
    v >>= 64;
  }
  return r;
}

U256 random_below(SeededRandom& rng, const U256& bound) {
  for (;;) {
    FixedBytes<32> raw;
    rng.fill(raw.bytes);
    auto v = U256::from_be(raw.view());
    if (v < bound) return v;
  }
}

TEST(Sm3, KnownAnswerVectors) {
  auto kats = kat_for(vectors(), "SM3");
  ASSERT_GE(kats.size(), 4u);
  for (const auto& v : kats) EXPECT_EQ(sm3_hash(v.in).hex(), to_hex(v.out));
}

TEST(Sm3, PublishedAbcVector) {
  EXPECT_EQ(sm3_hash(as_bytes("abc")).hex(), "66c7f0f462eeedd9d1f2d46bdc10e4e24167c4875cf2f7a2297da02b8f4ba8e0");
  EXPECT_EQ(sm3_hash({}).hex(), "1ab21d8355cfa17f8e61194831e81a8f22bec8c728fefb747ed035eb5082aa2b");
}

TEST(Sm3, IncrementalMatchesOneShot) {
  SeededRandom rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    Bytes msg(rng.next_u64() % 700);
    rng.fill(msg);
    Sm3 h;
    std::size_t pos = 0;
    while (pos < msg.size()) {
      std::size_t n = std::min<std::size_t>(msg.size() - pos, rng.next_u64() % 90);
      h.update(ByteView(msg).subspan(pos, n));
      pos += n;
    }
    EXPECT_EQ(h.finish(), sm3_hash(msg));
  }
}

TEST(Sm4, BlockKnownAnswers) {
  for (const auto& v : kat_for(vectors(), "SM4-BLOCK")) {
    Sm4Cipher c(Sm4Key::from(v.key));
    std::uint8_t out[16];
    c.encrypt_block(v.in.data(), out);
    EXPECT_EQ(to_hex({out, 16}), to_hex(v.out));
    std::uint8_t back[16];
    c.decrypt_block(out, back);
    EXPECT_EQ(to_hex({back, 16}), to_hex(v.in));
  }
  for (const auto& v : kat_for(vectors(), "SM4-BLOCK-1000")) {
    Sm4Cipher c(Sm4Key::from(v.key));
    std::uint8_t blk[16];
    std::copy(v.in.begin(), v.in.end(), blk);
    for (int i = 0; i < 1000; ++i) c.encrypt_block(blk, blk);
    EXPECT_EQ(to_hex({blk, 16}), to_hex(v.out));
  }
}

TEST(Sm4, PublishedSingleBlock) {
  auto key = Sm4Key::from_hex("0123456789abcdeffedcba9876543210");
  Sm4Cipher c(key);
  std::uint8_t out[16];
  c.encrypt_block(key.data(), out);
  EXPECT_EQ(to_hex({out, 16}), "681edf34d206965e86b3e94f536e4246");
}

TEST(Sm4, CbcKnownAnswers) {
  auto kats = kat_for(vectors(), "SM4-CBC");
  ASSERT_FALSE(kats.empty());
  for (const auto& v : kats) {
    auto key = Sm4Key::from(ByteView(v.key).first(16));
    auto iv = Sm4Iv::from(ByteView(v.key).subspan(16));
    EXPECT_EQ(to_hex(sm4_cbc_encrypt(key, v.in, iv)), to_hex(v.out));
    EXPECT_EQ(sm4_cbc_decrypt(key, v.out, iv), v.in);
  }
}

TEST(Sm4, RoundTripAndLengthContract) {
  SeededRandom rng(11);
  Sm4Key key;
  rng.fill(key.bytes);
  Sm4Iv iv;
  rng.fill(iv.bytes);
  for (std::size_t len : {0u, 1u, 15u, 16u, 17u, 1024u}) {
    Bytes m(len);
    rng.fill(m);
    auto ct = sm4_cbc_encrypt(key, m, iv);
    EXPECT_EQ(ct.size(), (len + 1 + 15) / 16 * 16);
    EXPECT_EQ(sm4_cbc_decrypt(key, ct, iv), m);
  }
}

TEST(Sm4, RandomizedRoundTrip) {
  SeededRandom rng(12);
  for (int i = 0; i < 1000; ++i) {
    Sm4Key key;
    rng.fill(key.bytes);
    Bytes m(rng.next_u64() % 300);
    rng.fill(m);
    auto sealed = sm4_seal(key, m, rng);
    ASSERT_EQ(sm4_open(key, sealed), m);
  }
}

TEST(Sm4, WrongKeyNeverYieldsOriginal) {
  SeededRandom rng(13);
  for (int i = 0; i < 200; ++i) {
    Sm4Key key, other;
    rng.fill(key.bytes);
    rng.fill(other.bytes);
    Bytes m(40);
    rng.fill(m);
    auto sealed = sm4_seal(key, m, rng);
    try {
      EXPECT_NE(sm4_open(other, sealed), m);
    } catch (const CryptoError& e) {
      EXPECT_STREQ(e.what(), "corrupt ciphertext");
    }
  }
}

TEST(Sm4, RejectsMalformedLength) {
  Sm4Key key;
  Sm4Iv iv;
  EXPECT_THROW(sm4_cbc_decrypt(key, Bytes(15), iv), CryptoError);
  EXPECT_THROW(sm4_cbc_decrypt(key, Bytes{}, iv), CryptoError);
  EXPECT_THROW(sm4_open(key, Bytes(20)), CryptoError);
}

TEST(Keccak, KnownAnswers) {
  for (const auto& v : kat_for(vectors(), "KECCAK256")) EXPECT_EQ(keccak256(v.in).hex(), to_hex(v.out));
  EXPECT_EQ(keccak256({}).hex(), "c5d2460186f7233c927e7db2dcc703c0e500b653ca82273b7bfad8045d85a470");
}

TEST(Keccak, MultiBlockDeterministic) {
  Bytes m(1000, 0x5a);
  EXPECT_EQ(keccak256(m), keccak256(m));
  Bytes rate_boundary(136, 1);
  EXPECT_NE(keccak256(rate_boundary), keccak256(ByteView(rate_boundary).first(135)));
}

class FieldOracle : public ::testing::TestWithParam<int> {};

TEST_P(FieldOracle, MontgomeryMatchesBigIntegerOracle) {
  const U256 modulus = GetParam() == 0 ? sm2_curve().p : sm2_curve().n;
  const ModArith arith(modulus);
  const cpp_int m = to_cpp(modulus);
  SeededRandom rng(100 + GetParam());
  for (int i = 0; i < 2000; ++i) {
    U256 a = random_below(rng, modulus);
    U256 b = random_below(rng, modulus);
    cpp_int ca = to_cpp(a), cb = to_cpp(b);
    ASSERT_EQ(arith.add(a, b), from_cpp((ca + cb) % m));
    ASSERT_EQ(arith.sub(a, b), from_cpp(((ca - cb) % m + m) % m));
    ASSERT_EQ(arith.mul_plain(a, b), from_cpp((ca * cb) % m));
    if (i % 50 == 0 && !a.is_zero()) {
      ASSERT_EQ(arith.mul_plain(arith.inv_plain(a), a), U256::from_u64(1));
    }
  }
  FixedBytes<32> all_ones;
  all_ones.bytes.fill(0xff);
  EXPECT_EQ(arith.reduce(U256::from_be(all_ones.view())), from_cpp(to_cpp(U256::from_be(all_ones.view())) % m));
}

INSTANTIATE_TEST_SUITE_P(PrimeAndOrder, FieldOracle, ::testing::Values(0, 1));

TEST(Curve, GeneratorLaws) {
  const auto& c = sm2_curve();
  EXPECT_TRUE(is_on_curve(c.g));
  EXPECT_TRUE(base_mul(c.n).infinity);
  EXPECT_EQ(base_mul(U256::from_u64(1)), c.g);
  EXPECT_EQ(base_mul(U256::from_u64(2)), point_double(c.g));
  EXPECT_EQ(point_add(c.g, point_neg(c.g)).infinity, true);
  EXPECT_TRUE(verify_public_key(c.g));
}

TEST(Curve, GroupLawsOnRandomPoints) {
  SeededRandom rng(21);
  const auto& n = sm2_order();
  for (int i = 0; i < 20; ++i) {
    U256 a = random_below(rng, sm2_curve().n);
    U256 b = random_below(rng, sm2_curve().n);
    U256 c = random_below(rng, sm2_curve().n);
    auto pa = base_mul(a), pb = base_mul(b), pc = base_mul(c);
    EXPECT_TRUE(is_on_curve(pa));
    EXPECT_EQ(point_add(pa, pb), point_add(pb, pa));
    EXPECT_EQ(point_add(point_add(pa, pb), pc), point_add(pa, point_add(pb, pc)));
    EXPECT_EQ(scalar_mul(a, pb), base_mul(n.mul_plain(a, b)));
    EXPECT_EQ(point_add(pa, pb), base_mul(n.add(a, b)));
    EXPECT_EQ(point_add(pa, pa), point_double(pa));
  }
}

TEST(Curve, PointEncoding) {
  auto enc = encode_point(sm2_curve().g);
  EXPECT_EQ(enc.bytes[0], 0x04);
  EXPECT_EQ(decode_point(enc.view()), sm2_curve().g);
  auto bad = enc;
  bad.bytes[64] ^= 1;
  EXPECT_THROW(decode_point(bad.view()), CryptoError);
  EXPECT_THROW(decode_point(ByteView(enc.view()).first(64)), CryptoError);
  EXPECT_THROW(encode_point(CurvePoint{}), CryptoError);
}

TEST(Sm2, PublicKeyKnownAnswer) {
  for (const auto& v : kat_for(vectors(), "SM2-PUB")) {
    auto kp = sm2_keypair_from_private(U256::from_be(v.key));
    EXPECT_EQ(encode_point(kp.public_key).hex(), to_hex(v.out));
  }
}

TEST(Sm2, KeygenContract) {
  SeededRandom rng(31);
  for (int i = 0; i < 10; ++i) {
    auto kp = sm2_keygen(rng);
    EXPECT_TRUE(verify_public_key(kp.public_key));
    EXPECT_TRUE(scalar_mul(sm2_curve().n, kp.public_key).infinity);
  }
  EXPECT_THROW(sm2_keypair_from_private(U256{}), CryptoError);
  U256 n1;
  sub_with_borrow(n1, sm2_curve().n, U256::from_u64(1));
  EXPECT_THROW(sm2_keypair_from_private(n1), CryptoError);
}

TEST(Sm2, SignatureKnownAnswers) {
  auto kats = kat_for(vectors(), "SM2-SIGN");
  ASSERT_GE(kats.size(), 2u);
  for (const auto& v : kats) {
    auto kp = sm2_keypair_from_private(U256::from_be(ByteView(v.key).first(32)));
    auto k = U256::from_be(ByteView(v.key).subspan(32));
    auto sig = sm2_sign_with_nonce(kp, as_bytes(kDefaultSm2Id), v.in, k);
    ASSERT_TRUE(sig.has_value());
    EXPECT_EQ(sig->encode().hex(), to_hex(v.out));
    EXPECT_TRUE(sm2_verify(kp.public_key, as_bytes(kDefaultSm2Id), v.in, *sig));
  }
}

TEST(Sm2, PublishedSignatureExample) {
  auto kp = sm2_keypair_from_private(U256::from_hex("3945208F7B2144B13F36E38AC6D39F95889393692860B51A42FB81EF4DF7C5B8"));
  auto sig = sm2_sign_with_nonce(kp, as_bytes(kDefaultSm2Id), as_bytes("message digest"),
                                 U256::from_hex("59276E27D506861A16680F3AD9C02DCCEF3CC1FA3CDBE4CE6D54B80DEAC1BC21"));
  ASSERT_TRUE(sig);
  EXPECT_EQ(sig->r.hex(), "f5a03b0648d2c4630eeac513e1bb81a15944da3827d5b74143ac7eaceee720b3");
  EXPECT_EQ(sig->s.hex(), "b1b6aa29df212fd8763182bc0d421ca1bb9038fd1f7f42d4840b69c485bbc1aa");
}

TEST(Sm2, SignVerifyRandomized) {
  SeededRandom rng(41);
  const auto id = as_bytes(kDefaultSm2Id);
  for (int i = 0; i < 100; ++i) {
    auto kp = sm2_keygen(rng);
    Bytes m(1 + rng.next_u64() % 100);
    rng.fill(m);
    auto sig = sm2_sign(kp, id, m, rng);
    ASSERT_TRUE(sm2_verify(kp.public_key, id, m, sig));

    Bytes flipped = m;
    flipped[rng.next_u64() % m.size()] ^= static_cast<std::uint8_t>(1u << (rng.next_u64() % 8));
    EXPECT_FALSE(sm2_verify(kp.public_key, id, flipped, sig));

    auto bad_r = sig;
    bad_r.r.limb[rng.next_u64() % 4] ^= 1ULL << (rng.next_u64() % 64);
    EXPECT_FALSE(sm2_verify(kp.public_key, id, m, bad_r));
    auto bad_s = sig;
    bad_s.s.limb[rng.next_u64() % 4] ^= 1ULL << (rng.next_u64() % 64);
    EXPECT_FALSE(sm2_verify(kp.public_key, id, m, bad_s));

    EXPECT_FALSE(sm2_verify(kp.public_key, as_bytes("another-identity"), m, sig));
    if (i % 10 == 0) {
      auto other = sm2_keygen(rng);
      EXPECT_FALSE(sm2_verify(other.public_key, id, m, sig));
    }
  }
}

TEST(Sm2, SignatureEncodingLayout) {
  Sm2Signature sig{U256::from_u64(1), U256::from_u64(2)};
  auto enc = sig.encode();
  EXPECT_EQ(enc.bytes[31], 1);
  EXPECT_EQ(enc.bytes[63], 2);
  EXPECT_EQ(Sm2Signature::decode(enc.view()), sig);
  EXPECT_THROW(Sm2Signature::decode(Bytes(63)), CryptoError);
}

TEST(Sm2, KdfKnownAnswersAndPrefixProperty) {
  for (const auto& v : kat_for(vectors(), "SM2-KDF")) {
    std::size_t len = (std::size_t(v.key[0]) << 24) | (v.key[1] << 16) | (v.key[2] << 8) | v.key[3];
    auto out = sm2_kdf(v.in, len);
    ASSERT_TRUE(out);
    EXPECT_EQ(to_hex(*out), to_hex(v.out));
  }
  auto z = as_bytes("shared secret material");
  auto long_out = *sm2_kdf(z, 32);
  auto short_out = *sm2_kdf(z, 16);
  EXPECT_TRUE(std::equal(short_out.begin(), short_out.end(), long_out.begin()));
}

TEST(Sm2, KdfDistinctInputs) {
  SeededRandom rng(51);
  std::set<Bytes> seen;
  for (int i = 0; i < 1000; ++i) {
    Bytes z(64);
    rng.fill(z);
    seen.insert(*sm2_kdf(z, 32));
  }
  EXPECT_EQ(seen.size(), 1000u);
}

TEST(Sm2, EncryptionKnownAnswers) {
  auto kats = kat_for(vectors(), "SM2-ENC");
  ASSERT_GE(kats.size(), 2u);
  for (const auto& v : kats) {
    auto kp = sm2_keypair_from_private(U256::from_be(ByteView(v.key).first(32)));
    auto k = U256::from_be(ByteView(v.key).subspan(32));
    auto ct = sm2_encrypt_with_nonce(kp.public_key, v.in, k);
    ASSERT_TRUE(ct);
    EXPECT_EQ(to_hex(ct->encode()), to_hex(v.out));
    EXPECT_EQ(sm2_decrypt(kp.private_key, Sm2Ciphertext::decode(v.out)), v.in);
  }
}

TEST(Sm2, EncryptionRoundTripAndTamper) {
  SeededRandom rng(61);
  auto kp = sm2_keygen(rng);
  Bytes payload(48);
  rng.fill(payload);
  auto ct = sm2_encrypt(kp.public_key, payload, rng);
  auto wire = ct.encode();
  EXPECT_EQ(wire.size(), 65u + 32u + payload.size());
  EXPECT_EQ(sm2_decrypt(kp.private_key, Sm2Ciphertext::decode(wire)), payload);

  auto tampered = ct;
  tampered.c2[7] ^= 0x40;
  EXPECT_THROW(sm2_decrypt(kp.private_key, tampered), CryptoError);
  auto bad_tag = ct;
  bad_tag.c3.bytes[0] ^= 1;
  EXPECT_THROW(sm2_decrypt(kp.private_key, bad_tag), CryptoError);
  auto bad_point = wire;
  bad_point[10] ^= 1;
  EXPECT_THROW(Sm2Ciphertext::decode(bad_point), CryptoError);

  EXPECT_THROW(sm2_encrypt(kp.public_key, Bytes{}, rng), CryptoError);
  // Randomized: same input, fresh nonce.
  EXPECT_NE(sm2_encrypt(kp.public_key, payload, rng).encode(), wire);
}

TEST(Sm2, WrongPrivateKeyRejected) {
  SeededRandom rng(71);
  auto kp = sm2_keygen(rng);
  int rejected = 0;
  for (int i = 0; i < 100; ++i) {
    auto other = sm2_keygen(rng);
    Bytes m(1 + rng.next_u64() % 64);
    rng.fill(m);
    auto ct = sm2_encrypt(kp.public_key, m, rng);
    try {
      sm2_decrypt(other.private_key, ct);
    } catch (const CryptoError& e) {
      EXPECT_STREQ(e.what(), "invalid ciphertext");
      ++rejected;
    }
  }
  EXPECT_EQ(rejected, 100);
}

TEST(Sm2, RandomizedEncryptionRoundTrip) {
  SeededRandom rng(81);
  for (int i = 0; i < 1000; ++i) {
    auto kp = sm2_keypair_from_private(U256::from_u64(1 + rng.next_u64() % 1000000));
    Bytes m(1 + rng.next_u64() % 100);
    rng.fill(m);
    ASSERT_EQ(sm2_decrypt(kp.private_key, sm2_encrypt(kp.public_key, m, rng)), m);
  }
}

}  // namespace
}  // namespace authros::crypto
