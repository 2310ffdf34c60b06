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

#include <optional>
#include <string_view>

#include "authros/bytes.hpp"
#include "authros/crypto/bigint.hpp"
#include "authros/crypto/sm3.hpp"
#include "authros/crypto/sm4.hpp"
#include "authros/random.hpp"

namespace authros::crypto {

/// Affine point on the SM2 recommended curve. Coordinates are plain
/// (non-Montgomery) field elements.
struct CurvePoint {
  U256 x;
  U256 y;
  bool infinity = true;

  static CurvePoint at(const U256& x, const U256& y) { return {x, y, false}; }

  friend bool operator==(const CurvePoint&, const CurvePoint&) = default;
};

/// Recommended 256-bit curve parameters (y^2 = x^3 + ax + b over p).
struct Sm2Curve {
  U256 p, a, b, n;
  CurvePoint g;
};
const Sm2Curve& sm2_curve();
const ModArith& sm2_field();
const ModArith& sm2_order();

bool is_on_curve(const CurvePoint& pt);
CurvePoint point_add(const CurvePoint& a, const CurvePoint& b);
CurvePoint point_double(const CurvePoint& a);
CurvePoint point_neg(const CurvePoint& a);
CurvePoint scalar_mul(const U256& k, const CurvePoint& pt);
CurvePoint base_mul(const U256& k);

// 0x04 || x || y (65 bytes). Encoding the identity throws.
FixedBytes<65> encode_point(const CurvePoint& pt);
// Throws CryptoError if the encoding is malformed or the point is off-curve.
CurvePoint decode_point(ByteView encoded);

struct Sm2KeyPair {
  U256 private_key;
  CurvePoint public_key;
};

struct Sm2Signature {
  U256 r;
  U256 s;

  FixedBytes<64> encode() const;
  static Sm2Signature decode(ByteView bytes);
  friend bool operator==(const Sm2Signature&, const Sm2Signature&) = default;
};

struct Sm2Ciphertext {
  CurvePoint c1;
  Digest32 c3;
  Bytes c2;

  // C1(65) || C3(32) || C2
  Bytes encode() const;
  static Sm2Ciphertext decode(ByteView bytes);
};

inline constexpr std::string_view kDefaultSm2Id = "1234567812345678";

// d is drawn uniformly from [1, n-2].
Sm2KeyPair sm2_keygen(RandomSource& rng);
// Throws CryptoError if d is outside [1, n-2].
Sm2KeyPair sm2_keypair_from_private(const U256& d);
// On-curve, not the identity, coordinates reduced, [n]P = O.
bool verify_public_key(const CurvePoint& pt);

// Z_A = SM3(ENTL || ID || a || b || xG || yG || xA || yA)
Digest32 sm2_za(ByteView identity, const CurvePoint& public_key);

Sm2Signature sm2_sign(const Sm2KeyPair& key, ByteView identity, ByteView message, RandomSource& rng);
// Deterministic-nonce variant for known-answer tests; nullopt when k gives
// a degenerate r or s.
std::optional<Sm2Signature> sm2_sign_with_nonce(const Sm2KeyPair& key, ByteView identity, ByteView message,
                                                const U256& k);
bool sm2_verify(const CurvePoint& public_key, ByteView identity, ByteView message, const Sm2Signature& sig);

// Counter-mode SM3 expansion; nullopt if the output is all zero bytes.
std::optional<Bytes> sm2_kdf(ByteView shared, std::size_t out_len);

// Throws CryptoError on an empty plaintext or invalid recipient.
Sm2Ciphertext sm2_encrypt(const CurvePoint& recipient, ByteView plaintext, RandomSource& rng);
std::optional<Sm2Ciphertext> sm2_encrypt_with_nonce(const CurvePoint& recipient, ByteView plaintext, const U256& k);
// Throws CryptoError("invalid ciphertext").
Bytes sm2_decrypt(const U256& private_key, const Sm2Ciphertext& ct);

}  // namespace authros::crypto
