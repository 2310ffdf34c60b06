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

#include "authros/crypto/sm2.hpp"

#include <array>

namespace authros::crypto {

namespace {

const Sm2Curve kCurve{
    U256::from_hex("FFFFFFFEFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFF00000000FFFFFFFFFFFFFFFF"),
    U256::from_hex("FFFFFFFEFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFF00000000FFFFFFFFFFFFFFFC"),
    U256::from_hex("28E9FA9E9D9F5E344D5A9E4BCF6509A7F39789F515AB8F92DDBCBD414D940E93"),
    U256::from_hex("FFFFFFFEFFFFFFFFFFFFFFFFFFFFFFFF7203DF6B21C6052B53BBF40939D54123"),
    CurvePoint::at(U256::from_hex("32C4AE2C1F1981195F9904466A39C9948FE30BBFF2660BE1715A4589334C74C7"),
                   U256::from_hex("BC3736A2F4F6779C59BDCEE36B692153D0A9877CC62A474002DF32E52139F0A0")),
};

// Jacobian coordinates in the Montgomery domain; Z = 0 is the identity.
struct Jacobian {
  U256 x, y, z;
  bool is_infinity() const { return z.is_zero(); }
};

Jacobian to_jacobian(const CurvePoint& p) {
  if (p.infinity) return {};
  const auto& f = sm2_field();
  return {f.to_mont(p.x), f.to_mont(p.y), f.mont_one()};
}

CurvePoint to_affine(const Jacobian& p) {
  if (p.is_infinity()) return {};
  const auto& f = sm2_field();
  U256 zi = f.inv(p.z);
  U256 zi2 = f.sqr(zi);
  U256 zi3 = f.mul(zi2, zi);
  return CurvePoint::at(f.from_mont(f.mul(p.x, zi2)), f.from_mont(f.mul(p.y, zi3)));
}

// a = -3 doubling.
Jacobian jdouble(const Jacobian& p) {
  if (p.is_infinity() || p.y.is_zero()) return {};
  const auto& f = sm2_field();
  U256 delta = f.sqr(p.z);
  U256 gamma = f.sqr(p.y);
  U256 beta = f.mul(p.x, gamma);
  U256 t = f.mul(f.sub(p.x, delta), f.add(p.x, delta));
  U256 alpha = f.add(f.add(t, t), t);
  U256 beta4 = f.add(beta, beta);
  beta4 = f.add(beta4, beta4);
  U256 beta8 = f.add(beta4, beta4);
  Jacobian r;
  r.x = f.sub(f.sqr(alpha), beta8);
  r.z = f.sub(f.sub(f.sqr(f.add(p.y, p.z)), gamma), delta);
  U256 gamma2 = f.sqr(gamma);
  U256 g8 = f.add(gamma2, gamma2);
  g8 = f.add(g8, g8);
  g8 = f.add(g8, g8);
  r.y = f.sub(f.mul(alpha, f.sub(beta4, r.x)), g8);
  return r;
}

Jacobian jadd(const Jacobian& p, const Jacobian& q) {
  if (p.is_infinity()) return q;
  if (q.is_infinity()) return p;
  const auto& f = sm2_field();
  U256 z1z1 = f.sqr(p.z);
  U256 z2z2 = f.sqr(q.z);
  U256 u1 = f.mul(p.x, z2z2);
  U256 u2 = f.mul(q.x, z1z1);
  U256 s1 = f.mul(f.mul(p.y, q.z), z2z2);
  U256 s2 = f.mul(f.mul(q.y, p.z), z1z1);
  U256 h = f.sub(u2, u1);
  U256 rr = f.sub(s2, s1);
  if (h.is_zero()) {
    if (rr.is_zero()) return jdouble(p);
    return {};
  }
  rr = f.add(rr, rr);
  U256 h2 = f.add(h, h);
  U256 i = f.sqr(h2);
  U256 j = f.mul(h, i);
  U256 v = f.mul(u1, i);
  Jacobian r;
  r.x = f.sub(f.sub(f.sub(f.sqr(rr), j), v), v);
  U256 s1j = f.mul(s1, j);
  r.y = f.sub(f.mul(rr, f.sub(v, r.x)), f.add(s1j, s1j));
  r.z = f.mul(f.sub(f.sub(f.sqr(f.add(p.z, q.z)), z1z1), z2z2), h);
  return r;
}

// Fixed 4-bit window, left to right.
Jacobian jmul(const U256& k, const Jacobian& p) {
  std::array<Jacobian, 16> table;
  table[0] = {};
  table[1] = p;
  for (int i = 2; i < 16; ++i) table[i] = jadd(table[i - 1], p);
  Jacobian acc;
  for (int w = 63; w >= 0; --w) {
    for (int d = 0; d < 4; ++d) acc = jdouble(acc);
    unsigned nib = (k.limb[w / 16] >> (4 * (w % 16))) & 0xf;
    if (nib) acc = jadd(acc, table[nib]);
  }
  return acc;
}

U256 random_scalar(RandomSource& rng, const U256& upper_exclusive) {
  for (;;) {
    FixedBytes<32> raw;
    rng.fill(raw.bytes);
    U256 k = U256::from_be(raw.view());
    if (!k.is_zero() && k < upper_exclusive) return k;
  }
}

U256 n_minus(std::uint64_t v) {
  U256 r;
  sub_with_borrow(r, kCurve.n, U256::from_u64(v));
  return r;
}

}  // namespace

const Sm2Curve& sm2_curve() { return kCurve; }

const ModArith& sm2_field() {
  static const ModArith field(kCurve.p);
  return field;
}

const ModArith& sm2_order() {
  static const ModArith order(kCurve.n);
  return order;
}

bool is_on_curve(const CurvePoint& pt) {
  if (pt.infinity) return false;
  const auto& f = sm2_field();
  if (pt.x >= kCurve.p || pt.y >= kCurve.p) return false;
  U256 x = f.to_mont(pt.x);
  U256 y = f.to_mont(pt.y);
  U256 rhs = f.add(f.mul(f.add(f.sqr(x), f.to_mont(kCurve.a)), x), f.to_mont(kCurve.b));
  return f.sqr(y) == rhs;
}

CurvePoint point_add(const CurvePoint& a, const CurvePoint& b) {
  return to_affine(jadd(to_jacobian(a), to_jacobian(b)));
}

CurvePoint point_double(const CurvePoint& a) { return to_affine(jdouble(to_jacobian(a))); }

CurvePoint point_neg(const CurvePoint& a) {
  if (a.infinity) return a;
  return CurvePoint::at(a.x, sm2_field().neg(a.y));
}

CurvePoint scalar_mul(const U256& k, const CurvePoint& pt) { return to_affine(jmul(k, to_jacobian(pt))); }

CurvePoint base_mul(const U256& k) {
  static const Jacobian g = to_jacobian(kCurve.g);
  return to_affine(jmul(k, g));
}

FixedBytes<65> encode_point(const CurvePoint& pt) {
  if (pt.infinity) throw CryptoError("cannot encode the point at infinity");
  FixedBytes<65> out;
  out.bytes[0] = 0x04;
  auto x = pt.x.to_be();
  auto y = pt.y.to_be();
  std::copy(x.bytes.begin(), x.bytes.end(), out.bytes.begin() + 1);
  std::copy(y.bytes.begin(), y.bytes.end(), out.bytes.begin() + 33);
  return out;
}

CurvePoint decode_point(ByteView encoded) {
  if (encoded.size() != 65 || encoded[0] != 0x04) throw CryptoError("malformed point encoding");
  auto pt = CurvePoint::at(U256::from_be(encoded.subspan(1, 32)), U256::from_be(encoded.subspan(33, 32)));
  if (!is_on_curve(pt)) throw CryptoError("point is not on the curve");
  return pt;
}

FixedBytes<64> Sm2Signature::encode() const {
  FixedBytes<64> out;
  auto rb = r.to_be();
  auto sb = s.to_be();
  std::copy(rb.bytes.begin(), rb.bytes.end(), out.bytes.begin());
  std::copy(sb.bytes.begin(), sb.bytes.end(), out.bytes.begin() + 32);
  return out;
}

Sm2Signature Sm2Signature::decode(ByteView bytes) {
  if (bytes.size() != 64) throw CryptoError("malformed signature encoding");
  return {U256::from_be(bytes.first(32)), U256::from_be(bytes.subspan(32))};
}

Bytes Sm2Ciphertext::encode() const {
  auto p = encode_point(c1);
  Bytes out(p.bytes.begin(), p.bytes.end());
  append(out, c3.view());
  append(out, c2);
  return out;
}

Sm2Ciphertext Sm2Ciphertext::decode(ByteView bytes) {
  if (bytes.size() < 65 + 32 + 1) throw CryptoError("invalid ciphertext");
  Sm2Ciphertext ct;
  try {
    ct.c1 = decode_point(bytes.first(65));
  } catch (const CryptoError&) {
    throw CryptoError("invalid ciphertext");
  }
  ct.c3 = Digest32::from(bytes.subspan(65, 32));
  ct.c2.assign(bytes.begin() + 97, bytes.end());
  return ct;
}

Sm2KeyPair sm2_keygen(RandomSource& rng) {
  U256 d = random_scalar(rng, n_minus(1));
  return {d, base_mul(d)};
}

Sm2KeyPair sm2_keypair_from_private(const U256& d) {
  if (d.is_zero() || d >= n_minus(1)) throw CryptoError("private key out of range");
  return {d, base_mul(d)};
}

bool verify_public_key(const CurvePoint& pt) {
  if (pt.infinity || !is_on_curve(pt)) return false;
  return scalar_mul(kCurve.n, pt).infinity;
}

Digest32 sm2_za(ByteView identity, const CurvePoint& public_key) {
  if (identity.size() * 8 > 0xffff) throw CryptoError("identity label too long");
  Sm3 h;
  std::uint16_t entl = static_cast<std::uint16_t>(identity.size() * 8);
  std::uint8_t entl_bytes[2] = {static_cast<std::uint8_t>(entl >> 8), static_cast<std::uint8_t>(entl)};
  h.update(entl_bytes);
  h.update(identity);
  h.update(kCurve.a.to_be().view());
  h.update(kCurve.b.to_be().view());
  h.update(kCurve.g.x.to_be().view());
  h.update(kCurve.g.y.to_be().view());
  h.update(public_key.x.to_be().view());
  h.update(public_key.y.to_be().view());
  return h.finish();
}

namespace {

U256 message_scalar(ByteView identity, const CurvePoint& public_key, ByteView message) {
  auto za = sm2_za(identity, public_key);
  Digest32 e = Sm3().update(za.view()).update(message).finish();
  return sm2_order().reduce(U256::from_be(e.view()));
}

}  // namespace

std::optional<Sm2Signature> sm2_sign_with_nonce(const Sm2KeyPair& key, ByteView identity, ByteView message,
                                                const U256& k) {
  const auto& n = sm2_order();
  if (k.is_zero() || k >= kCurve.n) return std::nullopt;
  U256 e = message_scalar(identity, key.public_key, message);
  CurvePoint kg = base_mul(k);
  U256 r = n.add(e, n.reduce(kg.x));
  U256 rk;
  if (r.is_zero() || (add_with_carry(rk, r, k) == 0 && rk == kCurve.n)) return std::nullopt;
  // s = (1 + d)^-1 * (k - r*d) mod n
  U256 d1 = n.add(key.private_key, U256::from_u64(1));
  U256 s = n.mul_plain(n.inv_plain(d1), n.sub(k, n.mul_plain(r, key.private_key)));
  if (s.is_zero()) return std::nullopt;
  return Sm2Signature{r, s};
}

Sm2Signature sm2_sign(const Sm2KeyPair& key, ByteView identity, ByteView message, RandomSource& rng) {
  for (;;) {
    U256 k = random_scalar(rng, kCurve.n);
    if (auto sig = sm2_sign_with_nonce(key, identity, message, k)) return *sig;
  }
}

bool sm2_verify(const CurvePoint& public_key, ByteView identity, ByteView message, const Sm2Signature& sig) {
  if (sig.r.is_zero() || sig.s.is_zero() || sig.r >= kCurve.n || sig.s >= kCurve.n) return false;
  if (public_key.infinity || !is_on_curve(public_key)) return false;
  const auto& n = sm2_order();
  U256 t = n.add(sig.r, sig.s);
  if (t.is_zero()) return false;
  U256 e = message_scalar(identity, public_key, message);
  static const Jacobian g = to_jacobian(kCurve.g);
  CurvePoint pt = to_affine(jadd(jmul(sig.s, g), jmul(t, to_jacobian(public_key))));
  if (pt.infinity) return false;
  return n.add(e, n.reduce(pt.x)) == sig.r;
}

std::optional<Bytes> sm2_kdf(ByteView shared, std::size_t out_len) {
  Bytes out;
  out.reserve(out_len + 32);
  for (std::uint32_t ct = 1; out.size() < out_len; ++ct) {
    std::uint8_t counter[4] = {static_cast<std::uint8_t>(ct >> 24), static_cast<std::uint8_t>(ct >> 16),
                               static_cast<std::uint8_t>(ct >> 8), static_cast<std::uint8_t>(ct)};
    auto block = Sm3().update(shared).update(counter).finish();
    append(out, block.view());
  }
  out.resize(out_len);
  for (auto b : out)
    if (b != 0) return out;
  return std::nullopt;
}

std::optional<Sm2Ciphertext> sm2_encrypt_with_nonce(const CurvePoint& recipient, ByteView plaintext, const U256& k) {
  if (plaintext.empty()) throw CryptoError("plaintext must be non-empty");
  if (recipient.infinity || !is_on_curve(recipient)) throw CryptoError("invalid recipient key");
  if (k.is_zero() || k >= kCurve.n) return std::nullopt;
  CurvePoint shared = scalar_mul(k, recipient);
  if (shared.infinity) return std::nullopt;
  auto x2 = shared.x.to_be();
  auto y2 = shared.y.to_be();
  Bytes z(x2.bytes.begin(), x2.bytes.end());
  append(z, y2.view());
  auto mask = sm2_kdf(z, plaintext.size());
  if (!mask) return std::nullopt;

  Sm2Ciphertext ct;
  ct.c1 = base_mul(k);
  ct.c2.resize(plaintext.size());
  for (std::size_t i = 0; i < plaintext.size(); ++i) ct.c2[i] = plaintext[i] ^ (*mask)[i];
  ct.c3 = Sm3().update(x2.view()).update(plaintext).update(y2.view()).finish();
  return ct;
}

Sm2Ciphertext sm2_encrypt(const CurvePoint& recipient, ByteView plaintext, RandomSource& rng) {
  for (;;) {
    U256 k = random_scalar(rng, kCurve.n);
    if (auto ct = sm2_encrypt_with_nonce(recipient, plaintext, k)) return *std::move(ct);
  }
}

Bytes sm2_decrypt(const U256& private_key, const Sm2Ciphertext& ct) {
  if (ct.c1.infinity || !is_on_curve(ct.c1) || ct.c2.empty()) throw CryptoError("invalid ciphertext");
  CurvePoint shared = scalar_mul(private_key, ct.c1);
  if (shared.infinity) throw CryptoError("invalid ciphertext");
  auto x2 = shared.x.to_be();
  auto y2 = shared.y.to_be();
  Bytes z(x2.bytes.begin(), x2.bytes.end());
  append(z, y2.view());
  auto mask = sm2_kdf(z, ct.c2.size());
  if (!mask) throw CryptoError("invalid ciphertext");
  Bytes plain(ct.c2.size());
  for (std::size_t i = 0; i < plain.size(); ++i) plain[i] = ct.c2[i] ^ (*mask)[i];
  auto tag = Sm3().update(x2.view()).update(plain).update(y2.view()).finish();
  if (tag != ct.c3) throw CryptoError("invalid ciphertext");
  return plain;
}

}  // namespace authros::crypto
