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

#include "authros/crypto/bigint.hpp"

#include <bit>
#include <stdexcept>

namespace authros::crypto {

using u128 = unsigned __int128;

U256 U256::from_be(ByteView bytes) {
  if (bytes.size() != 32) throw std::invalid_argument("U256 expects 32 bytes");
  U256 r;
  for (int i = 0; i < 32; ++i) r.limb[3 - i / 8] = (r.limb[3 - i / 8] << 8) | bytes[i];
  return r;
}

U256 U256::from_hex(std::string_view hex) {
  auto raw = authros::from_hex(hex);
  if (raw.size() > 32) throw std::invalid_argument("U256 hex too long");
  Bytes padded(32 - raw.size(), 0);
  append(padded, raw);
  return from_be(padded);
}

FixedBytes<32> U256::to_be() const {
  FixedBytes<32> out;
  for (int i = 0; i < 32; ++i) out.bytes[i] = static_cast<std::uint8_t>(limb[3 - i / 8] >> (8 * (7 - i % 8)));
  return out;
}

unsigned U256::bit_length() const {
  for (int i = 3; i >= 0; --i)
    if (limb[i] != 0) return 64 * i + 64 - std::countl_zero(limb[i]);
  return 0;
}

std::uint64_t add_with_carry(U256& r, const U256& a, const U256& b) {
  std::uint64_t carry = 0;
  for (int i = 0; i < 4; ++i) {
    u128 s = u128(a.limb[i]) + b.limb[i] + carry;
    r.limb[i] = static_cast<std::uint64_t>(s);
    carry = static_cast<std::uint64_t>(s >> 64);
  }
  return carry;
}

std::uint64_t sub_with_borrow(U256& r, const U256& a, const U256& b) {
  std::uint64_t borrow = 0;
  for (int i = 0; i < 4; ++i) {
    u128 d = u128(a.limb[i]) - b.limb[i] - borrow;
    r.limb[i] = static_cast<std::uint64_t>(d);
    borrow = static_cast<std::uint64_t>(d >> 64) & 1;
  }
  return borrow;
}

ModArith::ModArith(const U256& modulus) : m_(modulus) {
  if ((m_.limb[0] & 1) == 0 || !m_.bit(255)) throw std::invalid_argument("modulus must be odd with bit 255 set");
  // -m^{-1} mod 2^64 by Newton iteration.
  std::uint64_t inv = 1;
  for (int i = 0; i < 6; ++i) inv *= 2 - m_.limb[0] * inv;
  m_inv_ = ~inv + 1;

  // R mod m = 2^256 - m, then double up to R^2 mod m.
  U256 r;
  sub_with_borrow(r, U256{}, m_);
  one_ = r;
  for (int i = 0; i < 256; ++i) r = add(r, r);
  r2_ = r;
}

U256 ModArith::reduce(const U256& x) const {
  if (x < m_) return x;
  U256 r;
  sub_with_borrow(r, x, m_);
  return r;
}

U256 ModArith::add(const U256& a, const U256& b) const {
  U256 r;
  std::uint64_t carry = add_with_carry(r, a, b);
  if (carry || r >= m_) sub_with_borrow(r, r, m_);
  return r;
}

U256 ModArith::sub(const U256& a, const U256& b) const {
  U256 r;
  if (sub_with_borrow(r, a, b)) add_with_carry(r, r, m_);
  return r;
}

U256 ModArith::neg(const U256& a) const {
  if (a.is_zero()) return a;
  U256 r;
  sub_with_borrow(r, m_, a);
  return r;
}

U256 ModArith::mul(const U256& a, const U256& b) const {
  // CIOS Montgomery multiplication.
  std::uint64_t t[6] = {};
  for (int i = 0; i < 4; ++i) {
    std::uint64_t carry = 0;
    for (int j = 0; j < 4; ++j) {
      u128 s = u128(a.limb[j]) * b.limb[i] + t[j] + carry;
      t[j] = static_cast<std::uint64_t>(s);
      carry = static_cast<std::uint64_t>(s >> 64);
    }
    u128 s = u128(t[4]) + carry;
    t[4] = static_cast<std::uint64_t>(s);
    t[5] = static_cast<std::uint64_t>(s >> 64);

    std::uint64_t q = t[0] * m_inv_;
    u128 acc = u128(q) * m_.limb[0] + t[0];
    carry = static_cast<std::uint64_t>(acc >> 64);
    for (int j = 1; j < 4; ++j) {
      acc = u128(q) * m_.limb[j] + t[j] + carry;
      t[j - 1] = static_cast<std::uint64_t>(acc);
      carry = static_cast<std::uint64_t>(acc >> 64);
    }
    acc = u128(t[4]) + carry;
    t[3] = static_cast<std::uint64_t>(acc);
    t[4] = t[5] + static_cast<std::uint64_t>(acc >> 64);
  }
  U256 r{{t[0], t[1], t[2], t[3]}};
  if (t[4] || r >= m_) sub_with_borrow(r, r, m_);
  return r;
}

U256 ModArith::pow(const U256& base, const U256& exp) const {
  U256 acc = one_;
  for (int i = static_cast<int>(exp.bit_length()) - 1; i >= 0; --i) {
    acc = sqr(acc);
    if (exp.bit(i)) acc = mul(acc, base);
  }
  return acc;
}

U256 ModArith::inv(const U256& a) const {
  U256 e;
  sub_with_borrow(e, m_, U256::from_u64(2));
  return pow(a, e);
}

}  // namespace authros::crypto
