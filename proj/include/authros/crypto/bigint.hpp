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
#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

#include "authros/bytes.hpp"

namespace authros::crypto {

/// Fixed-width 256-bit unsigned integer, little-endian 64-bit limbs.
struct U256 {
  std::array<std::uint64_t, 4> limb{};

  static U256 from_u64(std::uint64_t v) { return U256{{v, 0, 0, 0}}; }
  // 32 big-endian bytes.
  static U256 from_be(ByteView bytes);
  static U256 from_hex(std::string_view hex);

  FixedBytes<32> to_be() const;
  std::string hex() const { return to_be().hex(); }

  bool is_zero() const { return (limb[0] | limb[1] | limb[2] | limb[3]) == 0; }
  bool bit(unsigned i) const { return (limb[i / 64] >> (i % 64)) & 1; }
  unsigned bit_length() const;

  friend bool operator==(const U256&, const U256&) = default;
  friend std::strong_ordering operator<=>(const U256& a, const U256& b) {
    for (int i = 3; i >= 0; --i)
      if (a.limb[i] != b.limb[i]) return a.limb[i] <=> b.limb[i];
    return std::strong_ordering::equal;
  }
};

// r = a + b, returns the carry out.
std::uint64_t add_with_carry(U256& r, const U256& a, const U256& b);
// r = a - b, returns the borrow out.
std::uint64_t sub_with_borrow(U256& r, const U256& a, const U256& b);

/// Arithmetic modulo an odd 256-bit modulus with its top bit set. Values
/// passed to add/sub/neg must already be reduced. mul/sqr/inv/pow work in
/// the Montgomery domain; use to_mont/from_mont at the boundary.
class ModArith {
 public:
  explicit ModArith(const U256& modulus);

  const U256& modulus() const { return m_; }

  // Any 256-bit value to [0, m). Valid because m > 2^255.
  U256 reduce(const U256& x) const;

  U256 add(const U256& a, const U256& b) const;
  U256 sub(const U256& a, const U256& b) const;
  U256 neg(const U256& a) const;

  U256 to_mont(const U256& a) const { return mul(a, r2_); }
  U256 from_mont(const U256& a) const { return mul(a, U256::from_u64(1)); }
  const U256& mont_one() const { return one_; }

  U256 mul(const U256& a, const U256& b) const;
  U256 sqr(const U256& a) const { return mul(a, a); }
  U256 pow(const U256& base, const U256& exp) const;
  // Fermat inversion; the modulus must be prime. inv(0) = 0.
  U256 inv(const U256& a) const;

  // Plain-domain conveniences.
  U256 mul_plain(const U256& a, const U256& b) const { return mul(mul(a, b), r2_); }
  U256 inv_plain(const U256& a) const { return from_mont(inv(to_mont(a))); }

 private:
  U256 m_;
  U256 r2_;
  U256 one_;
  std::uint64_t m_inv_;
};

}  // namespace authros::crypto
