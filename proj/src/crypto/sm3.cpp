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

#include "authros/crypto/sm3.hpp"

#include <bit>
#include <cstring>

namespace authros::crypto {

namespace {

constexpr std::array<std::uint32_t, 8> kIv = {0x7380166f, 0x4914b2b9, 0x172442d7, 0xda8a0600,
                                              0xa96f30bc, 0x163138aa, 0xe38dee4d, 0xb0fb0e4e};

constexpr std::uint32_t rotl(std::uint32_t x, int n) { return std::rotl(x, n % 32); }
constexpr std::uint32_t p0(std::uint32_t x) { return x ^ rotl(x, 9) ^ rotl(x, 17); }
constexpr std::uint32_t p1(std::uint32_t x) { return x ^ rotl(x, 15) ^ rotl(x, 23); }

constexpr std::array<std::uint32_t, 64> make_round_constants() {
  std::array<std::uint32_t, 64> t{};
  for (int j = 0; j < 64; ++j) t[j] = rotl(j < 16 ? 0x79cc4519u : 0x7a879d8au, j);
  return t;
}
constexpr auto kT = make_round_constants();

// One round. Instead of shifting all eight words, callers rotate the
// argument order; only b, d, f, h are written.
template <bool kEarly>
inline void round(std::uint32_t a, std::uint32_t& b, std::uint32_t c, std::uint32_t& d, std::uint32_t e,
                  std::uint32_t& f, std::uint32_t g, std::uint32_t& h, std::uint32_t t, std::uint32_t wj,
                  std::uint32_t wj4) {
  const std::uint32_t a12 = rotl(a, 12);
  const std::uint32_t ss1 = rotl(a12 + e + t, 7);
  const std::uint32_t ss2 = ss1 ^ a12;
  const std::uint32_t ff = kEarly ? a ^ b ^ c : (a & b) | (a & c) | (b & c);
  const std::uint32_t gg = kEarly ? e ^ f ^ g : (e & f) | (~e & g);
  const std::uint32_t tt1 = ff + d + ss2 + (wj ^ wj4);
  const std::uint32_t tt2 = gg + h + ss1 + wj;
  b = rotl(b, 9);
  d = tt1;
  f = rotl(f, 19);
  h = p0(tt2);
}

template <bool kEarly>
inline void four_rounds(int j, std::uint32_t& a, std::uint32_t& b, std::uint32_t& c, std::uint32_t& d,
                        std::uint32_t& e, std::uint32_t& f, std::uint32_t& g, std::uint32_t& h,
                        const std::uint32_t* w) {
  round<kEarly>(a, b, c, d, e, f, g, h, kT[j], w[j], w[j + 4]);
  round<kEarly>(d, a, b, c, h, e, f, g, kT[j + 1], w[j + 1], w[j + 5]);
  round<kEarly>(c, d, a, b, g, h, e, f, kT[j + 2], w[j + 2], w[j + 6]);
  round<kEarly>(b, c, d, a, f, g, h, e, kT[j + 3], w[j + 3], w[j + 7]);
}

}  // namespace

Sm3::Sm3() : state_(kIv) {}

void Sm3::compress(const std::uint8_t* block) {
  std::uint32_t w[68];
  for (int i = 0; i < 16; ++i) {
    w[i] = (std::uint32_t(block[4 * i]) << 24) | (std::uint32_t(block[4 * i + 1]) << 16) |
           (std::uint32_t(block[4 * i + 2]) << 8) | std::uint32_t(block[4 * i + 3]);
  }
  for (int i = 16; i < 68; ++i)
    w[i] = p1(w[i - 16] ^ w[i - 9] ^ rotl(w[i - 3], 15)) ^ rotl(w[i - 13], 7) ^ w[i - 6];

  std::uint32_t a = state_[0], b = state_[1], c = state_[2], d = state_[3];
  std::uint32_t e = state_[4], f = state_[5], g = state_[6], h = state_[7];
  for (int j = 0; j < 16; j += 4) four_rounds<true>(j, a, b, c, d, e, f, g, h, w);
  for (int j = 16; j < 64; j += 4) four_rounds<false>(j, a, b, c, d, e, f, g, h, w);
  state_[0] ^= a;
  state_[1] ^= b;
  state_[2] ^= c;
  state_[3] ^= d;
  state_[4] ^= e;
  state_[5] ^= f;
  state_[6] ^= g;
  state_[7] ^= h;
}

Sm3& Sm3::update(ByteView data) {
  total_ += data.size();
  std::size_t i = 0;
  if (buffered_ > 0) {
    std::size_t n = std::min(data.size(), 64 - buffered_);
    std::memcpy(buffer_.data() + buffered_, data.data(), n);
    buffered_ += n;
    i = n;
    if (buffered_ < 64) return *this;
    compress(buffer_.data());
    buffered_ = 0;
  }
  for (; i + 64 <= data.size(); i += 64) compress(data.data() + i);
  if (i < data.size()) {
    std::memcpy(buffer_.data(), data.data() + i, data.size() - i);
    buffered_ = data.size() - i;
  }
  return *this;
}

Digest32 Sm3::finish() {
  std::uint64_t bit_len = total_ * 8;
  std::uint8_t pad[72] = {0x80};
  std::size_t pad_len = (buffered_ < 56) ? (56 - buffered_) : (120 - buffered_);
  for (int i = 0; i < 8; ++i) pad[pad_len + i] = static_cast<std::uint8_t>(bit_len >> (56 - 8 * i));
  update({pad, pad_len + 8});

  Digest32 out;
  for (int i = 0; i < 8; ++i) {
    out.bytes[4 * i] = static_cast<std::uint8_t>(state_[i] >> 24);
    out.bytes[4 * i + 1] = static_cast<std::uint8_t>(state_[i] >> 16);
    out.bytes[4 * i + 2] = static_cast<std::uint8_t>(state_[i] >> 8);
    out.bytes[4 * i + 3] = static_cast<std::uint8_t>(state_[i]);
  }
  return out;
}

Digest32 sm3_hash(ByteView message) { return Sm3().update(message).finish(); }

}  // namespace authros::crypto
