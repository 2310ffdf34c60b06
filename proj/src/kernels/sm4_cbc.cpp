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

#include "authros/kernels.hpp"

namespace authros::kernels {

using crypto::CryptoError;

Bytes sm4_cbc_decrypt_raw_serial(const crypto::Sm4Cipher& cipher, const crypto::Sm4Iv& iv, ByteView ciphertext) {
  if (ciphertext.size() % 16 != 0) throw CryptoError("corrupt ciphertext");
  Bytes out(ciphertext.size());
  const std::uint8_t* prev = iv.data();
  for (std::size_t off = 0; off < ciphertext.size(); off += 16) {
    cipher.decrypt_block(ciphertext.data() + off, out.data() + off);
    for (int i = 0; i < 16; ++i) out[off + i] ^= prev[i];
    prev = ciphertext.data() + off;
  }
  return out;
}

Bytes sm4_cbc_decrypt_raw_omp(const crypto::Sm4Cipher& cipher, const crypto::Sm4Iv& iv, ByteView ciphertext) {
  if (ciphertext.size() % 16 != 0) throw CryptoError("corrupt ciphertext");
  Bytes out(ciphertext.size());
  const auto blocks = static_cast<std::int64_t>(ciphertext.size() / 16);
#pragma omp parallel for schedule(static) if (blocks > 256)
  for (std::int64_t b = 0; b < blocks; ++b) {
    const std::size_t off = static_cast<std::size_t>(b) * 16;
    const std::uint8_t* prev = b == 0 ? iv.data() : ciphertext.data() + off - 16;
    cipher.decrypt_block(ciphertext.data() + off, out.data() + off);
    for (int i = 0; i < 16; ++i) out[off + i] ^= prev[i];
  }
  return out;
}

Bytes sm4_open_omp(const crypto::Sm4Key& key, ByteView sealed) {
  if (sealed.size() < 32 || sealed.size() % 16 != 0) throw CryptoError("corrupt ciphertext");
  crypto::Sm4Cipher cipher(key);
  auto out = sm4_cbc_decrypt_raw_omp(cipher, crypto::Sm4Iv::from(sealed.first(16)), sealed.subspan(16));
  crypto::sm4_strip_padding(out);
  return out;
}

}  // namespace authros::kernels
