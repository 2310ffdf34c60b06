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

#include "authros/protocol/keys.hpp"

#include "authros/protocol/errors.hpp"

namespace authros::protocol {

const char* error_text(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidCiphertext:
      return "invalid ciphertext";
    case ErrorCode::kAuthenticityFailed:
      return "authenticity check failed";
    case ErrorCode::kStaleSystemKey:
      return "stale system key";
    case ErrorCode::kDuplicateName:
      return "name already registered";
    case ErrorCode::kNoPendingAlloc:
      return "no pending key allocation";
    case ErrorCode::kUnknownUser:
      return "unknown user";
    case ErrorCode::kIdentityCheckFailed:
      return "identity check failed";
    case ErrorCode::kCorruptEnvelope:
      return "corrupt envelope";
    case ErrorCode::kForgedNodeData:
      return "forged node data";
    case ErrorCode::kUploadUnconfirmed:
      return "upload unconfirmed";
    case ErrorCode::kAccessDenied:
      return "access denied";
    case ErrorCode::kTampered:
      return "digest mismatch, data tampered";
    case ErrorCode::kCacheMiss:
      return "cache miss";
    case ErrorCode::kLedgerRejected:
      return "ledger rejected transaction";
    case ErrorCode::kLedgerRevert:
      return "ledger revert";
    case ErrorCode::kDecryptFailed:
      return "decryption failed";
  }
  return "protocol error";
}

SystemKey SystemKeySet::publish(std::uint64_t epoch, RandomSource& rng) {
  std::lock_guard lock(mu_);
  if (!order_.empty() && epoch <= order_.back()) throw std::invalid_argument("system key epochs must increase");
  auto kp = crypto::sm2_keygen(rng);
  keys_.emplace(epoch, kp);
  order_.push_back(epoch);
  // Keys past the grace window are never needed again.
  while (order_.size() > grace_ + 1) {
    keys_.erase(order_.front());
    order_.erase(order_.begin());
  }
  return {epoch, kp.public_key};
}

std::vector<SystemKey> SystemKeySet::published() const {
  std::lock_guard lock(mu_);
  std::vector<SystemKey> out;
  for (auto e : order_) out.push_back({e, keys_.at(e).public_key});
  return out;
}

std::optional<SystemKey> SystemKeySet::current() const {
  std::lock_guard lock(mu_);
  if (order_.empty()) return std::nullopt;
  return SystemKey{order_.back(), keys_.at(order_.back()).public_key};
}

std::optional<crypto::U256> SystemKeySet::live_private(std::uint64_t epoch) const {
  std::lock_guard lock(mu_);
  auto it = keys_.find(epoch);
  if (it == keys_.end()) return std::nullopt;
  return it->second.private_key;
}

Bytes KeyAllocMessage::encode() const {
  Bytes out;
  append_field(out, ct);
  append_field(out, sig.encode().view());
  append_u64_be(out, ps_id);
  out.push_back(static_cast<std::uint8_t>(command));
  return out;
}

KeyAllocMessage KeyAllocMessage::decode(ByteView bytes) {
  ByteReader r(bytes);
  KeyAllocMessage m;
  auto ct = r.field();
  m.ct.assign(ct.begin(), ct.end());
  m.sig = crypto::Sm2Signature::decode(r.field());
  m.ps_id = r.u64_be();
  m.command = command_from_byte(r.u8());
  r.expect_done();
  return m;
}

KeyAllocMessage key_alloc_client(const crypto::Sm4Key& k_c, const crypto::Sm2KeyPair& client, const SystemKey& ps,
                                 RandomSource& rng) {
  Bytes payload;
  payload.reserve(kKeyAllocPayloadSize);
  append(payload, k_c.view());
  append(payload, crypto::encode_point(client.public_key).view());
  KeyAllocMessage m;
  m.ct = crypto::sm2_encrypt(ps.public_key, payload, rng).encode();
  m.sig = crypto::sm2_sign(client, as_bytes(crypto::kDefaultSm2Id), m.ct, rng);
  m.ps_id = ps.epoch;
  return m;
}

AllocatedKeys key_alloc_open(const SystemKeySet& keys, const KeyAllocMessage& msg) {
  auto d_s = keys.live_private(msg.ps_id);
  if (!d_s) throw ProtocolError(ErrorCode::kStaleSystemKey);
  if (msg.command != Command::kKeyAlloc) throw ProtocolError(ErrorCode::kInvalidCiphertext, "wrong command");
  Bytes payload;
  AllocatedKeys out;
  try {
    payload = crypto::sm2_decrypt(*d_s, crypto::Sm2Ciphertext::decode(msg.ct));
    if (payload.size() != kKeyAllocPayloadSize) throw crypto::CryptoError("payload size");
    std::copy_n(payload.begin(), 16, out.k_c.data());
    out.p_c = crypto::decode_point(ByteView(payload).subspan(16));
  } catch (const std::exception&) {
    throw ProtocolError(ErrorCode::kInvalidCiphertext);
  }
  if (!crypto::sm2_verify(out.p_c, as_bytes(crypto::kDefaultSm2Id), msg.ct, msg.sig))
    throw ProtocolError(ErrorCode::kAuthenticityFailed);
  return out;
}

}  // namespace authros::protocol
