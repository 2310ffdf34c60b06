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

#include "authros/protocol/client.hpp"

namespace authros::protocol {

Identity enroll(AuthServer& server, const std::string& name, ByteView credential, RandomSource& rng) {
  Identity id;
  id.name = name;
  id.credential.assign(credential.begin(), credential.end());
  rng.fill(id.sigma.bytes);
  id.signing = crypto::sm2_keygen(rng);
  auto ps = server.system_keys().current();
  if (!ps) throw ProtocolError(ErrorCode::kStaleSystemKey, "no system key published");
  server.key_alloc(key_alloc_client(id.sigma, id.signing, *ps, rng));
  id.addr = server.register_user(name, credential, id.signing.public_key).addr;
  return id;
}

TransferEnvelope build_transfer(const Identity& id, const Nd1& captured, std::uint64_t capture_ms, Command command,
                                RandomSource& rng) {
  TransferEnvelope e;
  e.nd1 = captured;
  e.nd1_bytes = encode_nd1(captured);
  e.ct1 = crypto::sm4_seal(id.sigma, e.nd1_bytes, rng);
  e.sig = crypto::sm2_sign(id.signing, as_bytes(crypto::kDefaultSm2Id), e.ct1, rng);
  e.nd2 = Nd2{e.ct1, nd1_type(captured), id.credential, capture_ms, command, e.sig};
  e.nd2_bytes = e.nd2.encode();
  e.ct2 = crypto::sm4_seal(id.sigma, e.nd2_bytes, rng);
  e.nd3 = Nd3{e.ct2, id.name};
  e.nd3_bytes = e.nd3.encode();
  return e;
}

std::optional<Nd1> nd1_from_capture(const bus::CaptureEvent& ev) {
  if (const auto* o = std::get_if<bus::OdometryMsg>(&ev.value)) return Nd1{*o};
  if (const auto* i = std::get_if<bus::ImageMsg>(&ev.value)) return Nd1{*i};
  if (const auto* b = std::get_if<Bytes>(&ev.value)) return Nd1{*b};
  return std::nullopt;
}

TransferReceipt share(AuthServer& server, Identity& id, const Nd1& captured, std::uint64_t capture_ms,
                      RandomSource& rng) {
  auto env = build_transfer(id, captured, capture_ms, Command::kUpload, rng);
  auto receipt = server.receive_transfer(env.nd3_bytes);
  id.d.push_back({receipt.digest, receipt.result.height});
  return receipt;
}

void accept_grant(Identity& grantee, const GrantDelivery& delivery) {
  Bytes key;
  try {
    key = crypto::sm2_decrypt(grantee.signing.private_key, crypto::Sm2Ciphertext::decode(delivery.sealed_key));
  } catch (const std::exception&) {
    throw ProtocolError(ErrorCode::kInvalidCiphertext, "sealed grant key");
  }
  if (key.size() != crypto::Sm4Key::size()) throw ProtocolError(ErrorCode::kInvalidCiphertext, "grant key size");
  grantee.v[delivery.granter] = crypto::Sm4Key::from(key);
}

GrantDelivery grant_authority(AuthServer& server, const Identity& granter, Identity& grantee) {
  auto delivery = server.grant(granter.name, grantee.name);
  accept_grant(grantee, delivery);
  return delivery;
}

std::vector<QueriedRecord> query_and_check(AuthServer& server, const Identity& requester, const std::string& target,
                                           const std::optional<Digest32>& only) {
  const crypto::Sm4Key* key = &requester.sigma;
  if (auto it = requester.v.find(target); it != requester.v.end()) key = &it->second;
  return server.query(requester.addr, token_commitment(*key), target, only);
}

Nd1 decrypt_shared(ByteView ct1, const crypto::Sm4Key& key) {
  try {
    return decode_nd1(crypto::sm4_open(key, ct1));
  } catch (const std::exception& e) {
    throw ProtocolError(ErrorCode::kDecryptFailed, e.what());
  }
}

}  // namespace authros::protocol
