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

#include "authros/ledger/types.hpp"

#include "authros/crypto/keccak.hpp"

namespace authros::ledger {

using crypto::CryptoError;

Address derive_address(const crypto::CurvePoint& public_key) {
  if (!crypto::is_on_curve(public_key)) throw CryptoError("cannot derive an address from an invalid point");
  auto enc = crypto::encode_point(public_key);
  auto h = crypto::keccak256(enc.view().subspan(1));
  return Address::from(h.view().first(20));
}

namespace {

enum class CallTag : std::uint8_t { kRegister = 1, kDataUpload = 2, kAuthorityGrant = 3, kDataQuery = 4 };

}  // namespace

const char* call_name(const ContractCall& call) {
  static constexpr const char* kNames[] = {"Register", "DataUpload", "AuthorityGrant", "DataQuery"};
  return kNames[call.index()];
}

Bytes encode_call(const ContractCall& call) {
  Bytes out;
  std::visit(
      [&](const auto& c) {
        using T = std::decay_t<decltype(c)>;
        if constexpr (std::is_same_v<T, RegisterCall>) {
          out.push_back(static_cast<std::uint8_t>(CallTag::kRegister));
          append_field(out, c.token);
        } else if constexpr (std::is_same_v<T, DataUploadCall>) {
          out.push_back(static_cast<std::uint8_t>(CallTag::kDataUpload));
          append_field(out, c.digest);
          append_field(out, c.token);
          append_field(out, c.timestamp);
        } else if constexpr (std::is_same_v<T, AuthorityGrantCall>) {
          out.push_back(static_cast<std::uint8_t>(CallTag::kAuthorityGrant));
          append(out, c.grantee.view());
        } else {
          out.push_back(static_cast<std::uint8_t>(CallTag::kDataQuery));
          append_field(out, c.token);
          append(out, c.target.view());
        }
      },
      call);
  return out;
}

namespace {

ContractCall read_call(ByteReader& r) {
  auto field = [&] {
    auto v = r.field();
    return Bytes(v.begin(), v.end());
  };
  switch (static_cast<CallTag>(r.u8())) {
    case CallTag::kRegister:
      return RegisterCall{field()};
    case CallTag::kDataUpload: {
      DataUploadCall c;
      c.digest = field();
      c.token = field();
      c.timestamp = field();
      return c;
    }
    case CallTag::kAuthorityGrant:
      return AuthorityGrantCall{Address::from(r.take(20))};
    case CallTag::kDataQuery: {
      DataQueryCall c;
      c.token = field();
      c.target = Address::from(r.take(20));
      return c;
    }
  }
  throw DecodeError("unknown contract call tag");
}

}  // namespace

ContractCall decode_call(ByteView bytes) {
  ByteReader r(bytes);
  auto call = read_call(r);
  r.expect_done();
  return call;
}

Bytes Transaction::signing_payload() const {
  Bytes out;
  append(out, sender.view());
  append(out, crypto::encode_point(sender_key).view());
  append_u64_be(out, nonce);
  append_field(out, encode_call(call));
  append_u64_be(out, gas_limit);
  append_u64_be(out, submitted_at);
  return out;
}

Bytes Transaction::encode() const {
  Bytes out = signing_payload();
  append(out, signature.encode().view());
  return out;
}

Transaction Transaction::decode(ByteView bytes) {
  ByteReader r(bytes);
  Transaction tx;
  tx.sender = Address::from(r.take(20));
  try {
    tx.sender_key = crypto::decode_point(r.take(65));
  } catch (const CryptoError& e) {
    throw DecodeError(e.what());
  }
  tx.nonce = r.u64_be();
  tx.call = decode_call(r.field());
  tx.gas_limit = r.u64_be();
  tx.submitted_at = r.u64_be();
  tx.signature = crypto::Sm2Signature::decode(r.take(64));
  r.expect_done();
  return tx;
}

Digest32 Transaction::hash() const { return crypto::sm3_hash(encode()); }

std::uint64_t Transaction::intrinsic_gas() const {
  return kTxBaseGas + kTxGasPerByte * encode_call(call).size();
}

bool Transaction::signature_valid() const {
  if (!crypto::is_on_curve(sender_key)) return false;
  if (derive_address(sender_key) != sender) return false;
  return crypto::sm2_verify(sender_key, as_bytes(crypto::kDefaultSm2Id), signing_payload(), signature);
}

Transaction make_transaction(const crypto::Sm2KeyPair& key, std::uint64_t nonce, ContractCall call,
                             std::uint64_t submitted_at, RandomSource& rng, std::uint64_t gas_limit) {
  Transaction tx;
  tx.sender_key = key.public_key;
  tx.sender = derive_address(key.public_key);
  tx.nonce = nonce;
  tx.call = std::move(call);
  tx.submitted_at = submitted_at;
  tx.gas_limit = gas_limit == 0 ? tx.intrinsic_gas() : gas_limit;
  tx.signature = crypto::sm2_sign(key, as_bytes(crypto::kDefaultSm2Id), tx.signing_payload(), rng);
  return tx;
}

}  // namespace authros::ledger
