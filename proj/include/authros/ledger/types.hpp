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

#include <cstdint>
#include <variant>

#include "authros/bytes.hpp"
#include "authros/crypto/sm2.hpp"
#include "authros/random.hpp"

namespace authros::ledger {

/// 20-byte externally owned account address.
using Address = FixedBytes<20>;

// First 20 bytes of keccak256(x || y). Throws crypto::CryptoError for an
// invalid point.
Address derive_address(const crypto::CurvePoint& public_key);

struct RegisterCall {
  Bytes token;
};

struct DataUploadCall {
  Bytes digest;  // ciphertext digest (or the raw payload in load tests)
  Bytes token;
  Bytes timestamp;
};

struct AuthorityGrantCall {
  Address grantee;
};

struct DataQueryCall {
  Bytes token;
  Address target;
};

using ContractCall = std::variant<RegisterCall, DataUploadCall, AuthorityGrantCall, DataQueryCall>;

const char* call_name(const ContractCall& call);
Bytes encode_call(const ContractCall& call);
ContractCall decode_call(ByteView bytes);

inline constexpr std::uint64_t kTxBaseGas = 21000;
inline constexpr std::uint64_t kTxGasPerByte = 68;

struct Transaction {
  Address sender;
  crypto::CurvePoint sender_key;
  std::uint64_t nonce = 0;
  ContractCall call;
  std::uint64_t gas_limit = 0;
  std::uint64_t submitted_at = 0;  // logical timestamp
  crypto::Sm2Signature signature;

  // Canonical encoding of every field except the signature.
  Bytes signing_payload() const;
  Bytes encode() const;
  static Transaction decode(ByteView bytes);
  Digest32 hash() const;

  // Flat gas model: 21000 + 68 per call-payload byte.
  std::uint64_t intrinsic_gas() const;
  // Signature valid under sender_key and sender == derive_address(sender_key).
  bool signature_valid() const;
};

Transaction make_transaction(const crypto::Sm2KeyPair& key, std::uint64_t nonce, ContractCall call,
                             std::uint64_t submitted_at, RandomSource& rng,
                             std::uint64_t gas_limit = 0 /* 0 = intrinsic gas */);

}  // namespace authros::ledger
