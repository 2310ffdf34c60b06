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

#include <map>
#include <memory>
#include <stdexcept>
#include <vector>

#include "authros/ledger/types.hpp"

namespace authros::ledger {

struct Registration {
  Bytes token;
  crypto::CurvePoint public_key;
};

struct DigestRecord {
  Bytes digest;
  Bytes uploader_token;
  Bytes timestamp;

  bool operator==(const DigestRecord&) const = default;
};

/// On-chain registry. Digest records are shared between snapshots, so
/// copying a state is cheap relative to its payload size.
struct ContractState {
  std::map<Address, Registration> registry;
  std::map<Address, std::vector<Bytes>> token_lists;
  std::map<Address, std::vector<std::shared_ptr<const DigestRecord>>> digest_store;
  // Running hash over each address's digest list, folded into the state root.
  std::map<Address, Digest32> digest_chain;

  bool is_registered(const Address& a) const { return registry.contains(a); }
  const Bytes* token_of(const Address& a) const;
  bool has_token(const Address& holder, ByteView token) const;
};

enum class RevertCode {
  kEmptyToken,
  kAlreadyRegistered,
  kNotRegistered,
  kTokenMismatch,
  kAccessDenied,
  kUnknownTarget,
};

const char* revert_name(RevertCode code);

class ContractRevert : public std::runtime_error {
 public:
  explicit ContractRevert(RevertCode code) : std::runtime_error(revert_name(code)), code_(code) {}
  RevertCode code() const { return code_; }

 private:
  RevertCode code_;
};

// Each mutator validates before touching state, so a revert leaves the
// state exactly as it was.
void contract_register(ContractState& state, const Address& caller, const crypto::CurvePoint& caller_key,
                       ByteView token);
void contract_data_upload(ContractState& state, const Address& caller, ByteView digest, ByteView token,
                          ByteView timestamp);
void contract_authority_grant(ContractState& state, const Address& caller, const Address& grantee);

// Succeeds iff target is registered, token is the target's registered token
// and token is in the caller's token list (self-registration or a grant).
std::vector<DigestRecord> contract_data_query(const ContractState& state, const Address& caller, ByteView token,
                                              const Address& target);

/// Full ledger state: contract storage plus per-account nonces.
struct LedgerState {
  ContractState contract;
  std::map<Address, std::uint64_t> nonces;

  std::uint64_t next_nonce(const Address& a) const;
};

struct Receipt {
  Digest32 tx_hash;
  bool success = true;
  std::string revert_reason;
  std::vector<DigestRecord> query_result;
  std::uint64_t gas_used = 0;
};

class InvalidTransaction : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Applies one transaction whose signature has already been checked. A bad
// nonce throws InvalidTransaction; a contract revert still consumes the
// nonce and is reported in the receipt.
Receipt apply_transaction(LedgerState& state, const Transaction& tx);

Digest32 state_root(const LedgerState& state);

}  // namespace authros::ledger
