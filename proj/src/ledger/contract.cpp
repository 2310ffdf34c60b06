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

#include "authros/ledger/contract.hpp"

#include <algorithm>

#include "authros/crypto/sm3.hpp"

namespace authros::ledger {

namespace {

bool equal_bytes(ByteView a, ByteView b) { return std::ranges::equal(a, b); }

}  // namespace

const Bytes* ContractState::token_of(const Address& a) const {
  auto it = registry.find(a);
  return it == registry.end() ? nullptr : &it->second.token;
}

bool ContractState::has_token(const Address& holder, ByteView token) const {
  auto it = token_lists.find(holder);
  if (it == token_lists.end()) return false;
  return std::ranges::any_of(it->second, [&](const Bytes& t) { return equal_bytes(t, token); });
}

const char* revert_name(RevertCode code) {
  switch (code) {
    case RevertCode::kEmptyToken:
      return "empty token";
    case RevertCode::kAlreadyRegistered:
      return "already registered";
    case RevertCode::kNotRegistered:
      return "caller not registered";
    case RevertCode::kTokenMismatch:
      return "token mismatch";
    case RevertCode::kAccessDenied:
      return "access denied";
    case RevertCode::kUnknownTarget:
      return "unknown target";
  }
  return "revert";
}

void contract_register(ContractState& state, const Address& caller, const crypto::CurvePoint& caller_key,
                       ByteView token) {
  if (token.empty()) throw ContractRevert(RevertCode::kEmptyToken);
  if (state.is_registered(caller)) throw ContractRevert(RevertCode::kAlreadyRegistered);
  Bytes t(token.begin(), token.end());
  state.registry.emplace(caller, Registration{t, caller_key});
  if (!state.has_token(caller, t)) state.token_lists[caller].push_back(t);
}

void contract_data_upload(ContractState& state, const Address& caller, ByteView digest, ByteView token,
                          ByteView timestamp) {
  const Bytes* own = state.token_of(caller);
  if (!own) throw ContractRevert(RevertCode::kNotRegistered);
  if (!equal_bytes(*own, token)) throw ContractRevert(RevertCode::kTokenMismatch);
  auto record = std::make_shared<const DigestRecord>(
      DigestRecord{Bytes(digest.begin(), digest.end()), *own, Bytes(timestamp.begin(), timestamp.end())});

  Bytes link;
  auto chain = state.digest_chain.find(caller);
  append(link, chain == state.digest_chain.end() ? Digest32{}.view() : chain->second.view());
  append_field(link, record->digest);
  append_field(link, record->uploader_token);
  append_field(link, record->timestamp);
  state.digest_chain[caller] = crypto::sm3_hash(link);
  state.digest_store[caller].push_back(std::move(record));
}

void contract_authority_grant(ContractState& state, const Address& caller, const Address& grantee) {
  const Bytes* own = state.token_of(caller);
  if (!own) throw ContractRevert(RevertCode::kNotRegistered);
  if (!state.has_token(grantee, *own)) state.token_lists[grantee].push_back(*own);
}

std::vector<DigestRecord> contract_data_query(const ContractState& state, const Address& caller, ByteView token,
                                              const Address& target) {
  const Bytes* target_token = state.token_of(target);
  if (!target_token) throw ContractRevert(RevertCode::kUnknownTarget);
  if (!equal_bytes(*target_token, token) || !state.has_token(caller, token))
    throw ContractRevert(RevertCode::kAccessDenied);
  std::vector<DigestRecord> out;
  if (auto it = state.digest_store.find(target); it != state.digest_store.end()) {
    out.reserve(it->second.size());
    for (const auto& r : it->second) out.push_back(*r);
  }
  return out;
}

std::uint64_t LedgerState::next_nonce(const Address& a) const {
  auto it = nonces.find(a);
  return it == nonces.end() ? 0 : it->second;
}

Receipt apply_transaction(LedgerState& state, const Transaction& tx) {
  if (tx.nonce != state.next_nonce(tx.sender)) throw InvalidTransaction("nonce");
  if (tx.gas_limit < tx.intrinsic_gas()) throw InvalidTransaction("gas");
  Receipt receipt;
  receipt.tx_hash = tx.hash();
  receipt.gas_used = tx.intrinsic_gas();
  state.nonces[tx.sender] = tx.nonce + 1;
  try {
    std::visit(
        [&](const auto& c) {
          using T = std::decay_t<decltype(c)>;
          if constexpr (std::is_same_v<T, RegisterCall>) {
            contract_register(state.contract, tx.sender, tx.sender_key, c.token);
          } else if constexpr (std::is_same_v<T, DataUploadCall>) {
            contract_data_upload(state.contract, tx.sender, c.digest, c.token, c.timestamp);
          } else if constexpr (std::is_same_v<T, AuthorityGrantCall>) {
            contract_authority_grant(state.contract, tx.sender, c.grantee);
          } else {
            receipt.query_result = contract_data_query(state.contract, tx.sender, c.token, c.target);
          }
        },
        tx.call);
  } catch (const ContractRevert& e) {
    receipt.success = false;
    receipt.revert_reason = e.what();
  }
  return receipt;
}

Digest32 state_root(const LedgerState& state) {
  crypto::Sm3 h;
  Bytes buf;
  auto flush = [&] {
    h.update(buf);
    buf.clear();
  };
  append(buf, as_bytes("authros-state-v1"));
  append_u64_be(buf, state.nonces.size());
  for (const auto& [addr, nonce] : state.nonces) {
    append(buf, addr.view());
    append_u64_be(buf, nonce);
  }
  flush();
  const auto& c = state.contract;
  append_u64_be(buf, c.registry.size());
  for (const auto& [addr, reg] : c.registry) {
    append(buf, addr.view());
    append_field(buf, reg.token);
    append(buf, crypto::encode_point(reg.public_key).view());
  }
  flush();
  append_u64_be(buf, c.token_lists.size());
  for (const auto& [addr, tokens] : c.token_lists) {
    append(buf, addr.view());
    append_u64_be(buf, tokens.size());
    for (const auto& t : tokens) append_field(buf, t);
  }
  flush();
  append_u64_be(buf, c.digest_store.size());
  for (const auto& [addr, records] : c.digest_store) {
    append(buf, addr.view());
    append_u64_be(buf, records.size());
    append(buf, c.digest_chain.at(addr).view());
  }
  flush();
  return h.finish();
}

}  // namespace authros::ledger
