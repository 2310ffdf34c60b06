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

#include "authros/protocol/server.hpp"

#include <algorithm>

#include "authros/crypto/sm3.hpp"

namespace authros::protocol {

namespace {

std::unique_ptr<RandomSource> make_rng(const std::optional<std::uint64_t>& seed) {
  if (seed) return std::make_unique<SeededRandom>(*seed);
  return std::make_unique<SystemRandom>();
}

}  // namespace

Bytes token_commitment(const crypto::Sm4Key& k_c) {
  auto d = crypto::sm3_hash(k_c.view());
  return Bytes(d.bytes.begin(), d.bytes.end());
}

AuthServer::AuthServer(ledger::Network& network, ServerConfig config)
    : network_(network), config_(config), keys_(config.grace_epochs), rng_(make_rng(config.seed)) {
  if (config_.home_node >= network_.size()) throw std::invalid_argument("home node out of range");
  account_seed_ = rng_->next_u64();
  publish_system_keys(0);
}

std::chrono::milliseconds AuthServer::timeout() const {
  return config_.ledger_timeout.count() > 0 ? config_.ledger_timeout : network_.receipt_timeout();
}

SystemKey AuthServer::publish_system_keys(std::uint64_t epoch) {
  std::lock_guard lock(mu_);
  return keys_.publish(epoch, *rng_);
}

SystemKey AuthServer::rotate_to(std::uint64_t now_ms) {
  const std::uint64_t epoch = now_ms / config_.rotation_period_ms;
  auto cur = keys_.current();
  if (cur && cur->epoch >= epoch) return *cur;
  return publish_system_keys(epoch);
}

AllocatedKeys AuthServer::key_alloc(const KeyAllocMessage& msg) {
  auto keys = key_alloc_open(keys_, msg);
  std::lock_guard lock(mu_);
  pending_[crypto::encode_point(keys.p_c)] = keys.k_c;
  return keys;
}

crypto::Sm2KeyPair AuthServer::derive_account(const std::string& name) const {
  auto d = crypto::sm3_hash(as_bytes(name));
  std::uint64_t mix = 0;
  for (int i = 0; i < 8; ++i) mix = (mix << 8) | d.bytes[i];
  SeededRandom rng(account_seed_ ^ mix);
  return crypto::sm2_keygen(rng);
}

ledger::Address AuthServer::account_address(const std::string& name) const {
  return ledger::derive_address(derive_account(name).public_key);
}

std::shared_ptr<AuthServer::Account> AuthServer::account(const std::string& name) const {
  std::lock_guard lock(mu_);
  auto it = accounts_.find(name);
  return it == accounts_.end() ? nullptr : it->second;
}

std::optional<UserRecord> AuthServer::lookup(const std::string& name) const {
  auto a = account(name);
  if (!a) return std::nullopt;
  return a->record;
}

ledger::ReceiptResult AuthServer::submit(Account& acct, ledger::ContractCall call, ledger::PendingReceipt* pending) {
  std::uint64_t entropy;
  {
    std::lock_guard lock(mu_);
    entropy = rng_->next_u64();
  }
  SeededRandom sign_rng(entropy);
  auto tx = ledger::make_transaction(acct.record.account, acct.next_nonce, std::move(call), network_.tick(), sign_rng);
  // Re-sign with entropy bound to the payload: sessions restarted on the same
  // seed replay the entropy stream, which must not repeat k across messages.
  const Bytes payload = tx.signing_payload();
  const auto bound = crypto::sm3_hash(payload);
  std::uint64_t mix = 0;
  for (int i = 0; i < 8; ++i) mix = (mix << 8) | bound.bytes[i];
  SeededRandom hedged(entropy ^ mix);
  tx.signature = crypto::sm2_sign(acct.record.account, as_bytes(crypto::kDefaultSm2Id), payload, hedged);
  auto receipt = network_.submit(config_.home_node, tx);
  if (pending) *pending = receipt;
  auto result = receipt.wait(timeout());
  if (result.status == ledger::ReceiptStatus::kRejected) {
    acct.next_nonce = network_.node(config_.home_node).head().state->next_nonce(acct.record.addr);
  } else {
    ++acct.next_nonce;
  }
  return result;
}

namespace {

void require_included(const ledger::ReceiptResult& r) {
  switch (r.status) {
    case ledger::ReceiptStatus::kIncluded:
      if (!r.receipt.success) throw ProtocolError(ErrorCode::kLedgerRevert, r.receipt.revert_reason);
      return;
    case ledger::ReceiptStatus::kRejected:
      throw ProtocolError(ErrorCode::kLedgerRejected, r.reason);
    default:
      throw ProtocolError(ErrorCode::kLedgerRejected, "not included before timeout");
  }
}

}  // namespace

UserRecord AuthServer::register_user(const std::string& name, ByteView credential, const crypto::CurvePoint& p_c) {
  if (name.empty()) throw ProtocolError(ErrorCode::kUnknownUser, "empty name");
  if (credential.empty()) throw ProtocolError(ErrorCode::kIdentityCheckFailed, "empty credential");
  auto acct = std::make_shared<Account>();
  {
    std::lock_guard lock(mu_);
    if (accounts_.contains(name)) throw ProtocolError(ErrorCode::kDuplicateName, name);
    auto it = pending_.find(crypto::encode_point(p_c));
    if (it == pending_.end()) throw ProtocolError(ErrorCode::kNoPendingAlloc);
    acct->record.k_c = it->second;
    pending_.erase(it);
    acct->record.name = name;
    acct->record.credential.assign(credential.begin(), credential.end());
    acct->record.p_c = p_c;
    acct->record.account = derive_account(name);
    acct->record.addr = ledger::derive_address(acct->record.account.public_key);
    accounts_.emplace(name, acct);
  }
  std::lock_guard lock(acct->mu);
  acct->next_nonce = network_.node(config_.home_node).head().state->next_nonce(acct->record.addr);
  auto result = submit(*acct, ledger::RegisterCall{token_commitment(acct->record.k_c)});
  try {
    require_included(result);
  } catch (...) {
    std::lock_guard l(mu_);
    accounts_.erase(name);
    throw;
  }
  return acct->record;
}

UserRecord AuthServer::restore_user(const std::string& name, ByteView credential, const crypto::Sm4Key& k_c,
                                    const crypto::CurvePoint& p_c) {
  auto acct = std::make_shared<Account>();
  acct->record = {name, Bytes(credential.begin(), credential.end()), k_c, p_c, derive_account(name), {}};
  acct->record.addr = ledger::derive_address(acct->record.account.public_key);
  auto state = network_.node(config_.home_node).head().state;
  const Bytes* token = state->contract.token_of(acct->record.addr);
  if (!token || *token != token_commitment(k_c)) throw ProtocolError(ErrorCode::kUnknownUser, name + " not on chain");
  acct->next_nonce = state->next_nonce(acct->record.addr);
  std::lock_guard lock(mu_);
  if (accounts_.contains(name)) throw ProtocolError(ErrorCode::kDuplicateName, name);
  accounts_.emplace(name, acct);
  return acct->record;
}

TransferReceipt AuthServer::receive_transfer(ByteView nd3_bytes) {
  Nd3 nd3;
  try {
    nd3 = Nd3::decode(nd3_bytes);
  } catch (const std::exception&) {
    throw ProtocolError(ErrorCode::kCorruptEnvelope);
  }
  auto acct = account(nd3.name);
  if (!acct) throw ProtocolError(ErrorCode::kIdentityCheckFailed);
  std::lock_guard lock(acct->mu);
  const UserRecord& user = acct->record;

  Nd2 nd2;
  try {
    nd2 = Nd2::decode(crypto::sm4_open(user.k_c, nd3.ct2));
  } catch (const std::exception&) {
    throw ProtocolError(ErrorCode::kCorruptEnvelope);
  }
  if (!crypto::sm2_verify(user.p_c, as_bytes(crypto::kDefaultSm2Id), nd2.ct1, nd2.sig))
    throw ProtocolError(ErrorCode::kForgedNodeData);
  if (nd2.credential != user.credential) throw ProtocolError(ErrorCode::kIdentityCheckFailed);

  const Digest32 digest = cache_.insert(nd2.ct1, user.addr, nd2.capture_ms);
  ledger::PendingReceipt pending;
  auto result = submit(*acct,
                       ledger::DataUploadCall{Bytes(digest.bytes.begin(), digest.bytes.end()),
                                              token_commitment(user.k_c), timestamp_ascii(nd2.capture_ms)},
                       &pending);
  if (result.status == ledger::ReceiptStatus::kTimedOut) throw UploadUnconfirmed(digest, pending);
  require_included(result);
  return {digest, std::move(result)};
}

GrantDelivery AuthServer::grant(const std::string& granter, const std::string& grantee) {
  auto from = account(granter);
  if (!from) throw ProtocolError(ErrorCode::kUnknownUser, granter);
  auto to = account(grantee);
  if (!to) throw ProtocolError(ErrorCode::kUnknownUser, grantee);
  GrantDelivery out;
  out.granter = granter;
  {
    std::lock_guard lock(from->mu);
    out.result = submit(*from, ledger::AuthorityGrantCall{to->record.addr});
    require_included(out.result);
  }
  std::uint64_t entropy;
  {
    std::lock_guard lock(mu_);
    entropy = rng_->next_u64();
  }
  SeededRandom enc_rng(entropy);
  out.sealed_key = crypto::sm2_encrypt(to->record.p_c, from->record.k_c.view(), enc_rng).encode();
  return out;
}

std::vector<QueriedRecord> AuthServer::query(const ledger::Address& requester, ByteView token,
                                             const std::string& target, const std::optional<Digest32>& only) {
  auto acct = account(target);
  if (!acct) throw ProtocolError(ErrorCode::kUnknownUser, target);
  auto state = network_.node(config_.home_node).head().state;
  std::vector<ledger::DigestRecord> records;
  try {
    records = ledger::contract_data_query(state->contract, requester, token, acct->record.addr);
  } catch (const ledger::ContractRevert& e) {
    if (e.code() == ledger::RevertCode::kUnknownTarget) throw ProtocolError(ErrorCode::kUnknownUser, target);
    throw ProtocolError(ErrorCode::kAccessDenied);
  }
  std::vector<QueriedRecord> out;
  for (const auto& r : records) {
    const auto digest = Digest32::from(r.digest);
    if (only && digest != *only) continue;
    if (cache_.quarantined(digest)) throw ProtocolError(ErrorCode::kTampered, digest.hex());
    auto entry = cache_.get(digest);
    if (!entry) throw ProtocolError(ErrorCode::kCacheMiss, digest.hex());
    if (crypto::sm3_hash(entry->ciphertext) != digest) {
      cache_.quarantine(digest);
      throw ProtocolError(ErrorCode::kTampered, digest.hex());
    }
    out.push_back({digest, std::move(entry->ciphertext), r.timestamp});
  }
  return out;
}

}  // namespace authros::protocol
