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

#include <gtest/gtest.h>

#include <set>
#include <sstream>

#include "authros/crypto/keccak.hpp"
#include "authros/kernels.hpp"
#include "authros/ledger/block.hpp"
#include "authros/ledger/chain.hpp"
#include "authros/ledger/genesis.hpp"
#include "authros/ledger/network.hpp"
#include "support/auth_trace.hpp"
#include "support/kat.hpp"

namespace authros::ledger {
namespace {

using crypto::Sm2KeyPair;

std::vector<Sm2KeyPair> make_keys(std::size_t n, std::uint64_t seed) {
  SeededRandom rng(seed);
  std::vector<Sm2KeyPair> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(crypto::sm2_keygen(rng));
  return out;
}

TEST(Address, MatchesKnownAnswers) {
  auto all = testing::load_kat(std::string(AUTHROS_VECTORS_DIR) + "/sm_kat.txt");
  auto vectors = testing::kat_for(all, "ADDRESS");
  ASSERT_FALSE(vectors.empty());
  for (const auto& v : vectors) {
    auto p = crypto::decode_point(v.in);
    EXPECT_EQ(to_hex(derive_address(p).view()), to_hex(v.out));
  }
}

TEST(Address, DeterministicAndTruncatedKeccak) {
  auto k = make_keys(1, 1)[0];
  EXPECT_EQ(derive_address(k.public_key), derive_address(k.public_key));
  auto enc = crypto::encode_point(k.public_key);
  auto h = crypto::keccak256(ByteView(enc.bytes).subspan(1));
  EXPECT_EQ(derive_address(k.public_key), Address::from(h.view().first(20)));
  EXPECT_THROW(derive_address(crypto::CurvePoint{}), crypto::CryptoError);
}

TEST(Address, NoCollisionsOverTenThousandKeys) {
  SeededRandom rng(99);
  std::set<Address> seen;
  for (int i = 0; i < 10000; ++i) seen.insert(derive_address(crypto::sm2_keygen(rng).public_key));
  EXPECT_EQ(seen.size(), 10000u);
}

TEST(Transaction, EncodeDecodeAndSignature) {
  SeededRandom rng(2);
  auto k = make_keys(2, 3);
  std::vector<ContractCall> calls = {RegisterCall{to_bytes("t")},
                                     DataUploadCall{Bytes(32, 7), to_bytes("t"), to_bytes("1700000000000")},
                                     AuthorityGrantCall{derive_address(k[1].public_key)},
                                     DataQueryCall{to_bytes("t"), derive_address(k[1].public_key)}};
  for (std::size_t i = 0; i < calls.size(); ++i) {
    auto tx = make_transaction(k[0], i, calls[i], 10 + i, rng);
    EXPECT_TRUE(tx.signature_valid());
    auto back = Transaction::decode(tx.encode());
    EXPECT_EQ(back.encode(), tx.encode());
    EXPECT_EQ(back.hash(), tx.hash());
    EXPECT_EQ(tx.intrinsic_gas(), 21000 + 68 * encode_call(calls[i]).size());

    auto bad = tx;
    bad.nonce += 1;
    EXPECT_FALSE(bad.signature_valid());
    bad = tx;
    bad.sender_key = k[1].public_key;  // key no longer matches the sender address
    EXPECT_FALSE(bad.signature_valid());
  }
  auto enc = make_transaction(k[0], 0, calls[0], 1, rng).encode();
  enc.pop_back();
  EXPECT_THROW(Transaction::decode(enc), DecodeError);
}

class ContractTest : public ::testing::Test {
 protected:
  void SetUp() override {
    keys = make_keys(3, 11);
    for (const auto& k : keys) addr.push_back(derive_address(k.public_key));
  }
  std::vector<Sm2KeyPair> keys;
  std::vector<Address> addr;
  ContractState st;
};

TEST_F(ContractTest, RegisterGivesSelfAccess) {
  Bytes token(16, 0xab);
  contract_register(st, addr[0], keys[0].public_key, token);
  EXPECT_TRUE(contract_data_query(st, addr[0], token, addr[0]).empty());
  EXPECT_EQ(st.token_lists[addr[0]].size(), 1u);
  try {
    contract_register(st, addr[0], keys[0].public_key, token);
    FAIL();
  } catch (const ContractRevert& e) {
    EXPECT_EQ(e.code(), RevertCode::kAlreadyRegistered);
  }
  try {
    contract_register(st, addr[1], keys[1].public_key, {});
    FAIL();
  } catch (const ContractRevert& e) {
    EXPECT_EQ(e.code(), RevertCode::kEmptyToken);
  }
  EXPECT_FALSE(st.is_registered(addr[1]));
}

TEST_F(ContractTest, UploadIsAppendOnlyAndTokenChecked) {
  contract_register(st, addr[0], keys[0].public_key, to_bytes("ta"));
  contract_data_upload(st, addr[0], as_bytes("d1"), as_bytes("ta"), as_bytes("1"));
  auto chain1 = st.digest_chain.at(addr[0]);
  contract_data_upload(st, addr[0], as_bytes("d2"), as_bytes("ta"), as_bytes("2"));
  auto recs = contract_data_query(st, addr[0], as_bytes("ta"), addr[0]);
  ASSERT_EQ(recs.size(), 2u);
  EXPECT_EQ(recs[0].digest, to_bytes("d1"));
  EXPECT_EQ(recs[1].digest, to_bytes("d2"));
  EXPECT_NE(chain1, st.digest_chain.at(addr[0]));
  EXPECT_THROW(contract_data_upload(st, addr[0], as_bytes("d3"), as_bytes("tb"), as_bytes("3")), ContractRevert);
  EXPECT_THROW(contract_data_upload(st, addr[1], as_bytes("d3"), as_bytes("ta"), as_bytes("3")), ContractRevert);
  EXPECT_EQ(st.digest_store[addr[0]].size(), 2u);
}

TEST_F(ContractTest, GrantThenQuery) {
  contract_register(st, addr[0], keys[0].public_key, to_bytes("ta"));
  contract_register(st, addr[1], keys[1].public_key, to_bytes("tb"));
  contract_register(st, addr[2], keys[2].public_key, to_bytes("tc"));
  contract_data_upload(st, addr[0], as_bytes("d"), as_bytes("ta"), as_bytes("5"));

  auto denied = [&](const Address& caller, std::string_view token, const Address& target) {
    try {
      contract_data_query(st, caller, as_bytes(token), target);
    } catch (const ContractRevert& e) {
      return e.code() == RevertCode::kAccessDenied;
    }
    return false;
  };
  EXPECT_TRUE(denied(addr[1], "tb", addr[0]));  // own token, no grant
  EXPECT_TRUE(denied(addr[1], "ta", addr[0]));  // knows the token, no grant
  contract_authority_grant(st, addr[0], addr[1]);
  EXPECT_EQ(contract_data_query(st, addr[1], as_bytes("ta"), addr[0]).size(), 1u);
  EXPECT_TRUE(denied(addr[2], "ta", addr[0]));

  contract_authority_grant(st, addr[0], addr[1]);
  EXPECT_EQ(st.token_lists[addr[1]].size(), 2u);  // tb, ta: no duplicate
  contract_authority_grant(st, addr[0], addr[0]);
  EXPECT_EQ(st.token_lists[addr[0]].size(), 1u);
  EXPECT_THROW(contract_authority_grant(st, Address{}, addr[1]), ContractRevert);

  try {
    contract_data_query(st, addr[1], as_bytes("ta"), Address{});
    FAIL();
  } catch (const ContractRevert& e) {
    EXPECT_EQ(e.code(), RevertCode::kUnknownTarget);
  }
}

TEST(AuthorizationOracle, MatchesNaiveInterpreterOnRandomTraces) {
  auto actors = make_keys(4, 21);
  std::size_t accepts = 0;
  for (std::uint64_t seed = 0; seed < 600; ++seed) {
    auto report = testing::run_auth_trace(seed, 20, actors);
    EXPECT_TRUE(report.divergences.empty()) << report.divergences.front();
    accepts += report.query_accepts;
  }
  EXPECT_GT(accepts, 60u);  // the traces do exercise successful queries
}

TEST(StateRoot, DeterministicReplay) {
  auto keys = make_keys(3, 5);
  SeededRandom rng(8);
  std::vector<Transaction> txs;
  for (std::size_t i = 0; i < keys.size(); ++i)
    txs.push_back(make_transaction(keys[i], 0, RegisterCall{to_bytes("tok" + std::to_string(i))}, i, rng));
  txs.push_back(make_transaction(keys[0], 1, AuthorityGrantCall{derive_address(keys[1].public_key)}, 9, rng));
  LedgerState a, b;
  for (const auto& tx : txs) apply_transaction(a, tx);
  for (const auto& tx : txs) apply_transaction(b, tx);
  EXPECT_EQ(state_root(a), state_root(b));
  EXPECT_NE(state_root(a), state_root(LedgerState{}));
  EXPECT_THROW(apply_transaction(a, txs[0]), InvalidTransaction);  // consumed nonce
}

ConsensusConfig pow_config(std::uint64_t difficulty) {
  ConsensusConfig c;
  c.mode = ConsensusMode::kPow;
  c.difficulty = difficulty;
  return c;
}

ConsensusConfig poa_config(const std::vector<Sm2KeyPair>& validators) {
  ConsensusConfig c;
  c.mode = ConsensusMode::kPoa;
  for (const auto& v : validators) c.validators.push_back(derive_address(v.public_key));
  return c;
}

TEST(Pow, DifficultyOneTakesFirstNonce) {
  auto cfg = pow_config(1);
  Chain chain(cfg);
  SeededRandom rng(1);
  auto miner = make_keys(1, 1)[0];
  auto out = produce_block_pow(chain.head_view(), {}, cfg, derive_address(miner.public_key), 1, rng);
  ASSERT_TRUE(out);
  EXPECT_EQ(out->trials, 1u);
  EXPECT_TRUE(verify_block(out->block, chain.head_view(), cfg));
}

TEST(Pow, MeanTrialsFollowGeometricDistribution) {
  const std::uint64_t d = 1ULL << 16;
  auto cfg = pow_config(d);
  Chain chain(cfg);
  SeededRandom rng(2024);
  const auto miner = derive_address(make_keys(1, 2)[0].public_key);
  double total = 0;
  const int blocks = 50;
  for (int i = 0; i < blocks; ++i) {
    auto out = produce_block_pow(chain.head_view(), {}, cfg, miner, i + 1, rng);
    ASSERT_TRUE(out);
    total += static_cast<double>(out->trials);
    ASSERT_EQ(chain.import(out->block), Chain::ImportStatus::kImported);
  }
  const double mean = total / blocks;
  EXPECT_GT(mean, static_cast<double>(d) / 3);
  EXPECT_LT(mean, static_cast<double>(d) * 3);
  EXPECT_EQ(chain.head().block.header.height, 50u);
}

TEST(Pow, RejectsInsufficientWorkAndTampering) {
  auto cfg = pow_config(1 << 12);
  Chain chain(cfg);
  SeededRandom rng(3);
  auto keys = make_keys(2, 4);
  std::vector<Transaction> txs = {make_transaction(keys[1], 0, RegisterCall{to_bytes("x")}, 1, rng)};
  auto out = produce_block_pow(chain.head_view(), txs, cfg, derive_address(keys[0].public_key), 2, rng);
  ASSERT_TRUE(out);
  ASSERT_EQ(out->block.txs.size(), 1u);
  EXPECT_TRUE(verify_block(out->block, chain.head_view(), cfg));

  auto weak = out->block;
  auto boundary = kernels::pow_boundary(cfg.difficulty);
  do {
    ++weak.header.nonce;
  } while (crypto::U256::from_be(weak.hash().view()) <= boundary);
  EXPECT_FALSE(verify_block(weak, chain.head_view(), cfg));

  // Same block judged against a harder target.
  EXPECT_FALSE(verify_block(out->block, chain.head_view(), pow_config(1ULL << 40)));

  auto mutated = out->block;
  std::get<RegisterCall>(mutated.txs[0].call).token = to_bytes("y");
  EXPECT_FALSE(verify_block(mutated, chain.head_view(), cfg));
}

TEST(Poa, RoundRobinSlots) {
  auto v = make_keys(3, 6);
  auto cfg = poa_config(v);
  Chain chain(cfg);
  SeededRandom rng(4);
  for (std::uint64_t h = 1; h <= 6; ++h) {
    const auto& expected = v[(h - 1) % 3];
    EXPECT_EQ(slot_validator(cfg, h), derive_address(expected.public_key));
    auto block = produce_block_poa(chain.head_view(), {}, cfg, expected, h, rng);
    ASSERT_EQ(chain.import(block), Chain::ImportStatus::kImported);
  }
  EXPECT_EQ(chain.head().block.header.height, 6u);
}

TEST(Poa, WrongValidatorAndBadSeal) {
  auto v = make_keys(3, 7);
  auto cfg = poa_config(v);
  Chain chain(cfg);
  SeededRandom rng(5);
  auto good = produce_block_poa(chain.head_view(), {}, cfg, v[0], 1, rng);
  EXPECT_TRUE(verify_block(good, chain.head_view(), cfg));
  EXPECT_FALSE(verify_block(produce_block_poa(chain.head_view(), {}, cfg, v[1], 1, rng), chain.head_view(), cfg));
  auto outsider = make_keys(1, 8)[0];
  EXPECT_FALSE(verify_block(produce_block_poa(chain.head_view(), {}, cfg, outsider, 1, rng), chain.head_view(), cfg));
  auto forged = good;
  forged.header.timestamp += 1;  // signature no longer covers the header
  EXPECT_FALSE(verify_block(forged, chain.head_view(), cfg));
}

TEST(Block, EncodeDecodeRoundTrip) {
  auto v = make_keys(2, 9);
  auto cfg = poa_config({v[0]});
  Chain chain(cfg);
  SeededRandom rng(6);
  std::vector<Transaction> txs = {make_transaction(v[1], 0, RegisterCall{to_bytes("x")}, 1, rng),
                                  make_transaction(v[1], 1, DataUploadCall{Bytes(32, 1), to_bytes("x"), {}}, 2, rng)};
  auto b = produce_block_poa(chain.head_view(), txs, cfg, v[0], 3, rng);
  ASSERT_EQ(b.txs.size(), 2u);
  auto back = Block::decode(b.encode());
  EXPECT_EQ(back.encode(), b.encode());
  EXPECT_TRUE(verify_block(back, chain.head_view(), cfg));
  auto enc = b.encode();
  enc[enc.size() / 2] ^= 0x01;
  bool rejected = false;
  try {
    rejected = !verify_block(Block::decode(enc), chain.head_view(), cfg);
  } catch (const DecodeError&) {
    rejected = true;
  }
  EXPECT_TRUE(rejected);
}

TEST(Assemble, FifoWithNonceGaps) {
  auto keys = make_keys(2, 10);
  SeededRandom rng(7);
  auto a0 = make_transaction(keys[0], 0, RegisterCall{to_bytes("a")}, 1, rng);
  auto a1 = make_transaction(keys[0], 1, AuthorityGrantCall{}, 2, rng);
  auto a3 = make_transaction(keys[0], 3, AuthorityGrantCall{}, 3, rng);
  auto b0 = make_transaction(keys[1], 0, RegisterCall{to_bytes("b")}, 4, rng);
  std::vector<Transaction> cands = {a1, b0, a0, a3};
  auto body = assemble_body(LedgerState{}, cands, 0xffffffff);
  ASSERT_EQ(body.txs.size(), 2u);  // a1 precedes a0, a3 has a gap
  EXPECT_EQ(body.txs[0].hash(), b0.hash());
  EXPECT_EQ(body.txs[1].hash(), a0.hash());
  auto tight = assemble_body(LedgerState{}, std::vector<Transaction>{a0, b0}, a0.intrinsic_gas());
  EXPECT_EQ(tight.txs.size(), 1u);
}

TEST(SelectChain, HeightThenSmallerHash) {
  Digest32 lo, hi;
  lo.bytes[0] = 1;
  hi.bytes[0] = 2;
  EXPECT_EQ(select_chain(std::vector<ChainTip>{{hi, 5}, {lo, 7}}).height, 7u);
  EXPECT_EQ(select_chain(std::vector<ChainTip>{{hi, 7}, {lo, 7}}).hash, lo);
  EXPECT_EQ(select_chain(std::vector<ChainTip>{{hi, 3}}).hash, hi);
  EXPECT_THROW(select_chain({}), std::invalid_argument);
}

TEST(ChainStore, OrphansForksAndReplay) {
  auto v = make_keys(2, 12);
  auto cfg = poa_config({v[0]});
  SeededRandom rng(9);
  Chain a(cfg);
  std::vector<Block> blocks;
  for (std::uint64_t h = 1; h <= 4; ++h) {
    std::vector<Transaction> txs = {
        make_transaction(v[1], h - 1, h == 1 ? ContractCall{RegisterCall{to_bytes("t")}}
                                             : ContractCall{DataUploadCall{Bytes(32, h), to_bytes("t"), {}}},
                         h, rng)};
    blocks.push_back(produce_block_poa(a.head_view(), txs, cfg, v[0], h, rng));
    ASSERT_EQ(a.import(blocks.back()), Chain::ImportStatus::kImported);
  }

  Chain b(cfg);
  EXPECT_EQ(b.import(blocks[2]), Chain::ImportStatus::kOrphan);
  EXPECT_EQ(b.import(blocks[1]), Chain::ImportStatus::kOrphan);
  EXPECT_EQ(b.import(blocks[0]), Chain::ImportStatus::kImported);
  EXPECT_EQ(b.head().block.header.height, 3u);
  EXPECT_EQ(b.last_connected().size(), 3u);
  EXPECT_EQ(b.import(blocks[0]), Chain::ImportStatus::kKnown);

  // Competing block at height 4: the smaller hash becomes head.
  auto rival = produce_block_poa(b.head_view(), {}, cfg, v[0], 99, rng);
  ASSERT_EQ(b.import(rival), Chain::ImportStatus::kImported);
  ASSERT_EQ(b.import(blocks[3]), Chain::ImportStatus::kImported);
  const auto expect = std::min(rival.hash(), blocks[3].hash());
  EXPECT_EQ(b.head().hash, expect);
  EXPECT_EQ(b.tips().size(), 2u);

  std::stringstream exported;
  export_chain(a, exported);
  auto replay = import_chain(cfg, exported);
  EXPECT_EQ(replay.head().block.header.state_root, a.head().block.header.state_root);
  EXPECT_EQ(state_root(*replay.head().state), state_root(*a.head().state));

  std::stringstream broken(exported.str().substr(0, 40) + "zz\n");
  EXPECT_THROW(import_chain(cfg, broken), std::runtime_error);
}

TEST(GenesisConfig, ParseAndReject) {
  auto g = parse_genesis(R"({"consensus":"pow","difficulty":4096,"gas_limit":"0xffffffff"})");
  EXPECT_EQ(g.consensus.mode, ConsensusMode::kPow);
  EXPECT_EQ(g.consensus.difficulty, 4096u);
  EXPECT_EQ(g.consensus.block_gas_limit, 0xffffffffu);
  EXPECT_EQ(g.node_keys.size(), 3u);

  auto poa = parse_genesis(R"({"consensus":"poa"})");
  EXPECT_EQ(poa.consensus.validators.size(), 3u);
  auto again = parse_genesis(poa.to_json());
  EXPECT_EQ(again.consensus.encode(), poa.consensus.encode());

  EXPECT_THROW(parse_genesis(R"({"consensus":"poa","validators":[]})"), GenesisError);
  EXPECT_THROW(parse_genesis(R"({"consensus":"pow","difficulty":0})"), GenesisError);
  EXPECT_THROW(parse_genesis(R"({"consensus":"raft"})"), GenesisError);
  EXPECT_THROW(parse_genesis("{not json"), GenesisError);
  EXPECT_THROW(parse_genesis(R"({"difficulty":"lots"})"), GenesisError);
  EXPECT_THROW(parse_genesis(R"({"validators":["00000000000000000000000000000000000000aa"]})"), GenesisError);
  EXPECT_THROW(parse_genesis(R"({"link":{"base_ms":"x"}})"), GenesisError);
  EXPECT_THROW(parse_genesis(R"({"colour":"blue"})"), GenesisError);
}

class NetworkTest : public ::testing::TestWithParam<ConsensusMode> {};

TEST_P(NetworkTest, SubmitIncludeAndConverge) {
  auto genesis = make_genesis(GetParam(), 1 << 10);
  genesis.link = {1.0, 1.0};
  Network net(genesis, 42);
  net.start();
  SeededRandom rng(10);
  auto users = make_keys(3, 13);

  std::vector<PendingReceipt> receipts;
  for (std::size_t i = 0; i < users.size(); ++i) {
    auto tx = make_transaction(users[i], 0, RegisterCall{to_bytes("t" + std::to_string(i))}, net.tick(), rng);
    receipts.push_back(net.submit(1 + i % 2, tx));
  }
  for (auto& r : receipts) {
    auto res = r.wait(std::chrono::seconds(10));
    EXPECT_EQ(res.status, ReceiptStatus::kIncluded);
    EXPECT_TRUE(res.receipt.success);
  }

  // Immediate rejections.
  auto replay = make_transaction(users[0], 0, RegisterCall{to_bytes("again")}, net.tick(), rng);
  auto rr = net.submit(1, replay).wait(std::chrono::seconds(1));
  EXPECT_EQ(rr.status, ReceiptStatus::kRejected);
  EXPECT_EQ(rr.reason, "nonce");
  auto forged = make_transaction(users[1], 1, AuthorityGrantCall{}, net.tick(), rng);
  forged.signature.s = forged.signature.r;
  auto fr = net.submit(1, forged).wait(std::chrono::seconds(1));
  EXPECT_EQ(fr.status, ReceiptStatus::kRejected);
  EXPECT_EQ(fr.reason, "signature");
  auto greedy = make_transaction(users[1], 1, AuthorityGrantCall{}, net.tick(), rng, 0x100000000ULL);
  EXPECT_EQ(net.submit(1, greedy).wait(std::chrono::seconds(1)).reason, "gas");

  ASSERT_TRUE(net.settle(std::chrono::seconds(10)));
  auto root = net.node(0).state_root();
  for (std::size_t i = 1; i < net.size(); ++i) EXPECT_EQ(net.node(i).state_root(), root);
  EXPECT_EQ(net.node(0).head().state->contract.registry.size(), 3u);

  std::stringstream exported;
  net.node(2).export_to(exported);
  net.stop();
  auto replayed = import_chain(genesis.consensus, exported);
  EXPECT_EQ(replayed.head().block.header.state_root, root);

  // A fresh network restored from the export resumes at the same head.
  Network restored(genesis, 43);
  exported.clear();
  exported.seekg(0);
  restored.load_chain(exported);
  for (std::size_t i = 0; i < restored.size(); ++i) EXPECT_EQ(restored.node(i).state_root(), root);
  restored.start();
  auto more = make_transaction(make_keys(1, 15)[0], 0, RegisterCall{to_bytes("late")}, restored.tick(), rng);
  auto mr = restored.submit(2, more).wait(std::chrono::seconds(10));
  EXPECT_EQ(mr.status, ReceiptStatus::kIncluded);
  EXPECT_EQ(mr.height, net.node(0).height() + 1);
  EXPECT_THROW(restored.load_chain(exported), std::logic_error);
  restored.stop();

  // A follower never holds two accepted blocks at one height.
  for (std::size_t i = 0; i < net.size(); ++i) {
    std::set<std::uint64_t> heights;
    for (std::uint64_t h = 1; h <= net.node(i).height(); ++h)
      EXPECT_TRUE(heights.insert(net.node(i).block_at(h)->header.height).second);
  }
}

TEST_P(NetworkTest, ReceiptTimesOutWithoutProducer) {
  auto genesis = make_genesis(GetParam(), 1 << 10);
  genesis.consensus.target_block_interval_ms = 5;
  Network net(genesis, 1);  // never started
  SeededRandom rng(11);
  auto tx = make_transaction(make_keys(1, 14)[0], 0, RegisterCall{to_bytes("t")}, 1, rng);
  auto r = net.submit(1, tx);
  EXPECT_EQ(r.wait(net.receipt_timeout()).status, ReceiptStatus::kTimedOut);
  EXPECT_EQ(net.receipt_timeout(), std::chrono::milliseconds(50));
}

INSTANTIATE_TEST_SUITE_P(Modes, NetworkTest, ::testing::Values(ConsensusMode::kPow, ConsensusMode::kPoa),
                         [](const auto& info) { return std::string(mode_name(info.param)); });

}  // namespace
}  // namespace authros::ledger
