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

#include "session.hpp"

#include <cstdlib>
#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>

#include "authros/crypto/sm3.hpp"
#include "authros/protocol/keystore.hpp"

namespace authros::cli {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CliError(kConfig, "cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string read_hex_file(const fs::path& path) {
  std::string text = read_file(path);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.pop_back();
  return text;
}

// Write-then-rename so an interrupted run never leaves a half file behind.
void write_file(const fs::path& path, const std::string& text) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  const fs::path tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw CliError(kInternal, "cannot write " + tmp.string());
    out << text;
  }
  fs::rename(tmp, path);
}

}  // namespace

int exit_code_for(protocol::ErrorCode code) {
  using E = protocol::ErrorCode;
  switch (code) {
    case E::kInvalidCiphertext:
    case E::kAuthenticityFailed:
    case E::kStaleSystemKey:
    case E::kDuplicateName:
    case E::kNoPendingAlloc:
    case E::kUnknownUser:
    case E::kIdentityCheckFailed:
      return kIdentity;
    case E::kAccessDenied:
      return kAuthorization;
    case E::kCorruptEnvelope:
    case E::kForgedNodeData:
    case E::kTampered:
    case E::kCacheMiss:
    case E::kDecryptFailed:
      return kIntegrity;
    case E::kUploadUnconfirmed:
    case E::kLedgerRejected:
    case E::kLedgerRevert:
      return kInternal;
  }
  return kInternal;
}

std::uint64_t effective_seed(const GlobalOptions& opts) {
  if (const char* env = std::getenv("AUTHROS_SIM_SEED"); env && *env) {
    try {
      std::size_t used = 0;
      const auto v = std::stoull(env, &used, 0);
      if (used != std::string(env).size()) throw std::invalid_argument(env);
      return v;
    } catch (const std::exception&) {
      throw CliError(kConfig, std::string("AUTHROS_SIM_SEED is not an integer: ") + env);
    }
  }
  return opts.seed;
}

ledger::ConsensusMode parse_mode(const std::string& name) {
  if (name == "pow") return ledger::ConsensusMode::kPow;
  if (name == "poa") return ledger::ConsensusMode::kPoa;
  throw CliError(kConfig, "consensus must be pow or poa, got '" + name + "'");
}

ledger::Genesis resolve_genesis(const GlobalOptions& opts, bool write_default) {
  const fs::path stored = opts.state_dir / "genesis.json";
  try {
    if (opts.genesis) return ledger::load_genesis(*opts.genesis);
    if (fs::exists(stored)) {
      auto g = ledger::load_genesis(stored);
      if (opts.consensus && parse_mode(*opts.consensus) != g.consensus.mode)
        throw CliError(kConfig, "--consensus disagrees with " + stored.string());
      return g;
    }
  } catch (const ledger::GenesisError& e) {
    throw CliError(kConfig, e.what());
  }
  const auto mode = parse_mode(opts.consensus.value_or("poa"));
  if (opts.difficulty < 1) throw CliError(kConfig, "difficulty must be >= 1");
  auto g = ledger::make_genesis(mode, opts.difficulty);
  if (write_default) write_file(stored, g.to_json());
  return g;
}

void validate_user_name(const std::string& name) {
  if (name.empty() || name.size() > 64) throw CliError(kConfig, "user names must be 1..64 characters");
  for (char c : name)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '-' && c != '_' && c != '.')
      throw CliError(kConfig, "user name '" + name + "' may only use letters, digits, '-', '_' and '.'");
  if (name.front() == '.') throw CliError(kConfig, "user names may not start with '.'");
}

Session::Session(const GlobalOptions& opts) : dir_(opts.state_dir), seed_(effective_seed(opts)) {
  fs::create_directories(dir_);
  check_seed();
  auto genesis = resolve_genesis(opts, true);
  if (opts.genesis) write_file(dir_ / "genesis.json", genesis.to_json());
  net_ = std::make_unique<ledger::Network>(genesis, seed_);
  if (fs::exists(dir_ / "chain.hex")) {
    std::ifstream in(dir_ / "chain.hex");
    try {
      net_->load_chain(in);
    } catch (const std::exception& e) {
      throw CliError(kConfig, "chain.hex does not replay against this genesis: " + std::string(e.what()));
    }
  }
  net_->start();

  protocol::ServerConfig cfg;
  cfg.seed = seed_;
  server_ = std::make_unique<protocol::AuthServer>(*net_, cfg);
  if (fs::exists(dir_ / "cache.txt")) {
    try {
      server_->cache().load(dir_ / "cache.txt");
    } catch (const std::exception& e) {
      throw CliError(kConfig, "unreadable cache snapshot: " + std::string(e.what()));
    }
  }
  load_registry();
}

Session::~Session() {
  if (net_) net_->stop();
}

void Session::check_seed() {
  const fs::path p = dir_ / "state.json";
  if (!fs::exists(p)) {
    write_file(p, json{{"seed", seed_}}.dump() + "\n");
    return;
  }
  std::uint64_t stored = 0;
  try {
    stored = json::parse(read_file(p)).at("seed").get<std::uint64_t>();
  } catch (const std::exception& e) {
    throw CliError(kConfig, "malformed " + p.string() + ": " + e.what());
  }
  if (stored != seed_)
    throw CliError(kConfig, "state directory was created with seed " + std::to_string(stored) + ", not " +
                                std::to_string(seed_));
}

crypto::Sm4Key Session::registry_key() const {
  Bytes material = to_bytes("authros-server-registry");
  append_u64_le(material, seed_);
  return crypto::Sm4Key::from(crypto::sm3_hash(material).view().first(16));
}

void Session::load_registry() {
  const fs::path p = dir_ / "server.sealed";
  if (!fs::exists(p)) return;
  json j;
  try {
    j = json::parse(to_string(crypto::sm4_open(registry_key(), from_hex(read_hex_file(p)))));
    for (const auto& e : j) {
      RegistryEntry r;
      r.name = e.at("name").get<std::string>();
      r.credential = from_hex(e.at("credential").get<std::string>());
      r.k_c = crypto::Sm4Key::from_hex(e.at("k_c").get<std::string>());
      r.p_c = crypto::decode_point(from_hex(e.at("p_c").get<std::string>()));
      registry_.push_back(std::move(r));
    }
  } catch (const std::exception& e) {
    throw CliError(kConfig, "cannot open server registry: " + std::string(e.what()));
  }
  for (const auto& r : registry_) {
    try {
      server_->restore_user(r.name, r.credential, r.k_c, r.p_c);
    } catch (const protocol::ProtocolError& e) {
      throw CliError(kConfig, "registry entry " + r.name + " does not match the chain: " + e.what());
    }
  }
}

void Session::save_registry() const {
  json j = json::array();
  for (const auto& r : registry_)
    j.push_back({{"name", r.name},
                 {"credential", to_hex(r.credential)},
                 {"k_c", r.k_c.hex()},
                 {"p_c", crypto::encode_point(r.p_c).hex()}});
  SystemRandom rng;
  write_file(dir_ / "server.sealed", to_hex(crypto::sm4_seal(registry_key(), as_bytes(j.dump()), rng)) + "\n");
}

void Session::record_user(const protocol::Identity& id) {
  registry_.push_back({id.name, id.credential, id.sigma, id.signing.public_key});
}

void Session::persist() {
  if (!net_->settle(net_->receipt_timeout())) throw CliError(kInternal, "ledger nodes did not converge");
  std::ostringstream chain;
  net_->node(server_->network().size() > 1 ? 1 : 0).export_to(chain);
  write_file(dir_ / "chain.hex", chain.str());
  fs::create_directories(dir_);
  server_->cache().save(dir_ / "cache.txt");
  save_registry();
}

fs::path Session::keystore_path(const std::string& name) const { return dir_ / "keystore" / (name + ".json"); }

bool Session::has_identity(const std::string& name) const { return fs::exists(keystore_path(name)); }

protocol::Identity Session::load_identity(const std::string& name, const std::string& passphrase) const {
  validate_user_name(name);
  if (!has_identity(name)) throw CliError(kIdentity, "no keystore for '" + name + "'");
  try {
    return protocol::open_identity(read_file(keystore_path(name)), passphrase);
  } catch (const protocol::KeystoreError& e) {
    throw CliError(kIdentity, e.what());
  }
}

void Session::save_identity(const protocol::Identity& id, const std::string& passphrase) {
  write_file(keystore_path(id.name), protocol::seal_identity(id, passphrase, rng_));
}

void Session::deliver_grant(const std::string& grantee, const protocol::GrantDelivery& delivery) {
  write_file(dir_ / "grants" / grantee / (delivery.granter + ".hex"), to_hex(delivery.sealed_key) + "\n");
}

std::vector<protocol::GrantDelivery> Session::grants_for(const std::string& grantee) const {
  std::vector<protocol::GrantDelivery> out;
  const fs::path d = dir_ / "grants" / grantee;
  if (!fs::exists(d)) return out;
  for (const auto& entry : fs::directory_iterator(d)) {
    if (entry.path().extension() != ".hex") continue;
    protocol::GrantDelivery g;
    g.granter = entry.path().stem().string();
    try {
      g.sealed_key = from_hex(read_hex_file(entry.path()));
    } catch (const std::invalid_argument&) {
      throw CliError(kIntegrity, "corrupt grant file " + entry.path().string());
    }
    out.push_back(std::move(g));
  }
  return out;
}

}  // namespace authros::cli
