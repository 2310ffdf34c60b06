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
#include <filesystem>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "authros/ledger/network.hpp"
#include "authros/protocol/client.hpp"

namespace authros::cli {

enum ExitCode : int {
  kOk = 0,
  kInternal = 1,
  kConfig = 2,
  kIdentity = 3,
  kAuthorization = 4,
  kIntegrity = 5,
};

/// Error carrying the process exit code.
class CliError : public std::runtime_error {
 public:
  CliError(int code, const std::string& what) : std::runtime_error(what), code_(code) {}
  int code() const { return code_; }

 private:
  int code_;
};

int exit_code_for(protocol::ErrorCode code);

struct GlobalOptions {
  std::filesystem::path state_dir = "authros-state";
  std::optional<std::filesystem::path> genesis;
  std::optional<std::string> consensus;  // "pow" | "poa"
  std::uint64_t difficulty = 1ULL << 16;
  std::uint64_t seed = 1;
};

// AUTHROS_SIM_SEED, when set, wins over --seed.
std::uint64_t effective_seed(const GlobalOptions& opts);

ledger::ConsensusMode parse_mode(const std::string& name);

// Genesis from --genesis, else <state>/genesis.json, else a fresh default
// written to <state>/genesis.json. Malformed input is kConfig.
ledger::Genesis resolve_genesis(const GlobalOptions& opts, bool write_default);

/// One CLI invocation's view of the state directory:
///   genesis.json  state.json (seed)  chain.hex  cache.txt  server.sealed
///   keystore/<name>.json  grants/<grantee>/<granter>.hex
/// The constructor replays chain.hex, starts the network and restores every
/// registered user on a server with seed-derived accounts.
class Session {
 public:
  explicit Session(const GlobalOptions& opts);
  ~Session();
  Session(const Session&) = delete;
  Session& operator=(const Session&) = delete;

  ledger::Network& network() { return *net_; }
  protocol::AuthServer& server() { return *server_; }
  const std::filesystem::path& dir() const { return dir_; }

  // Waits for the nodes to agree and writes chain, cache and registry.
  void persist();

  bool has_identity(const std::string& name) const;
  protocol::Identity load_identity(const std::string& name, const std::string& passphrase) const;
  void save_identity(const protocol::Identity& id, const std::string& passphrase);
  // Adds the server-side record for a freshly registered user.
  void record_user(const protocol::Identity& id);

  void deliver_grant(const std::string& grantee, const protocol::GrantDelivery& delivery);
  std::vector<protocol::GrantDelivery> grants_for(const std::string& grantee) const;

 private:
  struct RegistryEntry {
    std::string name;
    Bytes credential;
    crypto::Sm4Key k_c;
    crypto::CurvePoint p_c;
  };
  void check_seed();
  void load_registry();
  void save_registry() const;
  crypto::Sm4Key registry_key() const;
  std::filesystem::path keystore_path(const std::string& name) const;

  std::filesystem::path dir_;
  std::uint64_t seed_;
  std::unique_ptr<ledger::Network> net_;
  std::unique_ptr<protocol::AuthServer> server_;
  std::vector<RegistryEntry> registry_;
  SystemRandom rng_;
};

// Rejects names that cannot be used as file names.
void validate_user_name(const std::string& name);

}  // namespace authros::cli
