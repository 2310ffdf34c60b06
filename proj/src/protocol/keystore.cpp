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

#include "authros/protocol/keystore.hpp"

#include <nlohmann/json.hpp>

#include "authros/crypto/sm3.hpp"

namespace authros::protocol {

namespace {

using nlohmann::json;

constexpr int kVersion = 1;

}  // namespace

crypto::Sm4Key passphrase_key(std::string_view passphrase, ByteView salt, std::uint32_t iterations) {
  if (iterations < 1) throw KeystoreError("keystore iterations must be >= 1");
  Digest32 h;
  for (std::uint32_t i = 0; i < iterations; ++i) {
    crypto::Sm3 s;
    if (i > 0) s.update(h.view());
    s.update(salt);
    s.update(as_bytes(passphrase));
    h = s.finish();
  }
  return crypto::Sm4Key::from(h.view().first(16));
}

std::string seal_identity(const Identity& id, std::string_view passphrase, RandomSource& rng,
                          std::uint32_t iterations) {
  json secret;
  secret["d"] = id.signing.private_key.hex();
  secret["k_c"] = id.sigma.hex();
  secret["credential"] = to_hex(id.credential);
  secret["shared"] = json::array();
  for (const auto& r : id.d) secret["shared"].push_back({{"digest", r.digest.hex()}, {"height", r.height}});

  Bytes salt(16);
  rng.fill(salt);
  const auto key = passphrase_key(passphrase, salt, iterations);
  const std::string plain = secret.dump();

  json j;
  j["version"] = kVersion;
  j["name"] = id.name;
  j["address"] = id.addr.hex();
  j["public_key"] = crypto::encode_point(id.signing.public_key).hex();
  j["kdf"] = {{"salt", to_hex(salt)}, {"iterations", iterations}};
  j["sealed"] = to_hex(crypto::sm4_seal(key, as_bytes(plain), rng));
  return j.dump(2) + "\n";
}

Identity open_identity(std::string_view text, std::string_view passphrase) {
  Identity id;
  json j;
  try {
    j = json::parse(text);
    if (j.at("version").get<int>() != kVersion) throw KeystoreError("unsupported keystore version");
    id.name = j.at("name").get<std::string>();
    id.addr = ledger::Address::from_hex(j.at("address").get<std::string>());
    id.signing.public_key = crypto::decode_point(from_hex(j.at("public_key").get<std::string>()));
  } catch (const KeystoreError&) {
    throw;
  } catch (const std::exception& e) {
    throw KeystoreError(std::string("malformed keystore: ") + e.what());
  }

  json secret;
  try {
    const auto& kdf = j.at("kdf");
    const auto key = passphrase_key(passphrase, from_hex(kdf.at("salt").get<std::string>()),
                                    kdf.at("iterations").get<std::uint32_t>());
    const Bytes plain = crypto::sm4_open(key, from_hex(j.at("sealed").get<std::string>()));
    secret = json::parse(to_string(plain));
    id.signing.private_key = crypto::U256::from_hex(secret.at("d").get<std::string>());
    id.sigma = crypto::Sm4Key::from_hex(secret.at("k_c").get<std::string>());
    id.credential = from_hex(secret.at("credential").get<std::string>());
    for (const auto& r : secret.at("shared"))
      id.d.push_back({Digest32::from_hex(r.at("digest").get<std::string>()), r.at("height").get<std::uint64_t>()});
  } catch (const std::exception&) {
    throw KeystoreError("wrong passphrase or corrupt keystore for " + id.name);
  }
  // The sealed d_C must match the clear P_C.
  try {
    if (crypto::sm2_keypair_from_private(id.signing.private_key).public_key != id.signing.public_key)
      throw KeystoreError("keystore key pair mismatch for " + id.name);
  } catch (const crypto::CryptoError&) {
    throw KeystoreError("keystore key pair mismatch for " + id.name);
  }
  return id;
}

}  // namespace authros::protocol
