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

// authros: operator entry point for the simulated ledger, bus and server.

#include <CLI11.hpp>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

#include "authros/bench/report.hpp"
#include "authros/bus/replay.hpp"
#include "authros/crypto/sm3.hpp"
#include "authros/protocol/keystore.hpp"
#include "session.hpp"

namespace fs = std::filesystem;
using namespace authros;
using namespace authros::cli;

namespace {

// "800k", "2m", "1024" -> bytes.
std::size_t parse_size(const std::string& text) {
  if (text.empty()) throw CliError(kConfig, "empty size");
  std::size_t mult = 1;
  std::string digits = text;
  switch (std::tolower(static_cast<unsigned char>(text.back()))) {
    case 'k':
      mult = 1024;
      digits.pop_back();
      break;
    case 'm':
      mult = 1024 * 1024;
      digits.pop_back();
      break;
    default:
      break;
  }
  try {
    std::size_t used = 0;
    const auto v = std::stoull(digits, &used);
    if (used != digits.size() || v == 0) throw std::invalid_argument(text);
    return v * mult;
  } catch (const std::exception&) {
    throw CliError(kConfig, "bad size '" + text + "'");
  }
}

std::vector<std::size_t> parse_sizes(const std::string& csv) {
  std::vector<std::size_t> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_size(item));
  if (out.empty()) throw CliError(kConfig, "no sizes given");
  return out;
}

std::string passphrase_or_env(const std::string& given) {
  if (!given.empty()) return given;
  if (const char* env = std::getenv("AUTHROS_PASSPHRASE"); env && *env) return env;
  throw CliError(kConfig, "a passphrase is required (--passphrase or AUTHROS_PASSPHRASE)");
}

bus::MessageType type_or_config(const std::string& name) {
  try {
    return bus::parse_type_name(name);
  } catch (const bus::ParseError& e) {
    throw CliError(kConfig, e.what());
  }
}

std::uint64_t now_ms() {
  return static_cast<std::uint64_t>(
      std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::system_clock::now().time_since_epoch())
          .count());
}

void print_head(const char* label, ledger::Network& net) {
  const auto head = net.node(0).head();
  std::cout << label << " height " << head.header.height << " state_root " << head.header.state_root.hex() << '\n';
}

// ---- genesis / init-net -------------------------------------------------

struct GenesisArgs {
  std::uint32_t nodes = 3;
  std::uint64_t key_seed = 1;
  bool print_only = false;
};

int cmd_genesis(const GlobalOptions& g, const GenesisArgs& a) {
  ledger::Genesis genesis;
  if (g.genesis) {
    genesis = resolve_genesis(g, false);  // validates a hand-written file
  } else {
    if (g.difficulty < 1) throw CliError(kConfig, "difficulty must be >= 1");
    if (a.nodes < 1 || a.nodes > 64) throw CliError(kConfig, "--nodes must be in [1, 64]");
    genesis = ledger::make_genesis(parse_mode(g.consensus.value_or("poa")), g.difficulty, a.nodes, a.key_seed);
  }
  const std::string json = genesis.to_json();
  if (a.print_only) {
    std::cout << json << '\n';
    return kOk;
  }
  fs::create_directories(g.state_dir);
  const fs::path path = g.state_dir / "genesis.json";
  if (fs::exists(path)) throw CliError(kConfig, path.string() + " already exists");
  std::ofstream(path) << json << '\n';
  std::cout << "wrote " << path.string() << '\n';
  return kOk;
}

int cmd_init_net(const GlobalOptions& g, std::size_t heartbeat) {
  Session s(g);
  auto& net = s.network();
  const auto& cfg = net.config();
  std::cout << "consensus " << ledger::mode_name(cfg.mode) << " nodes " << net.size() << '\n';
  for (std::size_t i = 0; i < net.size(); ++i) {
    const auto& n = net.node(i);
    const bool validator =
        std::find(cfg.validators.begin(), cfg.validators.end(), n.address()) != cfg.validators.end();
    std::cout << "node " << i << ' ' << n.name() << ' ' << n.address().hex()
              << (i == 0 ? " bootstrap" : "") << (validator ? " validator" : "") << '\n';
  }
  print_head("loaded", net);
  // Probe transactions from throwaway accounts show the chain advancing.
  SystemRandom rng;
  for (std::size_t i = 0; i < heartbeat; ++i) {
    auto key = crypto::sm2_keygen(rng);
    auto tx = ledger::make_transaction(key, 0, ledger::RegisterCall{to_bytes("heartbeat")}, net.tick(), rng);
    auto r = net.submit(1 % net.size(), tx).wait(net.receipt_timeout());
    if (r.status != ledger::ReceiptStatus::kIncluded)
      throw CliError(kInternal, std::string("heartbeat not included: ") + ledger::status_name(r.status));
  }
  s.persist();
  print_head("head", net);
  return kOk;
}

// ---- identities -----------------------------------------------------------

int cmd_register(const GlobalOptions& g, const std::string& name, const std::string& pass_arg,
                 const std::string& credential) {
  validate_user_name(name);
  const std::string pass = passphrase_or_env(pass_arg);
  Session s(g);
  if (s.has_identity(name) || s.server().lookup(name))
    throw CliError(kIdentity, std::string(protocol::error_text(protocol::ErrorCode::kDuplicateName)) + ": " + name);
  SystemRandom rng;
  Bytes cred = to_bytes(credential);
  if (cred.empty()) {
    cred.resize(16);
    rng.fill(cred);
  }
  auto id = protocol::enroll(s.server(), name, cred, rng);
  s.record_user(id);
  s.save_identity(id, pass);
  s.persist();
  std::cout << "registered " << name << '\n'
            << "address " << id.addr.hex() << '\n'
            << "token_commitment " << to_hex(protocol::token_commitment(id.sigma)) << '\n'
            << "keystore " << (s.dir() / "keystore" / (name + ".json")).string() << '\n';
  return kOk;
}

// ---- monitor and share ------------------------------------------------------

struct MonitorArgs {
  std::string name;
  std::string passphrase;
  std::string replay;
  std::string topic;
  std::string type;
};

int cmd_monitor(const GlobalOptions& g, const MonitorArgs& a) {
  const std::string pass = passphrase_or_env(a.passphrase);
  if (a.replay.empty()) throw CliError(kConfig, "monitor needs --replay: this process hosts the only publisher");
  std::vector<bus::ReplayRecord> records;
  try {
    records = bus::load_replay(a.replay);
  } catch (const std::exception& e) {
    throw CliError(kConfig, e.what());
  }
  std::string topic = a.topic;
  if (topic.empty()) {
    if (records.empty()) throw CliError(kConfig, "replay file has no records");
    topic = records.front().topic;
  }
  bus::MessageType type;
  if (!a.type.empty()) {
    type = type_or_config(a.type);
  } else {
    auto it = std::find_if(records.begin(), records.end(), [&](const auto& r) { return r.topic == topic; });
    if (it == records.end()) throw CliError(kConfig, "no records on topic " + topic);
    type = it->type;
  }

  Session s(g);
  auto id = s.load_identity(a.name, pass);
  bus::Master master;
  std::vector<bus::CaptureEvent> events;
  {
    bus::Monitor mon(master, topic, type);
    bus::replay_into(master, records);
    events = mon.drain();
  }

  SystemRandom rng;
  int status = kOk;
  std::size_t receipts = 0, errors = 0;
  for (const auto& ev : events) {
    auto nd1 = protocol::nd1_from_capture(ev);
    if (!nd1) {
      ++errors;
      std::cerr << "error: seq " << ev.seq << " from " << ev.publisher << ": "
                << std::get<bus::CaptureError>(ev.value).message << '\n';
      continue;
    }
    try {
      auto r = protocol::share(s.server(), id, *nd1, ev.captured.millis(), rng);
      ++receipts;
      std::cout << "receipt " << r.digest.hex() << ' ' << r.result.height << '\n';
    } catch (const protocol::ProtocolError& e) {
      ++errors;
      std::cerr << "error: seq " << ev.seq << ": " << e.what() << '\n';
      if (status == kOk) status = exit_code_for(e.code());
    }
  }
  s.save_identity(id, pass);
  s.persist();
  std::cerr << "topic " << topic << ": " << events.size() << " captured, " << receipts << " shared, " << errors
            << " errors\n";
  return status;
}

// ---- grant / query / tamper -------------------------------------------------

int cmd_grant(const GlobalOptions& g, const std::string& granter, const std::string& grantee,
              const std::string& pass_arg) {
  const std::string pass = passphrase_or_env(pass_arg);
  validate_user_name(grantee);
  Session s(g);
  auto from = s.load_identity(granter, pass);  // proves the granter's consent
  auto delivery = s.server().grant(from.name, grantee);
  s.deliver_grant(grantee, delivery);
  s.persist();
  std::cout << "granted " << granter << " -> " << grantee << " height " << delivery.result.height << " tx "
            << delivery.result.block_hash.hex() << '\n';
  return kOk;
}

std::string extension_for(const protocol::Nd1& nd1) {
  if (const auto* img = std::get_if<bus::ImageMsg>(&nd1)) {
    std::string tag;
    for (char c : img->format_tag)
      if (std::isalnum(static_cast<unsigned char>(c))) tag += c;
    return tag.empty() ? "img" : tag;
  }
  if (std::holds_alternative<bus::OdometryMsg>(nd1)) return "odom";
  return "bin";
}

Bytes payload_of(const protocol::Nd1& nd1) {
  if (const auto* img = std::get_if<bus::ImageMsg>(&nd1)) return img->payload;
  if (const auto* odo = std::get_if<bus::OdometryMsg>(&nd1)) return bus::encode_odometry(*odo);
  return std::get<Bytes>(nd1);
}

int cmd_query(const GlobalOptions& g, const std::string& requester, const std::string& target,
              const std::string& digest_hex, const std::string& pass_arg) {
  const std::string pass = passphrase_or_env(pass_arg);
  validate_user_name(target);
  std::optional<Digest32> only;
  if (!digest_hex.empty()) {
    try {
      only = Digest32::from_hex(digest_hex);
    } catch (const std::invalid_argument&) {
      throw CliError(kConfig, "--digest must be 64 hex characters");
    }
  }
  Session s(g);
  auto id = s.load_identity(requester, pass);
  for (const auto& d : s.grants_for(requester)) {
    try {
      protocol::accept_grant(id, d);
    } catch (const protocol::ProtocolError& e) {
      std::cerr << "warning: unusable grant from " << d.granter << ": " << e.what() << '\n';
    }
  }
  std::vector<protocol::QueriedRecord> records;
  try {
    records = protocol::query_and_check(s.server(), id, target, only);
  } catch (const protocol::ProtocolError& e) {
    if (e.code() == protocol::ErrorCode::kTampered) s.persist();  // keep the quarantine
    throw;
  }
  s.persist();
  if (only && records.empty()) throw CliError(kIntegrity, "digest " + digest_hex + " is not anchored for " + target);

  const crypto::Sm4Key& key = target == id.name ? id.sigma : id.v.at(target);
  const fs::path out_dir = s.dir() / "query" / target;
  fs::create_directories(out_dir);
  for (const auto& r : records) {
    auto nd1 = protocol::decrypt_shared(r.ciphertext, key);
    const fs::path file = out_dir / (r.digest.hex() + "." + extension_for(nd1));
    const Bytes bytes = payload_of(nd1);
    std::ofstream(file, std::ios::binary).write(reinterpret_cast<const char*>(bytes.data()),
                                                static_cast<std::streamsize>(bytes.size()));
    std::cout << "record " << r.digest.hex() << ' ' << to_string(r.timestamp) << ' ' << file.string() << '\n';
  }
  std::cout << records.size() << " record(s) verified\n";
  return kOk;
}

int cmd_tamper(const GlobalOptions& g, const std::string& digest_hex, std::size_t pos, unsigned mask) {
  const fs::path path = g.state_dir / "cache.txt";
  if (!fs::exists(path)) throw CliError(kConfig, "no cache snapshot in " + g.state_dir.string());
  if (mask == 0 || mask > 0xff) throw CliError(kConfig, "--mask must be in [1, 255]");
  Digest32 d;
  try {
    d = Digest32::from_hex(digest_hex);
  } catch (const std::invalid_argument&) {
    throw CliError(kConfig, "digest must be 64 hex characters");
  }
  protocol::CiphertextCache cache;
  cache.load(path);
  if (!cache.tamper(d, pos, static_cast<std::uint8_t>(mask)))
    throw CliError(kConfig, "no cached entry " + digest_hex + " with byte " + std::to_string(pos));
  cache.save(path);
  std::cout << "flipped byte " << pos << " of " << digest_hex << '\n';
  return kOk;
}

// ---- replay packing ---------------------------------------------------------

struct PackArgs {
  std::string output;
  std::string topic;
  std::string type = "odometry";
  std::string file;
  std::string tag;
  std::size_t count = 1;
  bool append = false;
};

int cmd_pack(const GlobalOptions& g, const PackArgs& a) {
  const auto type = std::optional<bus::MessageType>(type_or_config(a.type));
  std::vector<bus::ReplayRecord> records;
  if (a.append && fs::exists(a.output)) records = bus::load_replay(a.output);
  const std::string topic = !a.topic.empty()                                ? a.topic
                            : *type == bus::MessageType::kOdometry        ? "/robot/odom"
                            : *type == bus::MessageType::kCompressedImage ? "/robot/CompressedImage"
                                                                          : "/robot/data";
  if (*type == bus::MessageType::kOdometry) {
    if (!a.file.empty()) throw CliError(kConfig, "odometry records are synthesized; --file is for image/generic");
    SeededRandom rng(effective_seed(g));
    std::uniform_real_distribution<double> u(-1, 1);
    auto& e = rng.engine();
    for (std::size_t i = 0; i < a.count; ++i) {
      bus::OdometryMsg m;
      m.lv = {u(e), u(e), u(e)};
      m.av = {u(e) * 0.1, u(e) * 0.1, u(e) * 0.1};
      m.pose[0] = static_cast<double>(i) * 0.1;
      for (std::size_t k = 0; k < 6; ++k) m.cov[k * 7] = 0.01;
      m.ts = {now_ms() / 1000 + i, 0};
      records.push_back({topic, *type, bus::encode_odometry(m)});
    }
  } else {
    if (a.file.empty()) throw CliError(kConfig, "--file is required for " + a.type);
    std::ifstream in(a.file, std::ios::binary);
    if (!in) throw CliError(kConfig, "cannot read " + a.file);
    Bytes data((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    for (std::size_t i = 0; i < a.count; ++i) {
      if (*type == bus::MessageType::kCompressedImage) {
        std::string tag = a.tag;
        if (tag.empty()) {
          tag = fs::path(a.file).extension().string();
          if (!tag.empty()) tag.erase(0, 1);
          if (tag.empty() || tag == "jpg") tag = "jpeg";
        }
        records.push_back({topic, *type, bus::encode_image({data, tag})});
      } else {
        records.push_back({topic, *type, data});
      }
    }
  }
  bus::save_replay(a.output, records);
  std::cout << "wrote " << records.size() << " record(s) to " << a.output << '\n';
  return kOk;
}

// ---- bench ------------------------------------------------------------------

struct BenchArgs {
  std::string experiment;
  std::size_t n = 300;
  std::size_t reps = 300;
  std::size_t warmup = 10;
  std::string size = "800k";
  std::string sizes = "1k,2k,4k,8k";
};

std::vector<ledger::ConsensusMode> bench_modes(const GlobalOptions& g) {
  if (g.consensus) return {parse_mode(*g.consensus)};
  return {ledger::ConsensusMode::kPoa, ledger::ConsensusMode::kPow};
}

int cmd_bench(const GlobalOptions& g, const BenchArgs& a) {
  static const std::set<std::string> kKnown = {"concurrency", "msgsize", "sm4", "sm3"};
  if (!kKnown.contains(a.experiment))
    throw CliError(kConfig, "unknown experiment '" + a.experiment + "' (concurrency, msgsize, sm4, sm3)");
  if (a.reps < 1) throw CliError(kConfig, "--reps must be >= 1");
  bench::ExperimentConfig base;
  base.difficulty = g.difficulty;
  base.seed = effective_seed(g);
  base.repetitions = a.reps;
  base.warmup = a.warmup;
  base.concurrency = a.n;
  const fs::path dir = g.state_dir / "bench";
  const fs::path csv = dir / (a.experiment + ".csv");
  fs::create_directories(dir);
  std::vector<bench::CsvRow> rows;
  std::vector<std::string> notes;

  if (a.experiment == "concurrency") {
    for (auto mode : bench_modes(g)) {
      auto cfg = base;
      cfg.consensus = mode;
      auto r = bench::run_concurrency_experiment(cfg);
      const std::string m = ledger::mode_name(mode);
      auto more = bench::rows_for("concurrency", m, std::to_string(cfg.concurrency), r);
      rows.insert(rows.end(), more.begin(), more.end());
      if (!r.latencies_ms.empty())
        bench::write_histogram(dir / ("concurrency_" + m + "_" + std::to_string(cfg.concurrency) + ".dat"),
                               r.latencies_ms);
      notes.push_back(m + " total_time_ms=" + std::to_string(r.total_time_ms) +
                      " success_rate=" + std::to_string(r.success_rate()));
      std::cout << m << " n=" << cfg.concurrency << " total_ms " << r.total_time_ms << " success "
                << r.success_count << '/' << cfg.concurrency << '\n';
    }
  } else if (a.experiment == "msgsize") {
    const auto sizes = parse_sizes(a.sizes);
    for (auto mode : bench_modes(g)) {
      auto cfg = base;
      cfg.consensus = mode;
      const std::string m = ledger::mode_name(mode);
      for (const auto& p : bench::run_message_size_experiment(cfg, sizes, a.reps)) {
        auto more = bench::rows_for("msgsize", m, std::to_string(p.size), p.run);
        rows.insert(rows.end(), more.begin(), more.end());
        bench::write_histogram(dir / ("msgsize_" + m + "_" + std::to_string(p.size) + ".dat"), p.run.latencies_ms);
        std::cout << m << " size=" << p.size << " mean_ms " << p.latency.mean << " success " << p.run.success_count
                  << '/' << a.reps << '\n';
      }
    }
  } else if (a.experiment == "sm4") {
    for (const auto& p : bench::run_sm4_timing(parse_sizes(a.sizes), a.reps, a.warmup, base.seed)) {
      auto enc = bench::rows_for("sm4_encrypt", std::to_string(p.size), p.enc_ms);
      auto dec = bench::rows_for("sm4_decrypt", std::to_string(p.size), p.dec_ms);
      rows.insert(rows.end(), enc.begin(), enc.end());
      rows.insert(rows.end(), dec.begin(), dec.end());
      bench::write_histogram(dir / ("sm4_encrypt_" + std::to_string(p.size) + ".dat"), p.enc_ms);
      bench::write_histogram(dir / ("sm4_decrypt_" + std::to_string(p.size) + ".dat"), p.dec_ms);
      std::cout << "size=" << p.size << " enc_mean_ms " << p.enc.mean << " cov " << p.enc.cov() << " dec_mean_ms "
                << p.dec.mean << " cov " << p.dec.cov() << '\n';
    }
    notes.push_back(std::to_string(a.warmup) + " warm-up repetitions per size discarded");
  } else {
    const std::size_t size = parse_size(a.size);
    auto t = bench::run_sm3_timing(size, a.reps, a.warmup, base.seed);
    rows = bench::rows_for("sm3", std::to_string(size), t.samples_ms);
    bench::write_histogram(dir / ("sm3_" + std::to_string(size) + ".dat"), t.samples_ms);
    notes.push_back(std::to_string(a.warmup) + " warm-up repetitions discarded");
    notes.push_back("digest " + t.digest.hex() + (t.digests_identical ? " identical" : " VARIED") +
                    " across repetitions");
    notes.push_back("reference band for an 800 KiB payload: 6.19-6.34 ms");
    std::cout << "size=" << size << " mean_ms " << t.stats.mean << " min " << t.stats.min << " max " << t.stats.max
              << " spread " << t.stats.spread() << '\n';
  }
  bench::write_csv(csv, rows);
  bench::write_config_sidecar(csv, base, a.experiment, notes);
  std::cout << "csv " << csv.string() << " rows " << rows.size() << '\n';
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"authros: authenticated robot data sharing over a simulated consortium ledger"};
  app.require_subcommand(1);
  GlobalOptions g;
  std::string state_dir = g.state_dir.string();
  std::string genesis_path, consensus;
  app.add_option("--out", state_dir, "State and output directory")->capture_default_str();
  app.add_option("--genesis", genesis_path, "Genesis JSON file");
  app.add_option("--consensus", consensus, "pow or poa")->check(CLI::IsMember({"pow", "poa"}));
  app.add_option("--difficulty", g.difficulty, "PoW difficulty for generated genesis and benches")
      ->capture_default_str();
  app.add_option("--seed", g.seed, "Simulation seed (AUTHROS_SIM_SEED overrides)")->capture_default_str();

  GenesisArgs ga;
  auto* genesis_cmd = app.add_subcommand("genesis", "Write a default genesis into the state directory");
  genesis_cmd->add_option("--nodes", ga.nodes, "Node count")->capture_default_str();
  genesis_cmd->add_option("--key-seed", ga.key_seed, "Node key seed")->capture_default_str();
  genesis_cmd->add_flag("--print", ga.print_only, "Print instead of writing");

  std::size_t heartbeat = 1;
  auto* init_cmd = app.add_subcommand("init-net", "Bring up the network, replay the stored chain and probe it");
  init_cmd->add_option("--heartbeat", heartbeat, "Probe transactions to submit")->capture_default_str();

  std::string name, passphrase, credential;
  auto* reg_cmd = app.add_subcommand("register", "Allocate keys and register an identity");
  reg_cmd->add_option("name", name)->required();
  reg_cmd->add_option("--passphrase", passphrase, "Keystore passphrase (or AUTHROS_PASSPHRASE)");
  reg_cmd->add_option("--credential", credential, "Login credential t_i (random when omitted)");

  MonitorArgs ma;
  auto* mon_cmd = app.add_subcommand("monitor", "Capture a topic and share every message");
  mon_cmd->add_option("name", ma.name)->required();
  mon_cmd->add_option("--replay", ma.replay, "Replay file to publish");
  mon_cmd->add_option("--topic", ma.topic, "Topic to monitor (default: first record's)");
  mon_cmd->add_option("--type", ma.type, "odometry, image or generic (default: from the replay)");
  mon_cmd->add_option("--passphrase", ma.passphrase, "Keystore passphrase");

  std::string granter, grantee;
  auto* grant_cmd = app.add_subcommand("grant", "Grant a user read access to your records");
  grant_cmd->add_option("granter", granter)->required();
  grant_cmd->add_option("grantee", grantee)->required();
  grant_cmd->add_option("--passphrase", passphrase, "Granter's keystore passphrase");

  std::string requester, target, digest;
  auto* query_cmd = app.add_subcommand("query", "Fetch, verify and decrypt a user's records");
  query_cmd->add_option("requester", requester)->required();
  query_cmd->add_option("target", target)->required();
  query_cmd->add_option("--digest", digest, "Only this record");
  query_cmd->add_option("--passphrase", passphrase, "Requester's keystore passphrase");

  std::size_t pos = 0;
  unsigned mask = 1;
  auto* tamper_cmd = app.add_subcommand("tamper", "Test hook: flip bits of a cached ciphertext");
  tamper_cmd->add_option("digest", digest)->required();
  tamper_cmd->add_option("--pos", pos, "Byte offset")->capture_default_str();
  tamper_cmd->add_option("--mask", mask, "XOR mask")->capture_default_str();

  PackArgs pa;
  auto* pack_cmd = app.add_subcommand("pack", "Build a replay file");
  pack_cmd->add_option("output", pa.output)->required();
  pack_cmd->add_option("--type", pa.type, "odometry, image or generic")->capture_default_str();
  pack_cmd->add_option("--topic", pa.topic);
  pack_cmd->add_option("--file", pa.file, "Payload file (image/generic)");
  pack_cmd->add_option("--tag", pa.tag, "Image format tag");
  pack_cmd->add_option("--count", pa.count, "Records to add")->capture_default_str();
  pack_cmd->add_flag("--append", pa.append, "Append to an existing file");

  BenchArgs ba;
  auto* bench_cmd = app.add_subcommand("bench", "Run a benchmark and write CSV under <out>/bench");
  bench_cmd->add_option("experiment", ba.experiment, "concurrency, msgsize, sm4 or sm3")->required();
  bench_cmd->add_option("--n", ba.n, "Concurrent submitters")->capture_default_str();
  bench_cmd->add_option("--reps", ba.reps, "Repetitions (calls per size for msgsize)")->capture_default_str();
  bench_cmd->add_option("--warmup", ba.warmup, "Discarded warm-up repetitions")->capture_default_str();
  bench_cmd->add_option("--size", ba.size, "SM3 payload size")->capture_default_str();
  bench_cmd->add_option("--sizes", ba.sizes, "Comma-separated sizes for msgsize and sm4")->capture_default_str();

  for (auto* sub : app.get_subcommands([](const CLI::App*) { return true; })) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kConfig;
  }

  g.state_dir = state_dir;
  if (!genesis_path.empty()) g.genesis = genesis_path;
  if (!consensus.empty()) g.consensus = consensus;

  try {
    if (*genesis_cmd) return cmd_genesis(g, ga);
    if (*init_cmd) return cmd_init_net(g, heartbeat);
    if (*reg_cmd) return cmd_register(g, name, passphrase, credential);
    if (*mon_cmd) return cmd_monitor(g, ma);
    if (*grant_cmd) return cmd_grant(g, granter, grantee, passphrase);
    if (*query_cmd) return cmd_query(g, requester, target, digest, passphrase);
    if (*tamper_cmd) return cmd_tamper(g, digest, pos, mask);
    if (*pack_cmd) return cmd_pack(g, pa);
    if (*bench_cmd) return cmd_bench(g, ba);
  } catch (const CliError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return e.code();
  } catch (const protocol::ProtocolError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_code_for(e.code());
  } catch (const bench::BenchError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kConfig;
  } catch (const bus::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kConfig;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInternal;
  }
  return kInternal;
}
