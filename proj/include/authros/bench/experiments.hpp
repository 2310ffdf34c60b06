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
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "authros/ledger/genesis.hpp"

namespace authros::bench {

class BenchError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr std::uint64_t kReferenceDifficulty = 0x4cccc8;

struct ExperimentConfig {
  ledger::ConsensusMode consensus = ledger::ConsensusMode::kPoa;
  std::size_t concurrency = 300;
  std::size_t message_size = 1024;
  std::size_t repetitions = 300;
  std::size_t warmup = 10;  // timing runs only
  std::uint64_t difficulty = 1ULL << 16;
  std::uint64_t seed = 1;
  std::optional<ledger::LinkModel> link;  // default: the genesis default

  void validate() const;
};

struct RunResult {
  double total_time_ms = 0;
  std::size_t success_count = 0;
  std::size_t failure_count = 0;
  std::vector<double> latencies_ms;
  std::vector<bool> succeeded;

  // 1 for an empty run.
  double success_rate() const;
};

struct Summary {
  std::size_t n = 0;
  double mean = 0, median = 0, stddev = 0, min = 0, max = 0;

  double cov() const { return mean > 0 ? stddev / mean : 0; }
  double spread() const { return mean > 0 ? (max - min) / mean : 0; }
};

Summary summarize(const std::vector<double>& samples);

// Least-squares slope of y over x.
double ls_slope(const std::vector<double>& x, const std::vector<double>& y);

/// Transactions a run will submit, fixed by the seed. Signing entropy is
/// seeded too, so the same seed gives byte-identical transactions.
struct Schedule {
  std::vector<crypto::Sm2KeyPair> accounts;
  std::vector<std::size_t> home_nodes;  // per account
  std::vector<ledger::Transaction> registrations;
  std::vector<ledger::Transaction> uploads;  // uploads[i] is sent by accounts[i % accounts.size()]

  Digest32 fingerprint() const;  // sm3 over every tx hash in order
};

// One account per submitter, homes alternating over nodes 1 and 2, one
// upload each.
Schedule concurrency_schedule(const ExperimentConfig& cfg);
// One account on node 1 making `calls` sequential uploads.
Schedule message_size_schedule(const ExperimentConfig& cfg, std::size_t calls);

ledger::Genesis experiment_genesis(const ExperimentConfig& cfg);

// Registrations are untimed; then every submitter fires its upload at once
// and waits up to the receipt timeout. total_time runs from the release to
// the last completion.
RunResult run_concurrency_experiment(const ExperimentConfig& cfg);

struct SizePoint {
  std::size_t size = 0;
  RunResult run;
  Summary latency;
};

// Sequential uploads from one account, a fresh network per size.
std::vector<SizePoint> run_message_size_experiment(const ExperimentConfig& cfg, const std::vector<std::size_t>& sizes,
                                                   std::size_t calls);

struct Sm4Point {
  std::size_t size = 0;
  std::vector<double> enc_ms, dec_ms;
  Summary enc, dec;
};

std::vector<Sm4Point> run_sm4_timing(const std::vector<std::size_t>& sizes, std::size_t reps, std::size_t warmup,
                                     std::uint64_t seed);

struct Sm3Timing {
  std::vector<double> samples_ms;
  Summary stats;
  Digest32 digest;
  bool digests_identical = true;
};

Sm3Timing run_sm3_timing(std::size_t payload_size, std::size_t reps, std::size_t warmup, std::uint64_t seed);

}  // namespace authros::bench
