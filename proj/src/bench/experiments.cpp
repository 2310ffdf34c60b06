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

#include "authros/bench/experiments.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <latch>
#include <numeric>
#include <thread>

#include "authros/crypto/sm3.hpp"
#include "authros/crypto/sm4.hpp"
#include "authros/ledger/network.hpp"

namespace authros::bench {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0, Clock::time_point t1) {
  return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

Bytes bench_token(std::size_t i) { return to_bytes("bench-token-" + std::to_string(i)); }

Bytes payload(SeededRandom& rng, std::size_t size) {
  Bytes b(size);
  rng.fill(b);
  return b;
}

struct RunningNetwork {
  explicit RunningNetwork(const ExperimentConfig& cfg) : net(experiment_genesis(cfg), cfg.seed) { net.start(); }
  ~RunningNetwork() { net.stop(); }
  ledger::Network net;
};

void register_all(ledger::Network& net, const Schedule& s) {
  std::vector<ledger::PendingReceipt> pending;
  for (std::size_t i = 0; i < s.registrations.size(); ++i)
    pending.push_back(net.submit(s.home_nodes[i], s.registrations[i]));
  for (auto& p : pending) {
    auto r = p.wait(net.receipt_timeout() * 10);
    if (r.status != ledger::ReceiptStatus::kIncluded || !r.receipt.success)
      throw BenchError(std::string("registration not included: ") + ledger::status_name(r.status) + " " + r.reason);
  }
  if (!net.settle(net.receipt_timeout())) throw BenchError("network did not settle after registration");
}

}  // namespace

void ExperimentConfig::validate() const {
  if (repetitions < 1) throw BenchError("repetitions must be >= 1");
  if (difficulty < 1) throw BenchError("difficulty must be >= 1");
  if (message_size < 1) throw BenchError("message size must be >= 1");
}

double RunResult::success_rate() const {
  const std::size_t n = success_count + failure_count;
  return n == 0 ? 1.0 : static_cast<double>(success_count) / static_cast<double>(n);
}

Summary summarize(const std::vector<double>& samples) {
  Summary s;
  s.n = samples.size();
  if (s.n == 0) return s;
  std::vector<double> sorted = samples;
  std::ranges::sort(sorted);
  s.min = sorted.front();
  s.max = sorted.back();
  s.mean = std::accumulate(sorted.begin(), sorted.end(), 0.0) / static_cast<double>(s.n);
  s.median = s.n % 2 ? sorted[s.n / 2] : (sorted[s.n / 2 - 1] + sorted[s.n / 2]) / 2;
  double ss = 0;
  for (double v : sorted) ss += (v - s.mean) * (v - s.mean);
  s.stddev = s.n > 1 ? std::sqrt(ss / static_cast<double>(s.n - 1)) : 0;
  return s;
}

double ls_slope(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size() || x.size() < 2) throw BenchError("slope needs two or more points");
  const double n = static_cast<double>(x.size());
  const double mx = std::accumulate(x.begin(), x.end(), 0.0) / n;
  const double my = std::accumulate(y.begin(), y.end(), 0.0) / n;
  double num = 0, den = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    num += (x[i] - mx) * (y[i] - my);
    den += (x[i] - mx) * (x[i] - mx);
  }
  return num / den;
}

Digest32 Schedule::fingerprint() const {
  crypto::Sm3 h;
  for (const auto& tx : registrations) h.update(tx.hash().view());
  for (const auto& tx : uploads) h.update(tx.hash().view());
  return h.finish();
}

ledger::Genesis experiment_genesis(const ExperimentConfig& cfg) {
  auto g = ledger::make_genesis(cfg.consensus, cfg.difficulty, 3, cfg.seed);
  if (cfg.link) g.link = *cfg.link;
  return g;
}

Schedule concurrency_schedule(const ExperimentConfig& cfg) {
  SeededRandom rng(cfg.seed ^ 0xc0ffee);
  Schedule s;
  for (std::size_t i = 0; i < cfg.concurrency; ++i) {
    s.accounts.push_back(crypto::sm2_keygen(rng));
    s.home_nodes.push_back(1 + i % 2);
    s.registrations.push_back(ledger::make_transaction(s.accounts[i], 0, ledger::RegisterCall{bench_token(i)}, i, rng));
  }
  for (std::size_t i = 0; i < cfg.concurrency; ++i) {
    ledger::DataUploadCall call{payload(rng, cfg.message_size), bench_token(i), to_bytes(std::to_string(i))};
    s.uploads.push_back(ledger::make_transaction(s.accounts[i], 1, std::move(call), cfg.concurrency + i, rng));
  }
  return s;
}

Schedule message_size_schedule(const ExperimentConfig& cfg, std::size_t calls) {
  SeededRandom rng(cfg.seed ^ 0x5eed ^ cfg.message_size);
  Schedule s;
  s.accounts.push_back(crypto::sm2_keygen(rng));
  s.home_nodes.push_back(1);
  s.registrations.push_back(ledger::make_transaction(s.accounts[0], 0, ledger::RegisterCall{bench_token(0)}, 0, rng));
  for (std::size_t i = 0; i < calls; ++i) {
    ledger::DataUploadCall call{payload(rng, cfg.message_size), bench_token(0), to_bytes(std::to_string(i))};
    s.uploads.push_back(ledger::make_transaction(s.accounts[0], i + 1, std::move(call), i + 1, rng));
  }
  return s;
}

RunResult run_concurrency_experiment(const ExperimentConfig& cfg) {
  cfg.validate();
  RunResult out;
  if (cfg.concurrency == 0) return out;
  const Schedule s = concurrency_schedule(cfg);
  RunningNetwork rn(cfg);
  auto& net = rn.net;
  register_all(net, s);
  if (!net.running()) throw BenchError("network down");

  const std::size_t n = s.uploads.size();
  std::vector<double> latency(n, 0);
  std::vector<Clock::time_point> done(n);
  std::vector<char> ok(n, 0);
  std::latch ready(static_cast<std::ptrdiff_t>(n) + 1);
  std::latch go(1);
  std::vector<std::thread> workers;
  workers.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    workers.emplace_back([&, i] {
      ready.count_down();
      go.wait();
      const auto t0 = Clock::now();
      auto r = net.submit(s.home_nodes[i], s.uploads[i]).wait(net.receipt_timeout());
      done[i] = Clock::now();
      latency[i] = ms_since(t0, done[i]);
      ok[i] = r.status == ledger::ReceiptStatus::kIncluded && r.receipt.success;
    });
  }
  ready.arrive_and_wait();
  const auto release = Clock::now();
  go.count_down();
  for (auto& w : workers) w.join();

  out.latencies_ms = latency;
  for (std::size_t i = 0; i < n; ++i) {
    out.succeeded.push_back(ok[i] != 0);
    (ok[i] ? out.success_count : out.failure_count)++;
    out.total_time_ms = std::max(out.total_time_ms, ms_since(release, done[i]));
  }
  return out;
}

std::vector<SizePoint> run_message_size_experiment(const ExperimentConfig& base, const std::vector<std::size_t>& sizes,
                                                   std::size_t calls) {
  std::vector<SizePoint> out;
  for (std::size_t size : sizes) {
    ExperimentConfig cfg = base;
    cfg.message_size = size;
    cfg.validate();
    const Schedule s = message_size_schedule(cfg, calls);
    RunningNetwork rn(cfg);
    auto& net = rn.net;
    register_all(net, s);
    SizePoint p;
    p.size = size;
    for (const auto& tx : s.uploads) {
      const auto t0 = Clock::now();
      auto r = net.submit(s.home_nodes[0], tx).wait(net.receipt_timeout());
      const bool ok = r.status == ledger::ReceiptStatus::kIncluded && r.receipt.success;
      p.run.latencies_ms.push_back(ms_since(t0, Clock::now()));
      p.run.succeeded.push_back(ok);
      (ok ? p.run.success_count : p.run.failure_count)++;
      p.run.total_time_ms += p.run.latencies_ms.back();
    }
    p.latency = summarize(p.run.latencies_ms);
    out.push_back(std::move(p));
  }
  return out;
}

std::vector<Sm4Point> run_sm4_timing(const std::vector<std::size_t>& sizes, std::size_t reps, std::size_t warmup,
                                     std::uint64_t seed) {
  if (reps < 1) throw BenchError("repetitions must be >= 1");
  SeededRandom rng(seed);
  std::vector<Sm4Point> out;
  for (std::size_t size : sizes) {
    crypto::Sm4Key key;
    crypto::Sm4Iv iv;
    rng.fill(key.bytes);
    rng.fill(iv.bytes);
    const Bytes plain = payload(rng, size);
    Sm4Point p;
    p.size = size;
    for (std::size_t i = 0; i < warmup + reps; ++i) {
      auto t0 = Clock::now();
      Bytes ct = crypto::sm4_cbc_encrypt(key, plain, iv);
      auto t1 = Clock::now();
      Bytes back = crypto::sm4_cbc_decrypt(key, ct, iv);
      auto t2 = Clock::now();
      if (back != plain) throw BenchError("sm4 round trip failed");
      if (i < warmup) continue;
      p.enc_ms.push_back(ms_since(t0, t1));
      p.dec_ms.push_back(ms_since(t1, t2));
    }
    p.enc = summarize(p.enc_ms);
    p.dec = summarize(p.dec_ms);
    out.push_back(std::move(p));
  }
  return out;
}

Sm3Timing run_sm3_timing(std::size_t payload_size, std::size_t reps, std::size_t warmup, std::uint64_t seed) {
  if (reps < 1) throw BenchError("repetitions must be >= 1");
  SeededRandom rng(seed);
  const Bytes data = payload(rng, payload_size);
  Sm3Timing out;
  for (std::size_t i = 0; i < warmup + reps; ++i) {
    auto t0 = Clock::now();
    Digest32 d = crypto::sm3_hash(data);
    auto t1 = Clock::now();
    if (i == 0) out.digest = d;
    if (d != out.digest) out.digests_identical = false;
    if (i >= warmup) out.samples_ms.push_back(ms_since(t0, t1));
  }
  out.stats = summarize(out.samples_ms);
  return out;
}

}  // namespace authros::bench
