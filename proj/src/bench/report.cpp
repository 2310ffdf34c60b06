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

#include "authros/bench/report.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <nlohmann/json.hpp>
#include <sstream>
#include <thread>

namespace authros::bench {

void write_csv(std::ostream& out, const std::vector<CsvRow>& rows) {
  out << kCsvHeader << '\n';
  out << std::setprecision(9);
  for (const auto& r : rows)
    out << r.experiment << ',' << r.consensus << ',' << r.param << ',' << r.rep << ',' << r.value_ms << ','
        << (r.success ? 1 : 0) << '\n';
}

void write_csv(const std::filesystem::path& path, const std::vector<CsvRow>& rows) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path);
  if (!out) throw BenchError("cannot write " + path.string());
  write_csv(out, rows);
}

std::vector<CsvRow> read_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw BenchError("cannot open " + path.string());
  std::string line;
  if (!std::getline(in, line) || line != kCsvHeader) throw BenchError("bad csv header in " + path.string());
  std::vector<CsvRow> rows;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream ss(line);
    CsvRow r;
    std::string rep, value, ok;
    if (!std::getline(ss, r.experiment, ',') || !std::getline(ss, r.consensus, ',') ||
        !std::getline(ss, r.param, ',') || !std::getline(ss, rep, ',') || !std::getline(ss, value, ',') ||
        !std::getline(ss, ok))
      throw BenchError("bad csv row: " + line);
    r.rep = std::stoull(rep);
    r.value_ms = std::stod(value);
    r.success = ok == "1";
    rows.push_back(std::move(r));
  }
  return rows;
}

std::vector<CsvRow> rows_for(const std::string& experiment, const std::string& consensus, const std::string& param,
                             const RunResult& run) {
  std::vector<CsvRow> rows;
  for (std::size_t i = 0; i < run.latencies_ms.size(); ++i)
    rows.push_back({experiment, consensus, param, i, run.latencies_ms[i], run.succeeded[i]});
  return rows;
}

std::vector<CsvRow> rows_for(const std::string& experiment, const std::string& param,
                             const std::vector<double>& samples_ms) {
  std::vector<CsvRow> rows;
  for (std::size_t i = 0; i < samples_ms.size(); ++i) rows.push_back({experiment, "-", param, i, samples_ms[i], true});
  return rows;
}

void write_config_sidecar(const std::filesystem::path& csv_path, const ExperimentConfig& cfg,
                          const std::string& experiment, const std::vector<std::string>& notes) {
  const auto g = experiment_genesis(cfg);
  nlohmann::json j;
  j["experiment"] = experiment;
  j["consensus"] = ledger::mode_name(cfg.consensus);
  j["concurrency"] = cfg.concurrency;
  j["message_size"] = cfg.message_size;
  j["repetitions"] = cfg.repetitions;
  j["warmup_discarded"] = cfg.warmup;
  j["seed"] = cfg.seed;
  j["difficulty"] = cfg.difficulty;
  j["reference_difficulty"] = kReferenceDifficulty;
  j["difficulty_deviates"] = cfg.difficulty != kReferenceDifficulty;
  j["block_interval_ms"] = g.consensus.target_block_interval_ms;
  j["receipt_timeout_ms"] = 10 * g.consensus.target_block_interval_ms;
  j["link"] = {{"base_ms", g.link.base_ms}, {"per_kib_ms", g.link.per_kib_ms}};
  j["node_count"] = g.consensus.node_count;
  j["hardware_threads"] = std::thread::hardware_concurrency();
  j["notes"] = notes;
  std::ofstream out(csv_path.string() + ".json");
  if (!out) throw BenchError("cannot write config sidecar for " + csv_path.string());
  out << j.dump(2) << '\n';
}

void write_histogram(const std::filesystem::path& path, const std::vector<double>& samples, std::size_t bins) {
  if (samples.empty() || bins == 0) throw BenchError("histogram needs samples and bins");
  auto [lo_it, hi_it] = std::ranges::minmax_element(samples);
  const double lo = *lo_it;
  const double width = (*hi_it - lo) > 0 ? (*hi_it - lo) / static_cast<double>(bins) : 1.0;
  std::vector<std::size_t> count(bins, 0);
  for (double v : samples) count[std::min(bins - 1, static_cast<std::size_t>((v - lo) / width))]++;
  std::ofstream out(path);
  if (!out) throw BenchError("cannot write " + path.string());
  out << "# bin_center_ms count frequency\n" << std::setprecision(9);
  for (std::size_t b = 0; b < bins; ++b)
    out << lo + (static_cast<double>(b) + 0.5) * width << ' ' << count[b] << ' '
        << static_cast<double>(count[b]) / static_cast<double>(samples.size()) << '\n';
}

}  // namespace authros::bench
