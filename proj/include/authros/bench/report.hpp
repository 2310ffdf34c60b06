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

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "authros/bench/experiments.hpp"

namespace authros::bench {

struct CsvRow {
  std::string experiment;
  std::string consensus;  // "pow", "poa" or "-"
  std::string param;
  std::size_t rep = 0;
  double value_ms = 0;
  bool success = true;
};

inline constexpr const char* kCsvHeader = "experiment,consensus,param,rep,value_ms,success";

void write_csv(std::ostream& out, const std::vector<CsvRow>& rows);
void write_csv(const std::filesystem::path& path, const std::vector<CsvRow>& rows);
std::vector<CsvRow> read_csv(const std::filesystem::path& path);

std::vector<CsvRow> rows_for(const std::string& experiment, const std::string& consensus, const std::string& param,
                             const RunResult& run);
std::vector<CsvRow> rows_for(const std::string& experiment, const std::string& param,
                             const std::vector<double>& samples_ms);

// "<csv>.json": the exact config, the difficulty used next to the reference one,
// plus free-form notes (warm-up discarded, reference timings).
void write_config_sidecar(const std::filesystem::path& csv_path, const ExperimentConfig& cfg,
                          const std::string& experiment, const std::vector<std::string>& notes);

// Gnuplot-ready histogram: "bin_center count frequency" per line.
void write_histogram(const std::filesystem::path& path, const std::vector<double>& samples, std::size_t bins = 20);

}  // namespace authros::bench
