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

#include "authros/kernels.hpp"

namespace authros::kernels {

std::vector<std::uint8_t> verify_batch_serial(std::span<const SignatureJob> jobs) {
  std::vector<std::uint8_t> ok(jobs.size());
  for (std::size_t i = 0; i < jobs.size(); ++i) {
    const auto& j = jobs[i];
    ok[i] = crypto::sm2_verify(*j.public_key, j.identity, j.message, *j.signature) ? 1 : 0;
  }
  return ok;
}

std::vector<std::uint8_t> verify_batch_omp(std::span<const SignatureJob> jobs) {
  std::vector<std::uint8_t> ok(jobs.size());
  const auto n = static_cast<std::int64_t>(jobs.size());
#pragma omp parallel for schedule(dynamic, 8) if (n > 16)
  for (std::int64_t i = 0; i < n; ++i) {
    const auto& j = jobs[static_cast<std::size_t>(i)];
    ok[static_cast<std::size_t>(i)] = crypto::sm2_verify(*j.public_key, j.identity, j.message, *j.signature) ? 1 : 0;
  }
  return ok;
}

}  // namespace authros::kernels
