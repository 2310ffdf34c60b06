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

#include "authros/bytes.hpp"

namespace authros::crypto {

/// Original Keccak-256 (0x01 domain padding), as used for Ethereum account
/// addresses; not FIPS-202 SHA3-256.
Digest32 keccak256(ByteView message);

}  // namespace authros::crypto
