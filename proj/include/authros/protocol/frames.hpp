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
#include <string>
#include <variant>

#include "authros/bus/messages.hpp"
#include "authros/crypto/sm2.hpp"

namespace authros::protocol {

enum class Command : std::uint8_t { kUpload = 0x01, kGrant = 0x02, kQuery = 0x03, kKeyAlloc = 0x04 };

// Throws DecodeError for bytes outside the four command codes.
Command command_from_byte(std::uint8_t b);

/// Innermost plaintext. Odometry is laid out as fields lv, av, pose, ts,
/// cov, type; images as payload, format tag, type; generic bytes as
/// payload, type. Every field is length-prefixed.
using Nd1 = std::variant<bus::OdometryMsg, bus::ImageMsg, Bytes>;

bus::MessageType nd1_type(const Nd1& nd1);
Bytes encode_nd1(const Nd1& nd1);
// Throws DecodeError if the layout does not match the declared type.
Nd1 decode_nd1(ByteView bytes);

/// Middle frame: {ct1, type, t, T, command, (r,s)}.
struct Nd2 {
  Bytes ct1;
  bus::MessageType type = bus::MessageType::kGeneric;
  Bytes credential;   // t_i
  std::uint64_t capture_ms = 0;  // T, carried as decimal ASCII
  Command command = Command::kUpload;
  crypto::Sm2Signature sig;

  Bytes encode() const;
  static Nd2 decode(ByteView bytes);
};

/// Outer frame: {ct2, N}.
struct Nd3 {
  Bytes ct2;
  std::string name;

  Bytes encode() const;
  static Nd3 decode(ByteView bytes);
};

Bytes timestamp_ascii(std::uint64_t millis);
std::uint64_t parse_timestamp_ascii(ByteView ascii);  // throws DecodeError

}  // namespace authros::protocol
