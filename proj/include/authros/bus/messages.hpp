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

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include "authros/bytes.hpp"

namespace authros::bus {

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Timestamp {
  std::uint64_t sec = 0;
  std::uint64_t nsec = 0;

  auto operator<=>(const Timestamp&) const = default;
  std::uint64_t millis() const { return sec * 1000 + nsec / 1000000; }
};

Timestamp wall_clock_now();

enum class MessageType : std::uint8_t { kOdometry = 1, kCompressedImage = 2, kGeneric = 3 };

const char* type_name(MessageType t);
MessageType parse_type_name(std::string_view name);  // throws ParseError

/// Odometry sample. Pose is position xyz (m) then orientation wxyz;
/// covariance is a row-major 6x6 matrix.
struct OdometryMsg {
  std::array<double, 3> lv{};
  std::array<double, 3> av{};
  std::array<double, 7> pose{0, 0, 0, 1, 0, 0, 0};
  std::array<double, 36> cov{};
  Timestamp ts;

  bool operator==(const OdometryMsg&) const = default;
  // Quaternion norm within 1e-6 of one, covariance symmetric within 1e-9.
  bool valid() const;
};

inline constexpr std::string_view kOdometryMagic = "AROSODOM";
inline constexpr std::size_t kOdometrySize = 8 + 49 * 8 + 16;

Bytes encode_odometry(const OdometryMsg& msg);
// Throws ParseError on wrong length, bad magic or violated invariants.
OdometryMsg parse_odometry(ByteView raw);

struct ImageMsg {
  Bytes payload;
  std::string format_tag = "jpeg";

  bool operator==(const ImageMsg&) const = default;
};

inline constexpr std::string_view kImageMagic = "AROSIMG1";

Bytes encode_image(const ImageMsg& msg);
ImageMsg parse_image(ByteView raw);

}  // namespace authros::bus
