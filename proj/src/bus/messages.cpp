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

#include "authros/bus/messages.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>

namespace authros::bus {

Timestamp wall_clock_now() {
  auto ns = std::chrono::duration_cast<std::chrono::nanoseconds>(
                std::chrono::system_clock::now().time_since_epoch())
                .count();
  return {static_cast<std::uint64_t>(ns / 1000000000), static_cast<std::uint64_t>(ns % 1000000000)};
}

const char* type_name(MessageType t) {
  switch (t) {
    case MessageType::kOdometry:
      return "odometry";
    case MessageType::kCompressedImage:
      return "image";
    case MessageType::kGeneric:
      return "generic";
  }
  return "?";
}

MessageType parse_type_name(std::string_view name) {
  if (name == "odometry") return MessageType::kOdometry;
  if (name == "image") return MessageType::kCompressedImage;
  if (name == "generic") return MessageType::kGeneric;
  throw ParseError("unknown message type '" + std::string(name) + "'");
}

bool OdometryMsg::valid() const {
  double n2 = 0;
  for (int i = 3; i < 7; ++i) n2 += pose[i] * pose[i];
  if (!(std::abs(std::sqrt(n2) - 1.0) <= 1e-6)) return false;
  for (int r = 0; r < 6; ++r)
    for (int c = r + 1; c < 6; ++c)
      if (!(std::abs(cov[r * 6 + c] - cov[c * 6 + r]) <= 1e-9)) return false;
  return true;
}

Bytes encode_odometry(const OdometryMsg& msg) {
  Bytes out;
  out.reserve(kOdometrySize);
  append(out, as_bytes(kOdometryMagic));
  for (double v : msg.lv) append_f64_le(out, v);
  for (double v : msg.av) append_f64_le(out, v);
  for (double v : msg.pose) append_f64_le(out, v);
  for (double v : msg.cov) append_f64_le(out, v);
  append_u64_le(out, msg.ts.sec);
  append_u64_le(out, msg.ts.nsec);
  return out;
}

OdometryMsg parse_odometry(ByteView raw) {
  if (raw.size() != kOdometrySize)
    throw ParseError("odometry must be " + std::to_string(kOdometrySize) + " bytes, got " +
                     std::to_string(raw.size()));
  ByteReader r(raw);
  if (!std::ranges::equal(r.take(8), as_bytes(kOdometryMagic))) throw ParseError("bad odometry magic");
  OdometryMsg m;
  for (double& v : m.lv) v = r.f64_le();
  for (double& v : m.av) v = r.f64_le();
  for (double& v : m.pose) v = r.f64_le();
  for (double& v : m.cov) v = r.f64_le();
  m.ts.sec = r.u64_le();
  m.ts.nsec = r.u64_le();
  if (m.ts.nsec >= 1000000000) throw ParseError("odometry nanoseconds out of range");
  if (!m.valid()) throw ParseError("odometry violates quaternion or covariance invariants");
  return m;
}

Bytes encode_image(const ImageMsg& msg) {
  if (msg.payload.empty()) throw ParseError("image payload must be non-empty");
  if (msg.format_tag.size() > 255) throw ParseError("image format tag too long");
  Bytes out;
  out.reserve(kImageMagic.size() + 1 + msg.format_tag.size() + msg.payload.size());
  append(out, as_bytes(kImageMagic));
  out.push_back(static_cast<std::uint8_t>(msg.format_tag.size()));
  append(out, as_bytes(msg.format_tag));
  append(out, msg.payload);
  return out;
}

ImageMsg parse_image(ByteView raw) {
  try {
    ByteReader r(raw);
    if (!std::ranges::equal(r.take(8), as_bytes(kImageMagic))) throw ParseError("bad image magic");
    ImageMsg m;
    m.format_tag = to_string(r.take(r.u8()));
    auto rest = r.take(r.remaining());
    if (rest.empty()) throw ParseError("image payload must be non-empty");
    m.payload.assign(rest.begin(), rest.end());
    return m;
  } catch (const DecodeError& e) {
    throw ParseError(std::string("truncated image: ") + e.what());
  }
}

}  // namespace authros::bus
