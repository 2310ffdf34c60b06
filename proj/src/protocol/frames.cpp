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

#include "authros/protocol/frames.hpp"

#include <charconv>
#include <vector>

namespace authros::protocol {

namespace {

std::vector<ByteView> read_fields(ByteView bytes) {
  ByteReader r(bytes);
  std::vector<ByteView> out;
  while (!r.done()) out.push_back(r.field());
  return out;
}

void append_doubles(Bytes& out, const double* v, std::size_t n) {
  Bytes f;
  for (std::size_t i = 0; i < n; ++i) append_f64_le(f, v[i]);
  append_field(out, f);
}

template <std::size_t N>
void read_doubles(ByteView field, std::array<double, N>& dst) {
  if (field.size() != N * 8) throw DecodeError("nd1 field has wrong width");
  ByteReader r(field);
  for (double& v : dst) v = r.f64_le();
}

}  // namespace

Command command_from_byte(std::uint8_t b) {
  if (b < 0x01 || b > 0x04) throw DecodeError("unknown command code");
  return static_cast<Command>(b);
}

bus::MessageType nd1_type(const Nd1& nd1) {
  switch (nd1.index()) {
    case 0:
      return bus::MessageType::kOdometry;
    case 1:
      return bus::MessageType::kCompressedImage;
    default:
      return bus::MessageType::kGeneric;
  }
}

Bytes encode_nd1(const Nd1& nd1) {
  Bytes out;
  if (const auto* o = std::get_if<bus::OdometryMsg>(&nd1)) {
    append_doubles(out, o->lv.data(), 3);
    append_doubles(out, o->av.data(), 3);
    append_doubles(out, o->pose.data(), 7);
    Bytes ts;
    append_u64_le(ts, o->ts.sec);
    append_u64_le(ts, o->ts.nsec);
    append_field(out, ts);
    append_doubles(out, o->cov.data(), 36);
  } else if (const auto* img = std::get_if<bus::ImageMsg>(&nd1)) {
    append_field(out, img->payload);
    append_field(out, as_bytes(img->format_tag));
  } else {
    append_field(out, std::get<Bytes>(nd1));
  }
  const std::uint8_t type = static_cast<std::uint8_t>(nd1_type(nd1));
  append_field(out, ByteView(&type, 1));
  return out;
}

Nd1 decode_nd1(ByteView bytes) {
  auto f = read_fields(bytes);
  if (f.empty() || f.back().size() != 1) throw DecodeError("nd1 missing type");
  switch (f.back()[0]) {
    case static_cast<std::uint8_t>(bus::MessageType::kOdometry): {
      if (f.size() != 6 || f[3].size() != 16) throw DecodeError("nd1 odometry layout");
      bus::OdometryMsg m;
      read_doubles(f[0], m.lv);
      read_doubles(f[1], m.av);
      read_doubles(f[2], m.pose);
      ByteReader ts(f[3]);
      m.ts.sec = ts.u64_le();
      m.ts.nsec = ts.u64_le();
      read_doubles(f[4], m.cov);
      return m;
    }
    case static_cast<std::uint8_t>(bus::MessageType::kCompressedImage): {
      if (f.size() != 3 || f[0].empty()) throw DecodeError("nd1 image layout");
      return bus::ImageMsg{Bytes(f[0].begin(), f[0].end()), to_string(f[1])};
    }
    case static_cast<std::uint8_t>(bus::MessageType::kGeneric):
      if (f.size() != 2) throw DecodeError("nd1 generic layout");
      return Bytes(f[0].begin(), f[0].end());
    default:
      throw DecodeError("nd1 unknown type");
  }
}

Bytes timestamp_ascii(std::uint64_t millis) { return to_bytes(std::to_string(millis)); }

std::uint64_t parse_timestamp_ascii(ByteView ascii) {
  std::uint64_t v = 0;
  const char* b = reinterpret_cast<const char*>(ascii.data());
  const char* e = b + ascii.size();
  auto [p, ec] = std::from_chars(b, e, v);
  if (ascii.empty() || ec != std::errc{} || p != e || (ascii.size() > 1 && ascii[0] == '0'))
    throw DecodeError("bad timestamp");
  return v;
}

Bytes Nd2::encode() const {
  Bytes out;
  append_field(out, ct1);
  const std::uint8_t t = static_cast<std::uint8_t>(type);
  append_field(out, ByteView(&t, 1));
  append_field(out, credential);
  append_field(out, timestamp_ascii(capture_ms));
  const std::uint8_t c = static_cast<std::uint8_t>(command);
  append_field(out, ByteView(&c, 1));
  append_field(out, sig.encode().view());
  return out;
}

Nd2 Nd2::decode(ByteView bytes) {
  auto f = read_fields(bytes);
  if (f.size() != 6 || f[1].size() != 1 || f[4].size() != 1 || f[5].size() != 64)
    throw DecodeError("nd2 layout");
  Nd2 n;
  n.ct1.assign(f[0].begin(), f[0].end());
  if (f[1][0] < 1 || f[1][0] > 3) throw DecodeError("nd2 type");
  n.type = static_cast<bus::MessageType>(f[1][0]);
  n.credential.assign(f[2].begin(), f[2].end());
  n.capture_ms = parse_timestamp_ascii(f[3]);
  n.command = command_from_byte(f[4][0]);
  n.sig = crypto::Sm2Signature::decode(f[5]);
  return n;
}

Bytes Nd3::encode() const {
  Bytes out;
  append_field(out, ct2);
  append_field(out, as_bytes(name));
  return out;
}

Nd3 Nd3::decode(ByteView bytes) {
  auto f = read_fields(bytes);
  if (f.size() != 2) throw DecodeError("nd3 layout");
  return {Bytes(f[0].begin(), f[0].end()), to_string(f[1])};
}

}  // namespace authros::protocol
