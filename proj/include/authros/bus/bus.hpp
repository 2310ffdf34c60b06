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

#include <chrono>
#include <condition_variable>
#include <deque>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "authros/bus/messages.hpp"

namespace authros::bus {

class BusError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Role { kPublisher, kSubscriber };

// Throws BusError unless the name is non-empty and starts with '/'.
void validate_topic(std::string_view topic);

struct RawMessage {
  MessageType type = MessageType::kGeneric;
  Bytes payload;

  static RawMessage odometry(const OdometryMsg& m) { return {MessageType::kOdometry, encode_odometry(m)}; }
  static RawMessage image(const ImageMsg& m) { return {MessageType::kCompressedImage, encode_image(m)}; }
  static RawMessage generic(Bytes b) { return {MessageType::kGeneric, std::move(b)}; }
};

struct Delivery {
  std::string publisher;
  std::uint64_t seq = 0;  // per-topic sequence number
  Timestamp received;     // set when the bus enqueued the message
  RawMessage message;
};

namespace detail {
struct Inbox {
  std::mutex mu;
  std::condition_variable cv;
  std::deque<Delivery> queue;
  bool closed = false;
};
struct Topic;
}  // namespace detail

class Master;

/// Registration of one node on one topic. Subscribers pull deliveries from
/// their own queue; nothing runs on the publisher's thread but the enqueue.
class NodeHandle {
 public:
  NodeHandle() = default;

  const std::string& node_id() const { return node_id_; }
  const std::string& topic() const { return topic_; }
  Role role() const { return role_; }
  bool valid() const { return master_ != nullptr; }

  std::optional<Delivery> receive(std::chrono::milliseconds timeout);
  std::optional<Delivery> try_receive();
  std::size_t queued() const;

 private:
  friend class Master;
  Master* master_ = nullptr;
  std::string node_id_;
  std::string topic_;
  Role role_ = Role::kPublisher;
  std::shared_ptr<detail::Topic> topic_state_;
  std::shared_ptr<detail::Inbox> inbox_;
};

class Master {
 public:
  using ClockFn = std::function<Timestamp()>;
  explicit Master(ClockFn clock = wall_clock_now);
  ~Master();
  Master(const Master&) = delete;
  Master& operator=(const Master&) = delete;

  // Throws BusError on a duplicate node_id or a malformed topic.
  NodeHandle register_node(const std::string& node_id, const std::string& topic, Role role);
  // Removes the registration; a subscriber's pending queue is discarded.
  void unregister(NodeHandle& handle);

  // Delivers to every current subscriber of the handle's topic and returns
  // how many received it. Throws BusError if the handle is not a publisher.
  std::size_t publish(const NodeHandle& handle, RawMessage message);
  std::size_t publish(const NodeHandle& handle, const OdometryMsg& m) { return publish(handle, RawMessage::odometry(m)); }
  std::size_t publish(const NodeHandle& handle, const ImageMsg& m) { return publish(handle, RawMessage::image(m)); }

  std::size_t subscriber_count(const std::string& topic) const;
  std::vector<std::string> topics() const;
  Timestamp now() const { return clock_(); }

 private:
  std::shared_ptr<detail::Topic> topic_state(const std::string& topic);

  ClockFn clock_;
  mutable std::mutex mu_;
  std::map<std::string, std::string> node_topics_;  // node_id -> topic
  std::map<std::string, std::shared_ptr<detail::Topic>> topics_;
};

struct CaptureError {
  std::string message;
};

struct CaptureEvent {
  std::uint64_t seq = 0;
  std::string publisher;
  Timestamp captured;  // capture time T
  Bytes raw;
  std::variant<OdometryMsg, ImageMsg, Bytes, CaptureError> value;

  bool ok() const { return !std::holds_alternative<CaptureError>(value); }
};

/// A plain subscriber that parses everything on one topic into the
/// configured type. A message that does not parse yields a CaptureError
/// event and the stream continues.
class Monitor {
 public:
  Monitor(Master& master, const std::string& topic, MessageType type);
  ~Monitor();
  Monitor(const Monitor&) = delete;
  Monitor& operator=(const Monitor&) = delete;

  std::optional<CaptureEvent> next(std::chrono::milliseconds timeout);
  std::vector<CaptureEvent> drain();

  const std::string& topic() const { return handle_.topic(); }
  MessageType type() const { return type_; }

 private:
  CaptureEvent parse(Delivery d) const;

  Master& master_;
  MessageType type_;
  NodeHandle handle_;
};

CaptureEvent parse_capture(MessageType type, Delivery d);

}  // namespace authros::bus
