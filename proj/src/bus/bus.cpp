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

#include "authros/bus/bus.hpp"

#include <atomic>

namespace authros::bus {

namespace detail {
struct Topic {
  std::mutex mu;  // serializes delivery on this topic
  std::uint64_t next_seq = 0;
  std::map<std::string, std::shared_ptr<Inbox>> subscribers;
};
}  // namespace detail

void validate_topic(std::string_view topic) {
  if (topic.empty() || topic.front() != '/') throw BusError("topic must start with '/': '" + std::string(topic) + "'");
}

std::optional<Delivery> NodeHandle::receive(std::chrono::milliseconds timeout) {
  if (!inbox_) throw BusError("node '" + node_id_ + "' is not a subscriber");
  std::unique_lock lock(inbox_->mu);
  if (!inbox_->cv.wait_for(lock, timeout, [&] { return !inbox_->queue.empty() || inbox_->closed; })) return std::nullopt;
  if (inbox_->queue.empty()) return std::nullopt;
  Delivery d = std::move(inbox_->queue.front());
  inbox_->queue.pop_front();
  return d;
}

std::optional<Delivery> NodeHandle::try_receive() { return receive(std::chrono::milliseconds(0)); }

std::size_t NodeHandle::queued() const {
  if (!inbox_) return 0;
  std::lock_guard lock(inbox_->mu);
  return inbox_->queue.size();
}

Master::Master(ClockFn clock) : clock_(std::move(clock)) {}
Master::~Master() = default;

std::shared_ptr<detail::Topic> Master::topic_state(const std::string& topic) {
  auto& slot = topics_[topic];
  if (!slot) slot = std::make_shared<detail::Topic>();
  return slot;
}

NodeHandle Master::register_node(const std::string& node_id, const std::string& topic, Role role) {
  if (node_id.empty()) throw BusError("empty node id");
  validate_topic(topic);
  std::lock_guard lock(mu_);
  if (node_topics_.contains(node_id)) throw BusError("duplicate node id '" + node_id + "'");
  NodeHandle h;
  h.master_ = this;
  h.node_id_ = node_id;
  h.topic_ = topic;
  h.role_ = role;
  h.topic_state_ = topic_state(topic);
  if (role == Role::kSubscriber) {
    h.inbox_ = std::make_shared<detail::Inbox>();
    std::lock_guard tl(h.topic_state_->mu);
    h.topic_state_->subscribers.emplace(node_id, h.inbox_);
  }
  node_topics_.emplace(node_id, topic);
  return h;
}

void Master::unregister(NodeHandle& handle) {
  if (handle.master_ != this) throw BusError("handle does not belong to this master");
  {
    std::lock_guard lock(mu_);
    node_topics_.erase(handle.node_id_);
  }
  if (handle.inbox_) {
    {
      std::lock_guard tl(handle.topic_state_->mu);
      handle.topic_state_->subscribers.erase(handle.node_id_);
    }
    std::lock_guard il(handle.inbox_->mu);
    handle.inbox_->closed = true;
    handle.inbox_->queue.clear();
    handle.inbox_->cv.notify_all();
  }
  handle = NodeHandle{};
}

std::size_t Master::publish(const NodeHandle& handle, RawMessage message) {
  if (handle.master_ != this) throw BusError("handle does not belong to this master");
  if (handle.role_ != Role::kPublisher)
    throw BusError("node '" + handle.node_id_ + "' is not a publisher on " + handle.topic_);
  auto& topic = *handle.topic_state_;
  std::lock_guard tl(topic.mu);
  Delivery d{handle.node_id_, topic.next_seq++, clock_(), std::move(message)};
  for (auto& [id, inbox] : topic.subscribers) {
    std::lock_guard il(inbox->mu);
    inbox->queue.push_back(d);
    inbox->cv.notify_one();
  }
  return topic.subscribers.size();
}

std::size_t Master::subscriber_count(const std::string& topic) const {
  std::shared_ptr<detail::Topic> t;
  {
    std::lock_guard lock(mu_);
    auto it = topics_.find(topic);
    if (it == topics_.end()) return 0;
    t = it->second;
  }
  std::lock_guard tl(t->mu);
  return t->subscribers.size();
}

std::vector<std::string> Master::topics() const {
  std::lock_guard lock(mu_);
  std::vector<std::string> out;
  for (const auto& [name, _] : topics_) out.push_back(name);
  return out;
}

CaptureEvent parse_capture(MessageType type, Delivery d) {
  CaptureEvent ev;
  ev.seq = d.seq;
  ev.publisher = std::move(d.publisher);
  ev.captured = d.received;
  ev.raw = std::move(d.message.payload);
  try {
    switch (type) {
      case MessageType::kOdometry:
        ev.value = parse_odometry(ev.raw);
        break;
      case MessageType::kCompressedImage:
        ev.value = parse_image(ev.raw);
        break;
      case MessageType::kGeneric:
        ev.value = ev.raw;
        break;
    }
  } catch (const ParseError& e) {
    ev.value = CaptureError{e.what()};
  }
  return ev;
}

namespace {
std::string monitor_id() {
  static std::atomic<std::uint64_t> counter{0};
  return "authros_monitor_" + std::to_string(counter.fetch_add(1));
}
}  // namespace

Monitor::Monitor(Master& master, const std::string& topic, MessageType type)
    : master_(master), type_(type), handle_(master.register_node(monitor_id(), topic, Role::kSubscriber)) {}

Monitor::~Monitor() { master_.unregister(handle_); }

CaptureEvent Monitor::parse(Delivery d) const { return parse_capture(type_, std::move(d)); }

std::optional<CaptureEvent> Monitor::next(std::chrono::milliseconds timeout) {
  auto d = handle_.receive(timeout);
  if (!d) return std::nullopt;
  return parse(std::move(*d));
}

std::vector<CaptureEvent> Monitor::drain() {
  std::vector<CaptureEvent> out;
  while (auto d = handle_.try_receive()) out.push_back(parse(std::move(*d)));
  return out;
}

}  // namespace authros::bus
