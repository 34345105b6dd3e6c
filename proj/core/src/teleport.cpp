// Copyright 2026 The nlm authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "nlm/teleport.hpp"

#include <algorithm>

namespace nlm {

std::vector<uint64_t> ChannelRegistry::allocate(uint32_t width, uint32_t count, Party sender) {
  std::vector<uint64_t> ids;
  ids.reserve(count);
  for (uint32_t i = 0; i < count; ++i) {
    EntanglementChannel ch;
    ch.id = channels_.size();
    ch.width = width;
    ch.sender = sender;
    channels_.push_back(ch);
    ids.push_back(ch.id);
  }
  return ids;
}

EntanglementChannel& ChannelRegistry::channel(uint64_t id) {
  if (id >= channels_.size()) throw std::out_of_range("unknown channel id");
  return channels_[id];
}

const EntanglementChannel& ChannelRegistry::channel(uint64_t id) const {
  if (id >= channels_.size()) throw std::out_of_range("unknown channel id");
  return channels_[id];
}

void ChannelRegistry::consume(uint64_t id) {
  EntanglementChannel& ch = channel(id);
  if (ch.status == EntanglementChannel::Status::Consumed) {
    throw std::runtime_error("protocol violation: channel reused");
  }
  ch.status = EntanglementChannel::Status::Consumed;
  ebits_ += ch.width;
  used_ += 1;
}

Lab::Lab(StateVector state) : state_(std::move(state)) {}

std::vector<uint32_t> Lab::alloc(uint32_t count) {
  std::vector<uint32_t> slots;
  slots.reserve(count);
  while (count > 0 && !free_.empty()) {
    slots.push_back(free_.back());
    free_.pop_back();
    --count;
  }
  if (count > 0) {
    uint32_t base = state_.width();
    state_.append_qubits(count);
    for (uint32_t i = 0; i < count; ++i) slots.push_back(base + i);
  }
  return slots;
}

void Lab::release_measured(uint32_t qubit, int observed_bit) {
  if (observed_bit) {
    state_.apply_pauli(PauliString::single(state_.width(), qubit, PauliAxis::X));
  }
  free_.push_back(qubit);
}

void Lab::decohere(uint32_t qubit, RngStream& rng) {
  int bit = state_.measure_z(qubit, rng);
  release_measured(qubit, bit);
}

namespace {

TeleportRecord teleport_impl(StateVector& state, const std::vector<uint32_t>& qubits,
                             ChannelRegistry& registry, uint64_t channel_id, Party sender,
                             RngStream* rng, const std::vector<BellLabel>* forced,
                             uint32_t step_index) {
  const EntanglementChannel& ch = registry.channel(channel_id);
  if (ch.width != qubits.size()) throw std::invalid_argument("channel width mismatch");
  if (ch.sender != sender) {
    throw std::runtime_error("protocol violation: party sends on a channel of the other direction");
  }
  registry.consume(channel_id);

  std::vector<BellLabel> labels(qubits.size());
  uint32_t base = state.width();
  state.append_qubits(2 * static_cast<uint32_t>(qubits.size()));
  for (size_t i = 0; i < qubits.size(); ++i) {
    uint32_t s = base + 2 * static_cast<uint32_t>(i);
    uint32_t r = s + 1;
    state.prepare_phi0(s, r);
    if (forced) {
      state.project_bell(qubits[i], s, (*forced)[i]);
      labels[i] = (*forced)[i];
    } else {
      labels[i] = state.bell_measure(qubits[i], s, *rng);
    }
    // Measured pair is now |00>; move the receiver half into the original slot.
    state.swap_qubits(qubits[i], r);
  }
  state.remove_top_qubits(2 * static_cast<uint32_t>(qubits.size()));

  TeleportRecord rec;
  rec.channel_id = channel_id;
  rec.outcome = PauliString::from_labels(labels);
  rec.sender = sender;
  rec.step_index = step_index;
  return rec;
}

}  // namespace

TeleportRecord teleport(StateVector& state, const std::vector<uint32_t>& qubits,
                        ChannelRegistry& registry, uint64_t channel_id, Party sender,
                        RngStream& rng, uint32_t step_index) {
  return teleport_impl(state, qubits, registry, channel_id, sender, &rng, nullptr, step_index);
}

TeleportRecord teleport_in_lab(Lab& lab, std::vector<uint32_t>& qubits,
                               ChannelRegistry& registry, uint64_t channel_id, Party sender,
                               RngStream& rng, uint32_t step_index) {
  const EntanglementChannel& ch = registry.channel(channel_id);
  if (ch.width != qubits.size()) throw std::invalid_argument("channel width mismatch");
  if (ch.sender != sender) {
    throw std::runtime_error("protocol violation: party sends on a channel of the other direction");
  }
  registry.consume(channel_id);

  std::vector<BellLabel> labels(qubits.size());
  StateVector& state = lab.state();
  std::vector<uint32_t> pair_slots = lab.alloc(2 * static_cast<uint32_t>(qubits.size()));
  std::vector<uint32_t> receivers(qubits.size());
  for (size_t i = 0; i < qubits.size(); ++i) {
    uint32_t s = pair_slots[2 * i], r = pair_slots[2 * i + 1];
    state.prepare_phi0(s, r);
    labels[i] = state.bell_measure(qubits[i], s, rng);
    lab.release_measured(qubits[i], 0);
    lab.release_measured(s, 0);
    receivers[i] = r;
  }
  qubits = receivers;

  TeleportRecord rec;
  rec.channel_id = channel_id;
  rec.outcome = PauliString::from_labels(labels);
  rec.sender = sender;
  rec.step_index = step_index;
  return rec;
}

TeleportRecord teleport_forced(StateVector& state, const std::vector<uint32_t>& qubits,
                               ChannelRegistry& registry, uint64_t channel_id, Party sender,
                               const std::vector<BellLabel>& labels, uint32_t step_index) {
  return teleport_impl(state, qubits, registry, channel_id, sender, nullptr, &labels, step_index);
}

}  // namespace nlm
