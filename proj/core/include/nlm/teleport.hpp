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

#pragma once

#include <optional>

#include "nlm/statevector.hpp"

namespace nlm {

enum class Party : uint8_t { A, B };
inline Party other_party(Party p) { return p == Party::A ? Party::B : Party::A; }
inline const char* party_name(Party p) { return p == Party::A ? "A" : "B"; }

/// A pre-shared block of Bell pairs enabling one teleportation of `width`
/// qubits in a fixed direction. Consumed channels are never reused.
struct EntanglementChannel {
  enum class Status : uint8_t { Fresh, Consumed };
  uint64_t id = 0;
  uint32_t width = 0;
  Party sender = Party::A;
  Status status = Status::Fresh;
};

struct TeleportRecord {
  uint64_t channel_id = 0;
  PauliString outcome;  // sigma_a, length = channel width
  Party sender = Party::A;
  uint32_t step_index = 0;
};

/// Ledger of pre-distributed channels. The ebit counter equals the summed
/// width of consumed channels, always.
class ChannelRegistry {
 public:
  std::vector<uint64_t> allocate(uint32_t width, uint32_t count, Party sender);
  EntanglementChannel& channel(uint64_t id);
  const EntanglementChannel& channel(uint64_t id) const;
  /// Marks a fresh channel consumed and charges width ebits. Throws on reuse.
  void consume(uint64_t id);
  uint64_t consumed_ebits() const { return ebits_; }
  uint64_t consumed_channels() const { return used_; }
  size_t size() const { return channels_.size(); }

 private:
  std::vector<EntanglementChannel> channels_;
  uint64_t ebits_ = 0;
  uint64_t used_ = 0;
};

/// Working register wrapper: a StateVector plus free-slot bookkeeping so
/// teleport ancillas can be recycled without growing the vector.
class Lab {
 public:
  explicit Lab(StateVector state);
  StateVector& state() { return state_; }
  const StateVector& state() const { return state_; }
  /// Returns `count` slots in |0>, appending qubits only when no freed slot
  /// is available.
  std::vector<uint32_t> alloc(uint32_t count);
  /// Releases a slot that is currently in a computational basis state
  /// (post-measurement); resets it to |0>.
  void release_measured(uint32_t qubit, int observed_bit);
  /// Measures a qubit nobody will ever look at again and recycles the slot.
  /// Exact for every subsequently observable statistic.
  void decohere(uint32_t qubit, RngStream& rng);

 private:
  StateVector state_;
  std::vector<uint32_t> free_;
};

/// Exact instantaneous teleportation: materializes the channel's Bell pairs,
/// Bell-measures (qubit_i, sender half_i), and leaves the receiver halves in
/// the original qubit slots carrying sigma_a |psi>. Marks the channel
/// consumed. The classical-correction step of full teleportation is never
/// performed here.
TeleportRecord teleport(StateVector& state, const std::vector<uint32_t>& qubits,
                        ChannelRegistry& registry, uint64_t channel_id, Party sender,
                        RngStream& rng, uint32_t step_index = 0);

/// Lab-based variant used by the protocol engines; receiver half slots are
/// returned through `out_slots` (the register moves there).
TeleportRecord teleport_in_lab(Lab& lab, std::vector<uint32_t>& qubits,
                               ChannelRegistry& registry, uint64_t channel_id, Party sender,
                               RngStream& rng, uint32_t step_index = 0);

/// Forced-outcome teleport for oracle tests.
TeleportRecord teleport_forced(StateVector& state, const std::vector<uint32_t>& qubits,
                               ChannelRegistry& registry, uint64_t channel_id, Party sender,
                               const std::vector<BellLabel>& labels, uint32_t step_index = 0);

}  // namespace nlm
