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

#include "nlm/pauli.hpp"
#include "nlm/rng.hpp"

namespace nlm {

enum class ChainMode : uint8_t { Continuous, Binary };
enum class Role : uint8_t { Initiator, Receiver };

/// One pre-agreed rotation chain: both parties know the axis, the angle and
/// the channel plan before t0.
struct ChainProgram {
  PauliString axis;  // non-identity, width == chain register width
  double theta = 0;
  ChainMode mode = ChainMode::Continuous;
  uint32_t binary_depth = 0;  // D, Binary mode only
  uint32_t safety_cap = 64;   // channel cap in Continuous mode

  uint32_t width() const { return axis.width(); }
  /// Number of channels the plan provides.
  uint32_t channel_limit() const;
  static ChainProgram continuous(PauliString axis, double theta, uint32_t cap = 64);
  static ChainProgram binary(PauliString axis, double theta, uint32_t depth);
  void validate() const;
};

/// Detects theta == (2m-1) pi / 2^D and returns D (smallest depth). D == 1
/// means odd multiples of pi/2, whose chains are pure stabilizer shortcuts.
std::optional<uint32_t> binary_depth_of(double theta, double tol = 1e-12);

/// True when a rotation by `angle` is a stabilizer, i.e. an odd multiple of
/// pi/2 (mod 2 pi it is +-pi/2 or +-3pi/2).
bool is_quarter_turn(double angle, double tol = 1e-9);

/// Maximum channels a depth-D binary chain can consume: the teleports after
/// theta, 2 theta, ..., 2^{D-2} theta. The 2^{D-1} theta correction is a
/// stabilizer and terminates without a further teleport.
uint32_t binary_chain_bound(uint32_t depth);

/// What one party experienced in one chain.
struct PartyOutcome {
  bool present = false;
  bool exited = false;           // ended holding qubits
  uint32_t exit_pos = 0;         // channel ordinal of the exit (0 = pre-channel exit)
  uint32_t opportunity = 0;      // q (initiator) or p (receiver) at exit; 0 = none
  bool via_stabilizer = false;
  bool resource_exhausted = false;
  uint32_t last_touch = 0;       // highest channel ordinal touched
  uint32_t teleports = 0;
  PauliString final_own;         // own last induced distortion when done
  /// outcome of this party's teleport on each ordinal it sent (ordinal, sigma)
  std::vector<std::pair<uint32_t, PauliString>> sent;
};

struct ChainResult {
  PartyOutcome initiator, receiver;
  /// Appendix-style consumption: every channel ordinal up to the last one
  /// touched by either participant is dedicated.
  uint32_t channels_consumed = 0;
  bool resource_exhausted = false;
};

/// Physics backend for one chain instance. The exact engine moves real
/// amplitudes; the frame engine only samples outcomes and counts channels.
class ChainPhysics {
 public:
  virtual ~ChainPhysics() = default;
  /// R_axis(angle) applied by `role` to the register it currently holds.
  virtual void rotate(Role role, double angle) = 0;
  /// Party applies its own last induced distortion (phase-free) to its register.
  virtual void apply_own(Role role, const PauliString& p) = 0;
  /// Teleport the held register on channel ordinal pos; returns sigma_a.
  virtual PauliString teleport_on(Role role, uint32_t pos) = 0;
  /// Take delivery of channel ordinal pos (receiver halves become the
  /// register; garbage when nobody sent).
  virtual void receive_on(Role role, uint32_t pos) = 0;
  /// Party keeps its register and stops acting in this chain.
  virtual void exit_holding(Role role, uint32_t pos, uint32_t opportunity, bool stabilizer) = 0;
};

/// Each party's own last induced distortion entering the chain (identity when
/// the party has not teleported toward this chain's start).
struct ChainSeeds {
  PauliString initiator_seed, receiver_seed;
};

/// Runs the two-party rotation chain protocol of one chain instance. Party
/// transitions depend only on (own record, program): each party applies its
/// own previous distortion, exits when it commutes with the axis, otherwise
/// applies the double-angle correction and teleports on the next channel.
/// Corrections that are quarter turns are stabilizers: the party applies
/// them and terminates unconditionally.
ChainResult run_chain_protocol(ChainPhysics& physics, const ChainProgram& program,
                               const ChainSeeds& seeds, bool initiator_present,
                               bool receiver_present);

}  // namespace nlm
