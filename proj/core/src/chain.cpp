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

#include "nlm/chain.hpp"

#include <cmath>

namespace nlm {

uint32_t ChainProgram::channel_limit() const {
  return mode == ChainMode::Binary ? binary_chain_bound(binary_depth) : safety_cap;
}

ChainProgram ChainProgram::continuous(PauliString axis, double theta, uint32_t cap) {
  ChainProgram p;
  p.axis = std::move(axis);
  p.theta = theta;
  p.mode = ChainMode::Continuous;
  p.safety_cap = cap;
  p.validate();
  return p;
}

ChainProgram ChainProgram::binary(PauliString axis, double theta, uint32_t depth) {
  ChainProgram p;
  p.axis = std::move(axis);
  p.theta = theta;
  p.mode = ChainMode::Binary;
  p.binary_depth = depth;
  p.validate();
  return p;
}

void ChainProgram::validate() const {
  if (axis.is_identity_axes()) throw std::invalid_argument("chain axis must be non-identity");
  if (mode == ChainMode::Binary) {
    if (binary_depth < 1) throw std::invalid_argument("binary depth must be >= 1");
    auto d = binary_depth_of(theta);
    if (!d || *d != binary_depth) {
      throw std::invalid_argument("binary mode requires theta an odd multiple of pi/2^D");
    }
  } else if (safety_cap < 1) {
    throw std::invalid_argument("safety cap must be >= 1");
  }
}

std::optional<uint32_t> binary_depth_of(double theta, double tol) {
  for (uint32_t d = 1; d <= 50; ++d) {
    double unit = M_PI / std::pow(2.0, d);
    double ratio = theta / unit;
    double rounded = std::round(ratio);
    if (std::abs(ratio - rounded) < tol && std::llround(rounded) % 2 != 0) return d;
  }
  return std::nullopt;
}

bool is_quarter_turn(double angle, double tol) {
  // Any multiple of pi/2 exponentiates to a Clifford (identity, a Pauli, or a
  // proper quarter turn); all of them propagate distortions exactly.
  return std::abs(std::remainder(angle, M_PI / 2)) < tol;
}

uint32_t binary_chain_bound(uint32_t depth) {
  if (depth < 1) throw std::invalid_argument("binary depth must be >= 1");
  return depth - 1;
}

namespace {

struct PartyCtx {
  Role role;
  bool present = false;
  bool done = false;
  PauliString my_last;
  PartyOutcome out;
};

}  // namespace

ChainResult run_chain_protocol(ChainPhysics& physics, const ChainProgram& program,
                               const ChainSeeds& seeds, bool initiator_present,
                               bool receiver_present) {
  program.validate();
  const uint32_t limit = program.channel_limit();
  if (initiator_present && seeds.initiator_seed.width() != program.width()) {
    throw std::invalid_argument("initiator seed width mismatch");
  }
  if (receiver_present && seeds.receiver_seed.width() != program.width()) {
    throw std::invalid_argument("receiver seed width mismatch");
  }

  PartyCtx init{Role::Initiator, initiator_present, false, seeds.initiator_seed, {}};
  PartyCtx recv{Role::Receiver, receiver_present, false, seeds.receiver_seed, {}};
  init.out.present = initiator_present;
  recv.out.present = receiver_present;
  init.out.final_own = init.my_last;
  recv.out.final_own = recv.my_last;

  // theta itself a quarter turn (binary depth 1): the opening rotation is a
  // stabilizer, the initiator keeps the system, no channel is used.
  if (is_quarter_turn(program.theta)) {
    if (init.present) {
      physics.rotate(Role::Initiator, program.theta);
      physics.exit_holding(Role::Initiator, 0, 0, true);
      init.out.exited = true;
      init.out.via_stabilizer = true;
    }
    ChainResult r;
    r.initiator = init.out;
    r.receiver = recv.out;
    return r;
  }

  // The sender of ordinal c applies R(2^{c-1} theta) before teleporting; a
  // receiver of ordinal c that fails its check applies R(2^c theta). In
  // binary mode 2^{D-1} theta is the guaranteed quarter-turn correction.
  double angle = program.theta;
  for (uint32_t c = 1; c <= limit; ++c) {
    PartyCtx& sender = (c % 2 == 1) ? init : recv;
    PartyCtx& landing = (c % 2 == 1) ? recv : init;

    if (sender.present && !sender.done) {
      if (c == 1) physics.rotate(Role::Initiator, program.theta);
      PauliString outcome = physics.teleport_on(sender.role, c);
      sender.my_last = outcome;
      sender.out.final_own = outcome;
      sender.out.sent.emplace_back(c, outcome);
      sender.out.teleports += 1;
      sender.out.last_touch = c;
      if (c + 1 > limit) {
        sender.done = true;
        sender.out.resource_exhausted = (program.mode == ChainMode::Continuous);
      }
    }

    double correction = std::fmod(2.0 * angle, 4.0 * M_PI);
    bool correction_is_clifford = (program.mode == ChainMode::Binary)
                                      ? (c == program.binary_depth - 1)
                                      : is_quarter_turn(correction);
    if (landing.present && !landing.done) {
      physics.receive_on(landing.role, c);
      landing.out.last_touch = c;
      landing.out.opportunity += 1;
      if (!landing.my_last.is_identity_axes()) {
        physics.apply_own(landing.role, landing.my_last.phase_free());
      }
      if (landing.my_last.commutes_with(program.axis)) {
        physics.exit_holding(landing.role, c, landing.out.opportunity, false);
        landing.out.exited = true;
        landing.out.exit_pos = c;
        landing.done = true;
      } else if (correction_is_clifford) {
        physics.rotate(landing.role, correction);
        physics.exit_holding(landing.role, c, landing.out.opportunity, true);
        landing.out.exited = true;
        landing.out.exit_pos = c;
        landing.out.via_stabilizer = true;
        landing.done = true;
      } else if (c == limit) {
        landing.done = true;
        landing.out.resource_exhausted = (program.mode == ChainMode::Continuous);
      } else {
        physics.rotate(landing.role, correction);
      }
    }
    angle = correction;
    if ((init.done || !init.present) && (recv.done || !recv.present)) break;
  }

  ChainResult result;
  result.initiator = init.out;
  result.receiver = recv.out;
  result.channels_consumed = std::max(init.out.last_touch, recv.out.last_touch);
  result.resource_exhausted = init.out.resource_exhausted || recv.out.resource_exhausted;
  return result;
}

}  // namespace nlm
