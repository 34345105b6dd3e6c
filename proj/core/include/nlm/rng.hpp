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

#include <cstdint>

namespace nlm {

/// xoshiro256** seeded through splitmix64. Hand-rolled so that every stream
/// is bit-reproducible across platforms and standard libraries. Per-trial
/// streams are derived from (master seed, trial index), which keeps runs
/// schedule-independent when trials are fanned out to workers.
class RngStream {
 public:
  explicit RngStream(uint64_t seed);

  /// The splittable counter contract: stream for one trial of one run.
  static RngStream for_trial(uint64_t master_seed, uint64_t trial_index);
  /// A named substream (e.g. separate streams for state prep vs protocol).
  RngStream split(uint64_t salt) const;

  uint64_t next_u64();
  /// Uniform double in [0, 1).
  double next_double();
  /// Uniform integer in [0, n), unbiased.
  uint64_t next_below(uint64_t n);
  /// Uniform Bell label / Pauli axis code in {0,1,2,3}.
  uint8_t next_label() { return static_cast<uint8_t>(next_u64() >> 62); }

 private:
  uint64_t s_[4];
};

}  // namespace nlm
