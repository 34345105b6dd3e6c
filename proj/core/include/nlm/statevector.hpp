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

#include <complex>
#include <vector>

#include "nlm/pauli.hpp"
#include "nlm/rng.hpp"

namespace nlm {

/// Centralized tolerances: exact-algebra comparisons vs numeric checks.
inline constexpr double kNormTol = 1e-10;
inline constexpr double kExactTol = 1e-12;

using Amp = std::complex<double>;

struct SchmidtForm {
  uint32_t v = 0, w = 0;  // bipartition qubit counts (A = low qubits)
  std::vector<double> coeffs;                // nonincreasing, positive
  std::vector<std::vector<Amp>> basis_a;     // orthonormal states on A
  std::vector<std::vector<Amp>> basis_b;     // orthonormal states on B
  uint32_t rank() const { return static_cast<uint32_t>(coeffs.size()); }
};

/// Dense state of an n-qubit register, little endian: qubit 0 is the least
/// significant amplitude-index bit. One protocol trial owns one state.
class StateVector {
 public:
  StateVector() = default;
  static StateVector zero_state(uint32_t width);
  static StateVector basis_state(uint32_t width, uint64_t index);
  static StateVector from_amplitudes(uint32_t width, std::vector<Amp> amps);
  static StateVector random_state(uint32_t width, RngStream& rng);

  uint32_t width() const { return width_; }
  uint64_t dim() const { return uint64_t{1} << width_; }
  const std::vector<Amp>& amps() const { return amps_; }
  Amp amp(uint64_t i) const { return amps_[i]; }

  double norm_sq() const;
  void renormalize();

  /// Dense k-qubit unitary, row major over the targets (targets[0] is the
  /// least significant index bit of the matrix). Rejects non-unitary input.
  void apply_unitary(const std::vector<Amp>& u, const std::vector<uint32_t>& targets);
  void apply_unitary_unchecked(const std::vector<Amp>& u, const std::vector<uint32_t>& targets);

  /// R_j(theta) = exp(-i theta sigma_j / 2) = cos(theta/2) 1 - i sin(theta/2) sigma_j.
  void apply_rotation(const PauliString& axis, double theta);
  void apply_pauli(const PauliString& p);
  void apply_gate(const StabilizerGate& g);

  int measure_z(uint32_t qubit, RngStream& rng);
  /// Forces a z outcome (oracle use); throws if its probability is ~0.
  void project_z(uint32_t qubit, int bit);
  double prob_z_one(uint32_t qubit) const;

  /// Bell measurement of the ordered pair (qa, qb) in the basis
  /// |Phi_k> = (1 x sigma_k)|Phi_0> with sigma acting on the qb slot.
  /// Demolition: afterwards the pair is left in |00>.
  BellLabel bell_measure(uint32_t qa, uint32_t qb, RngStream& rng);
  void project_bell(uint32_t qa, uint32_t qb, BellLabel k);

  /// Turns |00> on (qa, qb) into |Phi_0>.
  void prepare_phi0(uint32_t qa, uint32_t qb);
  void append_qubits(uint32_t count);
  /// Drops the top `count` qubits, which must all be in |0>.
  void remove_top_qubits(uint32_t count);
  void swap_qubits(uint32_t a, uint32_t b);

  Amp inner(const StateVector& other) const;
  /// |<this|other>|, i.e. fidelity up to global phase.
  double fidelity(const StateVector& other) const;

 private:
  uint32_t width_ = 0;
  std::vector<Amp> amps_;
};

/// Schmidt decomposition across (v low qubits | rest). Implemented by
/// eigendecomposition of the v-side reduced density matrix; degenerate
/// coefficients are ordered by a lexicographic tie-break on the phase-fixed
/// A-side basis vectors.
SchmidtForm schmidt(const StateVector& s, uint32_t v);
StateVector state_from_schmidt(const SchmidtForm& form);

}  // namespace nlm
