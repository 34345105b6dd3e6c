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
#include <stdexcept>
#include <string>
#include <vector>

namespace nlm {

/// Bell-state label in {0,1,2,3} indexing |Phi_0>..|Phi_3>. The label equals
/// the axis code of the Pauli distortion it produces on the receiving side:
/// |Phi_k> = (1 x sigma_k)|Phi_0> under the axis numbering below.
using BellLabel = uint8_t;

/// Single-qubit Pauli axis with the numbering 0->I, 1->x, 2->z, 3->y.
/// The code is exactly (x_bit | z_bit << 1), which is why Bell labels and
/// axis codes compose by bitwise xor.
enum class PauliAxis : uint8_t { I = 0, X = 1, Z = 2, Y = 3 };

char axis_char(PauliAxis a);
PauliAxis axis_from_char(char c);

/// Combines two local Bell-measurement outcomes into the global outcome.
/// This is per-bit xor of the two-bit labels, not integer addition mod 4;
/// see docs/bell_composition in the README for the brute-forced table that
/// fixes this choice.
inline BellLabel compose_bell_labels(BellLabel a, BellLabel b) {
  return static_cast<BellLabel>((a ^ b) & 3);
}

/// A tensor product of single-qubit Paulis with an exact phase i^k.
///
/// Canonical form: op = i^phase_exp * prod_j X^x_j Z^z_j, stored as two
/// bitmasks plus the phase exponent. A `Y` axis contributes (x=1, z=1) and
/// +1 to phase_exp (Y = i X Z). Commutation is a parity of the symplectic
/// form; products are phase-exact.
class PauliString {
 public:
  PauliString() = default;
  static PauliString identity(uint32_t width);
  /// Builds i^phase * tensor of axes (axes given qubit 0 first).
  static PauliString from_axes(const std::vector<PauliAxis>& axes, uint8_t phase = 0);
  static PauliString single(uint32_t width, uint32_t qubit, PauliAxis axis);
  /// Teleport outcome vector -> Pauli distortion sigma_a (label k on pair j
  /// puts axis k on qubit j).
  static PauliString from_labels(const std::vector<BellLabel>& labels);
  /// Parses e.g. "XZIY", "-XX", "+iZ", "I". Leftmost character is qubit 0.
  static PauliString parse(const std::string& text);

  uint32_t width() const { return width_; }
  uint64_t x_mask() const { return x_mask_; }
  uint64_t z_mask() const { return z_mask_; }
  uint8_t phase_exp() const { return phase_; }

  PauliAxis axis_at(uint32_t qubit) const;
  void set_axis(uint32_t qubit, PauliAxis axis);
  bool is_identity_axes() const { return x_mask_ == 0 && z_mask_ == 0; }
  uint32_t weight() const;  // number of non-identity positions

  bool commutes_with(const PauliString& other) const;
  PauliString times(const PauliString& other) const;
  /// Same string with the display phase reset to +1 (Hermitian, self-inverse).
  PauliString phase_free() const;
  bool same_axes(const PauliString& other) const {
    return width_ == other.width_ && x_mask_ == other.x_mask_ && z_mask_ == other.z_mask_;
  }
  bool operator==(const PauliString& other) const {
    return same_axes(other) && phase_ == other.phase_;
  }

  /// Keeps only the given qubits (in order) as a new, narrower string.
  /// The phase of the restriction keeps the i-factors of the retained Ys.
  PauliString restrict_to(const std::vector<uint32_t>& qubits) const;
  /// Embeds this string into a wider register at the given positions.
  PauliString embed(uint32_t new_width, const std::vector<uint32_t>& positions) const;

  std::string str() const;

 private:
  PauliString(uint32_t width, uint64_t x, uint64_t z, uint8_t phase)
      : width_(width), x_mask_(x), z_mask_(z), phase_(phase & 3) {}
  uint32_t count_y() const;

  uint32_t width_ = 0;
  uint64_t x_mask_ = 0;
  uint64_t z_mask_ = 0;
  uint8_t phase_ = 0;
};

inline bool commutes(const PauliString& p, const PauliString& q) { return p.commutes_with(q); }
inline PauliString multiply(const PauliString& p, const PauliString& q) { return p.times(q); }

/// The gate set through which distortions are propagated exactly. S is the
/// phase gate diag(1, i); RY90 is exp(-i sign pi sigma_y / 4).
struct StabilizerGate {
  enum class Kind : uint8_t { CNOT, H, S, RY90 };
  Kind kind;
  uint32_t q0 = 0;  // target (H, S, RY90) or control (CNOT)
  uint32_t q1 = 0;  // CNOT target
  int sign = +1;    // RY90 only

  static StabilizerGate cnot(uint32_t control, uint32_t target) {
    return {Kind::CNOT, control, target, +1};
  }
  static StabilizerGate h(uint32_t q) { return {Kind::H, q, 0, +1}; }
  static StabilizerGate s(uint32_t q) { return {Kind::S, q, 0, +1}; }
  static StabilizerGate ry90(uint32_t q, int sign) { return {Kind::RY90, q, 0, sign}; }
};

/// Returns p' with matrix(g) * matrix(p) == matrix(p') * matrix(g), exactly
/// (phase included).
PauliString propagate_through_stabilizer(const StabilizerGate& g, const PauliString& p);

}  // namespace nlm
