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

#include "nlm/pauli.hpp"

#include <array>
#include <bit>

namespace nlm {

namespace {
constexpr uint32_t kMaxWidth = 63;

void check_width(uint32_t width) {
  if (width == 0 || width > kMaxWidth) {
    throw std::invalid_argument("PauliString width must be in [1, 63]");
  }
}
}  // namespace

char axis_char(PauliAxis a) {
  switch (a) {
    case PauliAxis::I: return 'I';
    case PauliAxis::X: return 'X';
    case PauliAxis::Z: return 'Z';
    case PauliAxis::Y: return 'Y';
  }
  return '?';
}

PauliAxis axis_from_char(char c) {
  switch (c) {
    case 'I': case 'i': case '_': return PauliAxis::I;
    case 'X': case 'x': return PauliAxis::X;
    case 'Z': case 'z': return PauliAxis::Z;
    case 'Y': case 'y': return PauliAxis::Y;
    default: throw std::invalid_argument(std::string("bad Pauli axis character: ") + c);
  }
}

PauliString PauliString::identity(uint32_t width) {
  check_width(width);
  return PauliString(width, 0, 0, 0);
}

PauliString PauliString::from_axes(const std::vector<PauliAxis>& axes, uint8_t phase) {
  check_width(static_cast<uint32_t>(axes.size()));
  PauliString p(static_cast<uint32_t>(axes.size()), 0, 0, phase);
  for (uint32_t q = 0; q < axes.size(); ++q) p.set_axis(q, axes[q]);
  return p;
}

PauliString PauliString::single(uint32_t width, uint32_t qubit, PauliAxis axis) {
  PauliString p = identity(width);
  p.set_axis(qubit, axis);
  return p;
}

PauliString PauliString::from_labels(const std::vector<BellLabel>& labels) {
  std::vector<PauliAxis> axes;
  axes.reserve(labels.size());
  for (BellLabel l : labels) {
    if (l > 3) throw std::invalid_argument("Bell label out of range");
    axes.push_back(static_cast<PauliAxis>(l));
  }
  return from_axes(axes);
}

PauliString PauliString::parse(const std::string& text) {
  size_t i = 0;
  uint8_t phase = 0;
  if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
    if (text[i] == '-') phase = 2;
    ++i;
  }
  if (i < text.size() && (text[i] == 'i' || text[i] == 'j')) {
    // Only treat as an imaginary marker when followed by axis characters;
    // a bare "i"/"I" suffix-free token is the identity axis.
    if (i + 1 < text.size()) {
      phase = static_cast<uint8_t>((phase + 1) & 3);
      ++i;
    }
  }
  std::vector<PauliAxis> axes;
  for (; i < text.size(); ++i) axes.push_back(axis_from_char(text[i]));
  if (axes.empty()) throw std::invalid_argument("empty Pauli string: " + text);
  PauliString p = from_axes(axes);
  p.phase_ = static_cast<uint8_t>((p.phase_ + phase) & 3);
  return p;
}

PauliAxis PauliString::axis_at(uint32_t qubit) const {
  uint32_t x = static_cast<uint32_t>((x_mask_ >> qubit) & 1);
  uint32_t z = static_cast<uint32_t>((z_mask_ >> qubit) & 1);
  return static_cast<PauliAxis>(x | (z << 1));
}

void PauliString::set_axis(uint32_t qubit, PauliAxis axis) {
  if (qubit >= width_) throw std::out_of_range("qubit out of range");
  // Remove the old i-factor if the slot held a Y, then install the new axis.
  if (axis_at(qubit) == PauliAxis::Y) phase_ = static_cast<uint8_t>((phase_ + 3) & 3);
  uint64_t bit = uint64_t{1} << qubit;
  uint8_t code = static_cast<uint8_t>(axis);
  x_mask_ = (x_mask_ & ~bit) | ((code & 1) ? bit : 0);
  z_mask_ = (z_mask_ & ~bit) | ((code & 2) ? bit : 0);
  if (axis == PauliAxis::Y) phase_ = static_cast<uint8_t>((phase_ + 1) & 3);
}

uint32_t PauliString::weight() const {
  return static_cast<uint32_t>(std::popcount(x_mask_ | z_mask_));
}

uint32_t PauliString::count_y() const {
  return static_cast<uint32_t>(std::popcount(x_mask_ & z_mask_));
}

bool PauliString::commutes_with(const PauliString& other) const {
  if (width_ != other.width_) {
    throw std::invalid_argument("PauliString width mismatch in commutes");
  }
  uint64_t anti = std::popcount(x_mask_ & other.z_mask_) + std::popcount(z_mask_ & other.x_mask_);
  return (anti & 1) == 0;
}

PauliString PauliString::times(const PauliString& other) const {
  if (width_ != other.width_) {
    throw std::invalid_argument("PauliString width mismatch in multiply");
  }
  // Moving other's X block left past this string's Z block gives one factor
  // of -1 per overlapping position.
  uint8_t phase = static_cast<uint8_t>(
      (phase_ + other.phase_ + 2 * std::popcount(z_mask_ & other.x_mask_)) & 3);
  return PauliString(width_, x_mask_ ^ other.x_mask_, z_mask_ ^ other.z_mask_, phase);
}

PauliString PauliString::phase_free() const {
  return PauliString(width_, x_mask_, z_mask_, static_cast<uint8_t>(count_y() & 3));
}

PauliString PauliString::restrict_to(const std::vector<uint32_t>& qubits) const {
  std::vector<PauliAxis> axes;
  axes.reserve(qubits.size());
  for (uint32_t q : qubits) {
    if (q >= width_) throw std::out_of_range("restrict_to qubit out of range");
    axes.push_back(axis_at(q));
  }
  return from_axes(axes);
}

PauliString PauliString::embed(uint32_t new_width, const std::vector<uint32_t>& positions) const {
  if (positions.size() != width_) throw std::invalid_argument("embed position count mismatch");
  PauliString p = identity(new_width);
  for (uint32_t q = 0; q < width_; ++q) p.set_axis(positions[q], axis_at(q));
  // Keep any extra phase beyond the Y bookkeeping.
  uint8_t extra = static_cast<uint8_t>((phase_ + 4 - (count_y() & 3)) & 3);
  p.phase_ = static_cast<uint8_t>((p.phase_ + extra) & 3);
  return p;
}

std::string PauliString::str() const {
  static const std::array<const char*, 4> prefixes = {"+", "+i", "-", "-i"};
  uint8_t display = static_cast<uint8_t>((phase_ + 4 - (count_y() & 3)) & 3);
  std::string out = prefixes[display];
  for (uint32_t q = 0; q < width_; ++q) out += axis_char(axis_at(q));
  return out;
}

namespace {

// Per-axis conjugation tables: axis -> (new axis, sign). Derived from the
// dense 2x2 conjugations and checked exhaustively against the matrix oracle
// in the tests.
struct AxisMap {
  PauliAxis axis;
  int sign;
};

constexpr std::array<AxisMap, 4> kTableH = {{
    {PauliAxis::I, +1}, {PauliAxis::Z, +1}, {PauliAxis::X, +1}, {PauliAxis::Y, -1}}};
constexpr std::array<AxisMap, 4> kTableS = {{
    {PauliAxis::I, +1}, {PauliAxis::Y, +1}, {PauliAxis::Z, +1}, {PauliAxis::X, -1}}};
// exp(-i pi y/4): X -> -Z, Z -> X, Y -> Y
constexpr std::array<AxisMap, 4> kTableRyPlus = {{
    {PauliAxis::I, +1}, {PauliAxis::Z, -1}, {PauliAxis::X, +1}, {PauliAxis::Y, +1}}};
// exp(+i pi y/4): X -> Z, Z -> -X, Y -> Y
constexpr std::array<AxisMap, 4> kTableRyMinus = {{
    {PauliAxis::I, +1}, {PauliAxis::Z, +1}, {PauliAxis::X, -1}, {PauliAxis::Y, +1}}};

struct PairMap {
  PauliAxis control, target;
  int sign;
};

// CNOT conjugation on (control axis, target axis), indexed control*4+target.
constexpr std::array<PairMap, 16> kTableCnot = {{
    // control I
    {PauliAxis::I, PauliAxis::I, +1},
    {PauliAxis::I, PauliAxis::X, +1},
    {PauliAxis::Z, PauliAxis::Z, +1},
    {PauliAxis::Z, PauliAxis::Y, +1},
    // control X
    {PauliAxis::X, PauliAxis::X, +1},
    {PauliAxis::X, PauliAxis::I, +1},
    {PauliAxis::Y, PauliAxis::Y, -1},
    {PauliAxis::Y, PauliAxis::Z, +1},
    // control Z
    {PauliAxis::Z, PauliAxis::I, +1},
    {PauliAxis::Z, PauliAxis::X, +1},
    {PauliAxis::I, PauliAxis::Z, +1},
    {PauliAxis::I, PauliAxis::Y, +1},
    // control Y
    {PauliAxis::Y, PauliAxis::X, +1},
    {PauliAxis::Y, PauliAxis::I, +1},
    {PauliAxis::X, PauliAxis::Y, +1},
    {PauliAxis::X, PauliAxis::Z, -1},
}};

}  // namespace

PauliString propagate_through_stabilizer(const StabilizerGate& g, const PauliString& p) {
  if (g.q0 >= p.width() || (g.kind == StabilizerGate::Kind::CNOT && g.q1 >= p.width())) {
    throw std::out_of_range("stabilizer gate qubit out of range");
  }
  PauliString out = p;
  int sign = +1;
  switch (g.kind) {
    case StabilizerGate::Kind::H:
    case StabilizerGate::Kind::S:
    case StabilizerGate::Kind::RY90: {
      const auto& table = g.kind == StabilizerGate::Kind::H
                              ? kTableH
                              : g.kind == StabilizerGate::Kind::S
                                    ? kTableS
                                    : (g.sign >= 0 ? kTableRyPlus : kTableRyMinus);
      AxisMap m = table[static_cast<uint8_t>(p.axis_at(g.q0))];
      out.set_axis(g.q0, m.axis);
      sign = m.sign;
      break;
    }
    case StabilizerGate::Kind::CNOT: {
      if (g.q0 == g.q1) throw std::invalid_argument("CNOT control equals target");
      uint8_t idx = static_cast<uint8_t>(
          (static_cast<uint8_t>(p.axis_at(g.q0)) << 2) | static_cast<uint8_t>(p.axis_at(g.q1)));
      PairMap m = kTableCnot[idx];
      out.set_axis(g.q0, m.control);
      out.set_axis(g.q1, m.target);
      sign = m.sign;
      break;
    }
  }
  if (sign < 0) {
    // set_axis already maintained the Y bookkeeping; only the conjugation
    // sign (-1 == i^2) remains.
    PauliString neg = PauliString::from_axes(
        std::vector<PauliAxis>(p.width(), PauliAxis::I), 2);
    out = neg.times(out);
  }
  return out;
}

}  // namespace nlm
