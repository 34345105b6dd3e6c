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

#include "nlm/statevector.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <bit>
#include <cmath>

namespace nlm {

namespace {
constexpr double kSqrtHalf = 0.70710678118654752440;

// Phi_k amplitude at basis (a, b): (sigma_k)[b][a] / sqrt(2).
const Amp kBellAmp[4][2][2] = {
    {{kSqrtHalf, 0.0}, {0.0, kSqrtHalf}},                      // Phi_0
    {{0.0, kSqrtHalf}, {kSqrtHalf, 0.0}},                      // Phi_1 (x)
    {{kSqrtHalf, 0.0}, {0.0, -kSqrtHalf}},                     // Phi_2 (z)
    {{0.0, Amp(0, kSqrtHalf)}, {Amp(0, -kSqrtHalf), 0.0}},     // Phi_3 (y)
};
}  // namespace

StateVector StateVector::zero_state(uint32_t width) { return basis_state(width, 0); }

StateVector StateVector::basis_state(uint32_t width, uint64_t index) {
  if (width == 0 || width > 26) throw std::invalid_argument("state width out of range");
  StateVector s;
  s.width_ = width;
  s.amps_.assign(uint64_t{1} << width, Amp(0));
  s.amps_.at(index) = Amp(1);
  return s;
}

StateVector StateVector::from_amplitudes(uint32_t width, std::vector<Amp> amps) {
  if (amps.size() != (uint64_t{1} << width)) {
    throw std::invalid_argument("amplitude count does not match width");
  }
  StateVector s;
  s.width_ = width;
  s.amps_ = std::move(amps);
  double n = s.norm_sq();
  if (std::abs(n - 1.0) > 1e-8) throw std::invalid_argument("state not normalized");
  s.renormalize();
  return s;
}

StateVector StateVector::random_state(uint32_t width, RngStream& rng) {
  StateVector s;
  s.width_ = width;
  s.amps_.resize(uint64_t{1} << width);
  for (auto& a : s.amps_) {
    // Box-Muller; Haar-uniform after normalization.
    double u1 = std::max(rng.next_double(), 1e-300);
    double u2 = rng.next_double();
    double r = std::sqrt(-2.0 * std::log(u1));
    a = Amp(r * std::cos(2 * M_PI * u2), r * std::sin(2 * M_PI * u2));
  }
  s.renormalize();
  return s;
}

double StateVector::norm_sq() const {
  double n = 0;
  for (const auto& a : amps_) n += std::norm(a);
  return n;
}

void StateVector::renormalize() {
  double n = std::sqrt(norm_sq());
  if (n <= 0) throw std::runtime_error("cannot renormalize zero state");
  for (auto& a : amps_) a /= n;
}

void StateVector::apply_unitary(const std::vector<Amp>& u, const std::vector<uint32_t>& targets) {
  size_t k = targets.size();
  size_t dim = size_t{1} << k;
  if (u.size() != dim * dim) throw std::invalid_argument("unitary size mismatch");
  for (size_t i = 0; i < dim; ++i) {
    for (size_t j = 0; j < dim; ++j) {
      Amp dot(0);
      for (size_t m = 0; m < dim; ++m) dot += std::conj(u[m * dim + i]) * u[m * dim + j];
      if (std::abs(dot - (i == j ? Amp(1) : Amp(0))) > kNormTol) {
        throw std::invalid_argument("matrix is not unitary");
      }
    }
  }
  for (size_t i = 0; i < k; ++i) {
    for (size_t j = i + 1; j < k; ++j) {
      if (targets[i] == targets[j]) throw std::invalid_argument("duplicate target qubit");
    }
  }
  apply_unitary_unchecked(u, targets);
}

void StateVector::apply_unitary_unchecked(const std::vector<Amp>& u,
                                          const std::vector<uint32_t>& targets) {
  size_t k = targets.size();
  size_t dim = size_t{1} << k;
  uint64_t mask = 0;
  for (uint32_t t : targets) {
    if (t >= width_) throw std::out_of_range("target qubit out of range");
    mask |= uint64_t{1} << t;
  }
  std::vector<Amp> scratch(dim);
  uint64_t n = this->dim();
  // Iterate over the subspace complement; gather/scatter the target block.
  for (uint64_t base = 0; base < n; ++base) {
    if (base & mask) continue;
    for (size_t row = 0; row < dim; ++row) {
      uint64_t idx = base;
      for (size_t b = 0; b < k; ++b) {
        if (row & (size_t{1} << b)) idx |= uint64_t{1} << targets[b];
      }
      scratch[row] = amps_[idx];
    }
    for (size_t row = 0; row < dim; ++row) {
      Amp acc(0);
      for (size_t col = 0; col < dim; ++col) acc += u[row * dim + col] * scratch[col];
      uint64_t idx = base;
      for (size_t b = 0; b < k; ++b) {
        if (row & (size_t{1} << b)) idx |= uint64_t{1} << targets[b];
      }
      amps_[idx] = acc;
    }
  }
}

void StateVector::apply_rotation(const PauliString& axis, double theta) {
  if (axis.width() != width_) throw std::invalid_argument("rotation axis width mismatch");
  double c = std::cos(theta / 2), s = std::sin(theta / 2);
  std::vector<Amp> out(amps_.size());
  uint64_t x = axis.x_mask(), z = axis.z_mask();
  // i^phase overall factor of sigma_j
  Amp phase(1);
  switch (axis.phase_exp() & 3) {
    case 0: phase = Amp(1, 0); break;
    case 1: phase = Amp(0, 1); break;
    case 2: phase = Amp(-1, 0); break;
    case 3: phase = Amp(0, -1); break;
  }
  Amp mis = Amp(0, -s) * phase;
  for (uint64_t i = 0; i < amps_.size(); ++i) {
    double sign = (std::popcount(i & z) & 1) ? -1.0 : 1.0;
    out[i ^ x] = mis * sign * amps_[i];
  }
  for (uint64_t i = 0; i < amps_.size(); ++i) out[i] += c * amps_[i];
  amps_ = std::move(out);
}

void StateVector::apply_pauli(const PauliString& p) {
  if (p.width() != width_) throw std::invalid_argument("pauli width mismatch");
  std::vector<Amp> out(amps_.size());
  uint64_t x = p.x_mask(), z = p.z_mask();
  Amp phase(1);
  switch (p.phase_exp() & 3) {
    case 0: phase = Amp(1, 0); break;
    case 1: phase = Amp(0, 1); break;
    case 2: phase = Amp(-1, 0); break;
    case 3: phase = Amp(0, -1); break;
  }
  for (uint64_t i = 0; i < amps_.size(); ++i) {
    double sign = (std::popcount(i & z) & 1) ? -1.0 : 1.0;
    out[i ^ x] = phase * sign * amps_[i];
  }
  amps_ = std::move(out);
}

void StateVector::apply_gate(const StabilizerGate& g) {
  switch (g.kind) {
    case StabilizerGate::Kind::CNOT: {
      uint64_t cbit = uint64_t{1} << g.q0, tbit = uint64_t{1} << g.q1;
      for (uint64_t i = 0; i < amps_.size(); ++i) {
        if ((i & cbit) && !(i & tbit)) std::swap(amps_[i], amps_[i | tbit]);
      }
      break;
    }
    case StabilizerGate::Kind::H: {
      const std::vector<Amp> h = {kSqrtHalf, kSqrtHalf, kSqrtHalf, -kSqrtHalf};
      apply_unitary_unchecked(h, {g.q0});
      break;
    }
    case StabilizerGate::Kind::S: {
      uint64_t bit = uint64_t{1} << g.q0;
      for (uint64_t i = 0; i < amps_.size(); ++i) {
        if (i & bit) amps_[i] *= Amp(0, 1);
      }
      break;
    }
    case StabilizerGate::Kind::RY90: {
      double a = (g.sign >= 0 ? 1.0 : -1.0) * M_PI / 2;
      double c = std::cos(a / 2), s = std::sin(a / 2);
      const std::vector<Amp> m = {c, -s, s, c};
      apply_unitary_unchecked(m, {g.q0});
      break;
    }
  }
}

double StateVector::prob_z_one(uint32_t qubit) const {
  uint64_t bit = uint64_t{1} << qubit;
  double p = 0;
  for (uint64_t i = 0; i < amps_.size(); ++i) {
    if (i & bit) p += std::norm(amps_[i]);
  }
  return p;
}

int StateVector::measure_z(uint32_t qubit, RngStream& rng) {
  double p1 = prob_z_one(qubit);
  int bit = rng.next_double() < p1 ? 1 : 0;
  project_z(qubit, bit);
  return bit;
}

void StateVector::project_z(uint32_t qubit, int bit) {
  uint64_t mask = uint64_t{1} << qubit;
  double kept = 0;
  for (uint64_t i = 0; i < amps_.size(); ++i) {
    bool one = (i & mask) != 0;
    if (one != (bit == 1)) {
      amps_[i] = Amp(0);
    } else {
      kept += std::norm(amps_[i]);
    }
  }
  if (kept < 1e-14) throw std::runtime_error("projected onto a zero-probability branch");
  renormalize();
}

BellLabel StateVector::bell_measure(uint32_t qa, uint32_t qb, RngStream& rng) {
  if (qa == qb || qa >= width_ || qb >= width_) throw std::invalid_argument("bad Bell pair");
  uint64_t abit = uint64_t{1} << qa, bbit = uint64_t{1} << qb;
  double probs[4] = {0, 0, 0, 0};
  for (uint64_t i = 0; i < amps_.size(); ++i) {
    if (i & (abit | bbit)) continue;
    for (int k = 0; k < 4; ++k) {
      Amp contr(0);
      for (int a = 0; a < 2; ++a) {
        for (int b = 0; b < 2; ++b) {
          uint64_t idx = i | (a ? abit : 0) | (b ? bbit : 0);
          contr += std::conj(kBellAmp[k][a][b]) * amps_[idx];
        }
      }
      probs[k] += std::norm(contr);
    }
  }
  double r = rng.next_double() * (probs[0] + probs[1] + probs[2] + probs[3]);
  int k = 0;
  double acc = 0;
  for (; k < 3; ++k) {
    acc += probs[k];
    if (r < acc) break;
  }
  project_bell(qa, qb, static_cast<BellLabel>(k));
  return static_cast<BellLabel>(k);
}

void StateVector::project_bell(uint32_t qa, uint32_t qb, BellLabel k) {
  uint64_t abit = uint64_t{1} << qa, bbit = uint64_t{1} << qb;
  double kept = 0;
  for (uint64_t i = 0; i < amps_.size(); ++i) {
    if (i & (abit | bbit)) continue;
    Amp contr(0);
    for (int a = 0; a < 2; ++a) {
      for (int b = 0; b < 2; ++b) {
        uint64_t idx = i | (a ? abit : 0) | (b ? bbit : 0);
        contr += std::conj(kBellAmp[k][a][b]) * amps_[idx];
      }
    }
    // Demolition: the measured pair is reset to |00>.
    amps_[i] = contr;
    amps_[i | abit] = Amp(0);
    amps_[i | bbit] = Amp(0);
    amps_[i | abit | bbit] = Amp(0);
    kept += std::norm(contr);
  }
  if (kept < 1e-14) throw std::runtime_error("Bell projection onto zero-probability outcome");
  renormalize();
}

void StateVector::prepare_phi0(uint32_t qa, uint32_t qb) {
  uint64_t abit = uint64_t{1} << qa, bbit = uint64_t{1} << qb;
  for (uint64_t i = 0; i < amps_.size(); ++i) {
    if (i & (abit | bbit)) continue;
    Amp v = amps_[i];
    amps_[i] = v * kSqrtHalf;
    amps_[i | abit | bbit] = v * kSqrtHalf;
  }
}

void StateVector::append_qubits(uint32_t count) {
  if (width_ + count > 26) throw std::invalid_argument("register too wide");
  amps_.resize(uint64_t{1} << (width_ + count), Amp(0));
  width_ += count;
}

void StateVector::remove_top_qubits(uint32_t count) {
  if (count >= width_) throw std::invalid_argument("cannot remove that many qubits");
  uint64_t keep = uint64_t{1} << (width_ - count);
  double dropped = 0;
  for (uint64_t i = keep; i < amps_.size(); ++i) dropped += std::norm(amps_[i]);
  if (dropped > 1e-12) {
    throw std::runtime_error("top qubits are not in |0> while removing");
  }
  amps_.resize(keep);
  width_ -= count;
  renormalize();
}

void StateVector::swap_qubits(uint32_t a, uint32_t b) {
  if (a == b) return;
  uint64_t abit = uint64_t{1} << a, bbit = uint64_t{1} << b;
  for (uint64_t i = 0; i < amps_.size(); ++i) {
    bool ai = (i & abit) != 0, bi = (i & bbit) != 0;
    if (ai && !bi) std::swap(amps_[i], amps_[(i & ~abit) | bbit]);
  }
}

Amp StateVector::inner(const StateVector& other) const {
  if (width_ != other.width_) throw std::invalid_argument("width mismatch in inner product");
  Amp acc(0);
  for (uint64_t i = 0; i < amps_.size(); ++i) acc += std::conj(amps_[i]) * other.amps_[i];
  return acc;
}

double StateVector::fidelity(const StateVector& other) const { return std::abs(inner(other)); }

SchmidtForm schmidt(const StateVector& s, uint32_t v) {
  if (v == 0 || v >= s.width()) throw std::invalid_argument("bad bipartition");
  uint32_t w = s.width() - v;
  uint64_t da = uint64_t{1} << v, db = uint64_t{1} << w;
  Eigen::MatrixXcd m(da, db);
  for (uint64_t a = 0; a < da; ++a) {
    for (uint64_t b = 0; b < db; ++b) m(a, b) = s.amp(a | (b << v));
  }
  Eigen::MatrixXcd rho = m * m.adjoint();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(rho);
  if (solver.info() != Eigen::Success) throw std::runtime_error("eigensolver failed");

  struct Entry {
    double lambda;
    Eigen::VectorXcd a, b;
  };
  std::vector<Entry> entries;
  for (int64_t idx = static_cast<int64_t>(da) - 1; idx >= 0; --idx) {
    double ev = solver.eigenvalues()(idx);
    if (ev < 1e-20) continue;
    double lambda = std::sqrt(std::max(ev, 0.0));
    Eigen::VectorXcd ua = solver.eigenvectors().col(idx);
    // Phase convention: largest-magnitude component real positive.
    int argmax = 0;
    for (int i = 1; i < ua.size(); ++i) {
      if (std::abs(ua(i)) > std::abs(ua(argmax))) argmax = i;
    }
    Amp ph = ua(argmax) / std::abs(ua(argmax));
    ua /= ph;
    Eigen::VectorXcd ub = (ua.adjoint() * m).transpose() / lambda;
    entries.push_back({lambda, ua, ub});
  }
  std::stable_sort(entries.begin(), entries.end(), [](const Entry& lhs, const Entry& rhs) {
    if (std::abs(lhs.lambda - rhs.lambda) > 1e-9) return lhs.lambda > rhs.lambda;
    for (int i = 0; i < lhs.a.size(); ++i) {
      double dr = lhs.a(i).real() - rhs.a(i).real();
      if (std::abs(dr) > 1e-9) return dr > 0;
      double di = lhs.a(i).imag() - rhs.a(i).imag();
      if (std::abs(di) > 1e-9) return di > 0;
    }
    return false;
  });

  SchmidtForm form;
  form.v = v;
  form.w = w;
  for (const auto& e : entries) {
    form.coeffs.push_back(e.lambda);
    form.basis_a.emplace_back(e.a.data(), e.a.data() + e.a.size());
    form.basis_b.emplace_back(e.b.data(), e.b.data() + e.b.size());
  }
  return form;
}

StateVector state_from_schmidt(const SchmidtForm& form) {
  uint64_t da = uint64_t{1} << form.v, db = uint64_t{1} << form.w;
  std::vector<Amp> amps(da * db, Amp(0));
  for (uint32_t alpha = 0; alpha < form.rank(); ++alpha) {
    for (uint64_t a = 0; a < da; ++a) {
      for (uint64_t b = 0; b < db; ++b) {
        amps[a | (b << form.v)] +=
            form.coeffs[alpha] * form.basis_a[alpha][a] * form.basis_b[alpha][b];
      }
    }
  }
  return StateVector::from_amplitudes(form.v + form.w, std::move(amps));
}

}  // namespace nlm
