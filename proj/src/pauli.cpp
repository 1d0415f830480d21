// Copyright 2026 The tlqc Authors
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

#include "tlqc/pauli.hpp"

#include <bit>
#include <cstdint>
#include <stdexcept>

#include "tlqc/gates.hpp"

namespace tlqc {

namespace {

const Complex kPhases[4] = {Complex{1, 0}, Complex{0, 1}, Complex{-1, 0},
                            Complex{0, -1}};

void check_size(const PhasedPauli& p) {
  if (p.num_qubits < 1 ||
      p.x.size() != static_cast<std::size_t>(p.num_qubits) ||
      p.z.size() != static_cast<std::size_t>(p.num_qubits)) {
    throw std::invalid_argument("PhasedPauli has inconsistent size");
  }
}

std::uint64_t bits_to_mask(const std::vector<std::uint8_t>& bits, int n) {
  std::uint64_t mask = 0;
  for (int q = 1; q <= n; ++q) {
    if (bits[q - 1]) mask |= std::uint64_t{1} << qubit_shift(n, q);
  }
  return mask;
}

}  // namespace

PhasedPauli pauli_identity(int num_qubits) {
  PhasedPauli p;
  p.num_qubits = num_qubits;
  p.phase_pow = 0;
  p.x.assign(num_qubits, 0);
  p.z.assign(num_qubits, 0);
  return p;
}

PhasedPauli make_w(int i, int j) {
  PhasedPauli p = pauli_identity(1);
  p.x[0] = static_cast<std::uint8_t>(i & 1);
  p.z[0] = static_cast<std::uint8_t>(j & 1);
  return p;
}

PhasedPauli make_zx_form(int sign_pow, int a, int b) {
  PhasedPauli p = pauli_identity(1);
  p.x[0] = static_cast<std::uint8_t>(b & 1);
  p.z[0] = static_cast<std::uint8_t>(a & 1);
  // Z^a X^b = (-1)^(ab) X^b Z^a.
  p.phase_pow = static_cast<unsigned>((2 * (sign_pow & 1) + 2 * (a & b & 1)) % 4);
  return p;
}

Complex phase_value(const PhasedPauli& p) { return kPhases[p.phase_pow % 4]; }

Matrix to_matrix(const PhasedPauli& p) {
  check_size(p);
  const int n = p.num_qubits;
  const std::int64_t dim = std::int64_t{1} << n;
  const std::uint64_t xm = bits_to_mask(p.x, n);
  const std::uint64_t zm = bits_to_mask(p.z, n);
  Matrix m = Matrix::Zero(dim, dim);
  const Complex ph = phase_value(p);
  for (std::int64_t c = 0; c < dim; ++c) {
    const auto uc = static_cast<std::uint64_t>(c);
    const double sign = (std::popcount(zm & uc) & 1) ? -1.0 : 1.0;
    m(static_cast<std::int64_t>(uc ^ xm), c) = ph * sign;
  }
  return m;
}

PhasedPauli multiply(const PhasedPauli& a, const PhasedPauli& b) {
  check_size(a);
  check_size(b);
  if (a.num_qubits != b.num_qubits) {
    throw std::invalid_argument("PhasedPauli size mismatch");
  }
  PhasedPauli r = pauli_identity(a.num_qubits);
  unsigned pow = a.phase_pow + b.phase_pow;
  for (int k = 0; k < a.num_qubits; ++k) {
    // Z^za X^xb = (-1)^(za xb) X^xb Z^za when commuting b's X past a's Z.
    pow += 2u * (a.z[k] & b.x[k]);
    r.x[k] = a.x[k] ^ b.x[k];
    r.z[k] = a.z[k] ^ b.z[k];
  }
  r.phase_pow = pow % 4;
  return r;
}

PhasedPauli transpose(const PhasedPauli& p) {
  check_size(p);
  PhasedPauli r = p;
  unsigned pow = p.phase_pow;
  for (int k = 0; k < p.num_qubits; ++k) pow += 2u * (p.x[k] & p.z[k]);
  r.phase_pow = pow % 4;
  return r;
}

PhasedPauli adjoint(const PhasedPauli& p) {
  check_size(p);
  PhasedPauli r = p;
  unsigned pow = (4 - p.phase_pow % 4) % 4;
  for (int k = 0; k < p.num_qubits; ++k) pow += 2u * (p.x[k] & p.z[k]);
  r.phase_pow = pow % 4;
  return r;
}

PhasedPauli tensor(const PhasedPauli& a, const PhasedPauli& b) {
  check_size(a);
  check_size(b);
  PhasedPauli r;
  r.num_qubits = a.num_qubits + b.num_qubits;
  r.phase_pow = (a.phase_pow + b.phase_pow) % 4;
  r.x = a.x;
  r.x.insert(r.x.end(), b.x.begin(), b.x.end());
  r.z = a.z;
  r.z.insert(r.z.end(), b.z.begin(), b.z.end());
  return r;
}

bool equal(const PhasedPauli& a, const PhasedPauli& b) {
  return a.num_qubits == b.num_qubits &&
         a.phase_pow % 4 == b.phase_pow % 4 && a.x == b.x && a.z == b.z;
}

std::string render(const PhasedPauli& p) {
  check_size(p);
  static const char* kPrefix[4] = {"", "i", "-", "-i"};
  std::string out = kPrefix[p.phase_pow % 4];
  std::string body;
  for (int q = 1; q <= p.num_qubits; ++q) {
    const std::string sub = p.num_qubits >= 2 ? std::to_string(q) : "";
    if (p.x[q - 1]) body += "X" + sub;
    if (p.z[q - 1]) body += "Z" + sub;
  }
  if (body.empty()) body = "1";
  return out + body;
}

std::string render_phase(const PhasedPauli& p) {
  static const char* kPhase[4] = {"+1", "+i", "-1", "-i"};
  return kPhase[p.phase_pow % 4];
}

std::string render_word(const PhasedPauli& p) {
  PhasedPauli bare = p;
  bare.phase_pow = 0;
  return render(bare);
}

std::optional<PhasedPauli> recognize_pauli(const Matrix& m, double tol) {
  const auto dim = m.rows();
  if (dim < 2 || m.cols() != dim || (dim & (dim - 1)) != 0) return std::nullopt;
  int n = 0;
  while ((std::int64_t{1} << n) < dim) ++n;

  // Column 0: the Z factors act trivially, so the single nonzero row gives
  // the X mask and the entry gives the phase.
  std::int64_t r0 = 0;
  double best = 0.0;
  for (std::int64_t r = 0; r < dim; ++r) {
    const double a = std::abs(m(r, 0));
    if (a > best) {
      best = a;
      r0 = r;
    }
  }
  if (best < 0.5) return std::nullopt;
  const Complex phase = m(r0, 0);

  unsigned phase_pow = 0;
  double snap = std::abs(phase - kPhases[0]);
  for (unsigned k = 1; k < 4; ++k) {
    const double d = std::abs(phase - kPhases[k]);
    if (d < snap) {
      snap = d;
      phase_pow = k;
    }
  }
  if (snap > tol) return std::nullopt;

  PhasedPauli cand = pauli_identity(n);
  cand.phase_pow = phase_pow;
  const auto xm = static_cast<std::uint64_t>(r0);
  for (int q = 1; q <= n; ++q) {
    const std::uint64_t bit = std::uint64_t{1} << qubit_shift(n, q);
    cand.x[q - 1] = (xm & bit) ? 1 : 0;
    const auto c = static_cast<std::int64_t>(bit);
    const Complex val = m(static_cast<std::int64_t>(bit ^ xm), c);
    cand.z[q - 1] = (std::abs(val + phase) < std::abs(val - phase)) ? 1 : 0;
  }
  if (max_abs_diff(m, to_matrix(cand)) > tol) return std::nullopt;
  return cand;
}

ConjugationResult conjugate_by(const Matrix& u, const PhasedPauli& p,
                               double tol) {
  ConjugationResult res;
  res.raw = u * to_matrix(p) * dagger(u);
  auto rec = recognize_pauli(res.raw, tol);
  res.is_pauli = rec.has_value();
  if (rec) res.pauli = *rec;
  return res;
}

CliffordTable clifford_table(const Matrix& u, double tol) {
  const auto dim = u.rows();
  int n = 0;
  while ((std::int64_t{1} << n) < dim) ++n;
  if ((std::int64_t{1} << n) != dim || u.cols() != dim) {
    throw std::invalid_argument("clifford_table requires a square 2^n matrix");
  }
  CliffordTable table;
  table.is_clifford = true;
  for (int kind = 0; kind < 2; ++kind) {
    for (int q = 1; q <= n; ++q) {
      PhasedPauli gen = pauli_identity(n);
      if (kind == 0) {
        gen.x[q - 1] = 1;
      } else {
        gen.z[q - 1] = 1;
      }
      ConjugationResult conj = conjugate_by(u, gen, tol);
      CliffordImage img;
      img.generator = (kind == 0 ? "X" : "Z") + std::to_string(q);
      img.is_pauli = conj.is_pauli;
      img.image = conj.pauli;
      img.raw = conj.raw;
      if (!conj.is_pauli) table.is_clifford = false;
      table.images.push_back(std::move(img));
    }
  }
  return table;
}

bool check_decomposition(const Matrix& u,
                         const std::vector<GateApplication>& word, int n,
                         double tol) {
  const std::int64_t dim = std::int64_t{1} << n;
  Matrix acc = Matrix::Identity(dim, dim);
  for (const GateApplication& g : word) {
    const Matrix gate = gate_by_name(g.name);
    acc = embed_on_qubits(gate, g.qubits, n) * acc;
  }
  if (u.rows() != dim || u.cols() != dim) return false;
  return equal_up_to_global_phase(u, acc, tol).match;
}

}  // namespace tlqc
