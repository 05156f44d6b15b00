#include "qivar/code5.hpp"

#include <cmath>
#include <stdexcept>

namespace qivar {

// clang-format off
const std::array<int, 32> logical_zero_signs = {
    +1,  0,  0, -1,  0, +1, -1,  0,
     0, +1, +1,  0, -1,  0,  0, -1,
     0, -1, +1,  0, +1,  0,  0, -1,
    -1,  0,  0, -1,  0, -1, -1,  0,
};
const std::array<int, 32> logical_one_signs = {
     0, -1, -1,  0, -1,  0,  0, -1,
    -1,  0,  0, +1,  0, +1, -1,  0,
    -1,  0,  0, -1,  0, +1, +1,  0,
     0, -1, +1,  0, -1,  0,  0, +1,
};
// clang-format on

int syndrome_of(PauliKind k, int qubit) {
  if (qubit < 0 || qubit > 4) throw std::invalid_argument("qubit out of range");
  switch (k) {
    case PauliKind::X:
      return 1 + qubit;
    case PauliKind::Y:
      return 6 + qubit;
    case PauliKind::Z:
      return 11 + qubit;
  }
  throw std::invalid_argument("bad pauli kind");
}

LogicalCoords::LogicalCoords(const std::array<double, 4>& coords) : w(coords) {
  const double n2 = w[0] * w[0] + w[1] * w[1] + w[2] * w[2] + w[3] * w[3];
  if (std::abs(n2 - 1.0) > 1e-12)
    throw std::invalid_argument("logical coordinates must be a unit 4-vector");
}

LogicalCoords LogicalCoords::random(RngStream& rng) {
  return LogicalCoords(random_logical_coords(rng));
}

namespace {

State state_from_signs(const std::array<int, 32>& signs) {
  std::vector<cplx> amps(32);
  for (int i = 0; i < 32; ++i) amps[i] = 0.25 * signs[i];
  return State(5, std::move(amps));
}

Mat pauli(PauliKind k) {
  Mat m(2);
  switch (k) {
    case PauliKind::X:
      m(0, 1) = 1.0;
      m(1, 0) = 1.0;
      break;
    case PauliKind::Y:
      m(0, 1) = {0.0, -1.0};
      m(1, 0) = {0.0, 1.0};
      break;
    case PauliKind::Z:
      m(0, 0) = 1.0;
      m(1, 1) = -1.0;
      break;
  }
  return m;
}

Mat one_qubit_error(PauliKind k, int qubit) {
  Mat out = (qubit == 0) ? pauli(k) : Mat::identity(2);
  for (int u = 1; u < 5; ++u)
    out = tensor(out, (u == qubit) ? pauli(k) : Mat::identity(2));
  return out;
}

}  // namespace

CodeTables::CodeTables()
    : zero_(state_from_signs(logical_zero_signs)),
      one_(state_from_signs(logical_one_signs)),
      errors_{Mat::identity(32), one_qubit_error(PauliKind::X, 0),
              one_qubit_error(PauliKind::X, 1), one_qubit_error(PauliKind::X, 2),
              one_qubit_error(PauliKind::X, 3), one_qubit_error(PauliKind::X, 4),
              one_qubit_error(PauliKind::Y, 0), one_qubit_error(PauliKind::Y, 1),
              one_qubit_error(PauliKind::Y, 2), one_qubit_error(PauliKind::Y, 3),
              one_qubit_error(PauliKind::Y, 4), one_qubit_error(PauliKind::Z, 0),
              one_qubit_error(PauliKind::Z, 1), one_qubit_error(PauliKind::Z, 2),
              one_qubit_error(PauliKind::Z, 3), one_qubit_error(PauliKind::Z, 4)},
      m_(32),
      m_dag_(32) {
  for (int s = 0; s < 16; ++s) {
    const State img0 = apply(errors_[s], zero_);
    const State img1 = apply(errors_[s], one_);
    for (int r = 0; r < 32; ++r) {
      m_(r, 2 * s) = img0[r];
      m_(r, 2 * s + 1) = img1[r];
    }
  }
  m_dag_ = dagger(m_);
}

const CodeTables& CodeTables::instance() {
  static const CodeTables tables;
  return tables;
}

const Mat& CodeTables::error(int s) const {
  if (s < 0 || s > 15) throw std::invalid_argument("syndrome out of range");
  return errors_[s];
}

State encode(const LogicalCoords& w) {
  const CodeTables& t = CodeTables::instance();
  std::vector<cplx> amps(32);
  const cplx a = w.alpha(), b = w.beta();
  for (int i = 0; i < 32; ++i)
    amps[i] = a * t.logical_zero()[i] + b * t.logical_one()[i];
  return State(5, std::move(amps));
}

SyndromeDecomposition decompose(const State& psi) {
  if (psi.dim() != 32)
    throw std::invalid_argument("decompose needs a five-qubit state");
  const Mat& md = CodeTables::instance().basis_matrix_dagger();
  SyndromeDecomposition out;
  for (int r = 0; r < 32; ++r) {
    cplx acc{0.0, 0.0};
    for (int c = 0; c < 32; ++c) acc += md(r, c) * psi[c];
    out.betas[r] = acc;
  }
  for (int s = 0; s < 16; ++s)
    out.probs[s] =
        std::norm(out.betas[2 * s]) + std::norm(out.betas[2 * s + 1]);
  return out;
}

std::array<cplx, 2> corrected_state(const SyndromeDecomposition& d, int s) {
  if (s < 0 || s > 15) throw std::invalid_argument("syndrome out of range");
  const double p = d.probs[s];
  if (p < 1e-15)
    throw std::domain_error("syndrome has vanishing probability");
  const double inv = 1.0 / std::sqrt(p);
  return {d.betas[2 * s] * inv, d.betas[2 * s + 1] * inv};
}

GeneratorTable beta_generators(const AngleSample& angles) {
  const CodeTables& t = CodeTables::instance();
  const Mat w = build_product_error(angles);
  const SyndromeDecomposition d0 = decompose(apply(w, t.logical_zero()));
  const SyndromeDecomposition d1 = decompose(apply(w, t.logical_one()));
  GeneratorTable out;
  for (int s = 0; s < 16; ++s) {
    out.a[s] = d0.betas[2 * s].real();
    out.b[s] = d0.betas[2 * s].imag();
    out.c[s] = d1.betas[2 * s].real();
    out.d[s] = d1.betas[2 * s].imag();
  }
  return out;
}

}  // namespace qivar
