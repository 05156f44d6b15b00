#include "qivar/statevec.hpp"

#include <cmath>
#include <stdexcept>

namespace qivar {

namespace {
constexpr std::size_t kMaxDim = 32;
}

State::State(int qubits, std::vector<cplx> amps)
    : qubits_(qubits), amps_(std::move(amps)) {
  if (qubits < 1 || qubits > 5)
    throw std::invalid_argument("state must have 1..5 qubits");
  if (amps_.size() != (std::size_t{1} << qubits))
    throw std::invalid_argument("amplitude count does not match qubit count");
  if (std::abs(norm_sq() - 1.0) > 1e-12)
    throw std::invalid_argument("state is not normalized");
}

State State::basis(int qubits, std::uint32_t index) {
  std::vector<cplx> a(std::size_t{1} << qubits, cplx{0.0, 0.0});
  a.at(index) = 1.0;
  return State(qubits, std::move(a));
}

double State::norm_sq() const {
  double s = 0.0;
  for (const cplx& z : amps_) s += std::norm(z);
  return s;
}

Mat Mat::identity(std::size_t dim) {
  Mat m(dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
  return m;
}

Mat operator*(const Mat& a, const Mat& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("dimension mismatch");
  Mat out(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t k = 0; k < a.dim(); ++k) {
      const cplx aik = a(i, k);
      if (aik == cplx{}) continue;
      for (std::size_t j = 0; j < a.dim(); ++j) out(i, j) += aik * b(k, j);
    }
  return out;
}

Mat dagger(const Mat& m) {
  Mat out(m.dim());
  for (std::size_t r = 0; r < m.dim(); ++r)
    for (std::size_t c = 0; c < m.dim(); ++c) out(c, r) = std::conj(m(r, c));
  return out;
}

bool is_unitary(const Mat& m, double tol) {
  const Mat p = dagger(m) * m;
  for (std::size_t r = 0; r < m.dim(); ++r)
    for (std::size_t c = 0; c < m.dim(); ++c) {
      const cplx want = (r == c) ? cplx{1.0, 0.0} : cplx{0.0, 0.0};
      if (std::abs(p(r, c) - want) > tol) return false;
    }
  return true;
}

Mat tensor(const Mat& a, const Mat& b) {
  const std::size_t dim = a.dim() * b.dim();
  if (dim > kMaxDim)
    throw std::length_error("tensor product exceeds five qubits");
  Mat out(dim);
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) {
      const cplx aij = a(i, j);
      if (aij == cplx{}) continue;
      for (std::size_t k = 0; k < b.dim(); ++k)
        for (std::size_t l = 0; l < b.dim(); ++l)
          out(i * b.dim() + k, j * b.dim() + l) = aij * b(k, l);
    }
  return out;
}

State apply(const Mat& u, const State& s) {
  if (u.dim() != s.dim()) throw std::invalid_argument("dimension mismatch");
  std::vector<cplx> out(s.dim());
  for (std::size_t r = 0; r < u.dim(); ++r) {
    cplx acc{0.0, 0.0};
    for (std::size_t c = 0; c < u.dim(); ++c) acc += u(r, c) * s[c];
    out[r] = acc;
  }
  return State(s.qubits(), std::move(out));
}

void apply_one_qubit(const cplx w[4], int qubit, int n_qubits, cplx* amps) {
  const std::size_t dim = std::size_t{1} << n_qubits;
  const std::size_t mask = std::size_t{1} << (n_qubits - 1 - qubit);
  for (std::size_t i = 0; i < dim; ++i) {
    if (i & mask) continue;
    const std::size_t j = i | mask;
    const cplx lo = amps[i], hi = amps[j];
    amps[i] = w[0] * lo + w[1] * hi;
    amps[j] = w[2] * lo + w[3] * hi;
  }
}

cplx inner(const State& a, const State& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("dimension mismatch");
  cplx acc{0.0, 0.0};
  for (std::size_t i = 0; i < a.dim(); ++i) acc += std::conj(a[i]) * b[i];
  return acc;
}

double dist_sq(const State& a, const State& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("dimension mismatch");
  double acc = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i) acc += std::norm(a[i] - b[i]);
  return acc;
}

std::array<double, 4> random_logical_coords(RngStream& rng) {
  while (true) {
    std::array<double, 4> w;
    rng.normal_pair(w[0], w[1]);
    rng.normal_pair(w[2], w[3]);
    const double r2 = w[0] * w[0] + w[1] * w[1] + w[2] * w[2] + w[3] * w[3];
    if (r2 < 1e-30) continue;
    const double inv = 1.0 / std::sqrt(r2);
    for (double& x : w) x *= inv;
    return w;
  }
}

}  // namespace qivar
