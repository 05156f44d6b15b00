// statevec.hpp - dense complex state vectors and unitaries for up to five qubits.
#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <vector>

#include "qivar/rng.hpp"

namespace qivar {

using cplx = std::complex<double>;

// Pure state on n qubits. Qubit 0 is the most significant bit of the index.
class State {
 public:
  State(int qubits, std::vector<cplx> amps);
  static State basis(int qubits, std::uint32_t index);

  int qubits() const { return qubits_; }
  std::size_t dim() const { return amps_.size(); }
  cplx& operator[](std::size_t i) { return amps_[i]; }
  const cplx& operator[](std::size_t i) const { return amps_[i]; }
  const std::vector<cplx>& amps() const { return amps_; }
  double norm_sq() const;

 private:
  int qubits_;
  std::vector<cplx> amps_;
};

// Dense square complex matrix, row major.
class Mat {
 public:
  explicit Mat(std::size_t dim) : dim_(dim), data_(dim * dim) {}
  static Mat identity(std::size_t dim);

  std::size_t dim() const { return dim_; }
  cplx& operator()(std::size_t r, std::size_t c) { return data_[r * dim_ + c]; }
  const cplx& operator()(std::size_t r, std::size_t c) const {
    return data_[r * dim_ + c];
  }

 private:
  std::size_t dim_;
  std::vector<cplx> data_;
};

Mat operator*(const Mat& a, const Mat& b);
Mat dagger(const Mat& m);
bool is_unitary(const Mat& m, double tol = 1e-12);

// Kronecker product; throws std::length_error past dimension 32.
Mat tensor(const Mat& a, const Mat& b);

// Matrix-vector product; throws std::invalid_argument on dimension mismatch.
State apply(const Mat& u, const State& s);

// Apply a 2x2 gate w (row major, length 4) to one qubit in place.
void apply_one_qubit(const cplx w[4], int qubit, int n_qubits, cplx* amps);

cplx inner(const State& a, const State& b);  // <a|b>
double dist_sq(const State& a, const State& b);

// Uniform point on the unit 3-sphere: four iid normals, normalized.
std::array<double, 4> random_logical_coords(RngStream& rng);

}  // namespace qivar
