// code5.hpp - the five-qubit code: encoding, discrete error basis, syndrome
// decomposition and correction.
#pragma once

#include <array>

#include "qivar/errormodel.hpp"
#include "qivar/statevec.hpp"

namespace qivar {

// Sign patterns of the logical codewords: entry k of logical_zero_signs is the
// sign of basis state |k> in 4*|0_L> (0 where absent), likewise for |1_L>.
extern const std::array<int, 32> logical_zero_signs;
extern const std::array<int, 32> logical_one_signs;

enum class PauliKind { X, Y, Z };

// Syndrome indexing: 0 = identity, 1..5 = X_0..X_4, 6..10 = Y_0..Y_4,
// 11..15 = Z_0..Z_4.
int syndrome_of(PauliKind k, int qubit);

// Unit 4-vector of logical coordinates; the encoded qubit is
// (w0 + i w1)|0_L> + (w2 + i w3)|1_L>.
struct LogicalCoords {
  std::array<double, 4> w;

  explicit LogicalCoords(const std::array<double, 4>& coords);
  static LogicalCoords random(RngStream& rng);

  cplx alpha() const { return {w[0], w[1]}; }
  cplx beta() const { return {w[2], w[3]}; }
};

// Precomputed code data: codewords, the 16 discrete errors E_s, and the
// change of basis M whose columns are E_s|0_L>, E_s|1_L>.
class CodeTables {
 public:
  static const CodeTables& instance();

  const State& logical_zero() const { return zero_; }
  const State& logical_one() const { return one_; }
  const Mat& error(int s) const;  // s = 0..15
  const Mat& basis_matrix() const { return m_; }
  const Mat& basis_matrix_dagger() const { return m_dag_; }

 private:
  CodeTables();
  State zero_, one_;
  std::array<Mat, 16> errors_;
  Mat m_, m_dag_;
};

State encode(const LogicalCoords& w);

struct SyndromeDecomposition {
  std::array<cplx, 32> betas;     // coordinates in the error basis
  std::array<double, 16> probs;   // P_s = |beta_2s|^2 + |beta_2s+1|^2
};

SyndromeDecomposition decompose(const State& psi);

// Normalized logical pair after observing syndrome s; throws std::domain_error
// when P_s vanishes (unreachable syndrome).
std::array<cplx, 2> corrected_state(const SyndromeDecomposition& d, int s);

// Numeric generators of the syndrome amplitudes at fixed angles:
// beta_2s = (a+ib) alpha' + (c+id) beta' for logical input, with
// a_s + i b_s read off the image of |0_L> and c_s + i d_s off |1_L>.
struct GeneratorTable {
  std::array<double, 16> a, b, c, d;
};
GeneratorTable beta_generators(const AngleSample& angles);

}  // namespace qivar
