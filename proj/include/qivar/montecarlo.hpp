// montecarlo.hpp - deterministic parallel Monte Carlo estimators.
#pragma once

#include <array>
#include <cstdint>
#include <string>

#include "qivar/errormodel.hpp"
#include "qivar/vars.hpp"

namespace qivar {

struct RunConfig {
  DistKind dist = DistKind::normal;
  double sigma = 0.5;
  std::string table_path;  // tabulated distributions only
  int n = 5;               // 1 or 5 qubits
  std::uint64_t samples = 1000000;
  std::uint64_t seed = 1;
  int workers = 1;

  ErrorDistribution distribution() const;
};

struct EstimateReport {
  std::string name;
  double value = 0.0;
  double std_error = 0.0;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
  double wall_seconds = 0.0;
};

// V(psi) = E[ || W phi - phi ||^2 ] for a fresh random logical state per draw.
EstimateReport estimate_v_psi(const RunConfig& cfg);

// Quantum variance V_q = 2 - 2 E[|<phi|W phi>|] and fidelity
// F = sqrt(E[|<phi|W phi>|^2]), with the sandwich
// 1 - V_q/2 <= F <= sqrt(1 - V_q/2).
struct VqReport {
  EstimateReport vq, fidelity;
  bool sandwich_ok = false;
};
VqReport estimate_vq_fidelity(const RunConfig& cfg);

// Syndrome probabilities of the five-qubit pipeline (n is forced to 5).
std::array<EstimateReport, 16> estimate_syndrome_probs(const RunConfig& cfg);

// Corrected-state variance. v_corrected averages sum_s P_s d_s^2 per sample;
// v_conditional[s] is the ratio estimate E[P_s d_s^2]/E[P_s] with a
// delta-method standard error; v_psi and gap = v_corrected - v_psi are
// estimated on the same draws (common random numbers).
struct CorrectedReport {
  EstimateReport v_corrected;
  std::array<EstimateReport, 16> v_conditional;
  EstimateReport v_psi;
  EstimateReport gap;
};
CorrectedReport estimate_v_corrected(const RunConfig& cfg);

// E[a_0 (1 - sqrt(P_0))], the exact gap term between V(corrected) and V(psi).
EstimateReport estimate_a0_term(const RunConfig& cfg);

// Central-symmetry check of the corrected state at one syndrome under a flip
// set: (i) deterministically, flipped angles negate the corrected logical
// pair and preserve P_s; (ii) statistically, the P_s-weighted mean of the
// corrected pair at fixed logical input (1,0,0,0) vanishes per component.
struct SymmetryReport {
  int det_failures = 0;
  double max_state_dev = 0.0;
  double max_prob_dev = 0.0;
  std::array<double, 4> mean{};
  std::array<double, 4> mean_se{};
  bool mean_consistent_with_zero = false;
};
SymmetryReport central_symmetry_check(const RunConfig& cfg, int syndrome,
                                      const FlipSet& flips,
                                      std::uint64_t det_samples = 1000);

}  // namespace qivar
