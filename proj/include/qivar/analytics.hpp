// analytics.hpp - closed-form expectations and their quadrature cross-checks.
#pragma once

#include <array>
#include <vector>

#include "qivar/errormodel.hpp"

namespace qivar {

// The four angular moments E-bar[g(theta0)] everything reduces to.
struct MomentSet {
  double sin2;       // E-bar[sin^2]
  double cos_sin2;   // E-bar[cos sin^2]
  double sin4;       // E-bar[sin^4]
  double cos2_sin2;  // E-bar[cos^2 sin^2]
};

MomentSet compute_moments(const ErrorDistribution& d, double tol = 1e-12);
MomentSet normal_moments_closed(double sigma);

// Expected squared coordinates: E[A^2] = 4 pi E-bar[cos^2 sin^2],
// E[B^2] = E[C^2] = E[D^2] = (4 pi / 3) E-bar[sin^4].
double e_a_squared(const MomentSet& m);
double e_b_squared(const MomentSet& m);

// V(psi) for one qubit: 2 - 8 pi E-bar[cos sin^2].
double variance_one_qubit(const MomentSet& m);
// V(psi) for n independent qubits: 2 - 2 (4 pi E-bar[cos sin^2])^n.
double variance_n_qubits(const MomentSet& m, int n);
// Same quantity through the single-qubit variance tau: 2 - 2 (1 - tau/2)^n.
double variance_from_tau(double tau, int n);

// E[P_s]: degree-5 forms in E[A^2] and E[B^2].
std::array<double, 16> syndrome_probs_analytic(const MomentSet& m);

// E[a_0] = (4 pi E-bar[cos sin^2])^5.
double e_a0_analytic(const MomentSet& m);

// V(corrected) = V(psi) + 2 E[a_0 (1 - sqrt(P_0))].
double corrected_variance_identity(double v_psi, double a0_term);
// Conditional variance at syndrome 0:
// 2 - 2 E[a_0]/E[P_0] + 2 E[a_0 (1 - sqrt(P_0))]/E[P_0].
double corrected_variance_s0(double e_a0, double e_p0, double a0_term);

// Weight of the quantum variance V_q = 2 - 4 pi E-bar[w_q sin^2]; evaluates
// 1 - (cos^2/sin) log(|cos|/(1+sin)) = 1 + (cos^2/sin) atanh(sin), equal to 2
// at both endpoints and 1 at pi/2.
double quantum_weight(double theta0);
// Weight of the ordinary variance under the same normalization: 2 cos(theta0).
double variance_weight(double theta0);

double quantum_variance_one_qubit(const ErrorDistribution& d,
                                  double tol = 1e-12);

struct WeightRow {
  double theta0, w_quantum, w_variance;
};
std::vector<WeightRow> weight_curves(int points);

// Integrals of g(theta) / (1 + sigma^2 - 2 sigma cos theta)^2 over [0, pi]
// for the four g above; closed forms and quadrature.
struct KernelIntegrals {
  double sin2, cos_sin2, sin4, cos2_sin2;
};
KernelIntegrals normal_kernel_closed(double sigma);
KernelIntegrals normal_kernel_quadrature(double sigma, double tol = 1e-12);

}  // namespace qivar
