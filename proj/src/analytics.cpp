#include "qivar/analytics.hpp"

#include <cmath>
#include <stdexcept>

#include "qivar/quadrature.hpp"

namespace qivar {

namespace {
constexpr double kPi = 3.14159265358979323846;
constexpr double kFourPi = 4.0 * kPi;
}  // namespace

MomentSet compute_moments(const ErrorDistribution& d, double tol) {
  auto m = [&d, tol](auto g) { return d.moment(g, tol); };
  return {
      m([](double t) { return std::pow(std::sin(t), 2); }),
      m([](double t) { return std::cos(t) * std::pow(std::sin(t), 2); }),
      m([](double t) { return std::pow(std::sin(t), 4); }),
      m([](double t) {
        return std::pow(std::cos(t) * std::sin(t), 2);
      }),
  };
}

MomentSet normal_moments_closed(double sigma) {
  if (!(sigma >= 0.0) || sigma >= 1.0)
    throw std::invalid_argument("sigma must lie in [0, 1)");
  const double s2 = sigma * sigma;
  return {
      1.0 / (4.0 * kPi),
      sigma / (4.0 * kPi),
      3.0 * (1.0 - s2) / (16.0 * kPi),
      (1.0 + 3.0 * s2) / (16.0 * kPi),
  };
}

double e_a_squared(const MomentSet& m) { return kFourPi * m.cos2_sin2; }
double e_b_squared(const MomentSet& m) { return kFourPi / 3.0 * m.sin4; }

double variance_one_qubit(const MomentSet& m) {
  return 2.0 - 8.0 * kPi * m.cos_sin2;
}

double variance_n_qubits(const MomentSet& m, int n) {
  if (n < 1) throw std::invalid_argument("need at least one qubit");
  return 2.0 - 2.0 * std::pow(kFourPi * m.cos_sin2, n);
}

double variance_from_tau(double tau, int n) {
  if (n < 1) throw std::invalid_argument("need at least one qubit");
  return 2.0 - 2.0 * std::pow(1.0 - tau / 2.0, n);
}

std::array<double, 16> syndrome_probs_analytic(const MomentSet& m) {
  const double a = e_a_squared(m), b = e_b_squared(m);
  const double p0 = std::pow(a, 5) + 30.0 * a * a * std::pow(b, 3) +
                    15.0 * a * std::pow(b, 4) + 18.0 * std::pow(b, 5);
  const double ps = std::pow(a, 4) * b + 6.0 * std::pow(a, 3) * b * b +
                    16.0 * a * a * std::pow(b, 3) +
                    26.0 * a * std::pow(b, 4) + 15.0 * std::pow(b, 5);
  std::array<double, 16> out;
  out[0] = p0;
  for (int s = 1; s < 16; ++s) out[s] = ps;
  return out;
}

double e_a0_analytic(const MomentSet& m) {
  return std::pow(kFourPi * m.cos_sin2, 5);
}

double corrected_variance_identity(double v_psi, double a0_term) {
  return v_psi + 2.0 * a0_term;
}

double corrected_variance_s0(double e_a0, double e_p0, double a0_term) {
  return 2.0 - 2.0 * e_a0 / e_p0 + 2.0 * a0_term / e_p0;
}

double quantum_weight(double theta0) {
  const double s = std::sin(theta0), c = std::cos(theta0);
  // -log(|c|/(1+s)) = atanh(s), so the weight is 1 + (c^2/s) atanh(s); every
  // factor is positive and accurately evaluated, no cancellation anywhere.
  if (s == 0.0) return 2.0;  // the s -> 0 limit at both endpoints
  if (s >= 1.0) return 1.0;  // theta = pi/2 in floating point
  return 1.0 + (c * c / s) * std::atanh(s);
}

double variance_weight(double theta0) { return 2.0 * std::cos(theta0); }

double quantum_variance_one_qubit(const ErrorDistribution& d, double tol) {
  const double mean = d.moment(
      [](double t) {
        const double s = std::sin(t);
        return quantum_weight(t) * s * s;
      },
      tol);
  return 2.0 - kFourPi * mean;
}

std::vector<WeightRow> weight_curves(int points) {
  if (points < 2) throw std::invalid_argument("need at least two grid points");
  std::vector<WeightRow> rows;
  rows.reserve(points);
  for (int i = 0; i < points; ++i) {
    const double t = kPi * i / (points - 1);
    rows.push_back({t, quantum_weight(t), variance_weight(t)});
  }
  return rows;
}

KernelIntegrals normal_kernel_closed(double sigma) {
  if (!(sigma >= 0.0) || sigma >= 1.0)
    throw std::invalid_argument("sigma must lie in [0, 1)");
  const double s2 = sigma * sigma;
  return {
      kPi / (2.0 * (1.0 - s2)),
      kPi * sigma / (2.0 * (1.0 - s2)),
      3.0 * kPi / 8.0,
      kPi * (1.0 + 3.0 * s2) / (8.0 * (1.0 - s2)),
  };
}

KernelIntegrals normal_kernel_quadrature(double sigma, double tol) {
  if (!(sigma >= 0.0) || sigma >= 1.0)
    throw std::invalid_argument("sigma must lie in [0, 1)");
  auto kernel = [sigma](double t) {
    const double den = 1.0 + sigma * sigma - 2.0 * sigma * std::cos(t);
    return 1.0 / (den * den);
  };
  auto integral = [&](auto g) {
    return integrate([&](double t) { return g(t) * kernel(t); }, 0.0, kPi,
                     tol);
  };
  return {
      integral([](double t) { return std::pow(std::sin(t), 2); }),
      integral([](double t) { return std::cos(t) * std::pow(std::sin(t), 2); }),
      integral([](double t) { return std::pow(std::sin(t), 4); }),
      integral(
          [](double t) { return std::pow(std::cos(t) * std::sin(t), 2); }),
  };
}

}  // namespace qivar
