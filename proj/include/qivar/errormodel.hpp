// errormodel.hpp - continuous qubit-independent error model on the 3-sphere.
#pragma once

#include <array>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "qivar/rng.hpp"
#include "qivar/statevec.hpp"
#include "qivar/vars.hpp"

namespace qivar {

// One qubit's error angles: theta0, theta1 in [0, pi], theta2 in [0, 2*pi).
struct AngleTriple {
  double theta0, theta1, theta2;
  AngleTriple(double t0, double t1, double t2);
};

using AngleSample = std::array<AngleTriple, 5>;

// Cartesian coordinates of the error operator: A = cos t0, B = sin t0 cos t1,
// C = sin t0 sin t1 cos t2, D = sin t0 sin t1 sin t2 (a point of S^3).
struct Abcd {
  double a, b, c, d;
};
Abcd abcd(const AngleTriple& t);

// W = [[A+iB, -C+iD], [C+iD, A-iB]].
Mat build_w(const AngleTriple& t);
void build_w2x2(const AngleTriple& t, cplx out[4]);

// W_0 (x) W_1 (x) ... (x) W_4, dimension 32.
Mat build_product_error(const AngleSample& s);

// Density of the rotation-angle marginal concentrated near the identity;
// sigma = 0 is the uniform density 1/(2 pi^2), sigma -> 1 a point mass at 0.
double normal_density(double theta0, double sigma);

enum class DistKind { normal, uniform, tabulated };

// Distribution of one qubit's error, radially symmetric on S^3: a density
// f(theta0) with respect to the volume element sin^2(t0) sin(t1) dt0 dt1 dt2.
class ErrorDistribution {
 public:
  static ErrorDistribution normal(double sigma);
  static ErrorDistribution uniform();
  // Grid must start at 0, end at pi, strictly increase; density is linearly
  // interpolated. Normalization is required within 1e-6.
  static ErrorDistribution tabulated(std::vector<double> theta,
                                     std::vector<double> density);
  // File format: header line "theta0,f", then comma-separated rows.
  static ErrorDistribution tabulated_from_file(const std::string& path);

  DistKind kind() const { return kind_; }
  double sigma() const { return sigma_; }

  double density(double theta0) const;   // f(theta0)
  double marginal(double theta0) const;  // 4 pi f(theta0) sin^2(theta0)
  double cdf(double theta0) const;
  double inverse_cdf(double u) const;

  // E-bar[g] = integral of g(t) f(t) dt over [0, pi].
  double moment(const std::function<double(double)>& g,
                double tol = 1e-12) const;

 private:
  ErrorDistribution() = default;
  void finalize();  // normalization check + sampling tables

  DistKind kind_ = DistKind::uniform;
  double sigma_ = 0.0;
  double norm_ = 1.0;  // integral of the marginal before rescaling
  std::vector<double> tab_theta_, tab_f_;
  // sampling tables: theta grid, cumulative marginal, pchip slopes of the
  // inverse map u -> theta
  std::vector<double> grid_, cum_;
  std::vector<double> inv_x_, inv_y_, inv_m_;
};

AngleTriple sample_angles(const ErrorDistribution& d, RngStream& rng);
AngleSample sample_error(const ErrorDistribution& d, RngStream& rng);

// Angle substitution realizing sign flips of the chosen coordinates of one
// qubit: fa negates A, fb negates B, fc negates C, fd negates D; every other
// coordinate is left unchanged.
AngleTriple flip_triple(const AngleTriple& t, bool fa, bool fb, bool fc,
                        bool fd);
AngleSample apply_signflip(const AngleSample& s, const FlipSet& flips);

}  // namespace qivar
