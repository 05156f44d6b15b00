#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>
#include <vector>

#include "qivar/analytics.hpp"
#include "qivar/errormodel.hpp"
#include "qivar/statevec.hpp"

using namespace qivar;

namespace {

constexpr double kPi = 3.14159265358979323846;

AngleTriple random_triple(RngStream& rng) {
  return {rng.uniform() * kPi, rng.uniform() * kPi,
          rng.uniform() * 2.0 * kPi};
}

std::string write_table(const std::string& name, int cells, double scale) {
  const std::string path = name;
  std::ofstream out(path);
  out.precision(17);
  out << "theta0,f\n";
  const double f = scale / (2.0 * kPi * kPi);
  for (int i = 0; i <= cells; ++i)
    out << (kPi * i / cells) << "," << f << "\n";
  return path;
}

}  // namespace

TEST_SUITE("errormodel") {

TEST_CASE("angle ranges are validated") {
  CHECK_THROWS_AS(AngleTriple(-0.1, 0.0, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(AngleTriple(kPi + 0.1, 0.0, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(AngleTriple(0.0, kPi + 0.1, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(AngleTriple(0.0, 0.0, 2.0 * kPi), std::invalid_argument);
  CHECK_NOTHROW(AngleTriple(0.0, kPi, 0.0));
}

TEST_CASE("coordinates lie on the unit 3-sphere and W is unitary") {
  RngStream rng(11);
  for (int i = 0; i < 200; ++i) {
    const AngleTriple t = random_triple(rng);
    const Abcd v = abcd(t);
    CHECK(v.a * v.a + v.b * v.b + v.c * v.c + v.d * v.d ==
          doctest::Approx(1.0).epsilon(1e-13));
    CHECK(is_unitary(build_w(t), 1e-12));
  }
}

TEST_CASE("single-qubit displacement depends only on the rotation angle") {
  RngStream rng(12);
  for (int i = 0; i < 500; ++i) {
    const AngleTriple t = random_triple(rng);
    const auto w = random_logical_coords(rng);
    const State phi(1, {cplx{w[0], w[1]}, cplx{w[2], w[3]}});
    const State moved = apply(build_w(t), phi);
    const double want = 2.0 - 2.0 * std::cos(t.theta0);
    CHECK(std::abs(dist_sq(phi, moved) - want) < 1e-12);
  }
}

TEST_CASE("product error has dimension 32 and stays unitary") {
  RngStream rng(13);
  AngleSample s = {random_triple(rng), random_triple(rng), random_triple(rng),
                   random_triple(rng), random_triple(rng)};
  const Mat e = build_product_error(s);
  CHECK(e.dim() == 32);
  CHECK(is_unitary(e, 1e-11));
}

TEST_CASE("normal distribution rejects sigma at or past one") {
  CHECK_THROWS_AS(ErrorDistribution::normal(1.0), std::invalid_argument);
  CHECK_THROWS_AS(ErrorDistribution::normal(-0.2), std::invalid_argument);
  CHECK_NOTHROW(ErrorDistribution::normal(0.0));
  CHECK_NOTHROW(ErrorDistribution::normal(0.999));
}

TEST_CASE("quadrature moments match the closed normal moments") {
  for (double sigma : {0.0, 0.1, 0.4, 0.7, 0.9, 0.99}) {
    const MomentSet got = compute_moments(ErrorDistribution::normal(sigma));
    const MomentSet want = normal_moments_closed(sigma);
    CHECK(std::abs(got.sin2 - want.sin2) < 1e-10);
    CHECK(std::abs(got.cos_sin2 - want.cos_sin2) < 1e-10);
    CHECK(std::abs(got.sin4 - want.sin4) < 1e-10);
    CHECK(std::abs(got.cos2_sin2 - want.cos2_sin2) < 1e-10);
  }
}

TEST_CASE("uniform distribution reproduces the sigma = 0 moments") {
  const MomentSet got = compute_moments(ErrorDistribution::uniform());
  const MomentSet want = normal_moments_closed(0.0);
  CHECK(std::abs(got.sin2 - want.sin2) < 1e-12);
  CHECK(std::abs(got.cos_sin2 - want.cos_sin2) < 1e-12);
  CHECK(std::abs(got.sin4 - want.sin4) < 1e-12);
  CHECK(std::abs(got.cos2_sin2 - want.cos2_sin2) < 1e-12);
}

TEST_CASE("the marginal density integrates to one") {
  for (double sigma : {0.0, 0.5, 0.9}) {
    const ErrorDistribution d = ErrorDistribution::normal(sigma);
    // moment() integrates g * f; with g the volume factor this is the mass.
    const double total = d.moment(
        [](double t) { return 4.0 * kPi * std::sin(t) * std::sin(t); });
    CHECK(total == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(d.cdf(0.0) == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(d.cdf(kPi) == doctest::Approx(1.0).epsilon(1e-10));
  }
}

TEST_CASE("theta0 sampler passes a Kolmogorov-Smirnov test") {
  const ErrorDistribution d = ErrorDistribution::normal(0.6);
  RngStream rng(101);
  const int n = 100000;
  std::vector<double> xs(n);
  for (double& x : xs) x = sample_angles(d, rng).theta0;
  std::sort(xs.begin(), xs.end());
  double dmax = 0.0;
  for (int i = 0; i < n; ++i) {
    const double f = d.cdf(xs[i]);
    dmax = std::max(dmax, std::abs(f - (i + 1.0) / n));
    dmax = std::max(dmax, std::abs(f - static_cast<double>(i) / n));
  }
  CHECK(dmax < 1.9495 / std::sqrt(static_cast<double>(n)));
}

TEST_CASE("theta1 and theta2 samplers cover the sphere directions") {
  const ErrorDistribution d = ErrorDistribution::uniform();
  RngStream rng(102);
  const int n = 100000;
  double sum_cos1 = 0.0, sum_cos1_sq = 0.0, sum_t2 = 0.0;
  for (int i = 0; i < n; ++i) {
    const AngleTriple t = sample_angles(d, rng);
    const double c1 = std::cos(t.theta1);
    sum_cos1 += c1;
    sum_cos1_sq += c1 * c1;
    sum_t2 += t.theta2;
    CHECK(t.theta1 >= 0.0);
    CHECK(t.theta1 <= kPi);
    CHECK(t.theta2 >= 0.0);
    CHECK(t.theta2 < 2.0 * kPi);
  }
  // cos(theta1) is uniform on [-1, 1]: mean 0, second moment 1/3.
  CHECK(std::abs(sum_cos1 / n) < 3.0 / std::sqrt(3.0 * n));
  CHECK(std::abs(sum_cos1_sq / n - 1.0 / 3.0) < 0.01);
  // theta2 is uniform on [0, 2 pi): mean pi.
  CHECK(std::abs(sum_t2 / n - kPi) < 3.0 * (2.0 * kPi) / std::sqrt(12.0 * n));
}

TEST_CASE("tabulated density round-trips through a file") {
  const std::string path = write_table("tab_ok.csv", 64, 1.0);
  const ErrorDistribution d = ErrorDistribution::tabulated_from_file(path);
  CHECK(d.kind() == DistKind::tabulated);
  CHECK(d.density(0.3) == doctest::Approx(1.0 / (2.0 * kPi * kPi)));
  const MomentSet got = compute_moments(d, 1e-10);
  const MomentSet want = normal_moments_closed(0.0);
  CHECK(std::abs(got.sin2 - want.sin2) < 1e-8);
  CHECK(std::abs(got.cos_sin2 - want.cos_sin2) < 1e-8);
  std::remove(path.c_str());
}

TEST_CASE("tabulated files with bad structure are rejected") {
  {
    std::ofstream out("tab_header.csv");
    out << "theta,f\n0,0.05\n" << kPi << ",0.05\n";
  }
  CHECK_THROWS_AS(ErrorDistribution::tabulated_from_file("tab_header.csv"),
                  std::invalid_argument);
  std::remove("tab_header.csv");

  {
    std::ofstream out("tab_row.csv");
    out << "theta0,f\n0,abc\n" << kPi << ",0.05\n";
  }
  CHECK_THROWS_AS(ErrorDistribution::tabulated_from_file("tab_row.csv"),
                  std::invalid_argument);
  std::remove("tab_row.csv");

  CHECK_THROWS_AS(ErrorDistribution::tabulated_from_file("no_such_file.csv"),
                  std::invalid_argument);
}

TEST_CASE("unnormalized tabulated densities are rejected") {
  const std::string path = write_table("tab_bad.csv", 64, 1.1);
  CHECK_THROWS_AS(ErrorDistribution::tabulated_from_file(path),
                  std::invalid_argument);
  std::remove(path.c_str());
}

TEST_CASE("grids that do not span [0, pi] are rejected") {
  CHECK_THROWS_AS(
      ErrorDistribution::tabulated({0.0, 1.0, 2.0}, {0.05, 0.05, 0.05}),
      std::invalid_argument);
  CHECK_THROWS_AS(
      ErrorDistribution::tabulated({0.0, 2.0, 1.0, kPi},
                                   {0.05, 0.05, 0.05, 0.05}),
      std::invalid_argument);
}

TEST_CASE("sign flips act on single coordinates and are involutions") {
  RngStream rng(103);
  for (int i = 0; i < 200; ++i) {
    const AngleTriple t = random_triple(rng);
    const Abcd v = abcd(t);
    const bool fa = rng.uniform() < 0.5, fb = rng.uniform() < 0.5;
    const bool fc = rng.uniform() < 0.5, fd = rng.uniform() < 0.5;

    const AngleTriple flipped = flip_triple(t, fa, fb, fc, fd);
    const Abcd fv = abcd(flipped);
    CHECK(std::abs(fv.a - (fa ? -v.a : v.a)) < 1e-12);
    CHECK(std::abs(fv.b - (fb ? -v.b : v.b)) < 1e-12);
    CHECK(std::abs(fv.c - (fc ? -v.c : v.c)) < 1e-12);
    CHECK(std::abs(fv.d - (fd ? -v.d : v.d)) < 1e-12);

    const AngleTriple twice = flip_triple(flipped, fa, fb, fc, fd);
    CHECK(std::abs(twice.theta0 - t.theta0) < 1e-12);
    CHECK(std::abs(twice.theta1 - t.theta1) < 1e-12);
    const double dt2 = std::abs(twice.theta2 - t.theta2);
    CHECK(std::min(dt2, 2.0 * kPi - dt2) < 1e-11);
  }
}

TEST_CASE("apply_signflip touches only the listed qubits") {
  RngStream rng(104);
  AngleSample s = {random_triple(rng), random_triple(rng), random_triple(rng),
                   random_triple(rng), random_triple(rng)};
  const FlipSet flips = parse_flip_set("A0 C2");
  const AngleSample f = apply_signflip(s, flips);
  for (int u = 0; u < 5; ++u) {
    const Abcd v = abcd(s[u]), fv = abcd(f[u]);
    CHECK(std::abs(fv.a - (u == 0 ? -v.a : v.a)) < 1e-12);
    CHECK(std::abs(fv.b - v.b) < 1e-12);
    CHECK(std::abs(fv.c - (u == 2 ? -v.c : v.c)) < 1e-12);
    CHECK(std::abs(fv.d - v.d) < 1e-12);
  }
}

TEST_CASE("A-free flips preserve the radial density pointwise") {
  const ErrorDistribution d = ErrorDistribution::normal(0.7);
  RngStream rng(105);
  for (int i = 0; i < 100; ++i) {
    const AngleTriple t = random_triple(rng);
    const AngleTriple f = flip_triple(t, false, true, true, false);
    CHECK(f.theta0 == doctest::Approx(t.theta0).epsilon(1e-14));
    CHECK(d.density(f.theta0) == doctest::Approx(d.density(t.theta0)));
  }
}

TEST_CASE("A flips reflect theta0; the uniform density is invariant") {
  const ErrorDistribution u = ErrorDistribution::uniform();
  RngStream rng(106);
  for (int i = 0; i < 100; ++i) {
    const AngleTriple t = random_triple(rng);
    const AngleTriple f = flip_triple(t, true, false, false, false);
    CHECK(std::abs(f.theta0 - (kPi - t.theta0)) < 1e-12);
    CHECK(u.density(f.theta0) == doctest::Approx(u.density(t.theta0)));
  }
}

}  // TEST_SUITE
