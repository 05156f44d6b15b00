#include <doctest.h>

#include <cmath>
#include <complex>
#include <stdexcept>

#include "qivar/statevec.hpp"

using namespace qivar;

TEST_SUITE("statevec") {

TEST_CASE("basis states and indexing convention") {
  const State s = State::basis(2, 2);  // |10>: qubit 0 is the high bit
  CHECK(s[2] == cplx{1.0, 0.0});
  CHECK(s[0] == cplx{0.0, 0.0});
  CHECK(s.dim() == 4);
}

TEST_CASE("state normalization is enforced") {
  CHECK_THROWS_AS(State(1, {cplx{0.5, 0.0}, cplx{0.5, 0.0}}),
                  std::invalid_argument);
  CHECK_NOTHROW(State(1, {cplx{M_SQRT1_2, 0.0}, cplx{0.0, M_SQRT1_2}}));
}

TEST_CASE("tensor product places factors by significance") {
  Mat x(2), id = Mat::identity(2);
  x(0, 1) = x(1, 0) = 1.0;
  const Mat xi = tensor(x, id);  // X on qubit 0
  const State out = apply(xi, State::basis(2, 0));
  CHECK(std::abs(out[2] - cplx{1.0, 0.0}) < 1e-15);  // |00> -> |10>

  const Mat ix = tensor(id, x);  // X on qubit 1
  const State out2 = apply(ix, State::basis(2, 0));
  CHECK(std::abs(out2[1] - cplx{1.0, 0.0}) < 1e-15);  // |00> -> |01>
}

TEST_CASE("tensor rejects dimensions past five qubits") {
  const Mat big = Mat::identity(32);
  CHECK_THROWS_AS(tensor(big, Mat::identity(2)), std::length_error);
}

TEST_CASE("apply rejects dimension mismatch") {
  CHECK_THROWS_AS(apply(Mat::identity(4), State::basis(1, 0)),
                  std::invalid_argument);
}

TEST_CASE("matrix product and dagger compose to the identity for unitaries") {
  Mat h(2);
  h(0, 0) = h(0, 1) = h(1, 0) = M_SQRT1_2;
  h(1, 1) = -M_SQRT1_2;
  CHECK(is_unitary(h));
  const Mat prod = dagger(h) * h;
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c)
      CHECK(std::abs(prod(r, c) - (r == c ? cplx{1, 0} : cplx{0, 0})) < 1e-15);
}

TEST_CASE("apply_one_qubit agrees with the full tensor-product matrix") {
  RngStream rng(7);
  // random 2x2 unitary from angles
  const double t0 = rng.uniform() * M_PI, t1 = rng.uniform() * M_PI,
               t2 = rng.uniform() * 2.0 * M_PI;
  const double a = std::cos(t0), b = std::sin(t0) * std::cos(t1);
  const double c = std::sin(t0) * std::sin(t1) * std::cos(t2);
  const double d = std::sin(t0) * std::sin(t1) * std::sin(t2);
  const cplx w[4] = {{a, b}, {-c, d}, {c, d}, {a, -b}};
  Mat w2(2);
  w2(0, 0) = w[0];
  w2(0, 1) = w[1];
  w2(1, 0) = w[2];
  w2(1, 1) = w[3];

  for (int qubit = 0; qubit < 3; ++qubit) {
    Mat full = Mat::identity(1);
    for (int u = 0; u < 3; ++u)
      full = tensor(full, u == qubit ? w2 : Mat::identity(2));

    std::vector<cplx> amps(8, cplx{0.0, 0.0});
    for (int i = 0; i < 8; ++i) amps[i] = cplx{std::cos(i * 0.7), std::sin(i * 0.3)};
    double norm = 0.0;
    for (const cplx& z : amps) norm += std::norm(z);
    for (cplx& z : amps) z /= std::sqrt(norm);

    const State s(3, amps);
    const State want = apply(full, s);
    std::vector<cplx> got = amps;
    apply_one_qubit(w, qubit, 3, got.data());
    for (int i = 0; i < 8; ++i) CHECK(std::abs(got[i] - want[i]) < 1e-14);
  }
}

TEST_CASE("dist_sq matches 2 - 2 Re<a|b>") {
  const State a = State::basis(1, 0);
  const State b(1, {cplx{std::cos(0.4), 0.0}, cplx{0.0, std::sin(0.4)}});
  const double want = 2.0 - 2.0 * std::real(inner(a, b));
  CHECK(dist_sq(a, b) == doctest::Approx(want).epsilon(1e-14));
}

TEST_CASE("random logical coordinates are unit 4-vectors") {
  RngStream rng(3);
  for (int i = 0; i < 100; ++i) {
    const auto w = random_logical_coords(rng);
    const double n = w[0] * w[0] + w[1] * w[1] + w[2] * w[2] + w[3] * w[3];
    CHECK(n == doctest::Approx(1.0).epsilon(1e-12));
  }
}

}  // TEST_SUITE
