#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "qivar/analytics.hpp"
#include "qivar/code5.hpp"
#include "qivar/symbolic.hpp"

using namespace qivar;
using namespace qivar::symbolic;

namespace {

constexpr double kPi = 3.14159265358979323846;

const WbMatrix& wb_cached() {
  static const WbMatrix wb = symbolic_wb(exact_code_matrix());
  return wb;
}

const std::array<GeneratorQuad, 16>& gens_cached() {
  static const auto gens = extract_generators(wb_cached());
  return gens;
}

std::array<std::array<double, 4>, 5> coords_of(const AngleSample& s) {
  std::array<std::array<double, 4>, 5> vals;
  for (int u = 0; u < 5; ++u) {
    const Abcd v = abcd(s[u]);
    vals[u] = {v.a, v.b, v.c, v.d};
  }
  return vals;
}

AngleSample random_sample(RngStream& rng) {
  auto t = [&] {
    return AngleTriple{rng.uniform() * kPi, rng.uniform() * kPi,
                       rng.uniform() * 2.0 * kPi};
  };
  return {t(), t(), t(), t(), t()};
}

}  // namespace

TEST_SUITE("symbolic") {

TEST_CASE("the full verification checklist passes") {
  for (const VerifyItem& item : verify_all()) {
    INFO(item.name, ": ", item.detail);
    CHECK(item.ok);
  }
}

TEST_CASE("monomial names round-trip") {
  CHECK(monomial_name(0) == "A0A1A2A3A4");
  CHECK(parse_monomial("A0A1A2A3A4") == 0);
  RngStream rng(31);
  for (int i = 0; i < 100; ++i) {
    const Monomial m = static_cast<Monomial>(rng.next_u64() % 1024);
    CHECK(parse_monomial(monomial_name(m)) == m);
  }
  CHECK_THROWS_AS(parse_monomial("A0A1A2A3"), std::invalid_argument);
  CHECK_THROWS_AS(parse_monomial("A0A0A2A3A4"), std::invalid_argument);
}

TEST_CASE("monomial helpers count kinds and overlaps") {
  const Monomial m = parse_monomial("A0B1B4C2C3");
  CHECK(monomial_a_count(m) == 1);
  CHECK(monomial_kind(m, 0) == VarKind::A);
  CHECK(monomial_kind(m, 2) == VarKind::C);
  CHECK(monomial_shared_vars(m, m) == 5);
  CHECK(monomial_shared_vars(m, parse_monomial("A0A1A2A3A4")) == 1);
  CHECK(monomial_odd_overlap(m, parse_flip_set("B1")));
  CHECK(!monomial_odd_overlap(m, parse_flip_set("B1 B4")));
  CHECK(!monomial_odd_overlap(m, parse_flip_set("D0 D1")));
}

TEST_CASE("polynomial parsing matches term-by-term construction") {
  const Poly p = parse_poly("+A0A1A2A3A4 -C0C1C2C3C4");
  CHECK(p.terms.size() == 2);
  CHECK(p.coeff(parse_monomial("A0A1A2A3A4")) == GaussInt{1, 0});
  CHECK(p.coeff(parse_monomial("C0C1C2C3C4")) == GaussInt{-1, 0});
  CHECK(p.coeff(parse_monomial("B0B1B2B3B4")) == GaussInt{0, 0});
  CHECK(p.conj() == p);
  CHECK(p.negate() == parse_poly("-A0A1A2A3A4 +C0C1C2C3C4"));
}

TEST_CASE("the exact code matrix is unitary and breaks under corruption") {
  ExactMat m = exact_code_matrix();
  CHECK(exact_matrix_unitary(m));

  // negate the first nonzero entry of column 0
  for (auto& row : m)
    if (!row[0].is_zero()) {
      row[0] = GaussInt{-row[0].re, -row[0].im};
      break;
    }
  CHECK(!exact_matrix_unitary(m));

  bool rejected = false;
  try {
    const WbMatrix wb = symbolic_wb(m);
    rejected = !verify_shape(extract_generators(wb)).ok;
  } catch (const std::logic_error&) {
    rejected = true;
  }
  CHECK(rejected);
}

TEST_CASE("dropping a monomial is caught by the shape check") {
  auto gens = gens_cached();
  gens[3].b.terms.erase(gens[3].b.terms.begin());
  const CheckReport report = verify_shape(gens);
  CHECK(!report.ok);
  CHECK(!report.failures.empty());
}

TEST_CASE("a-count buckets match the reference table") {
  const auto table = a_count_table(gens_cached());
  const std::array<int, 6> row0 = {1, 0, 0, 30, 15, 18};
  const std::array<int, 6> rows = {0, 1, 6, 16, 26, 15};
  CHECK(table[0] == row0);
  for (int s = 1; s < 16; ++s) CHECK(table[s] == rows);
}

TEST_CASE("reference expansions match the computed generators") {
  const auto& gens = gens_cached();
  const auto& s0 = reference_generators_s0();
  CHECK(gens[0].a == parse_poly(s0[0]));
  CHECK(gens[0].b == parse_poly(s0[1]));
  CHECK(gens[0].c == parse_poly(s0[2]));
  CHECK(gens[0].d == parse_poly(s0[3]));
  const auto& s1 = reference_generators_s1();
  CHECK(gens[1].a == parse_poly(s1[0]));
  CHECK(gens[1].b == parse_poly(s1[1]));
  CHECK(gens[1].c == parse_poly(s1[2]));
  CHECK(gens[1].d == parse_poly(s1[3]));
}

TEST_CASE("generator polynomials reproduce the numeric pipeline") {
  RngStream rng(32);
  const auto& gens = gens_cached();
  for (int i = 0; i < 50; ++i) {
    const AngleSample angles = random_sample(rng);
    const auto vals = coords_of(angles);
    const GeneratorTable numeric = beta_generators(angles);
    for (int s = 0; s < 16; ++s) {
      CHECK(std::abs(gens[s].a.eval(vals)[0] - numeric.a[s]) < 1e-10);
      CHECK(std::abs(gens[s].b.eval(vals)[0] - numeric.b[s]) < 1e-10);
      CHECK(std::abs(gens[s].c.eval(vals)[0] - numeric.c[s]) < 1e-10);
      CHECK(std::abs(gens[s].d.eval(vals)[0] - numeric.d[s]) < 1e-10);
      CHECK(std::abs(gens[s].a.eval(vals)[1]) < 1e-12);
    }
  }
}

TEST_CASE("transformed matrix entries evaluate to the numeric conjugation") {
  RngStream rng(33);
  const CodeTables& ct = CodeTables::instance();
  for (int i = 0; i < 3; ++i) {
    const AngleSample angles = random_sample(rng);
    const auto vals = coords_of(angles);
    const Mat numeric = ct.basis_matrix_dagger() *
                        (build_product_error(angles) * ct.basis_matrix());
    for (int j = 0; j < 32; ++j)
      for (int k = 0; k < 32; ++k) {
        const auto v = wb_cached()[j][k].eval(vals);
        CHECK(std::abs(v[0] - numeric(j, k).real()) < 1e-10);
        CHECK(std::abs(v[1] - numeric(j, k).imag()) < 1e-10);
      }
  }
}

TEST_CASE("expected syndrome probabilities agree with the closed ladder") {
  const auto& gens = gens_cached();
  for (double sigma : {0.0, 0.2, 0.5, 0.8}) {
    const MomentSet m = normal_moments_closed(sigma);
    const auto sym = expected_p(gens, e_a_squared(m), e_b_squared(m));
    const auto ladder = syndrome_probs_analytic(m);
    double total = 0.0;
    for (int s = 0; s < 16; ++s) {
      total += sym[s];
      CHECK(std::abs(sym[s] - ladder[s]) < 1e-9);
    }
    CHECK(total == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("only the all-A monomial survives the expectation") {
  const auto& gens = gens_cached();
  const Poly a0 = expectation_surviving_terms(gens[0].a);
  REQUIRE(a0.terms.size() == 1);
  CHECK(a0.terms[0].first == parse_monomial("A0A1A2A3A4"));
  CHECK(a0.terms[0].second == GaussInt{1, 0});
  CHECK(expectation_surviving_terms(gens[1].a).terms.empty());
  CHECK(expectation_surviving_terms(gens[0].b).terms.empty());
}

TEST_CASE("A-free negating flip sets exist exactly for nonzero syndromes") {
  const auto& gens = gens_cached();
  CHECK(!find_flip_set(negation_problem(gens[0], false)).has_value());
  for (int s = 1; s < 16; ++s) {
    const FlipProblem problem = negation_problem(gens[s], false);
    const auto flips = find_flip_set(problem);
    REQUIRE(flips.has_value());
    CHECK(flip_satisfies(*flips, problem));
    for (const VarId& v : *flips) CHECK(v.kind != VarKind::A);
  }
  const FlipProblem with_a = negation_problem(gens[0], true);
  const auto flips0 = find_flip_set(with_a);
  REQUIRE(flips0.has_value());
  CHECK(flip_satisfies(*flips0, with_a));
}

TEST_CASE("reference flip sets carry their certificates") {
  const auto& gens = gens_cached();
  const FlipSet s1 = reference_flip_set_s1();
  CHECK(s1 == parse_flip_set("B3 B4 C0 C2 D0 D2 D3 D4"));
  CHECK(flip_satisfies(s1, negation_problem(gens[1], false)));

  for (int u = 0; u < 5; ++u) {
    const FlipSet su = reference_flip_set_s0_with(u);
    int a_members = 0;
    for (const VarId& v : su)
      if (v.kind == VarKind::A) {
        ++a_members;
        CHECK(v.qubit == u);
      }
    CHECK(a_members == 1);
    CHECK(flip_satisfies(su, negation_problem(gens[0], true)));
  }

  const FlipSet sb = reference_flip_set_s0_single_b1();
  CHECK(flip_satisfies(sb, negation_problem(gens[0], true)));
  const Monomial probe = parse_monomial("A0B1B4C2C3");
  int overlap = 0;
  for (const VarId& v : sb)
    if (monomial_kind(probe, v.qubit) == v.kind) ++overlap;
  CHECK(overlap == 1);
  CHECK(std::find(sb.begin(), sb.end(), VarId{VarKind::B, 1}) != sb.end());
}

TEST_CASE("the one-qubit gram matrix is diagonal") {
  CHECK(one_qubit_gram_is_diagonal());
}

}  // TEST_SUITE
