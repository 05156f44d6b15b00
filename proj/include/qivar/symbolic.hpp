// symbolic.hpp - exact polynomial engine over the error coordinates, used to
// verify the algebraic structure of the syndrome amplitudes.
#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qivar/vars.hpp"

namespace qivar::symbolic {

// Gaussian integer; all exact computation stays in Z[i].
struct GaussInt {
  long long re = 0, im = 0;

  friend GaussInt operator+(GaussInt x, GaussInt y) {
    return {x.re + y.re, x.im + y.im};
  }
  friend GaussInt operator-(GaussInt x, GaussInt y) {
    return {x.re - y.re, x.im - y.im};
  }
  friend GaussInt operator*(GaussInt x, GaussInt y) {
    return {x.re * y.re - x.im * y.im, x.re * y.im + x.im * y.re};
  }
  friend bool operator==(GaussInt x, GaussInt y) {
    return x.re == y.re && x.im == y.im;
  }
  GaussInt conj() const { return {re, -im}; }
  bool is_zero() const { return re == 0 && im == 0; }
  bool is_unit() const {
    return (re == 0 && (im == 1 || im == -1)) ||
           (im == 0 && (re == 1 || re == -1));
  }
};

// Multilinear monomial in the twenty coordinates: one base-4 digit per qubit
// (A=0, B=1, C=2, D=3), qubit 0 in the most significant digit. Range 0..1023.
using Monomial = std::uint16_t;

Monomial monomial_from_kinds(const std::array<VarKind, 5>& kinds);
VarKind monomial_kind(Monomial m, int qubit);
int monomial_a_count(Monomial m);
std::string monomial_name(Monomial m);          // e.g. "A0A1A3B2D4"
Monomial parse_monomial(const std::string& s);  // inverse of monomial_name
// Number of shared variables (same kind at the same qubit).
int monomial_shared_vars(Monomial x, Monomial y);
// Parity of the overlap with a flip set.
bool monomial_odd_overlap(Monomial m, const FlipSet& flips);

// Homogeneous multilinear polynomial: sorted (monomial, coefficient) terms.
struct Poly {
  std::vector<std::pair<Monomial, GaussInt>> terms;

  friend bool operator==(const Poly& x, const Poly& y) {
    return x.terms == y.terms;
  }
  Poly conj() const;
  Poly negate() const;
  GaussInt coeff(Monomial m) const;
  // Evaluate at numeric coordinates: vals[qubit][kind].
  std::array<double, 2> eval(const std::array<std::array<double, 4>, 5>& vals)
      const;
};

// Parses "+A0A1A2A3A4 -B0B1B2B3B4 ..." (signs required, real unit coeffs).
Poly parse_poly(const std::string& text);

// Exact change-of-basis matrix, scaled by 4: entries of 4M in Z[i].
using ExactMat = std::array<std::array<GaussInt, 32>, 32>;
ExactMat exact_code_matrix();

// M is unitary iff (4M)^dag (4M) = 16 I exactly.
bool exact_matrix_unitary(const ExactMat& m);

// Entries of M^dag (W_0 x ... x W_4) M as exact polynomials.
using WbMatrix = std::array<std::array<Poly, 32>, 32>;
WbMatrix symbolic_wb(const ExactMat& m);

// Generator quadruple of one syndrome: beta_2s = (a+ib) alpha' + (c+id) beta'.
struct GeneratorQuad {
  Poly a, b, c, d;
};
std::array<GeneratorQuad, 16> extract_generators(const WbMatrix& wb);

struct CheckReport {
  bool ok = true;
  std::vector<std::string> failures;
  void fail(const std::string& what) {
    ok = false;
    failures.push_back(what);
  }
};

// Structure of each generator quadruple: 16 monomials each, unit real
// coefficients, 64 pairwise distinct monomials per syndrome, and every pair of
// distinct monomials within one polynomial shares exactly one variable.
CheckReport verify_shape(const std::array<GeneratorQuad, 16>& gens);

// Exact linear-form identities tying the full beta vector to the generator
// quadruples, including the special form of beta_1.
CheckReport verify_states_lemma(const WbMatrix& wb);

// Bucket counts of monomials by number of A factors, columns 5A,4A,...,0A,
// aggregated over the four polynomials of each syndrome.
std::array<std::array<int, 6>, 16> a_count_table(
    const std::array<GeneratorQuad, 16>& gens);

// E[P_s] from independence: squared monomials average to products of
// e_a2 = E[A_u^2] and e_b2 = E[B_u^2] = E[C_u^2] = E[D_u^2].
std::array<double, 16> expected_p(const std::array<GeneratorQuad, 16>& gens,
                                  double e_a2, double e_b2);

// Monomials of p with nonzero expectation: E[B_u] = E[C_u] = E[D_u] = 0 by
// the theta1 and theta2 symmetries, so only all-A monomials survive.
Poly expectation_surviving_terms(const Poly& p);

// W^dag W computed as polynomials in one qubit's coordinates: true iff the
// diagonal entries equal A^2 + B^2 + C^2 + D^2 and the rest vanish.
bool one_qubit_gram_is_diagonal();

// Reference expansions of the syndrome-0 and syndrome-1 generator quadruples
// (a, b, c, d), kept sign for sign.
const std::array<std::string, 4>& reference_generators_s0();
const std::array<std::string, 4>& reference_generators_s1();

// Parity problem: find a set of coordinates to negate such that each listed
// monomial changes sign per its parity bit, with forced members and
// non-members. Solved over GF(2).
struct FlipProblem {
  std::vector<std::pair<Monomial, int>> parities;  // (monomial, required parity)
  FlipSet force_include, force_exclude;
};
std::optional<FlipSet> find_flip_set(const FlipProblem& problem);
bool flip_satisfies(const FlipSet& flips, const FlipProblem& problem);

// Odd overlap with all 64 monomials of the quadruple (pointwise negation of
// all four polynomials); optionally A-free.
FlipProblem negation_problem(const GeneratorQuad& quad, bool allow_a);

// Reference flip sets with known certificates.
FlipSet reference_flip_set_s1();                  // A-free, negates syndrome 1
FlipSet reference_flip_set_s0_with(int qubit);    // contains A_qubit only
FlipSet reference_flip_set_s0_single_b1();        // meets A0B1B4C2C3 in {B1}

// Full verification checklist; each entry is (check name, passed, detail).
struct VerifyItem {
  std::string name;
  bool ok;
  std::string detail;
};
std::vector<VerifyItem> verify_all();

}  // namespace qivar::symbolic
