#include "qivar/symbolic.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <stdexcept>

#include "qivar/code5.hpp"

namespace qivar::symbolic {

namespace {

int bit_of(int index, int qubit) { return (index >> (4 - qubit)) & 1; }

GaussInt times_i(GaussInt g) { return {-g.im, g.re}; }

Poly from_map(const std::map<Monomial, GaussInt>& m) {
  Poly p;
  for (const auto& [code, g] : m)
    if (!g.is_zero()) p.terms.emplace_back(code, g);
  return p;
}

Poly poly_scale(const Poly& p, GaussInt s) {
  Poly out;
  out.terms.reserve(p.terms.size());
  for (const auto& [code, g] : p.terms) out.terms.emplace_back(code, g * s);
  return out;
}

Poly poly_add(const Poly& x, const Poly& y) {
  std::map<Monomial, GaussInt> acc;
  for (const auto& [code, g] : x.terms) acc[code] = acc[code] + g;
  for (const auto& [code, g] : y.terms) acc[code] = acc[code] + g;
  return from_map(acc);
}

}  // namespace

Monomial monomial_from_kinds(const std::array<VarKind, 5>& kinds) {
  Monomial m = 0;
  for (int u = 0; u < 5; ++u)
    m |= static_cast<Monomial>(static_cast<int>(kinds[u]) << (2 * (4 - u)));
  return m;
}

VarKind monomial_kind(Monomial m, int qubit) {
  return static_cast<VarKind>((m >> (2 * (4 - qubit))) & 3);
}

int monomial_a_count(Monomial m) {
  int n = 0;
  for (int u = 0; u < 5; ++u)
    if (monomial_kind(m, u) == VarKind::A) ++n;
  return n;
}

std::string monomial_name(Monomial m) {
  std::string out;
  for (int kind = 0; kind < 4; ++kind)
    for (int u = 0; u < 5; ++u)
      if (monomial_kind(m, u) == static_cast<VarKind>(kind)) {
        out += var_letter(static_cast<VarKind>(kind));
        out += static_cast<char>('0' + u);
      }
  return out;
}

Monomial parse_monomial(const std::string& s) {
  if (s.size() != 10)
    throw std::invalid_argument("monomial needs five variables: " + s);
  bool seen[5] = {};
  std::array<VarKind, 5> kinds{};
  for (std::size_t i = 0; i < s.size(); i += 2) {
    const FlipSet one = parse_flip_set(s.substr(i, 2));
    const VarId v = one.at(0);
    if (seen[v.qubit])
      throw std::invalid_argument("monomial repeats a qubit: " + s);
    seen[v.qubit] = true;
    kinds[v.qubit] = v.kind;
  }
  return monomial_from_kinds(kinds);
}

int monomial_shared_vars(Monomial x, Monomial y) {
  int n = 0;
  for (int u = 0; u < 5; ++u)
    if (monomial_kind(x, u) == monomial_kind(y, u)) ++n;
  return n;
}

bool monomial_odd_overlap(Monomial m, const FlipSet& flips) {
  int n = 0;
  for (const VarId& v : flips)
    if (monomial_kind(m, v.qubit) == v.kind) ++n;
  return (n & 1) != 0;
}

Poly Poly::conj() const {
  Poly out;
  out.terms.reserve(terms.size());
  for (const auto& [code, g] : terms) out.terms.emplace_back(code, g.conj());
  return out;
}

Poly Poly::negate() const { return poly_scale(*this, {-1, 0}); }

GaussInt Poly::coeff(Monomial m) const {
  const auto it = std::lower_bound(
      terms.begin(), terms.end(), m,
      [](const auto& term, Monomial key) { return term.first < key; });
  if (it != terms.end() && it->first == m) return it->second;
  return {0, 0};
}

std::array<double, 2> Poly::eval(
    const std::array<std::array<double, 4>, 5>& vals) const {
  double re = 0.0, im = 0.0;
  for (const auto& [code, g] : terms) {
    double prod = 1.0;
    for (int u = 0; u < 5; ++u)
      prod *= vals[u][static_cast<int>(monomial_kind(code, u))];
    re += g.re * prod;
    im += g.im * prod;
  }
  return {re, im};
}

Poly parse_poly(const std::string& text) {
  std::map<Monomial, GaussInt> acc;
  std::string token;
  int sign = 0;
  auto flush = [&] {
    if (token.empty()) return;
    if (sign == 0) throw std::invalid_argument("monomial without a sign");
    const Monomial m = parse_monomial(token);
    acc[m] = acc[m] + GaussInt{sign, 0};
    token.clear();
  };
  for (char c : text) {
    if (c == ' ' || c == '\n' || c == '\t') continue;
    if (c == '+' || c == '-') {
      flush();
      sign = (c == '+') ? 1 : -1;
    } else {
      token += c;
    }
  }
  flush();
  return from_map(acc);
}

ExactMat exact_code_matrix() {
  ExactMat m{};
  // Exact one-qubit Pauli action on an integer column: X permutes, Z applies
  // (-1)^bit, Y does both with a factor of i.
  auto apply_pauli = [](std::array<GaussInt, 32> v, int kind, int qubit) {
    std::array<GaussInt, 32> out{};
    const int mask = 1 << (4 - qubit);
    for (int i = 0; i < 32; ++i) {
      switch (kind) {
        case 0:  // X
          out[i] = v[i ^ mask];
          break;
        case 1: {  // Y
          GaussInt g = times_i(v[i ^ mask]);
          if (bit_of(i ^ mask, qubit)) g = GaussInt{0, 0} - g;
          out[i] = g;
          break;
        }
        case 2:  // Z
          out[i] = bit_of(i, qubit) ? GaussInt{0, 0} - v[i] : v[i];
          break;
      }
    }
    return out;
  };

  std::array<GaussInt, 32> zero{}, one{};
  for (int i = 0; i < 32; ++i) {
    zero[i] = {logical_zero_signs[i], 0};
    one[i] = {logical_one_signs[i], 0};
  }

  for (int s = 0; s < 16; ++s) {
    std::array<GaussInt, 32> img0 = zero, img1 = one;
    if (s >= 1) {
      const int kind = (s - 1) / 5;  // 0 = X, 1 = Y, 2 = Z
      const int qubit = (s - 1) % 5;
      img0 = apply_pauli(img0, kind, qubit);
      img1 = apply_pauli(img1, kind, qubit);
    }
    for (int r = 0; r < 32; ++r) {
      m[r][2 * s] = img0[r];
      m[r][2 * s + 1] = img1[r];
    }
  }
  return m;
}

bool exact_matrix_unitary(const ExactMat& m) {
  for (int r = 0; r < 32; ++r)
    for (int c = 0; c < 32; ++c) {
      GaussInt acc{0, 0};
      for (int p = 0; p < 32; ++p) acc = acc + m[p][r].conj() * m[p][c];
      const GaussInt want{r == c ? 16 : 0, 0};
      if (!(acc == want)) return false;
    }
  return true;
}

WbMatrix symbolic_wb(const ExactMat& m) {
  // Binomial entries of one W factor: (variable, coefficient) pairs indexed
  // by [row][col][term] with W = [[A+iB, -C+iD], [C+iD, A-iB]].
  static const VarKind kKind[2][2][2] = {
      {{VarKind::A, VarKind::B}, {VarKind::C, VarKind::D}},
      {{VarKind::C, VarKind::D}, {VarKind::A, VarKind::B}},
  };
  static const GaussInt kCoef[2][2][2] = {
      {{{1, 0}, {0, 1}}, {{-1, 0}, {0, 1}}},
      {{{1, 0}, {0, 1}}, {{1, 0}, {0, -1}}},
  };

  std::array<std::vector<std::pair<int, GaussInt>>, 32> nonzero;
  for (int c = 0; c < 32; ++c)
    for (int r = 0; r < 32; ++r)
      if (!m[r][c].is_zero()) nonzero[c].emplace_back(r, m[r][c]);

  WbMatrix wb;
  std::vector<GaussInt> scratch(1024);
  for (int j = 0; j < 32; ++j) {
    for (int k = 0; k < 32; ++k) {
      std::fill(scratch.begin(), scratch.end(), GaussInt{0, 0});
      for (const auto& [p, mpj] : nonzero[j]) {
        for (const auto& [q, mqk] : nonzero[k]) {
          const GaussInt g = mpj.conj() * mqk;
          // The 32 expansion terms of prod_u W_u[bit_u(p), bit_u(q)].
          for (int choice = 0; choice < 32; ++choice) {
            GaussInt coef = g;
            Monomial code = 0;
            for (int u = 0; u < 5; ++u) {
              const int r = bit_of(p, u), c = bit_of(q, u);
              const int t = (choice >> u) & 1;
              coef = coef * kCoef[r][c][t];
              code |= static_cast<Monomial>(static_cast<int>(kKind[r][c][t])
                                            << (2 * (4 - u)));
            }
            scratch[code] = scratch[code] + coef;
          }
        }
      }
      Poly entry;
      for (int code = 0; code < 1024; ++code) {
        const GaussInt g = scratch[code];
        if (g.is_zero()) continue;
        if (g.re % 16 != 0 || g.im % 16 != 0)
          throw std::logic_error("transformed entry not divisible by 16");
        entry.terms.emplace_back(static_cast<Monomial>(code),
                                 GaussInt{g.re / 16, g.im / 16});
      }
      wb[j][k] = std::move(entry);
    }
  }
  return wb;
}

std::array<GeneratorQuad, 16> extract_generators(const WbMatrix& wb) {
  std::array<GeneratorQuad, 16> out;
  auto split = [](const Poly& p, Poly& re, Poly& im) {
    for (const auto& [code, g] : p.terms) {
      if (g.re != 0) re.terms.emplace_back(code, GaussInt{g.re, 0});
      if (g.im != 0) im.terms.emplace_back(code, GaussInt{g.im, 0});
    }
  };
  for (int s = 0; s < 16; ++s) {
    split(wb[2 * s][0], out[s].a, out[s].b);
    split(wb[2 * s][1], out[s].c, out[s].d);
  }
  return out;
}

CheckReport verify_shape(const std::array<GeneratorQuad, 16>& gens) {
  CheckReport rep;
  const char* names = "abcd";
  for (int s = 0; s < 16; ++s) {
    const Poly* polys[4] = {&gens[s].a, &gens[s].b, &gens[s].c, &gens[s].d};
    std::vector<Monomial> all;
    for (int p = 0; p < 4; ++p) {
      const Poly& poly = *polys[p];
      const std::string tag =
          "syndrome " + std::to_string(s) + " " + names[p];
      if (poly.terms.size() != 16)
        rep.fail(tag + ": " + std::to_string(poly.terms.size()) +
                 " monomials, want 16");
      for (const auto& [code, g] : poly.terms) {
        all.push_back(code);
        if (g.im != 0 || (g.re != 1 && g.re != -1))
          rep.fail(tag + ": non-unit coefficient on " + monomial_name(code));
      }
      for (std::size_t i = 0; i < poly.terms.size(); ++i)
        for (std::size_t j = i + 1; j < poly.terms.size(); ++j) {
          const int shared = monomial_shared_vars(poly.terms[i].first,
                                                  poly.terms[j].first);
          if (shared != 1)
            rep.fail(tag + ": " + monomial_name(poly.terms[i].first) +
                     " and " + monomial_name(poly.terms[j].first) + " share " +
                     std::to_string(shared) + " variables");
        }
    }
    std::sort(all.begin(), all.end());
    if (std::adjacent_find(all.begin(), all.end()) != all.end())
      rep.fail("syndrome " + std::to_string(s) +
               ": repeated monomial across the quadruple");
  }
  return rep;
}

CheckReport verify_states_lemma(const WbMatrix& wb) {
  CheckReport rep;
  const std::array<GeneratorQuad, 16> gens = extract_generators(wb);
  const GaussInt i1{0, 1}, mi{0, -1};
  for (int s = 0; s < 16; ++s) {
    const GeneratorQuad& q = gens[s];
    // row 2s: coefficients of (w0, w1, w2, w3) are (a+ib, i(a+ib), c+id,
    // i(c+id)); row 2s+1 carries (c-id, i(c-id), -(a-ib), -i(a-ib)), except
    // that s = 0 swaps the roles: (-(c-id), -i(c-id), a-ib, i(a-ib)).
    const Poly apib = poly_add(q.a, poly_scale(q.b, i1));
    const Poly cpid = poly_add(q.c, poly_scale(q.d, i1));
    const Poly cmid = poly_add(q.c, poly_scale(q.d, mi));
    const Poly amib = poly_add(q.a, poly_scale(q.b, mi));

    const Poly want_top[4] = {apib, poly_scale(apib, i1), cpid,
                              poly_scale(cpid, i1)};
    const Poly lower0 = (s == 0) ? cmid.negate() : cmid;
    const Poly lower1 = (s == 0) ? amib : amib.negate();
    const Poly want_bot[4] = {lower0, poly_scale(lower0, i1), lower1,
                              poly_scale(lower1, i1)};

    const Poly got_top[4] = {wb[2 * s][0], poly_scale(wb[2 * s][0], i1),
                             wb[2 * s][1], poly_scale(wb[2 * s][1], i1)};
    const Poly got_bot[4] = {wb[2 * s + 1][0],
                             poly_scale(wb[2 * s + 1][0], i1),
                             wb[2 * s + 1][1],
                             poly_scale(wb[2 * s + 1][1], i1)};
    for (int wi = 0; wi < 4; ++wi) {
      if (!(got_top[wi] == want_top[wi]))
        rep.fail("beta_" + std::to_string(2 * s) + " coefficient of w" +
                 std::to_string(wi) + " mismatch");
      if (!(got_bot[wi] == want_bot[wi]))
        rep.fail("beta_" + std::to_string(2 * s + 1) + " coefficient of w" +
                 std::to_string(wi) + " mismatch");
    }
  }
  return rep;
}

std::array<std::array<int, 6>, 16> a_count_table(
    const std::array<GeneratorQuad, 16>& gens) {
  std::array<std::array<int, 6>, 16> table{};
  for (int s = 0; s < 16; ++s)
    for (const Poly* p : {&gens[s].a, &gens[s].b, &gens[s].c, &gens[s].d})
      for (const auto& [code, g] : p->terms)
        table[s][5 - monomial_a_count(code)] += 1;
  return table;
}

std::array<double, 16> expected_p(const std::array<GeneratorQuad, 16>& gens,
                                  double e_a2, double e_b2) {
  std::array<double, 16> out{};
  for (int s = 0; s < 16; ++s)
    for (const Poly* p : {&gens[s].a, &gens[s].b, &gens[s].c, &gens[s].d})
      for (const auto& [code, g] : p->terms) {
        double prod = static_cast<double>(g.re * g.re + g.im * g.im);
        for (int u = 0; u < 5; ++u)
          prod *= (monomial_kind(code, u) == VarKind::A) ? e_a2 : e_b2;
        out[s] += prod;
      }
  return out;
}

Poly expectation_surviving_terms(const Poly& p) {
  Poly out;
  for (const auto& [code, g] : p.terms)
    if (monomial_a_count(code) == 5) out.terms.emplace_back(code, g);
  return out;
}

bool one_qubit_gram_is_diagonal() {
  // Degree-2 polynomials in (A, B, C, D): exponent tuple -> coefficient.
  using Expo = std::array<int, 4>;
  using Quad = std::map<Expo, GaussInt>;
  auto mul = [](const std::pair<int, GaussInt>& x,
                const std::pair<int, GaussInt>& y, Quad& acc) {
    Expo e{};
    e[x.first] += 1;
    e[y.first] += 1;
    acc[e] = acc[e] + x.second * y.second;
  };
  // W entries as variable/coefficient pairs (0=A, 1=B, 2=C, 3=D).
  const std::vector<std::pair<int, GaussInt>> w[2][2] = {
      {{{0, {1, 0}}, {1, {0, 1}}}, {{2, {-1, 0}}, {3, {0, 1}}}},
      {{{2, {1, 0}}, {3, {0, 1}}}, {{0, {1, 0}}, {1, {0, -1}}}},
  };
  auto conj_term = [](std::pair<int, GaussInt> t) {
    t.second = t.second.conj();
    return t;
  };
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c) {
      Quad acc;
      for (int k = 0; k < 2; ++k)
        for (const auto& x : w[k][r])
          for (const auto& y : w[k][c]) mul(conj_term(x), y, acc);
      int nonzero = 0;
      for (const auto& [e, g] : acc) {
        if (g.is_zero()) continue;
        ++nonzero;
        const bool diag_square =
            r == c && g == GaussInt{1, 0} &&
            std::count(e.begin(), e.end(), 2) == 1 &&
            std::count(e.begin(), e.end(), 0) == 3;
        if (!diag_square) return false;
      }
      if (r == c && nonzero != 4) return false;
    }
  return true;
}

const std::array<std::string, 4>& reference_generators_s0() {
  static const std::array<std::string, 4> gens = {
      "+A0A1A2A3A4 +A0B1B4C2C3 +A0B2B3D1D4 +A0C1C4D2D3"
      "+A1B0B2C3C4 +A1B3B4D0D2 +A1C0C2D3D4 +A2B0B4D1D3"
      "+A2B1B3C0C4 +A2C1C3D0D4 +A3B0B1D2D4 +A3B2B4C0C1"
      "+A3C2C4D0D1 +A4B0B3C1C2 +A4B1B2D0D3 +A4C0C3D1D2",
      "+A0A1B3C2C4 +A0A2B1D3D4 +A0A3B4D1D2 +A0A4B2C1C3"
      "+A1A2B4C0C3 +A1A3B2D0D4 +A1A4B0D2D3 +A2A3B0C1C4"
      "+A2A4B3D0D1 +A3A4B1C0C2 +B0B1B2B3B4 +B0C2C3D1D4"
      "+B1C3C4D0D2 +B2C0C4D1D3 +B3C0C1D2D4 +B4C1C2D0D3",
      "-A0A1C3D2D4 -A0A2B3B4C1 -A0A3B1B2C4 -A0A4C2D1D3"
      "-A1A2C4D0D3 -A1A3B0B4C2 -A1A4B2B3C0 -A2A3C0D1D4"
      "-A2A4B0B1C3 -A3A4C1D0D2 -B0B2C1D3D4 -B0B3C4D1D2"
      "-B1B3C2D0D4 -B1B4C0D2D3 -B2B4C3D0D1 -C0C1C2C3C4",
      "+A0A1B2B4D3 +A0A2C3C4D1 +A0A3C1C2D4 +A0A4B1B3D2"
      "+A1A2B0B3D4 +A1A3C0C4D2 +A1A4C2C3D0 +A2A3B1B4D0"
      "+A2A4C0C1D3 +A3A4B0B2D1 +B0B1C2C4D3 +B0B4C1C3D2"
      "+B1B2C0C3D4 +B2B3C1C4D0 +B3B4C0C2D1 +D0D1D2D3D4",
  };
  return gens;
}

const std::array<std::string, 4>& reference_generators_s1() {
  static const std::array<std::string, 4> gens = {
      "+A0A1A3B2D4 +A0A2A4B3D1 +A0B1C3C4D2 +A0B4C1C2D3"
      "-A1A2B0B4C3 +A1A4C0D2D3 -A1B3C2C4D0 +A2A3C0C1C4"
      "-A2B1D0D3D4 -A3A4B0B1C2 -A3B4D0D1D2 -A4B2C1C3D0"
      "-B0B2C4D1D3 -B0B3C1D2D4 +B1B2B3B4C0 +C0C2C3D1D4",
      "-A0A1B3B4D2 -A0A2C1C3D4 -A0A3C2C4D1 -A0A4B1B2D3"
      "+A1A2A3A4D0 +A1B0C2D3D4 -A1B2C0C3C4 +A2B0B1B3C4"
      "-A2B4C0D1D3 +A3B0B2B4C1 -A3B1C0D2D4 +A4B0C3D1D2"
      "-A4B3C0C1C2 +B1B4C2C3D0 +B2B3D0D1D4 +C1C4D0D2D3",
      "+A0A1A4C2C3 +A0A2A3B1B4 +A0B2B3C1C4 +A0D1D2D3D4"
      "+A1A2B3C0D4 -A1A3B0C4D2 -A1B2B4D0D3 -A2A4B0C1D3"
      "-A2C3C4D0D1 +A3A4B2C0D1 -A3C1C2D0D4 -A4B1B3D0D2"
      "-B0B1B2C3D4 -B0B3B4C2D1 +B1C0C2C4D3 +B4C0C1C3D2",
      "+A0A1A2C4D3 +A0A3A4C1D2 +A0B1B3C2D4 +A0B2B4C3D1"
      "+A1A3B4C0C2 -A1A4B0B2B3 -A1C3D0D2D4 -A2A3B0D1D4"
      "+A2A4B1C0C3 -A2B3B4C1D0 -A3B1B2C4D0 -A4C2D0D1D3"
      "-B0B1B4D2D3 -B0C1C2C3C4 +B2C0C1D3D4 +B3C0C4D1D2",
  };
  return gens;
}

namespace {

constexpr int kVarCount = 20;

int var_index(const VarId& v) {
  return static_cast<int>(v.kind) * 5 + v.qubit;
}

std::uint32_t monomial_mask(Monomial m) {
  std::uint32_t mask = 0;
  for (int u = 0; u < 5; ++u)
    mask |= 1u << var_index({monomial_kind(m, u), u});
  return mask;
}

}  // namespace

std::optional<FlipSet> find_flip_set(const FlipProblem& problem) {
  // Gaussian elimination over GF(2); rows are (variable mask, parity).
  std::array<std::uint32_t, kVarCount> pivot_mask{};
  std::array<int, kVarCount> pivot_rhs{};
  std::array<bool, kVarCount> has_pivot{};
  std::vector<int> order;  // pivot creation order

  auto insert = [&](std::uint32_t mask, int rhs) {
    for (int col = 0; col < kVarCount; ++col)
      if ((mask & (1u << col)) && has_pivot[col]) {
        mask ^= pivot_mask[col];
        rhs ^= pivot_rhs[col];
      }
    if (mask == 0) return rhs == 0;
    int col = 0;
    while (!(mask & (1u << col))) ++col;
    has_pivot[col] = true;
    pivot_mask[col] = mask;
    pivot_rhs[col] = rhs;
    order.push_back(col);
    return true;
  };

  for (const auto& [m, parity] : problem.parities)
    if (!insert(monomial_mask(m), parity & 1)) return std::nullopt;
  for (const VarId& v : problem.force_include)
    if (!insert(1u << var_index(v), 1)) return std::nullopt;
  for (const VarId& v : problem.force_exclude)
    if (!insert(1u << var_index(v), 0)) return std::nullopt;

  // Back substitution with free variables set to zero. Each pivot row can
  // only reference free columns and pivots created later, so walking the
  // creation order backwards resolves everything in one pass.
  std::uint32_t x = 0;
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const int col = *it;
    const std::uint32_t rest = pivot_mask[col] & ~(1u << col);
    const int v =
        pivot_rhs[col] ^ (std::popcount(rest & x) & 1);
    if (v) x |= 1u << col;
  }
  FlipSet out;
  for (int col = 0; col < kVarCount; ++col)
    if (x & (1u << col))
      out.push_back({static_cast<VarKind>(col / 5), col % 5});
  return out;
}

bool flip_satisfies(const FlipSet& flips, const FlipProblem& problem) {
  for (const auto& [m, parity] : problem.parities)
    if (monomial_odd_overlap(m, flips) != (parity == 1)) return false;
  for (const VarId& v : problem.force_include)
    if (std::find(flips.begin(), flips.end(), v) == flips.end()) return false;
  for (const VarId& v : problem.force_exclude)
    if (std::find(flips.begin(), flips.end(), v) != flips.end()) return false;
  return true;
}

FlipProblem negation_problem(const GeneratorQuad& quad, bool allow_a) {
  FlipProblem problem;
  for (const Poly* p : {&quad.a, &quad.b, &quad.c, &quad.d})
    for (const auto& [code, g] : p->terms)
      problem.parities.emplace_back(code, 1);
  if (!allow_a)
    for (int u = 0; u < 5; ++u)
      problem.force_exclude.push_back({VarKind::A, u});
  return problem;
}

FlipSet reference_flip_set_s1() {
  return parse_flip_set("B3 B4 C0 C2 D0 D2 D3 D4");
}

FlipSet reference_flip_set_s0_with(int qubit) {
  static const char* sets[5] = {
      "A0 B0 B3 B4 C2 D2 D3 D4", "A1 B1 B2 B3 C4 D2 D3 D4",
      "A2 B0 C0 C3 C4 D2 D3 D4", "A3 B1 B2 B4 C2 D1 D3 D4",
      "A4 B1 C1 C2 C3 D2 D3 D4",
  };
  if (qubit < 0 || qubit > 4) throw std::invalid_argument("bad qubit");
  return parse_flip_set(sets[qubit]);
}

FlipSet reference_flip_set_s0_single_b1() {
  return parse_flip_set("A1 B1 B2 B3 C4 D2 D3 D4");
}

std::vector<VerifyItem> verify_all() {
  std::vector<VerifyItem> items;
  auto push = [&items](const std::string& name, bool ok,
                       const std::string& detail = "") {
    items.push_back({name, ok, detail});
  };

  const ExactMat m = exact_code_matrix();
  push("code matrix unitary (exact)", exact_matrix_unitary(m));
  push("one-qubit gram diagonal", one_qubit_gram_is_diagonal());

  const WbMatrix wb = symbolic_wb(m);
  bool entries_ok = true;
  std::string entry_detail;
  for (int j = 0; j < 32 && entries_ok; ++j)
    for (int k = 0; k < 32 && entries_ok; ++k) {
      if (wb[j][k].terms.size() != 32) {
        entries_ok = false;
        entry_detail = "entry (" + std::to_string(j) + "," +
                       std::to_string(k) + ") has " +
                       std::to_string(wb[j][k].terms.size()) + " monomials";
      }
      for (const auto& [code, g] : wb[j][k].terms)
        if (!g.is_unit()) {
          entries_ok = false;
          entry_detail = "non-unit coefficient in entry (" +
                         std::to_string(j) + "," + std::to_string(k) + ")";
        }
    }
  push("transformed entries: 32 unit monomials each", entries_ok,
       entry_detail);

  bool ident_ok = true;
  const Monomial all_a = 0;
  for (int j = 0; j < 32 && ident_ok; ++j)
    for (int k = 0; k < 32 && ident_ok; ++k)
      if (!(wb[j][k].coeff(all_a) == GaussInt{j == k ? 1 : 0, 0}))
        ident_ok = false;
  push("identity specialization (A=1, B=C=D=0)", ident_ok);

  const auto gens = extract_generators(wb);
  const CheckReport shape = verify_shape(gens);
  push("generator shape", shape.ok,
       shape.ok ? "" : shape.failures.front());

  const CheckReport lemma = verify_states_lemma(wb);
  push("beta linear forms", lemma.ok, lemma.ok ? "" : lemma.failures.front());

  const auto table = a_count_table(gens);
  const std::array<int, 6> row0 = {1, 0, 0, 30, 15, 18};
  const std::array<int, 6> rows = {0, 1, 6, 16, 26, 15};
  bool table_ok = table[0] == row0;
  for (int s = 1; s < 16; ++s) table_ok = table_ok && table[s] == rows;
  push("a-count table", table_ok);

  const auto& ref0 = reference_generators_s0();
  const auto& ref1 = reference_generators_s1();
  const Poly* got0[4] = {&gens[0].a, &gens[0].b, &gens[0].c, &gens[0].d};
  const Poly* got1[4] = {&gens[1].a, &gens[1].b, &gens[1].c, &gens[1].d};
  bool ref_ok = true;
  for (int i = 0; i < 4; ++i) {
    if (!(*got0[i] == parse_poly(ref0[i]))) ref_ok = false;
    if (!(*got1[i] == parse_poly(ref1[i]))) ref_ok = false;
  }
  push("reference generators match sign for sign", ref_ok);

  const Poly surviving = expectation_surviving_terms(gens[0].a);
  push("a_0 expectation reduces to the all-A monomial",
       surviving.terms.size() == 1 && surviving.terms[0].first == all_a &&
           surviving.terms[0].second == GaussInt{1, 0});

  bool flips_ok = true;
  std::string flip_detail;
  for (int s = 1; s < 16 && flips_ok; ++s) {
    const FlipProblem problem = negation_problem(gens[s], false);
    const auto found = find_flip_set(problem);
    if (!found || !flip_satisfies(*found, problem)) {
      flips_ok = false;
      flip_detail = "no A-free flip set for syndrome " + std::to_string(s);
    }
  }
  push("A-free flip sets exist for syndromes 1..15", flips_ok, flip_detail);

  push("no A-free flip set negates syndrome 0",
       !find_flip_set(negation_problem(gens[0], false)).has_value());

  bool refs_ok = flip_satisfies(reference_flip_set_s1(),
                                negation_problem(gens[1], false));
  for (int u = 0; u < 5; ++u) {
    FlipProblem p = negation_problem(gens[0], true);
    p.force_include.push_back({VarKind::A, u});
    for (int v = 0; v < 5; ++v)
      if (v != u) p.force_exclude.push_back({VarKind::A, v});
    if (!flip_satisfies(reference_flip_set_s0_with(u), p)) refs_ok = false;
    const auto found = find_flip_set(p);
    if (!found || !flip_satisfies(*found, p)) refs_ok = false;
  }
  {
    // Overlap with A0B1B4C2C3 restricted to exactly {B1}.
    FlipProblem p = negation_problem(gens[0], true);
    p.force_include.push_back({VarKind::B, 1});
    p.force_exclude.push_back({VarKind::A, 0});
    p.force_exclude.push_back({VarKind::B, 4});
    p.force_exclude.push_back({VarKind::C, 2});
    p.force_exclude.push_back({VarKind::C, 3});
    if (!flip_satisfies(reference_flip_set_s0_single_b1(), p)) refs_ok = false;
    const auto found = find_flip_set(p);
    if (!found || !flip_satisfies(*found, p)) refs_ok = false;
  }
  push("reference flip sets verify against their constraints", refs_ok);

  return items;
}

}  // namespace qivar::symbolic
