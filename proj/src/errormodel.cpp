#include "qivar/errormodel.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "qivar/quadrature.hpp"

namespace qivar {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kTwoPi = 2.0 * kPi;
constexpr int kCdfCells = 4096;

double wrap_2pi(double x) {
  double y = std::fmod(x, kTwoPi);
  if (y < 0.0) y += kTwoPi;
  if (y >= kTwoPi) y = 0.0;
  return y;
}

// 15-point Gauss-Legendre on one interval, used for the CDF cells.
constexpr double kGlNodes[8] = {
    0.0,                0.2011940939974345, 0.3941513470775634,
    0.5709721726085388, 0.7244177313601701, 0.8482065834104272,
    0.9372733924007060, 0.9879925180204854,
};
constexpr double kGlWeights[8] = {
    0.2025782419255613, 0.1984314853271116, 0.1861610000155622,
    0.1662692058169939, 0.1395706779261543, 0.1071592204671719,
    0.0703660474881081, 0.0307532419961173,
};

template <class F>
double gl15_cell(const F& f, double a, double b) {
  const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
  double acc = kGlWeights[0] * f(mid);
  for (int i = 1; i < 8; ++i) {
    const double dx = half * kGlNodes[i];
    acc += kGlWeights[i] * (f(mid - dx) + f(mid + dx));
  }
  return acc * half;
}

// Fritsch-Carlson monotone cubic slopes for strictly increasing data.
std::vector<double> pchip_slopes(const std::vector<double>& x,
                                 const std::vector<double>& y) {
  const std::size_t n = x.size();
  std::vector<double> h(n - 1), d(n - 1), m(n);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    h[k] = x[k + 1] - x[k];
    d[k] = (y[k + 1] - y[k]) / h[k];
  }
  auto endpoint = [](double h0, double h1, double d0, double d1) {
    double s = ((2.0 * h0 + h1) * d0 - h0 * d1) / (h0 + h1);
    if (s * d0 <= 0.0)
      s = 0.0;
    else if (d0 * d1 < 0.0 && std::abs(s) > 3.0 * std::abs(d0))
      s = 3.0 * d0;
    return s;
  };
  if (n == 2) {
    m[0] = m[1] = d[0];
    return m;
  }
  m[0] = endpoint(h[0], h[1], d[0], d[1]);
  m[n - 1] = endpoint(h[n - 2], h[n - 3], d[n - 2], d[n - 3]);
  for (std::size_t k = 1; k + 1 < n; ++k) {
    if (d[k - 1] * d[k] <= 0.0) {
      m[k] = 0.0;
    } else {
      const double w1 = 2.0 * h[k] + h[k - 1];
      const double w2 = h[k] + 2.0 * h[k - 1];
      m[k] = (w1 + w2) / (w1 / d[k - 1] + w2 / d[k]);
    }
  }
  return m;
}

double hermite(double x, double x0, double x1, double y0, double y1, double m0,
               double m1) {
  const double h = x1 - x0, t = (x - x0) / h;
  const double t2 = t * t, t3 = t2 * t;
  return (2.0 * t3 - 3.0 * t2 + 1.0) * y0 + (t3 - 2.0 * t2 + t) * h * m0 +
         (-2.0 * t3 + 3.0 * t2) * y1 + (t3 - t2) * h * m1;
}

}  // namespace

AngleTriple::AngleTriple(double t0, double t1, double t2)
    : theta0(t0), theta1(t1), theta2(t2) {
  if (!(t0 >= 0.0 && t0 <= kPi) || !(t1 >= 0.0 && t1 <= kPi) ||
      !(t2 >= 0.0 && t2 < kTwoPi))
    throw std::invalid_argument("error angle out of range");
}

Abcd abcd(const AngleTriple& t) {
  const double s0 = std::sin(t.theta0);
  const double s01 = s0 * std::sin(t.theta1);
  return {std::cos(t.theta0), s0 * std::cos(t.theta1),
          s01 * std::cos(t.theta2), s01 * std::sin(t.theta2)};
}

void build_w2x2(const AngleTriple& t, cplx out[4]) {
  const Abcd v = abcd(t);
  out[0] = {v.a, v.b};
  out[1] = {-v.c, v.d};
  out[2] = {v.c, v.d};
  out[3] = {v.a, -v.b};
}

Mat build_w(const AngleTriple& t) {
  cplx w[4];
  build_w2x2(t, w);
  Mat m(2);
  m(0, 0) = w[0];
  m(0, 1) = w[1];
  m(1, 0) = w[2];
  m(1, 1) = w[3];
  return m;
}

Mat build_product_error(const AngleSample& s) {
  Mat out = build_w(s[0]);
  for (int u = 1; u < 5; ++u) out = tensor(out, build_w(s[u]));
  return out;
}

double normal_density(double theta0, double sigma) {
  if (!(sigma >= 0.0) || sigma >= 1.0 - 1e-12)
    throw std::invalid_argument("sigma must lie in [0, 1)");
  const double den = 1.0 + sigma * sigma - 2.0 * sigma * std::cos(theta0);
  return (1.0 - sigma * sigma) / (2.0 * kPi * kPi * den * den);
}

ErrorDistribution ErrorDistribution::normal(double sigma) {
  if (!(sigma >= 0.0) || sigma >= 1.0 - 1e-12)
    throw std::invalid_argument("sigma must lie in [0, 1)");
  ErrorDistribution d;
  d.kind_ = DistKind::normal;
  d.sigma_ = sigma;
  d.finalize();
  return d;
}

ErrorDistribution ErrorDistribution::uniform() {
  ErrorDistribution d;
  d.kind_ = DistKind::uniform;
  d.finalize();
  return d;
}

ErrorDistribution ErrorDistribution::tabulated(std::vector<double> theta,
                                               std::vector<double> density) {
  if (theta.size() != density.size() || theta.size() < 2)
    throw std::invalid_argument("tabulated density needs matching grids");
  if (std::abs(theta.front()) > 1e-9 || std::abs(theta.back() - kPi) > 1e-9)
    throw std::invalid_argument("tabulated grid must span [0, pi]");
  for (std::size_t i = 0; i + 1 < theta.size(); ++i)
    if (!(theta[i] < theta[i + 1]))
      throw std::invalid_argument("tabulated grid must strictly increase");
  for (double f : density)
    if (!(f >= 0.0) || !std::isfinite(f))
      throw std::invalid_argument("tabulated density must be finite and >= 0");
  theta.front() = 0.0;
  theta.back() = kPi;
  ErrorDistribution d;
  d.kind_ = DistKind::tabulated;
  d.tab_theta_ = std::move(theta);
  d.tab_f_ = std::move(density);
  d.finalize();
  return d;
}

ErrorDistribution ErrorDistribution::tabulated_from_file(
    const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open density table: " + path);
  std::string line;
  if (!std::getline(in, line))
    throw std::invalid_argument("empty density table: " + path);
  while (!line.empty() && (line.back() == '\r' || line.back() == ' '))
    line.pop_back();
  if (line != "theta0,f")
    throw std::invalid_argument("density table must start with 'theta0,f'");
  std::vector<double> theta, f;
  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    std::istringstream row(line);
    double t, v;
    char comma;
    if (!(row >> t >> comma >> v) || comma != ',')
      throw std::invalid_argument("bad row " + std::to_string(lineno) + " in " +
                               path);
    theta.push_back(t);
    f.push_back(v);
  }
  return tabulated(std::move(theta), std::move(f));
}

double ErrorDistribution::density(double theta0) const {
  switch (kind_) {
    case DistKind::normal:
      return normal_density(theta0, sigma_);
    case DistKind::uniform:
      return 1.0 / (2.0 * kPi * kPi);
    case DistKind::tabulated: {
      const double t = std::clamp(theta0, 0.0, kPi);
      const auto it =
          std::upper_bound(tab_theta_.begin(), tab_theta_.end(), t);
      std::size_t hi = std::min<std::size_t>(it - tab_theta_.begin(),
                                             tab_theta_.size() - 1);
      if (hi == 0) hi = 1;
      const std::size_t lo = hi - 1;
      const double u =
          (t - tab_theta_[lo]) / (tab_theta_[hi] - tab_theta_[lo]);
      return tab_f_[lo] + u * (tab_f_[hi] - tab_f_[lo]);
    }
  }
  return 0.0;
}

double ErrorDistribution::marginal(double theta0) const {
  const double s = std::sin(theta0);
  return 4.0 * kPi * density(theta0) * s * s;
}

void ErrorDistribution::finalize() {
  auto marg = [this](double t) { return marginal(t); };
  norm_ = integrate(marg, 0.0, kPi, 1e-11);
  const double tol = (kind_ == DistKind::tabulated) ? 1e-6 : 1e-9;
  if (std::abs(norm_ - 1.0) > tol)
    throw std::invalid_argument("error density is not normalized");

  grid_.resize(kCdfCells + 1);
  cum_.resize(kCdfCells + 1);
  for (int k = 0; k <= kCdfCells; ++k) grid_[k] = kPi * k / kCdfCells;
  cum_[0] = 0.0;
  for (int k = 0; k < kCdfCells; ++k)
    cum_[k + 1] = cum_[k] + gl15_cell(marg, grid_[k], grid_[k + 1]);
  const double total = cum_.back();
  for (double& c : cum_) c /= total;
  cum_.back() = 1.0;

  // Inverse-CDF knots; ties (cells with zero mass) are skipped so the
  // abscissae strictly increase.
  inv_x_.clear();
  inv_y_.clear();
  inv_x_.push_back(cum_[0]);
  inv_y_.push_back(grid_[0]);
  for (int k = 1; k <= kCdfCells; ++k) {
    if (cum_[k] > inv_x_.back()) {
      inv_x_.push_back(cum_[k]);
      inv_y_.push_back(grid_[k]);
    }
  }
  if (inv_x_.size() < 2)
    throw std::invalid_argument("error density has no mass");
  inv_m_ = pchip_slopes(inv_x_, inv_y_);
}

double ErrorDistribution::cdf(double theta0) const {
  if (theta0 <= 0.0) return 0.0;
  if (theta0 >= kPi) return 1.0;
  const double h = kPi / kCdfCells;
  const int k = std::min(static_cast<int>(theta0 / h), kCdfCells - 1);
  auto marg = [this](double t) { return marginal(t); };
  const double partial = gl15_cell(marg, grid_[k], theta0) / norm_;
  return std::clamp(cum_[k] + partial, 0.0, 1.0);
}

double ErrorDistribution::inverse_cdf(double u) const {
  if (!(u >= 0.0 && u <= 1.0))
    throw std::invalid_argument("inverse_cdf argument outside [0, 1]");
  const auto it = std::upper_bound(inv_x_.begin(), inv_x_.end(), u);
  std::size_t hi =
      std::min<std::size_t>(it - inv_x_.begin(), inv_x_.size() - 1);
  if (hi == 0) hi = 1;
  const std::size_t lo = hi - 1;
  const double t = hermite(u, inv_x_[lo], inv_x_[hi], inv_y_[lo], inv_y_[hi],
                           inv_m_[lo], inv_m_[hi]);
  return std::clamp(t, 0.0, kPi);
}

double ErrorDistribution::moment(const std::function<double(double)>& g,
                                 double tol) const {
  return integrate([this, &g](double t) { return g(t) * density(t); }, 0.0,
                   kPi, tol);
}

AngleTriple sample_angles(const ErrorDistribution& d, RngStream& rng) {
  const double t0 = d.inverse_cdf(rng.uniform());
  const double t1 = std::acos(1.0 - 2.0 * rng.uniform());
  const double t2 = kTwoPi * rng.uniform();
  return {t0, t1, t2};
}

AngleSample sample_error(const ErrorDistribution& d, RngStream& rng) {
  return {sample_angles(d, rng), sample_angles(d, rng), sample_angles(d, rng),
          sample_angles(d, rng), sample_angles(d, rng)};
}

AngleTriple flip_triple(const AngleTriple& t, bool fa, bool fb, bool fc,
                        bool fd) {
  const double t0 = fa ? kPi - t.theta0 : t.theta0;
  const double t1 = fb ? kPi - t.theta1 : t.theta1;
  double t2 = t.theta2;
  if (fc && fd)
    t2 = wrap_2pi(t2 + kPi);
  else if (fc)
    t2 = wrap_2pi(kPi - t2);
  else if (fd)
    t2 = wrap_2pi(kTwoPi - t2);
  return {t0, t1, t2};
}

AngleSample apply_signflip(const AngleSample& s, const FlipSet& flips) {
  bool f[5][4] = {};
  for (const VarId& v : flips) {
    if (v.qubit < 0 || v.qubit > 4)
      throw std::invalid_argument("flip set qubit out of range");
    f[v.qubit][static_cast<int>(v.kind)] = true;
  }
  AngleSample out = s;
  for (int u = 0; u < 5; ++u)
    out[u] = flip_triple(s[u], f[u][0], f[u][1], f[u][2], f[u][3]);
  return out;
}

}  // namespace qivar
