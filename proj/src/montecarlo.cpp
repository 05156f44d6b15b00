#include "qivar/montecarlo.hpp"

#include <atomic>
#include <chrono>
#include <cmath>
#include <exception>
#include <functional>
#include <mutex>
#include <stdexcept>
#include <thread>
#include <vector>

#include "qivar/code5.hpp"

namespace qivar {

namespace {

constexpr std::uint64_t kChunk = 8192;

// Distinct stream ids keep estimators from sharing draws under one seed.
enum StreamId : std::uint64_t {
  kStreamVPsi = 1,
  kStreamVq = 2,
  kStreamSyndrome = 3,
  kStreamCorrected = 4,
  kStreamA0 = 5,
  kStreamSymmetry = 6,
  kStreamSymmetryDet = 7,
};

struct Timer {
  std::chrono::steady_clock::time_point start =
      std::chrono::steady_clock::now();
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                         start)
        .count();
  }
};

void check_config(const RunConfig& cfg) {
  if (cfg.n != 1 && cfg.n != 5)
    throw std::invalid_argument("n must be 1 or 5");
  if (cfg.samples < 1) throw std::invalid_argument("samples must be positive");
  if (cfg.workers < 1) throw std::invalid_argument("workers must be positive");
}

// Runs `kernel(rng, count, acc)` over fixed-size chunks and sums the per-chunk
// accumulators in chunk order, so the result is independent of worker count.
std::vector<double> run_chunked(
    const RunConfig& cfg, std::uint64_t stream, std::size_t acc_len,
    const std::function<void(RngStream&, std::uint64_t, std::vector<double>&)>&
        kernel) {
  const std::uint64_t chunks = (cfg.samples + kChunk - 1) / kChunk;
  std::vector<std::vector<double>> partials(chunks);
  std::atomic<std::uint64_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;

  auto work = [&] {
    try {
      while (true) {
        const std::uint64_t c = next.fetch_add(1);
        if (c >= chunks) return;
        const std::uint64_t count =
            std::min(kChunk, cfg.samples - c * kChunk);
        RngStream rng(cfg.seed, stream, c);
        std::vector<double> acc(acc_len, 0.0);
        kernel(rng, count, acc);
        partials[c] = std::move(acc);
      }
    } catch (...) {
      std::lock_guard<std::mutex> lock(error_mutex);
      if (!error) error = std::current_exception();
    }
  };

  const int workers =
      static_cast<int>(std::min<std::uint64_t>(cfg.workers, chunks));
  std::vector<std::thread> pool;
  for (int i = 1; i < workers; ++i) pool.emplace_back(work);
  work();
  for (std::thread& t : pool) t.join();
  if (error) std::rethrow_exception(error);

  std::vector<double> total(acc_len, 0.0);
  for (const auto& p : partials)
    for (std::size_t i = 0; i < acc_len; ++i) total[i] += p[i];
  return total;
}

EstimateReport mean_report(const std::string& name, const RunConfig& cfg,
                           double sum, double sum_sq, double wall) {
  const double n = static_cast<double>(cfg.samples);
  const double mean = sum / n;
  const double var = std::max(0.0, sum_sq / n - mean * mean);
  return {name, mean, std::sqrt(var / n), cfg.samples, cfg.seed, wall};
}

// Delta-method report for the ratio E[num]/E[den].
EstimateReport ratio_report(const std::string& name, const RunConfig& cfg,
                            double sum_num, double sum_num_sq, double sum_den,
                            double sum_den_sq, double sum_cross, double wall) {
  const double n = static_cast<double>(cfg.samples);
  const double mn = sum_num / n, md = sum_den / n;
  const double r = mn / md;
  const double var_n = std::max(0.0, sum_num_sq / n - mn * mn);
  const double var_d = std::max(0.0, sum_den_sq / n - md * md);
  const double cov = sum_cross / n - mn * md;
  const double var = std::max(0.0, var_n - 2.0 * r * cov + r * r * var_d);
  return {name, r, std::sqrt(var / n) / md, cfg.samples, cfg.seed, wall};
}

struct PipelineScratch {
  std::array<cplx, 32> zero, one, psi;
  std::array<cplx, 32 * 32> m_dag;  // row major

  PipelineScratch() {
    const CodeTables& t = CodeTables::instance();
    for (int i = 0; i < 32; ++i) {
      zero[i] = t.logical_zero()[i];
      one[i] = t.logical_one()[i];
    }
    const Mat& md = t.basis_matrix_dagger();
    for (int r = 0; r < 32; ++r)
      for (int c = 0; c < 32; ++c) m_dag[r * 32 + c] = md(r, c);
  }
};

const PipelineScratch& pipeline() {
  static const PipelineScratch scratch;
  return scratch;
}

// One full sweep: fresh logical coordinates, fresh angles, error applied
// factor by factor. Returns dimension (2 or 32) and fills phi/psi.
int draw_state(const RunConfig& cfg, const ErrorDistribution& dist,
               RngStream& rng, bool random_w, std::array<double, 4>& w,
               cplx* phi, cplx* psi) {
  if (random_w)
    w = random_logical_coords(rng);
  else
    w = {1.0, 0.0, 0.0, 0.0};
  const int dim = (cfg.n == 5) ? 32 : 2;
  if (cfg.n == 5) {
    const PipelineScratch& p = pipeline();
    const cplx alpha{w[0], w[1]}, beta{w[2], w[3]};
    for (int i = 0; i < 32; ++i) phi[i] = alpha * p.zero[i] + beta * p.one[i];
  } else {
    phi[0] = {w[0], w[1]};
    phi[1] = {w[2], w[3]};
  }
  for (int i = 0; i < dim; ++i) psi[i] = phi[i];
  for (int u = 0; u < cfg.n; ++u) {
    cplx w2[4];
    build_w2x2(sample_angles(dist, rng), w2);
    apply_one_qubit(w2, u, cfg.n, psi);
  }
  return dim;
}

void betas_of(const cplx* psi, std::array<cplx, 32>& betas,
              std::array<double, 16>& probs) {
  const PipelineScratch& p = pipeline();
  for (int r = 0; r < 32; ++r) {
    cplx acc{0.0, 0.0};
    const cplx* row = &p.m_dag[r * 32];
    for (int c = 0; c < 32; ++c) acc += row[c] * psi[c];
    betas[r] = acc;
  }
  for (int s = 0; s < 16; ++s)
    probs[s] = std::norm(betas[2 * s]) + std::norm(betas[2 * s + 1]);
}

}  // namespace

ErrorDistribution RunConfig::distribution() const {
  switch (dist) {
    case DistKind::normal:
      return ErrorDistribution::normal(sigma);
    case DistKind::uniform:
      return ErrorDistribution::uniform();
    case DistKind::tabulated:
      if (table_path.empty())
        throw std::invalid_argument("tabulated distribution needs a table");
      return ErrorDistribution::tabulated_from_file(table_path);
  }
  throw std::invalid_argument("bad distribution kind");
}

EstimateReport estimate_v_psi(const RunConfig& cfg) {
  check_config(cfg);
  Timer timer;
  const ErrorDistribution dist = cfg.distribution();
  const auto sums = run_chunked(
      cfg, kStreamVPsi, 2,
      [&](RngStream& rng, std::uint64_t count, std::vector<double>& acc) {
        std::array<cplx, 32> phi, psi;
        std::array<double, 4> w;
        for (std::uint64_t i = 0; i < count; ++i) {
          const int dim =
              draw_state(cfg, dist, rng, true, w, phi.data(), psi.data());
          double d2 = 0.0;
          for (int k = 0; k < dim; ++k) d2 += std::norm(psi[k] - phi[k]);
          acc[0] += d2;
          acc[1] += d2 * d2;
        }
      });
  return mean_report("v_psi", cfg, sums[0], sums[1], timer.seconds());
}

VqReport estimate_vq_fidelity(const RunConfig& cfg) {
  check_config(cfg);
  Timer timer;
  const ErrorDistribution dist = cfg.distribution();
  const auto sums = run_chunked(
      cfg, kStreamVq, 4,
      [&](RngStream& rng, std::uint64_t count, std::vector<double>& acc) {
        std::array<cplx, 32> phi, psi;
        std::array<double, 4> w;
        for (std::uint64_t i = 0; i < count; ++i) {
          const int dim =
              draw_state(cfg, dist, rng, true, w, phi.data(), psi.data());
          cplx ip{0.0, 0.0};
          for (int k = 0; k < dim; ++k) ip += std::conj(phi[k]) * psi[k];
          const double m = std::abs(ip);
          const double m2 = m * m;
          acc[0] += m;
          acc[1] += m2;
          acc[2] += m2;       // E[m^2] for the fidelity
          acc[3] += m2 * m2;  // E[m^4] for its error bar
        }
      });
  const double wall = timer.seconds();
  VqReport out;
  const double n = static_cast<double>(cfg.samples);
  const double mean_m = sums[0] / n;
  EstimateReport vq = mean_report("v_q", cfg, sums[0], sums[1], wall);
  vq.value = 2.0 - 2.0 * mean_m;
  vq.std_error *= 2.0;
  out.vq = vq;

  const double mean_m2 = sums[2] / n;
  const double f = std::sqrt(std::max(0.0, mean_m2));
  const double var_m2 = std::max(0.0, sums[3] / n - mean_m2 * mean_m2);
  const double se_m2 = std::sqrt(var_m2 / n);
  out.fidelity = {"fidelity", f, f > 0.0 ? se_m2 / (2.0 * f) : 0.0,
                  cfg.samples, cfg.seed, wall};

  const double lower = 1.0 - out.vq.value / 2.0;
  const double upper = std::sqrt(std::max(0.0, 1.0 - out.vq.value / 2.0));
  out.sandwich_ok = f >= lower - 1e-12 && f <= upper + 1e-12;
  return out;
}

std::array<EstimateReport, 16> estimate_syndrome_probs(const RunConfig& cfg) {
  RunConfig c5 = cfg;
  c5.n = 5;
  check_config(c5);
  Timer timer;
  const ErrorDistribution dist = c5.distribution();
  const auto sums = run_chunked(
      c5, kStreamSyndrome, 33,
      [&](RngStream& rng, std::uint64_t count, std::vector<double>& acc) {
        std::array<cplx, 32> phi, psi, betas;
        std::array<double, 16> probs;
        std::array<double, 4> w;
        for (std::uint64_t i = 0; i < count; ++i) {
          draw_state(c5, dist, rng, true, w, phi.data(), psi.data());
          betas_of(psi.data(), betas, probs);
          double total = 0.0;
          for (int s = 0; s < 16; ++s) {
            acc[s] += probs[s];
            acc[16 + s] += probs[s] * probs[s];
            total += probs[s];
          }
          if (std::abs(total - 1.0) > 1e-12) acc[32] += 1.0;
        }
      });
  if (sums[32] > 0.0)
    throw std::logic_error("syndrome probabilities failed to sum to one");
  const double wall = timer.seconds();
  std::array<EstimateReport, 16> out;
  for (int s = 0; s < 16; ++s)
    out[s] = mean_report("p_s" + std::to_string(s), c5, sums[s], sums[16 + s],
                         wall);
  return out;
}

CorrectedReport estimate_v_corrected(const RunConfig& cfg) {
  RunConfig c5 = cfg;
  c5.n = 5;
  check_config(c5);
  Timer timer;
  const ErrorDistribution dist = c5.distribution();
  // layout: 0..5 totals, then per-syndrome numerator/denominator sums
  const std::size_t kNum = 6, kNumSq = 22, kDen = 38, kDenSq = 54,
                    kCross = 70, kViol = 86;
  const auto sums = run_chunked(
      c5, kStreamCorrected, 87,
      [&](RngStream& rng, std::uint64_t count, std::vector<double>& acc) {
        std::array<cplx, 32> phi, psi, betas;
        std::array<double, 16> probs;
        std::array<double, 4> w;
        for (std::uint64_t i = 0; i < count; ++i) {
          draw_state(c5, dist, rng, true, w, phi.data(), psi.data());
          betas_of(psi.data(), betas, probs);
          const cplx alpha{w[0], w[1]}, beta{w[2], w[3]};
          double total = 0.0, p_total = 0.0;
          for (int s = 0; s < 16; ++s) {
            const double p = probs[s];
            p_total += p;
            double pd2 = 0.0;
            if (p > 1e-300) {
              const double inv = 1.0 / std::sqrt(p);
              pd2 = p * (std::norm(betas[2 * s] * inv - alpha) +
                         std::norm(betas[2 * s + 1] * inv - beta));
            }
            total += pd2;
            acc[kNum + s] += pd2;
            acc[kNumSq + s] += pd2 * pd2;
            acc[kDen + s] += p;
            acc[kDenSq + s] += p * p;
            acc[kCross + s] += pd2 * p;
          }
          if (std::abs(p_total - 1.0) > 1e-12) acc[kViol] += 1.0;
          double d2 = 0.0;
          for (int k = 0; k < 32; ++k) d2 += std::norm(psi[k] - phi[k]);
          const double gap = total - d2;
          acc[0] += total;
          acc[1] += total * total;
          acc[2] += d2;
          acc[3] += d2 * d2;
          acc[4] += gap;
          acc[5] += gap * gap;
        }
      });
  if (sums[kViol] > 0.0)
    throw std::logic_error("syndrome probabilities failed to sum to one");
  const double wall = timer.seconds();
  CorrectedReport out;
  out.v_corrected = mean_report("v_corrected", c5, sums[0], sums[1], wall);
  out.v_psi = mean_report("v_psi", c5, sums[2], sums[3], wall);
  out.gap = mean_report("gap", c5, sums[4], sums[5], wall);
  for (int s = 0; s < 16; ++s)
    out.v_conditional[s] = ratio_report(
        "v_cond_s" + std::to_string(s), c5, sums[kNum + s], sums[kNumSq + s],
        sums[kDen + s], sums[kDenSq + s], sums[kCross + s], wall);
  return out;
}

EstimateReport estimate_a0_term(const RunConfig& cfg) {
  RunConfig c5 = cfg;
  c5.n = 5;
  check_config(c5);
  Timer timer;
  const ErrorDistribution dist = c5.distribution();
  const auto sums = run_chunked(
      c5, kStreamA0, 2,
      [&](RngStream& rng, std::uint64_t count, std::vector<double>& acc) {
        const PipelineScratch& p = pipeline();
        std::array<cplx, 32> psi;
        for (std::uint64_t i = 0; i < count; ++i) {
          for (int k = 0; k < 32; ++k) psi[k] = p.zero[k];
          for (int u = 0; u < 5; ++u) {
            cplx w2[4];
            build_w2x2(sample_angles(dist, rng), w2);
            apply_one_qubit(w2, u, 5, psi.data());
          }
          cplx b0{0.0, 0.0}, b1{0.0, 0.0};
          for (int c = 0; c < 32; ++c) {
            b0 += p.m_dag[c] * psi[c];
            b1 += p.m_dag[32 + c] * psi[c];
          }
          const double p0 = std::norm(b0) + std::norm(b1);
          const double term = b0.real() * (1.0 - std::sqrt(p0));
          acc[0] += term;
          acc[1] += term * term;
        }
      });
  return mean_report("a0_term", c5, sums[0], sums[1], timer.seconds());
}

SymmetryReport central_symmetry_check(const RunConfig& cfg, int syndrome,
                                      const FlipSet& flips,
                                      std::uint64_t det_samples) {
  RunConfig c5 = cfg;
  c5.n = 5;
  check_config(c5);
  if (syndrome < 0 || syndrome > 15)
    throw std::invalid_argument("syndrome out of range");
  const ErrorDistribution dist = c5.distribution();
  SymmetryReport out;

  // Deterministic part: flipped angles negate the corrected pair exactly and
  // leave P_s unchanged; fresh random logical input per draw.
  {
    RngStream rng(c5.seed, kStreamSymmetryDet, 0);
    std::array<cplx, 32> psi, betas;
    std::array<double, 16> probs;
    std::array<double, 4> w;
    for (std::uint64_t i = 0; i < det_samples; ++i) {
      w = random_logical_coords(rng);
      const LogicalCoords coords(w);
      const AngleSample angles = sample_error(dist, rng);
      const State input = encode(coords);
      for (int k = 0; k < 32; ++k) psi[k] = input[k];
      for (int u = 0; u < 5; ++u) {
        cplx w2[4];
        build_w2x2(angles[u], w2);
        apply_one_qubit(w2, u, 5, psi.data());
      }
      betas_of(psi.data(), betas, probs);

      const AngleSample flipped = apply_signflip(angles, flips);
      std::array<cplx, 32> psi2;
      for (int k = 0; k < 32; ++k) psi2[k] = input[k];
      for (int u = 0; u < 5; ++u) {
        cplx w2[4];
        build_w2x2(flipped[u], w2);
        apply_one_qubit(w2, u, 5, psi2.data());
      }
      std::array<cplx, 32> betas2;
      std::array<double, 16> probs2;
      betas_of(psi2.data(), betas2, probs2);

      const double p = probs[syndrome], p2 = probs2[syndrome];
      out.max_prob_dev = std::max(out.max_prob_dev, std::abs(p - p2));
      double dev = 0.0;
      if (p > 1e-12 && p2 > 1e-12) {
        const double ia = 1.0 / std::sqrt(p), ib = 1.0 / std::sqrt(p2);
        dev = std::max(
            std::abs(betas2[2 * syndrome] * ib + betas[2 * syndrome] * ia),
            std::abs(betas2[2 * syndrome + 1] * ib +
                     betas[2 * syndrome + 1] * ia));
      }
      out.max_state_dev = std::max(out.max_state_dev, dev);
      if (dev > 1e-10 || std::abs(p - p2) > 1e-12) ++out.det_failures;
    }
  }

  // Statistical part: P_s-weighted mean of the corrected pair at fixed
  // logical input (1,0,0,0), so the syndrome-0 asymmetry stays visible.
  const auto sums = run_chunked(
      c5, kStreamSymmetry, 14,
      [&](RngStream& rng, std::uint64_t count, std::vector<double>& acc) {
        std::array<cplx, 32> phi, psi, betas;
        std::array<double, 16> probs;
        std::array<double, 4> w;
        for (std::uint64_t i = 0; i < count; ++i) {
          draw_state(c5, dist, rng, false, w, phi.data(), psi.data());
          betas_of(psi.data(), betas, probs);
          const double p = probs[syndrome];
          double comp[4] = {0.0, 0.0, 0.0, 0.0};
          if (p > 1e-300) {
            const double inv = 1.0 / std::sqrt(p);
            comp[0] = betas[2 * syndrome].real() * inv;
            comp[1] = betas[2 * syndrome].imag() * inv;
            comp[2] = betas[2 * syndrome + 1].real() * inv;
            comp[3] = betas[2 * syndrome + 1].imag() * inv;
          }
          for (int k = 0; k < 4; ++k) {
            const double pc = p * comp[k];
            acc[k] += pc;
            acc[4 + k] += pc * pc;
            acc[10 + k] += pc * p;
          }
          acc[8] += p;
          acc[9] += p * p;
        }
      });
  const double n = static_cast<double>(c5.samples);
  const double mden = sums[8] / n;
  const double var_den = std::max(0.0, sums[9] / n - mden * mden);
  out.mean_consistent_with_zero = true;
  for (int k = 0; k < 4; ++k) {
    const double mnum = sums[k] / n;
    const double var_num = std::max(0.0, sums[4 + k] / n - mnum * mnum);
    const double cov = sums[10 + k] / n - mnum * mden;
    const double r = mnum / mden;
    const double var =
        std::max(0.0, var_num - 2.0 * r * cov + r * r * var_den) / n;
    out.mean[k] = r;
    out.mean_se[k] = std::sqrt(var) / mden;
    if (std::abs(out.mean[k]) > 3.0 * out.mean_se[k])
      out.mean_consistent_with_zero = false;
  }
  return out;
}

}  // namespace qivar
