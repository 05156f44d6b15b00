#include "qivar/cli.hpp"

#include <CLI11.hpp>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "qivar/analytics.hpp"
#include "qivar/code5.hpp"
#include "qivar/montecarlo.hpp"
#include "qivar/symbolic.hpp"

namespace qivar::cli {

namespace {

std::string fmt_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

struct Field {
  std::string key, text;
  bool quoted = false;
};
using Record = std::vector<Field>;

Field num(const std::string& key, double v) { return {key, fmt_double(v)}; }
Field count(const std::string& key, std::uint64_t v) {
  return {key, std::to_string(v)};
}
Field str(const std::string& key, const std::string& v) {
  return {key, v, true};
}
Field flag(const std::string& key, bool v) {
  return {key, v ? "true" : "false"};
}

std::string json_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

void write_records(std::ostream& os, const std::vector<Record>& records,
                   const std::string& format) {
  if (records.empty()) return;
  if (format == "json") {
    for (const Record& r : records) {
      os << '{';
      for (std::size_t i = 0; i < r.size(); ++i) {
        if (i) os << ',';
        os << '"' << json_escape(r[i].key) << "\":";
        if (r[i].quoted)
          os << '"' << json_escape(r[i].text) << '"';
        else
          os << (r[i].text.empty() ? "null" : r[i].text);
      }
      os << "}\n";
    }
    return;
  }
  for (std::size_t i = 0; i < records[0].size(); ++i)
    os << (i ? "," : "") << records[0][i].key;
  os << '\n';
  for (const Record& r : records) {
    for (std::size_t i = 0; i < r.size(); ++i)
      os << (i ? "," : "") << r[i].text;
    os << '\n';
  }
}

// Every persisted record carries the run configuration; records append their
// own samples/seed fields so estimator reports can carry the realized values.
void append_config(Record& r, const RunConfig& cfg) {
  const char* names[] = {"normal", "uniform", "table"};
  r.push_back(str("dist", names[static_cast<int>(cfg.dist)]));
  r.push_back(cfg.dist == DistKind::normal ? num("sigma", cfg.sigma)
                                           : Field{"sigma", ""});
  r.push_back(str("table", cfg.table_path));
  r.push_back(count("n", cfg.n));
  r.push_back(count("workers", cfg.workers));
}

Record report_record(const EstimateReport& rep, const RunConfig& cfg) {
  Record r{str("name", rep.name), num("value", rep.value),
           num("std_error", rep.std_error), count("samples", rep.samples),
           count("seed", rep.seed)};
  append_config(r, cfg);
  return r;
}

int emit(const std::vector<Record>& records, const std::string& format,
         const std::string& out_path, std::ostream& out, std::ostream& err) {
  if (out_path.empty()) {
    write_records(out, records, format);
    return 0;
  }
  std::ofstream file(out_path);
  if (!file) {
    err << "error: cannot open output path: " << out_path << "\n";
    return 2;
  }
  write_records(file, records, format);
  if (!file.good()) {
    err << "error: failed while writing: " << out_path << "\n";
    return 2;
  }
  return 0;
}

struct CommonOpts {
  std::string dist = "normal";
  double sigma = 0.5;
  std::string table;
  int n = 5;
  std::uint64_t samples = 1000000;
  std::uint64_t seed = 0;
  int workers = 1;
  std::string out;
  std::string format = "csv";
};

void add_common(CLI::App* sub, CommonOpts& o, bool sampling) {
  sub->add_option("--dist", o.dist, "error distribution")
      ->check(CLI::IsMember({"normal", "uniform", "table"}));
  sub->add_option("--sigma", o.sigma,
                  "concentration of the normal distribution")
      ->check(CLI::Range(0.0, 1.0));
  sub->add_option("--table", o.table, "density table (theta0,f)");
  sub->add_option("--n", o.n, "number of qubits")
      ->check(CLI::IsMember({1, 5}));
  if (sampling) {
    sub->add_option("--samples", o.samples, "Monte Carlo draws")
        ->check(CLI::PositiveNumber);
    sub->add_option("--seed", o.seed, "RNG seed (generated when absent)");
    sub->add_option("--workers", o.workers, "worker threads")
        ->check(CLI::PositiveNumber);
  }
  sub->add_option("--out", o.out, "output file path");
  sub->add_option("--format", o.format, "output format")
      ->check(CLI::IsMember({"csv", "json"}));
}

RunConfig make_config(const CLI::App* sub, const CommonOpts& o, bool sampling,
                      std::ostream& out) {
  RunConfig cfg;
  if (o.dist == "normal")
    cfg.dist = DistKind::normal;
  else if (o.dist == "uniform")
    cfg.dist = DistKind::uniform;
  else
    cfg.dist = DistKind::tabulated;
  if (cfg.dist == DistKind::tabulated && o.table.empty())
    throw CLI::ValidationError("--dist table requires --table");
  if (cfg.dist == DistKind::normal && o.sigma >= 1.0 - 1e-12)
    throw CLI::ValidationError("--sigma must lie in [0, 1)");
  cfg.sigma = o.sigma;
  cfg.table_path = o.table;
  cfg.n = o.n;
  cfg.samples = o.samples;
  cfg.workers = o.workers;
  cfg.seed = o.seed;
  if (sampling && sub->count("--seed") == 0 && cfg.seed == 0) {
    std::random_device rd;
    cfg.seed = (static_cast<std::uint64_t>(rd()) << 32) ^ rd();
    if (cfg.seed == 0) cfg.seed = 1;
    out << "seed " << cfg.seed << " (generated)\n";
  }
  return cfg;
}

int cmd_analytic(const RunConfig& cfg, const std::string& format,
                 const std::string& out_path, std::ostream& out,
                 std::ostream& err) {
  const ErrorDistribution dist = cfg.distribution();
  const MomentSet m = compute_moments(dist);
  const auto probs = syndrome_probs_analytic(m);
  const double vq = quantum_variance_one_qubit(dist);
  std::vector<std::pair<std::string, double>> rows = {
      {"v_psi_n1", variance_one_qubit(m)},
      {"v_psi_n5", variance_n_qubits(m, 5)},
      {"e_p0", probs[0]},
      {"e_ps", probs[1]},
      {"e_a0", e_a0_analytic(m)},
      {"v_q_n1", vq},
      {"f_lower_n1", 1.0 - vq / 2.0},
      {"f_upper_n1", std::sqrt(1.0 - vq / 2.0)},
  };
  std::vector<Record> records;
  for (const auto& [name, value] : rows) {
    Record r{str("name", name), num("value", value), num("std_error", 0.0),
             count("samples", 0), count("seed", cfg.seed)};
    append_config(r, cfg);
    records.push_back(std::move(r));
    if (!out_path.empty()) out << name << " = " << fmt_double(value) << "\n";
  }
  return emit(records, format, out_path, out, err);
}

int cmd_mc(const RunConfig& cfg, const std::string& format,
           const std::string& out_path, std::ostream& out, std::ostream& err) {
  std::vector<Record> records;
  auto add = [&](const EstimateReport& rep) {
    records.push_back(report_record(rep, cfg));
    if (!out_path.empty())
      out << rep.name << " = " << fmt_double(rep.value) << " +- "
          << fmt_double(rep.std_error) << "  (" << fmt_double(rep.wall_seconds)
          << " s)\n";
  };

  add(estimate_v_psi(cfg));
  const VqReport vq = estimate_vq_fidelity(cfg);
  add(vq.vq);
  add(vq.fidelity);
  if (!vq.sandwich_ok) {
    err << "error: fidelity sandwich violated\n";
    return 1;
  }
  if (cfg.n == 5) {
    for (const EstimateReport& rep : estimate_syndrome_probs(cfg)) add(rep);
    const CorrectedReport corr = estimate_v_corrected(cfg);
    add(corr.v_corrected);
    add(corr.gap);
    for (const EstimateReport& rep : corr.v_conditional) add(rep);
    add(estimate_a0_term(cfg));
  }
  return emit(records, format, out_path, out, err);
}

std::string key_of(const std::string& name) {
  std::string key;
  for (char c : name)
    key += (std::isalnum(static_cast<unsigned char>(c)) ? c : '_');
  return key;
}

int cmd_verify(std::uint64_t seed, const std::string& out_path,
               std::ostream& out, std::ostream& err) {
  std::vector<symbolic::VerifyItem> items = symbolic::verify_all();

  // Numeric cross-checks against the floating pipeline.
  {
    const auto wb = symbolic::symbolic_wb(symbolic::exact_code_matrix());
    const auto gens = symbolic::extract_generators(wb);

    bool numeric_ok = is_unitary(CodeTables::instance().basis_matrix(), 1e-12);
    items.push_back({"code matrix unitary (numeric)", numeric_ok, ""});

    RngStream rng(seed, 101, 0);
    const ErrorDistribution dist = ErrorDistribution::uniform();
    double max_dev = 0.0;
    for (int i = 0; i < 50; ++i) {
      const AngleSample angles = sample_error(dist, rng);
      const GeneratorTable numeric = beta_generators(angles);
      std::array<std::array<double, 4>, 5> vals;
      for (int u = 0; u < 5; ++u) {
        const Abcd v = abcd(angles[u]);
        vals[u] = {v.a, v.b, v.c, v.d};
      }
      for (int s = 0; s < 16; ++s) {
        const double got[4] = {gens[s].a.eval(vals)[0], gens[s].b.eval(vals)[0],
                               gens[s].c.eval(vals)[0],
                               gens[s].d.eval(vals)[0]};
        const double want[4] = {numeric.a[s], numeric.b[s], numeric.c[s],
                                numeric.d[s]};
        for (int k = 0; k < 4; ++k)
          max_dev = std::max(max_dev, std::abs(got[k] - want[k]));
      }
    }
    items.push_back({"symbolic generators match numeric pipeline",
                     max_dev <= 1e-10,
                     "max deviation " + fmt_double(max_dev)});

    double max_p_dev = 0.0, max_sum_dev = 0.0;
    for (double sigma : {0.1, 0.3, 0.5, 0.7, 0.9}) {
      const MomentSet m = compute_moments(ErrorDistribution::normal(sigma));
      const auto ladder = syndrome_probs_analytic(m);
      const auto sym =
          symbolic::expected_p(gens, e_a_squared(m), e_b_squared(m));
      double total = 0.0;
      for (int s = 0; s < 16; ++s) {
        max_p_dev = std::max(max_p_dev, std::abs(ladder[s] - sym[s]));
        total += sym[s];
      }
      max_sum_dev = std::max(max_sum_dev, std::abs(total - 1.0));
    }
    items.push_back({"expected syndrome probabilities (two routes)",
                     max_p_dev <= 1e-9,
                     "max deviation " + fmt_double(max_p_dev)});
    items.push_back({"expected syndrome probabilities sum to one",
                     max_sum_dev <= 1e-9,
                     "max deviation " + fmt_double(max_sum_dev)});
  }

  bool all_ok = true;
  for (const auto& item : items) {
    all_ok = all_ok && item.ok;
    out << (item.ok ? "[PASS] " : "[FAIL] ") << item.name;
    if (!item.ok && !item.detail.empty()) out << " (" << item.detail << ")";
    out << "\n";
  }
  out << (all_ok ? "verification passed" : "verification FAILED") << "\n";

  if (!out_path.empty()) {
    std::ofstream file(out_path);
    if (!file) {
      err << "error: cannot open output path: " << out_path << "\n";
      return 2;
    }
    for (const auto& item : items)
      file << key_of(item.name) << "=" << (item.ok ? "pass" : "fail") << "\n";
    file << "overall=" << (all_ok ? "pass" : "fail") << "\n";
  }
  return all_ok ? 0 : 1;
}

int cmd_sweep(const RunConfig& base, const std::vector<double>& sigmas,
              const std::string& format, const std::string& out_path,
              std::ostream& out, std::ostream& err) {
  if (sigmas.empty()) throw CLI::ValidationError("--sigmas grid is empty");
  for (double s : sigmas)
    if (!(s >= 0.0) || s >= 1.0 - 1e-12)
      throw CLI::ValidationError("--sigmas entries must lie in [0, 1)");

  std::vector<Record> records;
  for (double sigma : sigmas) {
    RunConfig cfg = base;
    cfg.dist = DistKind::normal;
    cfg.sigma = sigma;
    cfg.n = 5;
    const MomentSet m = compute_moments(cfg.distribution());
    const CorrectedReport corr = estimate_v_corrected(cfg);
    const auto probs = estimate_syndrome_probs(cfg);
    const EstimateReport a0 = estimate_a0_term(cfg);
    const bool inequality_ok =
        corr.gap.value >= -3.0 * corr.gap.std_error;

    Record r{
        num("sigma", sigma),
        num("v_psi_analytic", variance_n_qubits(m, 5)),
        num("v_psi_mc", corr.v_psi.value),
        num("v_psi_mc_se", corr.v_psi.std_error),
        num("p0_analytic", syndrome_probs_analytic(m)[0]),
        num("p0_mc", probs[0].value),
        num("p0_mc_se", probs[0].std_error),
        num("v_corrected_mc", corr.v_corrected.value),
        num("v_corrected_mc_se", corr.v_corrected.std_error),
        num("a0_term_mc", a0.value),
        num("a0_term_mc_se", a0.std_error),
        num("gap_mc", corr.gap.value),
        num("gap_mc_se", corr.gap.std_error),
        flag("inequality_ok", inequality_ok),
        count("samples", cfg.samples),
        count("seed", cfg.seed),
        count("workers", cfg.workers),
    };
    records.push_back(std::move(r));
    if (!out_path.empty())
      out << "sigma " << fmt_double(sigma) << ": v_psi "
          << fmt_double(corr.v_psi.value) << ", v_corrected "
          << fmt_double(corr.v_corrected.value) << "\n";
  }
  return emit(records, format, out_path, out, err);
}

int cmd_weights(int points, const std::string& out_path, std::ostream& out,
                std::ostream& err) {
  const auto rows = weight_curves(points);
  std::ostream* os = &out;
  std::ofstream file;
  if (!out_path.empty()) {
    file.open(out_path);
    if (!file) {
      err << "error: cannot open output path: " << out_path << "\n";
      return 2;
    }
    os = &file;
  }
  *os << "theta0,w_quantum,w_variance\n";
  for (const WeightRow& r : rows)
    *os << fmt_double(r.theta0) << ',' << fmt_double(r.w_quantum) << ','
        << fmt_double(r.w_variance) << '\n';
  if (!out_path.empty() && !file.good()) {
    err << "error: failed while writing: " << out_path << "\n";
    return 2;
  }
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"five-qubit code laboratory for continuous unitary errors"};
  app.require_subcommand(1);
  // INI config: [subcommand] sections hold that subcommand's long options;
  // command-line values always win. Unknown keys are rejected.
  app.set_config("--config", "", "INI config with [subcommand] sections");
  app.allow_config_extras(CLI::config_extras_mode::error);

  CommonOpts analytic_opts, mc_opts, sweep_opts;
  CLI::App* analytic = app.add_subcommand(
      "analytic", "closed-form expectations through quadrature moments");
  add_common(analytic, analytic_opts, false);

  CLI::App* mc = app.add_subcommand("mc", "Monte Carlo estimator batch");
  add_common(mc, mc_opts, true);

  CLI::App* verify = app.add_subcommand(
      "verify", "exact symbolic structure checks and numeric cross-checks");
  std::string verify_out;
  std::uint64_t verify_seed = 20240901;
  verify->add_option("--out", verify_out, "machine-readable report path");
  verify->add_option("--seed", verify_seed, "seed for the numeric spot check");

  CLI::App* sweep = app.add_subcommand(
      "sweep", "sigma sweep of analytic and Monte Carlo quantities");
  add_common(sweep, sweep_opts, true);
  std::vector<double> sigmas = {0.1, 0.3, 0.5, 0.7, 0.9};
  sweep->add_option("--sigmas", sigmas, "comma-separated sigma grid")
      ->delimiter(',');

  CLI::App* weights = app.add_subcommand(
      "weights", "variance and quantum-variance weight curves");
  int weight_points = 512;
  std::string weights_out;
  weights->add_option("--points", weight_points, "grid points")
      ->check(CLI::Range(2, 1 << 20));
  weights->add_option("--out", weights_out, "output CSV path");

  std::vector<const char*> argv;
  argv.push_back("qivar");
  for (const std::string& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    std::ostringstream usage;
    const int code = app.exit(e, usage, usage);
    (code == 0 ? out : err) << usage.str();
    return code == 0 ? 0 : 2;
  }

  try {
    if (app.got_subcommand(analytic)) {
      const RunConfig cfg = make_config(analytic, analytic_opts, false, out);
      return cmd_analytic(cfg, analytic_opts.format, analytic_opts.out, out,
                          err);
    }
    if (app.got_subcommand(mc)) {
      const RunConfig cfg = make_config(mc, mc_opts, true, out);
      return cmd_mc(cfg, mc_opts.format, mc_opts.out, out, err);
    }
    if (app.got_subcommand(verify))
      return cmd_verify(verify_seed, verify_out, out, err);
    if (app.got_subcommand(sweep)) {
      const RunConfig cfg = make_config(sweep, sweep_opts, true, out);
      return cmd_sweep(cfg, sigmas, sweep_opts.format, sweep_opts.out, out,
                       err);
    }
    if (app.got_subcommand(weights))
      return cmd_weights(weight_points, weights_out, out, err);
  } catch (const CLI::ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  err << "error: no subcommand\n";
  return 2;
}

int run(int argc, const char* const* argv) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run(args, std::cout, std::cerr);
}

}  // namespace qivar::cli
