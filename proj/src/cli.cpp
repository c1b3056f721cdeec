#include "galelab/cli.hpp"

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "galelab/asymptotics.hpp"
#include "galelab/errors.hpp"
#include "galelab/exactcomb.hpp"
#include "galelab/oracle.hpp"
#include "galelab/record.hpp"
#include "galelab/simulate.hpp"

namespace galelab::cli {

unsigned workers_from_env() {
  const char* raw = std::getenv(kWorkersEnv);
  if (raw == nullptr || *raw == '\0') return 1;
  char* end = nullptr;
  const long v = std::strtol(raw, &end, 10);
  if (*end != '\0' || v < 0 || v > 4096) {
    throw DomainError(std::string(kWorkersEnv) + " must be a nonnegative integer, got '" + raw + "'");
  }
  return static_cast<unsigned>(v);
}

std::vector<double> parse_grid(const std::string& spec) {
  std::vector<double> out;
  const auto decimal = [](const std::string& s) { return galelab::to_double(parse_decimal(s)); };
  if (spec.find(':') != std::string::npos) {
    std::stringstream ss(spec);
    std::string lo, hi, count;
    if (!std::getline(ss, lo, ':') || !std::getline(ss, hi, ':') || !std::getline(ss, count) ||
        count.find(':') != std::string::npos) {
      throw DomainError("grid must look like lo:hi:count, got '" + spec + "'");
    }
    const Rational a = parse_decimal(lo);
    const Rational b = parse_decimal(hi);
    const Rational n = parse_decimal(count);
    if (n.get_den() != 1 || n < 1 || n > 100000) throw DomainError("grid count must be a positive integer");
    const long cnt = n.get_num().get_si();
    for (long i = 0; i < cnt; ++i) {
      Rational x = cnt == 1 ? a : Rational(a + (b - a) * i / (cnt - 1));
      x.canonicalize();
      out.push_back(galelab::to_double(x));
    }
    return out;
  }
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(decimal(item));
  if (out.empty()) throw DomainError("empty grid");
  return out;
}

namespace {

using Clock = std::chrono::steady_clock;

struct Context {
  std::ostream& out;
  std::ostream& err;
  RunOptions opts;
  Clock::time_point start = Clock::now();

  int emit(RunRecord rec, int code = kSuccess) {
    rec.wallclock_ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
    out << rec.dump() << '\n';
    return code;
  }
};

// MC estimate of P(o not in conv) derived from the containment frequency.
MCEstimate complement_estimate(MCEstimate est) {
  est.mean = 1.0 - est.mean;
  std::swap(est.ci_low, est.ci_high);
  est.ci_low = 1.0 - est.ci_low;
  est.ci_high = 1.0 - est.ci_high;
  return est;
}

int cmd_wendel(Context& ctx, int r, int M, std::optional<std::uint64_t> mc, std::optional<std::uint64_t> seed,
               const std::string& dist) {
  RunRecord rec;
  rec.command = "wendel";
  rec.params = {{"r", r}, {"M", M}};
  const ExactProb p = wendel(r, M);
  rec.results["P"] = rational_json(p.value());
  rec.results["origin_in_hull"] = rational_json(1 - p.value());
  if (mc) {
    if (!seed) throw DomainError("--mc requires an explicit --seed");
    rec.seed = *seed;
    rec.trials = *mc;
    rec.params["distribution"] = dist;
    const MCEstimate est =
        complement_estimate(estimate_containment(r, M, parse_distribution(dist), *mc, *seed, ctx.opts));
    rec.results["mc"] = estimate_json(est);
    rec.results["mc_agrees_3se"] = est.agrees_with(p.to_double());
  }
  return ctx.emit(std::move(rec));
}

int cmd_efk(Context& ctx, const Dims& dims, bool ratio, bool bound) {
  RunRecord rec;
  rec.command = "efk";
  rec.params = {{"d", dims.d}, {"N", dims.N}, {"k", dims.k}};
  rec.results["expected_fk"] = rational_json(expected_fk(dims));
  if (ratio) rec.results["ratio"] = rational_json(expected_fk_ratio(dims).value());
  if (bound) rec.results["boole_bound"] = rational_json(neighborly_prob_lower_bound(dims).value());
  return ctx.emit(std::move(rec));
}

int cmd_threshold(Context& ctx, const std::string& delta_text, const std::string& which_text, double tol) {
  RunRecord rec;
  rec.command = "threshold";
  const Threshold which = parse_threshold(which_text);
  const Rational delta_exact = parse_decimal(delta_text);
  const double delta = to_double(delta_exact);
  rec.params = {{"delta", delta_text}, {"which", to_string(which)}, {"tol", tol}};
  if (which == Threshold::weak) {
    const double rho = rho_weak(delta);
    Rational exact = 2 - 1 / delta_exact;
    if (exact < 0) exact = 0;
    rec.results["rho"] = rho;
    rec.results["exact"] = rational_json(exact);
  } else {
    const double rho = rho_strong(delta, tol);
    rec.results["rho"] = rho;
    rec.results["residual"] = std::abs(g_exponent({delta, rho}));
  }
  return ctx.emit(std::move(rec));
}

int cmd_simulate(Context& ctx, const std::string& model, const Dims& dims, std::uint64_t trials,
                 std::uint64_t seed, bool neighborly, const std::string& dist) {
  dims.validate();
  RunRecord rec;
  rec.command = "simulate";
  rec.seed = seed;
  rec.trials = trials;
  rec.params = {{"model", model}, {"d", dims.d}, {"N", dims.N}, {"k", dims.k}, {"distribution", dist},
                {"cap", ctx.opts.cap}};
  const SamplerConfig cfg{dims, parse_distribution(dist), seed};
  const Rational exact = expected_fk(dims);
  rec.results["exact_expected_fk"] = rational_json(exact);
  int code = kSuccess;
  if (model == "gale") {
    const MCEstimate est = estimate_fk(cfg, dims.k, trials, ctx.opts);
    rec.results["fk"] = estimate_json(est);
    rec.results["fk_agrees_3se"] = est.agrees_with(to_double(exact));
    if (neighborly) {
      const MCEstimate nb = estimate_neighborly_prob(cfg, dims.k, trials, ctx.opts);
      const Rational bound = neighborly_prob_lower_bound(dims).value();
      const bool respected = nb.mean >= to_double(bound) - 3.0 * nb.std_error;
      rec.results["neighborly"] = estimate_json(nb);
      rec.results["boole_bound"] = rational_json(bound);
      rec.results["bound_respected"] = respected;
      if (!respected) code = kVerificationFailure;
    }
  } else if (model == "cone") {
    if (neighborly) throw DomainError("--neighborly applies to the gale model only");
    const MCEstimate est = estimate_cone_faces(cfg, dims.k + 1, trials, ctx.opts);
    rec.results["cone_faces"] = estimate_json(est);
    rec.results["cone_faces_agrees_3se"] = est.agrees_with(to_double(exact));
  } else {
    throw DomainError("unknown model '" + model + "' (expected gale|cone)");
  }
  return ctx.emit(std::move(rec), code);
}

std::string csv_double(double x) { return format_double(x); }

int cmd_phase_diagram(Context& ctx, const std::string& delta_grid, const std::string& rho_grid, int d,
                      bool exact_only, std::optional<std::uint64_t> trials, std::optional<std::uint64_t> seed,
                      const std::string& out_path) {
  const std::vector<double> deltas = parse_grid(delta_grid);
  const std::vector<double> rhos = parse_grid(rho_grid);
  if (!exact_only && (!trials || !seed)) {
    throw DomainError("phase-diagram needs --trials and --seed unless --exact-only is given");
  }
  std::ofstream file;
  std::ostream* os = &ctx.out;
  if (out_path != "-") {
    file.open(out_path);
    if (!file) throw DomainError("cannot open output file '" + out_path + "'");
    os = &file;
  }
  *os << "delta,rho,d,N,k,ratio_num,ratio_den,ratio_f64,rho_w,rho_s";
  if (!exact_only) *os << ",mc_mean,mc_stderr,note";
  *os << '\n';
  for (double delta : deltas) {
    const double rw = rho_weak(delta);
    std::string rs;
    if (delta > 0.5) rs = csv_double(rho_strong(delta));
    for (double rho : rhos) {
      const Dims dims = phase_dims(delta, rho, d);
      const Rational ratio = expected_fk_ratio(dims).value();
      *os << csv_double(delta) << ',' << csv_double(rho) << ',' << dims.d << ',' << dims.N << ',' << dims.k << ','
          << ratio.get_num().get_str() << ',' << ratio.get_den().get_str() << ',' << csv_double(to_double(ratio))
          << ',' << csv_double(rw) << ',' << rs;
      if (!exact_only) {
        try {
          const SamplerConfig cfg{dims, Distribution::gaussian_iid, *seed};
          const MCEstimate est = estimate_neighborly_prob(cfg, dims.k, *trials, ctx.opts);
          *os << ',' << csv_double(est.mean) << ',' << csv_double(est.std_error) << ',';
        } catch (const EnumerationCapExceeded&) {
          *os << ",,,enumeration cap exceeded";
        }
      }
      *os << '\n';
    }
  }
  if (out_path != "-") {
    RunRecord rec;
    rec.command = "phase-diagram";
    rec.params = {{"delta_grid", delta_grid}, {"rho_grid", rho_grid}, {"d", d}, {"exact_only", exact_only}};
    if (seed) rec.seed = *seed;
    rec.trials = trials;
    rec.results = {{"out", out_path}, {"rows", deltas.size() * rhos.size()}};
    return ctx.emit(std::move(rec));
  }
  return kSuccess;
}

Json vectors_json(const std::vector<Vector>& vs) {
  Json arr = Json::array();
  for (const Vector& v : vs) {
    Json row = Json::array();
    for (const Rational& q : v) row.push_back(q.get_str());
    arr.push_back(std::move(row));
  }
  return arr;
}

int cmd_roundtrip(Context& ctx, int d, int N, std::uint64_t trials, std::uint64_t seed) {
  RunRecord rec;
  rec.command = "roundtrip";
  rec.seed = seed;
  rec.trials = trials;
  rec.params = {{"d", d}, {"N", N}, {"cap", ctx.opts.cap}};
  const oracle::RoundTripReport report = oracle::verify_gale_criterion(d, N, trials, seed, ctx.opts.cap);
  rec.results["pass"] = report.passed;
  rec.results["trials"] = report.trials;
  rec.results["subsets_checked"] = report.subsets_checked;
  Json mismatches = Json::array();
  for (const auto& m : report.mismatches) {
    mismatches.push_back({{"trial", m.trial},
                          {"k", m.k},
                          {"subset", m.subset},
                          {"gale_says_face", m.gale_says_face},
                          {"hull_says_face", m.hull_says_face},
                          {"diagram", vectors_json(m.diagram)},
                          {"points", vectors_json(m.points)}});
  }
  rec.results["mismatches"] = std::move(mismatches);
  return ctx.emit(std::move(rec), report.ok() ? kSuccess : kVerificationFailure);
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"galelab: random Gale diagrams, exact face statistics and thresholds"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kVersion));

  int r = 0, M = 0;
  std::optional<std::uint64_t> mc, seed_opt, trials_opt;
  std::string dist = "gaussian-iid";
  auto* wendel_cmd = app.add_subcommand("wendel", "Wendel probability P_{r,M}");
  wendel_cmd->add_option("--r", r, "dimension")->required();
  wendel_cmd->add_option("--M", M, "number of vectors")->required();
  wendel_cmd->add_option("--mc", mc, "add a Monte Carlo column with this many trials");
  wendel_cmd->add_option("--seed", seed_opt, "seed for --mc");
  wendel_cmd->add_option("--distribution", dist, "gaussian-iid|uniform-sphere");

  Dims dims{};
  bool ratio = false, bound = false;
  auto* efk_cmd = app.add_subcommand("efk", "exact expected number of k-faces");
  efk_cmd->add_option("--d", dims.d)->required();
  efk_cmd->add_option("--N", dims.N)->required();
  efk_cmd->add_option("--k", dims.k)->required();
  efk_cmd->add_flag("--ratio", ratio, "also print E f_k / C(N,k+1)");
  efk_cmd->add_flag("--bound", bound, "also print the union bound on P(f_k = C(N,k+1))");

  std::string delta_text, which = "strong";
  double tol = 1e-12;
  auto* thr_cmd = app.add_subcommand("threshold", "strong or weak threshold at delta");
  thr_cmd->add_option("--delta", delta_text)->required();
  thr_cmd->add_option("--which", which, "strong|weak")->required();
  thr_cmd->add_option("--tol", tol, "root residual tolerance");

  std::string model;
  std::uint64_t trials = 0, seed = 0;
  bool neighborly = false;
  auto* sim_cmd = app.add_subcommand("simulate", "Monte Carlo face counts");
  sim_cmd->add_option("model", model, "gale|cone")->required();
  sim_cmd->add_option("--d", dims.d)->required();
  sim_cmd->add_option("--N", dims.N)->required();
  sim_cmd->add_option("--k", dims.k)->required();
  sim_cmd->add_option("--trials", trials)->required();
  sim_cmd->add_option("--seed", seed)->required();
  sim_cmd->add_flag("--neighborly", neighborly, "also estimate P(f_k = C(N,k+1))");
  sim_cmd->add_option("--distribution", dist, "gaussian-iid|uniform-sphere");

  std::string delta_grid, rho_grid, out_path;
  int grid_d = 0;
  bool exact_only = false;
  auto* phase_cmd = app.add_subcommand("phase-diagram", "grid of exact expected-face ratios (CSV)");
  phase_cmd->add_option("--delta-grid", delta_grid, "lo:hi:count or comma list")->required();
  phase_cmd->add_option("--rho-grid", rho_grid, "lo:hi:count or comma list")->required();
  phase_cmd->add_option("--d", grid_d)->required();
  phase_cmd->add_flag("--exact-only", exact_only);
  phase_cmd->add_option("--trials", trials_opt);
  phase_cmd->add_option("--seed", seed_opt);
  phase_cmd->add_option("--out", out_path, "output path, - for stdout")->required();

  int rt_d = 0, rt_n = 0;
  auto* rt_cmd = app.add_subcommand("roundtrip", "Gale criterion versus brute-force hull faces");
  rt_cmd->add_option("--d", rt_d)->required();
  rt_cmd->add_option("--N", rt_n)->required();
  rt_cmd->add_option("--trials", trials)->required();
  rt_cmd->add_option("--seed", seed)->required();

  std::uint64_t cap = 0;
  for (auto* sub : {sim_cmd, phase_cmd}) sub->add_option("--cap", cap, "subset enumeration cap");
  rt_cmd->add_option("--cap", cap, "subset enumeration cap per k");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::CallForVersion&) {
    out << kVersion << '\n';
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }

  try {
    Context ctx{out, err, RunOptions{}};
    ctx.opts.workers = workers_from_env();
    if (*wendel_cmd) return cmd_wendel(ctx, r, M, mc, seed_opt, dist);
    if (*efk_cmd) return cmd_efk(ctx, dims, ratio, bound);
    if (*thr_cmd) return cmd_threshold(ctx, delta_text, which, tol);
    if (*sim_cmd) {
      if (cap) ctx.opts.cap = cap;
      return cmd_simulate(ctx, model, dims, trials, seed, neighborly, dist);
    }
    if (*phase_cmd) {
      if (cap) ctx.opts.cap = cap;
      return cmd_phase_diagram(ctx, delta_grid, rho_grid, grid_d, exact_only, trials_opt, seed_opt, out_path);
    }
    if (*rt_cmd) {
      ctx.opts.cap = cap ? cap : oracle::kDefaultOracleCap;
      return cmd_roundtrip(ctx, rt_d, rt_n, trials, seed);
    }
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const RejectionBudgetExhausted& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kVerificationFailure;
  }
  return kUsageError;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("galelab");
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace galelab::cli
