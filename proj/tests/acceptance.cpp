// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "galelab/asymptotics.hpp"
#include "galelab/cli.hpp"
#include "galelab/exactcomb.hpp"
#include "galelab/oracle.hpp"
#include "galelab/record.hpp"
#include "galelab/rng.hpp"
#include "galelab/simulate.hpp"

using namespace galelab;

namespace {

struct Verdict {
  bool pass = true;
  std::string detail;
  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail += (detail.empty() ? "" : "; ") + what;
    }
  }
};

VectorConfig gaussian_config(int dim, int n, std::uint64_t seed) {
  RandomStream rng(seed, 0);
  std::vector<std::vector<double>> vs(n, std::vector<double>(dim));
  for (auto& v : vs) {
    for (double& x : v) x = rng.gaussian();
  }
  return VectorConfig::from_doubles(dim, vs);
}

std::string fmt(double x) { return format_double(x); }

Verdict wendel_exactness() {
  Verdict v;
  int cases = 0;
  for (int M = 1; M <= 12; ++M) {
    for (int r = 1; r <= M; ++r) {
      const ExactProb oracle = oracle::wendel_sign_oracle(r, M, gaussian_config(r, M, 1000 + 13 * M + r));
      v.require(oracle == wendel(r, M), "r=" + std::to_string(r) + " M=" + std::to_string(M) + " oracle " +
                                            oracle.value().get_str() + " vs " + wendel(r, M).value().get_str());
      ++cases;
    }
  }
  v.detail = std::to_string(cases) + " (r,M) pairs" + (v.detail.empty() ? "" : ": " + v.detail);
  return v;
}

Verdict wendel_sampling() {
  Verdict v;
  const int cases[][2] = {{1, 2}, {2, 5}, {3, 8}, {5, 12}};
  std::string info;
  for (auto [r, M] : cases) {
    const auto t0 = std::chrono::steady_clock::now();
    const MCEstimate e = estimate_containment(r, M, Distribution::gaussian_iid, 100000, 20 + r);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const double exact = to_double(1 - wendel(r, M).value());
    const std::string tag = "(" + std::to_string(r) + "," + std::to_string(M) + ")";
    v.require(e.agrees_with(exact), tag + " mean " + fmt(e.mean) + " vs " + fmt(exact));
    v.require(secs < 60.0, tag + " took " + fmt(secs) + " s");
    info += tag + " z=" + fmt(std::round(100 * (e.mean - exact) / e.std_error) / 100) + " ";
  }
  v.detail = info + v.detail;
  return v;
}

Verdict expectation_formula() {
  Verdict v;
  const Dims cases[] = {{2, 4, 1}, {3, 6, 1}, {4, 8, 2}, {6, 10, 3}};
  v.require(expected_fk({2, 4, 1}) == Rational(24, 7), "anchor 24/7 not reproduced");
  std::string info;
  for (const Dims& d : cases) {
    const MCEstimate e = estimate_fk({d, Distribution::gaussian_iid, static_cast<std::uint64_t>(300 + d.N)}, d.k, 10000);
    const double exact = to_double(expected_fk(d));
    const std::string tag = "(" + std::to_string(d.d) + "," + std::to_string(d.N) + "," + std::to_string(d.k) + ")";
    v.require(e.agrees_with(exact), tag + " mean " + fmt(e.mean) + " vs " + fmt(exact));
    info += tag + " z=" + fmt(std::round(100 * (e.mean - exact) / e.std_error) / 100) + " ";
  }
  v.detail = info + v.detail;
  return v;
}

Verdict gale_vs_hull() {
  Verdict v;
  const int cases[][2] = {{2, 5}, {3, 7}, {4, 9}};
  std::uint64_t subsets = 0;
  for (auto [d, N] : cases) {
    const oracle::RoundTripReport rep = oracle::verify_gale_criterion(d, N, 100, 400 + d);
    subsets += rep.subsets_checked;
    v.require(rep.ok() && rep.passed == 100, "(" + std::to_string(d) + "," + std::to_string(N) + ") " +
                                                 std::to_string(rep.mismatches.size()) + " mismatches");
  }
  v.detail = std::to_string(subsets) + " subsets compared" + (v.detail.empty() ? "" : ": " + v.detail);
  return v;
}

Verdict cover_efron() {
  Verdict v;
  std::string info;
  for (const Dims& d : {Dims{2, 4, 1}, Dims{3, 6, 1}}) {
    const DualityReport rep = verify_duality_identity(d, 10000, 500 + d.N);
    const std::string tag = "(" + std::to_string(d.d) + "," + std::to_string(d.N) + "," + std::to_string(d.k) + ")";
    v.require(rep.gale_pass, tag + " gale mean " + fmt(rep.gale.mean));
    v.require(rep.cone_pass, tag + " cone mean " + fmt(rep.cone.mean));
    info += tag + " exact " + rep.exact.get_str() + " gale " + fmt(rep.gale.mean) + " cone " + fmt(rep.cone.mean) + " ";
  }
  v.detail = info + v.detail;
  return v;
}

Verdict thresholds() {
  Verdict v;
  v.require(rho_weak(0.75) == to_double(Rational(2, 3)), "rho_W(0.75) = " + fmt(rho_weak(0.75)));
  std::ostringstream out, err;
  cli::run({"threshold", "--delta", "0.75", "--which", "weak"}, out, err);
  const Json rec = Json::parse(out.str());
  v.require(rational_from_json(rec["results"]["exact"]) == Rational(2, 3), "threshold command not exactly 2/3");

  double worst = 0.0;
  double prev = 0.0;
  bool increasing = true;
  for (int i = 1; i <= 1000; ++i) {
    const double delta = 0.5 + 0.5 * i / 1001.0;
    const double rho = rho_strong(delta);
    worst = std::max(worst, std::abs(g_exponent({delta, rho})));
    if (i > 1 && !(rho > prev)) increasing = false;
    prev = rho;
  }
  v.require(worst < 1e-12, "max residual " + fmt(worst));
  v.require(increasing, "rho_S not strictly increasing");
  const double a = rho_strong(0.75);
  const double b = rho_strong(0.9);
  v.require(std::abs(a - 0.034611877143988873) <= 1e-12 * 0.034611877143988873, "rho_S(0.75) = " + fmt(a));
  v.require(std::abs(b - 0.10508730659154481) <= 1e-12 * 0.10508730659154481, "rho_S(0.9) = " + fmt(b));
  v.detail = "max |G| " + fmt(worst) + ", rho_S(0.75) " + fmt(a) + ", rho_S(0.9) " + fmt(b) +
             (v.detail.empty() ? "" : ": " + v.detail);
  return v;
}

Verdict weak_trend() {
  Verdict v;
  const std::vector<int> ds{20, 40, 80, 160};
  const auto below = phase_experiment(0.75, 0.5, ds, 0, 0);
  const auto above = phase_experiment(0.75, 0.9, ds, 0, 0);
  std::string info = "rho=0.5:";
  for (std::size_t i = 0; i < ds.size(); ++i) {
    info += " " + fmt(to_double(below[i].ratio));
    if (i > 0) v.require(below[i].ratio > below[i - 1].ratio, "rho=0.5 not increasing at d=" + std::to_string(ds[i]));
  }
  info += "; rho=0.9:";
  for (std::size_t i = 0; i < ds.size(); ++i) {
    info += " " + fmt(to_double(above[i].ratio));
    if (i > 0) v.require(above[i].ratio < above[i - 1].ratio, "rho=0.9 not decreasing at d=" + std::to_string(ds[i]));
  }
  v.require(below.back().ratio > Rational(99, 100), "terminal ratio at rho=0.5 not above 0.99");
  v.require(above.back().ratio < Rational(1, 100), "terminal ratio at rho=0.9 not below 0.01");
  v.detail = info + (v.detail.empty() ? "" : ": " + v.detail);
  return v;
}

Verdict strong_trend() {
  Verdict v;
  const std::vector<int> ds{10, 15, 20};
  const auto rows = phase_experiment(0.9, 0.05, ds, 500, 800);
  std::string info;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const PhaseRow& row = rows[i];
    if (!row.neighborly) {
      v.require(false, "no estimate at d=" + std::to_string(ds[i]) + ": " + row.note);
      continue;
    }
    const MCEstimate& p = *row.neighborly;
    const double bound = neighborly_prob_lower_bound(row.dims).to_double();
    info += "d=" + std::to_string(row.dims.d) + " N=" + std::to_string(row.dims.N) + " k=" +
            std::to_string(row.dims.k) + " p=" + fmt(p.mean) + " boole=" + fmt(bound) + " ";
    v.require(p.mean >= bound - 3 * p.std_error, "below Boole bound at d=" + std::to_string(row.dims.d));
    if (i > 0 && rows[i - 1].neighborly) {
      const MCEstimate& q = *rows[i - 1].neighborly;
      const double slack = std::sqrt(p.std_error * p.std_error + q.std_error * q.std_error);
      v.require(p.mean >= q.mean - slack, "decrease beyond 1 stderr at d=" + std::to_string(row.dims.d));
    }
  }
  v.detail = info + v.detail;
  return v;
}

Verdict determinism() {
  Verdict v;
  const std::vector<std::vector<std::string>> commands{
      {"simulate", "gale", "--d", "3", "--N", "7", "--k", "1", "--trials", "2000", "--seed", "9", "--neighborly"},
      {"simulate", "cone", "--d", "3", "--N", "6", "--k", "1", "--trials", "1000", "--seed", "9"},
      {"simulate", "gale", "--d", "2", "--N", "6", "--k", "1", "--trials", "2000", "--seed", "10", "--distribution",
       "sphere"},
  };
  for (const auto& args : commands) {
    std::string payload[2];
    int idx = 0;
    for (const char* workers : {"1", "8"}) {
      setenv(cli::kWorkersEnv, workers, 1);
      std::ostringstream out, err;
      const int code = cli::run(args, out, err);
      v.require(code == 0, "exit " + std::to_string(code) + " for " + args[1]);
      Json rec = Json::parse(out.str());
      rec.erase("wallclock_ms");
      payload[idx++] = rec.dump();
    }
    unsetenv(cli::kWorkersEnv);
    v.require(payload[0] == payload[1], args[1] + " payload differs between 1 and 8 workers");
  }
  v.detail = std::to_string(commands.size()) + " commands compared" + (v.detail.empty() ? "" : ": " + v.detail);
  return v;
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    double budget_s;
    std::function<Verdict()> run;
  };
  const std::vector<Criterion> criteria{
      {"1 wendel equals sign-pattern oracle, 1 <= r <= M <= 12", 60, wendel_exactness},
      {"2 unconditioned containment frequency matches 1 - P_{r,M}", 240, wendel_sampling},
      {"3 estimate_fk agrees with expected_fk", 300, expectation_formula},
      {"4 Gale criterion matches hull oracle on 300 round trips", 600, gale_vs_hull},
      {"5 Gale and Cover-Efron means match the exact value", 300, cover_efron},
      {"6 threshold curves", 1, thresholds},
      {"7 exact ratio trend at delta=0.75", 60, weak_trend},
      {"8 neighborliness trend at delta=0.9, rho=0.05", 900, strong_trend},
      {"9 simulate payloads identical at 1 and 8 workers", 60, determinism},
  };
  int failures = 0;
  for (const Criterion& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = c.run();
    } catch (const std::exception& e) {
      v.pass = false;
      v.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (secs > c.budget_s) v.require(false, "over time budget of " + fmt(c.budget_s) + " s");
    if (!v.pass) ++failures;
    std::printf("%s  %s  (%.2f s)  %s\n", v.pass ? "PASS" : "FAIL", c.name, secs, v.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
