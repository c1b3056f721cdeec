#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "galelab/asymptotics.hpp"
#include "galelab/cli.hpp"
#include "galelab/errors.hpp"
#include "galelab/exactcomb.hpp"
#include "galelab/galecore.hpp"
#include "galelab/oracle.hpp"
#include "galelab/record.hpp"
#include "galelab/simulate.hpp"

namespace py = pybind11;
using namespace galelab;

namespace {

// Rationals cross the boundary as "num/den" text; the Python side wraps them
// in fractions.Fraction.
std::string text(const Rational& q) { return q.get_str(); }

Rational parse_rational(const std::string& s) {
  Rational q;
  if (q.set_str(s, 10) != 0) throw DomainError("not a rational number: '" + s + "'");
  q.canonicalize();
  return q;
}

VectorConfig config(const std::vector<std::vector<std::string>>& rows) {
  if (rows.empty()) throw DomainError("empty vector configuration");
  std::vector<Vector> vs;
  vs.reserve(rows.size());
  for (const auto& r : rows) {
    Vector v;
    v.reserve(r.size());
    for (const auto& s : r) v.push_back(parse_rational(s));
    vs.push_back(std::move(v));
  }
  const int dim = static_cast<int>(vs.front().size());
  return VectorConfig(dim, std::move(vs));
}

py::dict estimate(const MCEstimate& e) {
  py::dict out;
  out["mean"] = e.mean;
  out["stderr"] = e.std_error;
  out["stderr_defined"] = e.std_error_defined;
  out["ci95"] = py::make_tuple(e.ci_low, e.ci_high);
  out["trials"] = e.trials;
  out["seed"] = e.seed;
  out["rejected"] = e.rejected;
  return out;
}

SamplerConfig sampler(int d, int n, int k, std::uint64_t seed, const std::string& dist) {
  return SamplerConfig{Dims{d, n, k}, parse_distribution(dist), seed};
}

}  // namespace

PYBIND11_MODULE(_galelab, m) {
  m.doc() = "Native core of galelab";

  auto base = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<DegenerateInput>(m, "DegenerateInput", base.ptr());
  py::register_exception<RejectionBudgetExhausted>(m, "RejectionBudgetExhausted", base.ptr());

  m.def("binomial", [](long n, long k) { return binomial(n, k).get_str(); });
  m.def("wendel", [](int r, int M) { return text(wendel(r, M).value()); });
  m.def("origin_in_hull_prob", [](int r, int M) { return text(origin_in_hull_prob(r, M).value()); });
  m.def("expected_fk", [](int d, int n, int k) { return text(expected_fk({d, n, k})); });
  m.def("expected_fk_ratio", [](int d, int n, int k) { return text(expected_fk_ratio({d, n, k}).value()); });
  m.def("neighborly_prob_lower_bound",
        [](int d, int n, int k) { return text(neighborly_prob_lower_bound({d, n, k}).value()); });

  m.def("entropy", &entropy);
  m.def("g_exponent", [](double delta, double rho) { return g_exponent({delta, rho}); });
  m.def("rho_strong", &rho_strong, py::arg("delta"), py::arg("tol") = 1e-12);
  m.def("rho_weak", &rho_weak);

  m.def("contains_origin", [](const std::vector<std::vector<std::string>>& rows) {
    const VectorConfig c = config(rows);
    const LPFeasibility res = contains_origin(c);
    std::vector<std::string> w;
    for (const auto& q : res.feasible ? res.weights : res.functional) w.push_back(text(q));
    return py::make_tuple(res.feasible, w);
  });
  m.def("is_face", [](int d, const std::vector<std::vector<std::string>>& rows, const IndexSet& subset) {
    return is_face(GaleDiagram(d, config(rows)), subset);
  });
  m.def("count_faces", [](int d, const std::vector<std::vector<std::string>>& rows, int k) {
    return count_faces(GaleDiagram(d, config(rows)), k).count.get_str();
  });

  m.def(
      "estimate_fk",
      [](int d, int n, int k, std::uint64_t trials, std::uint64_t seed, const std::string& dist, unsigned workers) {
        py::gil_scoped_release release;
        const MCEstimate e = estimate_fk(sampler(d, n, k, seed, dist), k, trials, RunOptions{workers});
        py::gil_scoped_acquire acquire;
        return estimate(e);
      },
      py::arg("d"), py::arg("N"), py::arg("k"), py::arg("trials"), py::arg("seed"),
      py::arg("distribution") = "gaussian", py::arg("workers") = 1);
  m.def(
      "estimate_neighborly_prob",
      [](int d, int n, int k, std::uint64_t trials, std::uint64_t seed, const std::string& dist, unsigned workers) {
        py::gil_scoped_release release;
        const MCEstimate e = estimate_neighborly_prob(sampler(d, n, k, seed, dist), k, trials, RunOptions{workers});
        py::gil_scoped_acquire acquire;
        return estimate(e);
      },
      py::arg("d"), py::arg("N"), py::arg("k"), py::arg("trials"), py::arg("seed"),
      py::arg("distribution") = "gaussian", py::arg("workers") = 1);
  m.def(
      "estimate_cone_faces",
      [](int d, int n, int j, std::uint64_t trials, std::uint64_t seed, const std::string& dist, unsigned workers) {
        py::gil_scoped_release release;
        const MCEstimate e = estimate_cone_faces(sampler(d, n, 0, seed, dist), j, trials, RunOptions{workers});
        py::gil_scoped_acquire acquire;
        return estimate(e);
      },
      py::arg("d"), py::arg("N"), py::arg("j"), py::arg("trials"), py::arg("seed"),
      py::arg("distribution") = "gaussian", py::arg("workers") = 1);
  m.def(
      "estimate_containment",
      [](int r, int M, std::uint64_t trials, std::uint64_t seed, const std::string& dist, unsigned workers) {
        py::gil_scoped_release release;
        const MCEstimate e = estimate_containment(r, M, parse_distribution(dist), trials, seed, RunOptions{workers});
        py::gil_scoped_acquire acquire;
        return estimate(e);
      },
      py::arg("r"), py::arg("M"), py::arg("trials"), py::arg("seed"), py::arg("distribution") = "gaussian",
      py::arg("workers") = 1);

  m.def("verify_gale_criterion", [](int d, int n, std::uint64_t trials, std::uint64_t seed) {
    const oracle::RoundTripReport rep = oracle::verify_gale_criterion(d, n, trials, seed);
    py::dict out;
    out["trials"] = rep.trials;
    out["passed"] = rep.passed;
    out["subsets_checked"] = rep.subsets_checked;
    out["mismatches"] = rep.mismatches.size();
    return out;
  });

  m.def("run_cli", [](const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return py::make_tuple(code, out.str(), err.str());
  });

  m.attr("__version__") = GALELAB_VERSION;
}
