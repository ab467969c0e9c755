#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "horn/catalog.hpp"
#include "horn/harness.hpp"
#include "horn/pochhammer.hpp"

namespace py = pybind11;
using namespace horn;

namespace {

HornId horn_id(const std::string& name) {
  const auto id = parse_horn_id(name);
  if (!id) throw py::value_error("unknown function '" + name + "', expected h1 .. h7");
  return *id;
}

EvalPoint point_of(const std::pair<double, double>& p) { return {p.first, p.second}; }

py::object loads(const std::string& json) { return py::module_::import("json").attr("loads")(json); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Horn hypergeometric functions H1..H7: evaluation and identity verification.";

  auto base = py::register_exception<HornError>(m, "HornError", PyExc_RuntimeError);
  py::register_exception<PoleError>(m, "PoleError", base);
  py::register_exception<OverflowError>(m, "OverflowError", base);
  py::register_exception<DomainError>(m, "DomainError", base);
  py::register_exception<NonConvergence>(m, "NonConvergence", base);
  py::register_exception<QuadratureFailure>(m, "QuadratureFailure", base);
  py::register_exception<AdmissibilityError>(m, "AdmissibilityError", base);
  py::register_exception<SamplingExhausted>(m, "SamplingExhausted", base);

  m.def("pochhammer", [](double base, int k) { return pochhammer(base, k); }, py::arg("base"),
        py::arg("k"), "(base)_k for any integer k.");
  m.def("pochhammer_mixed", [](double base, int mi, int n) { return pochhammer_mixed(base, mi, n); },
        py::arg("base"), py::arg("m"), py::arg("n"), "(base)_{m-n} for m, n >= 0.");
  m.def("gamma_ln", &gamma_ln, py::arg("x"));

  m.def(
      "eval",
      [](const std::string& function, const std::vector<double>& params,
         std::pair<double, double> point, int max_m, int max_n, double tail_tol,
         const std::string& mode) {
        if (mode != "plain" && mode != "compensated") {
          throw py::value_error("mode must be 'plain' or 'compensated'");
        }
        const SeriesConfig cfg{max_m, max_n, tail_tol,
                               mode == "plain" ? SummationMode::plain : SummationMode::compensated};
        const EvalResult r = eval(horn_id(function), ParamVector(params), point_of(point), cfg);
        py::dict d;
        d["value"] = r.value;
        d["err_estimate"] = r.err_estimate;
        d["terms_used"] = r.terms_used;
        d["in_domain"] = r.in_domain;
        d["truncated_cleanly"] = r.truncated_cleanly;
        return d;
      },
      py::arg("function"), py::arg("params"), py::arg("point"), py::arg("max_m") = 160,
      py::arg("max_n") = 160, py::arg("tail_tol") = 1e-12, py::arg("mode") = "compensated");

  m.def(
      "term",
      [](const std::string& function, const std::vector<double>& params, int mi, int n) {
        return term(horn_id(function), ParamVector(params), mi, n);
      },
      py::arg("function"), py::arg("params"), py::arg("m"), py::arg("n"));

  m.def(
      "in_domain",
      [](const std::string& function, std::pair<double, double> point) {
        return in_domain(horn_id(function), point_of(point));
      },
      py::arg("function"), py::arg("point"));

  m.def(
      "safe_box",
      [](const std::string& function) {
        const SafeBox b = safe_box(horn_id(function));
        return std::make_pair(b.x, b.y);
      },
      py::arg("function"));

  m.def("identities", [] {
    std::vector<std::string> ids;
    for (const auto& r : catalog()) ids.push_back(r.id);
    return ids;
  });

  m.def("registry_json", [] { return registry_json(catalog()); });

  m.def(
      "check",
      [](const std::string& identity_id, const std::vector<double>& params,
         std::pair<double, double> point, int free, double t) {
        const IdentityRecord* rec = find_identity(identity_id);
        if (rec == nullptr) throw py::key_error(identity_id);
        const IdentityCheckOutcome o = check(*rec, {ParamVector(params), point_of(point), free, t});
        py::dict d;
        d["lhs"] = o.lhs;
        d["rhs"] = o.rhs;
        d["abs_err"] = o.abs_err;
        d["rel_err"] = o.rel_err;
        d["bound"] = o.bound;
        d["pass"] = o.pass;
        d["error"] = o.error;
        d["fd_value"] = o.fd_value ? py::cast(*o.fd_value) : py::none();
        return d;
      },
      py::arg("identity_id"), py::arg("params"), py::arg("point"), py::arg("free") = 0,
      py::arg("t") = 0.0);

  m.def(
      "verify",
      [](std::uint64_t seed, int samples, const std::string& identity, int jobs) {
        SamplePlan plan;
        plan.seed = seed;
        plan.n_samples = samples;
        std::vector<IdentityRecord> records;
        for (const auto& r : catalog()) {
          if (r.id.compare(0, identity.size(), identity) == 0) records.push_back(r);
        }
        VerificationReport rep;
        {
          py::gil_scoped_release release;
          rep = run(records, plan, TolerancePolicy::standard(), {}, jobs);
        }
        rep.wall_time_s.reset();
        return loads(report_json(rep));
      },
      py::arg("seed") = 0, py::arg("samples") = 100, py::arg("identity") = "",
      py::arg("jobs") = 1, "Run the sampled verification and return the report as a dict.");
}
