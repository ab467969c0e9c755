#include "horn/catalog.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "catalog_build.hpp"

namespace horn {

std::string_view to_string(Family f) {
  switch (f) {
    case Family::CONTIG: return "CONTIG";
    case Family::REC: return "REC";
    case Family::DIFF_THETA: return "DIFF_THETA";
    case Family::DIFF_DERIV: return "DIFF_DERIV";
    case Family::INT: return "INT";
    case Family::SUM: return "SUM";
  }
  return "?";
}

std::string_view to_string(RegistryStatus s) {
  return s == RegistryStatus::ACTIVE ? "ACTIVE" : "DISPUTED";
}

// ---------------------------------------------------------------------------
// SeriesEvaluator

namespace {

// Rectangle doublings tried when a side's series has not met the tail
// criterion; points near the edge of a safe box with large parameters need
// several hundred diagonals.
constexpr int kWidenSteps = 3;

template <class F>
double converged(const SeriesConfig& cfg, F&& f) {
  SeriesConfig c = cfg;
  for (int step = 0;; ++step) {
    try {
      const EvalResult r = f(c);
      if (r.truncated_cleanly) return r.value;
    } catch (const NonConvergence&) {
    }
    SeriesConfig wider = c;
    wider.max_m *= 2;
    wider.max_n *= 2;
    bool valid = step < kWidenSteps;
    if (valid) {
      try {
        wider.validate();
      } catch (const std::invalid_argument&) {
        valid = false;
      }
    }
    if (!valid) {
      throw NonConvergence("series tail above " + std::to_string(cfg.tail_tol) + " after " +
                           std::to_string(c.max_m) + "x" + std::to_string(c.max_n) + " terms");
    }
    c = wider;
  }
}

}  // namespace

double SeriesEvaluator::H(HornId id, const ParamVector& params, EvalPoint p) {
  return converged(cfg_, [&](const SeriesConfig& c) { return eval(id, params, p, c); });
}

double SeriesEvaluator::theta(HornId id, const ParamVector& params, EvalPoint p, ThetaWeights w) {
  return converged(cfg_, [&](const SeriesConfig& c) { return apply_theta(id, params, p, w, c); });
}

double SeriesEvaluator::theta_product(HornId id, const ParamVector& params, EvalPoint p, int s) {
  return converged(cfg_,
                   [&](const SeriesConfig& c) { return apply_theta_product(id, params, p, s, c); });
}

double SeriesEvaluator::partial(HornId id, const ParamVector& params, EvalPoint p, Axis axis,
                                int s) {
  return converged(cfg_, [&](const SeriesConfig& c) {
    return partial_derivative_series(id, params, p, axis, s, c);
  });
}

double SeriesEvaluator::integral(HornId id, const ParamVector& params, EvalPoint p,
                                 OperatorApplication op) {
  return converged(cfg_, [&](const SeriesConfig& c) { return apply_integral(id, params, p, op, c); });
}

double SeriesEvaluator::inv(double d) {
  if (d == 0.0) throw PoleError("division by a zero parameter expression");
  return 1.0 / d;
}

double SeriesEvaluator::inv_coord(double c) {
  if (c == 0.0) throw DomainError("division by a zero coordinate");
  return 1.0 / c;
}

double SeriesEvaluator::poch(double a, int k) { return pochhammer(a, k); }

double SeriesEvaluator::inv_poch(double a, int k) {
  const double v = pochhammer(a, k);
  if (v == 0.0) throw PoleError("reciprocal of a vanishing Pochhammer symbol");
  return 1.0 / v;
}

// ---------------------------------------------------------------------------
// Admissibility

namespace {

// Runs a side symbolically: every call answers 1 and records the first
// requirement that fails.
class RequirementCollector final : public Evaluator {
 public:
  explicit RequirementCollector(const AdmissibilityMargins& m) : m_(m) {}

  const std::string& failure() const { return failure_; }

  double H(HornId id, const ParamVector& params, EvalPoint p) override {
    series(id, params, p);
    return 1.0;
  }
  double theta(HornId id, const ParamVector& params, EvalPoint p, ThetaWeights) override {
    series(id, params, p);
    return 1.0;
  }
  double theta_product(HornId id, const ParamVector& params, EvalPoint p, int s) override {
    series(id, params, p);
    if (s < 0) fail("negative theta-product order");
    return 1.0;
  }
  double partial(HornId id, const ParamVector& params, EvalPoint p, Axis, int s) override {
    series(id, params, p);
    if (s < 0 || s > 6) fail("derivative order outside 0..6");
    return 1.0;
  }
  double integral(HornId id, const ParamVector& params, EvalPoint p,
                  OperatorApplication op) override {
    series(id, params, p);
    if (op.order < 1) fail("integral order must be positive");
    return 1.0;
  }
  double inv(double d) override {
    if (!(std::abs(d) > m_.param)) fail("divisor " + num(d) + " too close to zero");
    return 1.0;
  }
  double inv_coord(double c) override {
    if (!(std::abs(c) > m_.coord)) fail("division by coordinate " + num(c));
    return 1.0;
  }
  double poch(double a, int k) override {
    if (k < 0 && near_integer(a, m_.param)) {
      fail("negative-index Pochhammer base " + num(a) + " near an integer");
    }
    return 1.0;
  }
  double inv_poch(double a, int k) override {
    for (int j = 0; j < k; ++j) {
      if (!(std::abs(a + j) > m_.param)) {
        fail("reciprocal Pochhammer (" + num(a) + ")_" + std::to_string(k) + " has a vanishing factor");
        break;
      }
    }
    return 1.0;
  }

  void fail(std::string why) {
    if (failure_.empty()) failure_ = std::move(why);
  }

 private:
  static std::string num(double v) {
    std::ostringstream os;
    os.precision(17);
    os << v;
    return os.str();
  }

  void series(HornId id, const ParamVector& params, EvalPoint p) {
    if (params.size() != param_arity(id)) {
      fail(std::string(to_string(id)) + " called with the wrong number of parameters");
    } else if (!params_admissible(id, params, m_.param)) {
      std::string list;
      for (double v : params.values()) list += (list.empty() ? "" : ",") + num(v);
      fail(std::string(to_string(id)) + "(" + list + ") has an excluded parameter");
    }
    if (!std::isfinite(p.x) || !std::isfinite(p.y) || !in_domain(id, p)) {
      fail(std::string(to_string(id)) + " evaluated at (" + num(p.x) + ", " + num(p.y) +
           ") outside its safe box");
    }
  }

  AdmissibilityMargins m_;
  std::string failure_;
};

}  // namespace

std::string admissibility_failure(const IdentityRecord& rec, const Instance& inst,
                                  const AdmissibilityMargins& margins) {
  RequirementCollector col(margins);
  if (inst.params.size() != param_arity(rec.function)) {
    return "expected " + std::to_string(param_arity(rec.function)) + " parameters";
  }
  if (!rec.free_name.empty() && inst.free < 0) return "negative " + rec.free_name;
  if (!rec.fixed_free.empty() &&
      std::find(rec.fixed_free.begin(), rec.fixed_free.end(), inst.free) == rec.fixed_free.end()) {
    return "free integer not in the pinned set";
  }
  if (rec.family == Family::SUM && !(std::abs(inst.t) < 1.0)) return "|t| must be below 1";
  rec.lhs(col, inst);
  rec.rhs(col, inst);
  return col.failure();
}

bool admissible(const IdentityRecord& rec, const Instance& inst,
                const AdmissibilityMargins& margins) {
  return admissibility_failure(rec, inst, margins).empty();
}

// ---------------------------------------------------------------------------
// Registry

const std::vector<IdentityRecord>& catalog() {
  static const std::vector<IdentityRecord> records = [] {
    std::vector<IdentityRecord> out;
    detail::add_recursions(out);
    detail::add_differential(out);
    detail::add_integral(out);
    detail::add_summation(out);
    return out;
  }();
  return records;
}

const IdentityRecord* find_identity(std::string_view id) {
  for (const auto& r : catalog()) {
    if (r.id == id) return &r;
  }
  return nullptr;
}

const IdentityRecord& lookup(std::string_view id) {
  const IdentityRecord* r = find_identity(id);
  if (r == nullptr) throw std::out_of_range("unknown identity " + std::string(id));
  return *r;
}

std::string registry_json(const std::vector<IdentityRecord>& records, int indent) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& r : records) {
    nlohmann::json free = nlohmann::json::array();
    if (!r.free_name.empty()) {
      nlohmann::json f = {{"name", r.free_name}};
      if (!r.fixed_free.empty()) f["fixed"] = r.fixed_free;
      free.push_back(f);
    }
    nlohmann::json j = {{"identity_id", r.id},
                        {"family", std::string(to_string(r.family))},
                        {"function", std::string(to_string(r.function))},
                        {"paper_anchor", r.anchor},
                        {"free_integers", free},
                        {"status", std::string(to_string(r.status))},
                        {"open_question", r.open_question}};
    if (!r.note.empty()) j["note"] = r.note;
    arr.push_back(std::move(j));
  }
  return arr.dump(indent);
}

// ---------------------------------------------------------------------------
// Tolerances and checks

TolerancePolicy TolerancePolicy::standard() {
  TolerancePolicy t;
  t.overrides[Family::REC] = {1e-10, 1e-6};
  t.overrides[Family::DIFF_DERIV] = {1e-10, 1e-9};
  return t;
}

Tolerance TolerancePolicy::for_family(Family f) const {
  auto it = overrides.find(f);
  return it != overrides.end() ? it->second : Tolerance{a_tol, r_tol};
}

void TolerancePolicy::validate() const {
  auto ok = [](Tolerance t) {
    return std::isfinite(t.a_tol) && std::isfinite(t.r_tol) && t.a_tol > 0 && t.r_tol > 0;
  };
  if (!ok({a_tol, r_tol})) throw std::invalid_argument("tolerances must be positive and finite");
  for (const auto& [family, t] : overrides) {
    if (!ok(t)) {
      throw std::invalid_argument("tolerance override for " + std::string(to_string(family)) +
                                  " must be positive and finite");
    }
  }
}

namespace {

void compare(IdentityCheckOutcome& out, SideValue l, SideValue r, Tolerance t) {
  out.lhs = l.value;
  out.rhs = r.value;
  out.abs_err = std::abs(l.value - r.value);
  const double scale = std::max(std::abs(l.value), std::abs(r.value));
  out.rel_err = out.abs_err / std::max(scale, TolerancePolicy::kFloor);
  out.bound = t.a_tol + l.tail + r.tail + t.r_tol * scale;
  out.pass = std::isfinite(l.value) && std::isfinite(r.value) && out.abs_err <= out.bound;
}

// Second leg of a derivative check: central differences of the series itself,
// Richardson-combined over h and h/2 so the h^2 truncation term cancels.
void fd_leg(IdentityCheckOutcome& out, const IdentityRecord& rec, const Instance& inst,
            const SeriesConfig& cfg, Tolerance t) {
  const int s = inst.free;
  if (!rec.derivative_axis || s < 1 || s > 2) return;
  const Axis axis = *rec.derivative_axis;
  const double c = axis == Axis::x ? inst.point.x : inst.point.y;
  const double h = (s == 1 ? 1e-5 : 1e-4) * std::max(1.0, std::abs(c));
  double fd = 0.0;
  try {
    const double coarse = finite_difference(rec.function, inst.params, inst.point, axis, s, h, cfg);
    const double fine =
        finite_difference(rec.function, inst.params, inst.point, axis, s, h / 2, cfg);
    fd = (4.0 * fine - coarse) / 3.0;
  } catch (const DomainError&) {
    return;  // stencil would leave the safe box
  }
  const double f = eval(rec.function, inst.params, inst.point, cfg).value;
  const double amplification = (4.0 * std::pow(2.0, s) + 1.0) / 3.0;
  const double roundoff = t.a_tol + amplification * 64.0 *
                                        std::numeric_limits<double>::epsilon() * std::abs(f) /
                                        std::pow(h, s);
  const double diff = std::abs(fd - out.lhs);
  const double scale = std::max(std::abs(fd), std::abs(out.lhs));
  out.fd_value = fd;
  out.fd_rel_err = diff / std::max(scale, TolerancePolicy::kFloor);
  if (!(diff <= kFdRelTol * scale + roundoff)) out.pass = false;
}

}  // namespace

IdentityCheckOutcome check(const IdentityRecord& rec, const Instance& inst,
                           const SeriesConfig& cfg, const TolerancePolicy& tol) {
  const std::string why = admissibility_failure(rec, inst);
  if (!why.empty()) throw AdmissibilityError(rec.id + ": " + why);

  IdentityCheckOutcome out;
  out.witness = inst;
  const Tolerance t = tol.for_family(rec.family);
  SeriesEvaluator ev(cfg);
  try {
    compare(out, rec.lhs(ev, inst), rec.rhs(ev, inst), t);
    if (rec.family == Family::DIFF_DERIV) fd_leg(out, rec, inst, cfg, t);
  } catch (const HornError& e) {
    out.pass = false;
    out.error = e.what();
  } catch (const std::invalid_argument& e) {
    out.pass = false;
    out.error = e.what();
  }
  return out;
}

KInduction check_k_induction(const IdentityRecord& rec, const ParamVector& params, EvalPoint p,
                             int k_max, const SeriesConfig& cfg, const TolerancePolicy& tol) {
  if (rec.family != Family::REC || !rec.step) {
    throw std::invalid_argument(rec.id + " is not a recursion record");
  }
  if (k_max < 1) throw std::invalid_argument("k_max must be at least 1");

  KInduction res;
  for (int k = 1; k <= k_max; ++k) res.outcomes.push_back(check(rec, {params, p, k}, cfg, tol));

  const RecStep& step = *rec.step;
  const IdentityRecord* contig = step.contig_id.empty() ? nullptr : &lookup(step.contig_id);
  const Tolerance t = tol.for_family(Family::REC);
  SeriesEvaluator ev(cfg);

  for (int k = 1; k <= k_max; ++k) {
    IdentityCheckOutcome out;
    out.witness = {params, p, k};
    try {
      const ParamVector base = params.shifted(step.slot, step.delta * (k - 1));
      const double h_base = ev.H(rec.function, base, p);
      const double rhs_k = rec.rhs(ev, {params, p, k}).value;
      const double rhs_prev = k == 1 ? ev.H(rec.function, params, p)
                                     : rec.rhs(ev, {params, p, k - 1}).value;
      double single = 0.0;
      if (contig != nullptr) {
        const std::string why = admissibility_failure(*contig, {base, p, 0});
        if (!why.empty()) throw AdmissibilityError(contig->id + ": " + why);
        single = contig->rhs(ev, {base, p, 0}).value - h_base;
      } else {
        single = rec.lhs(ev, {params, p, k}).value - h_base;
      }
      const double diff = rhs_k - rhs_prev;
      const double scale = std::max({std::abs(rhs_k), std::abs(rhs_prev), std::abs(h_base)});
      out.lhs = diff;
      out.rhs = single;
      out.abs_err = std::abs(diff - single);
      out.rel_err = out.abs_err / std::max(scale, TolerancePolicy::kFloor);
      out.bound = t.a_tol + t.r_tol * scale;
      out.pass = std::isfinite(diff) && std::isfinite(single) && out.abs_err <= out.bound;
    } catch (const HornError& e) {
      out.pass = false;
      out.error = e.what();
    }
    res.telescoping.push_back(std::move(out));
  }
  return res;
}

}  // namespace horn
