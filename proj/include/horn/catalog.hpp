#pragma once

// Registry of Horn-function identities as executable LHS/RHS pairs.
//
// Each side is a function of an Evaluator and an Instance. The same side code
// runs against SeriesEvaluator (real numbers) and against the admissibility
// collector, which returns placeholders and records every parameter shift,
// divisor and evaluation point the identity touches. Admissibility therefore
// always covers the full set of shifted parameters an identity evaluates.

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "horn/operators.hpp"
#include "horn/series.hpp"

namespace horn {

enum class Family { CONTIG, REC, DIFF_THETA, DIFF_DERIV, INT, SUM };
enum class RegistryStatus { ACTIVE, DISPUTED };

std::string_view to_string(Family f);
std::string_view to_string(RegistryStatus s);

// One concrete instance of an identity. `free` is k (REC), s (DIFF_DERIV,
// INT) or the truncation R (SUM); `t` is the SUM expansion variable.
struct Instance {
  ParamVector params;
  EvalPoint point;
  int free = 0;
  double t = 0.0;
};

// A side value plus an absolute truncation estimate of any finite cut-off the
// side itself performs (the r-sum of SUM records).
struct SideValue {
  double value = 0.0;
  double tail = 0.0;
  SideValue() = default;
  SideValue(double v, double t = 0.0) : value(v), tail(t) {}  // NOLINT(implicit)
};

class Evaluator {
 public:
  virtual ~Evaluator() = default;
  virtual double H(HornId id, const ParamVector& params, EvalPoint p) = 0;
  virtual double theta(HornId id, const ParamVector& params, EvalPoint p, ThetaWeights w) = 0;
  virtual double theta_product(HornId id, const ParamVector& params, EvalPoint p, int s) = 0;
  virtual double partial(HornId id, const ParamVector& params, EvalPoint p, Axis axis, int s) = 0;
  virtual double integral(HornId id, const ParamVector& params, EvalPoint p,
                          OperatorApplication op) = 0;
  // 1/d for a parameter expression d.
  virtual double inv(double d) = 0;
  // 1/c for a coordinate c (x or y).
  virtual double inv_coord(double c) = 0;
  virtual double poch(double a, int k) = 0;
  // 1 / (a)_k, k >= 0.
  virtual double inv_poch(double a, int k) = 0;
};

// Series-backed evaluator. A series that misses cfg.tail_tol is retried on a
// rectangle doubled up to three times before NonConvergence is thrown.
class SeriesEvaluator final : public Evaluator {
 public:
  explicit SeriesEvaluator(SeriesConfig cfg = {}) : cfg_(cfg) {}
  double H(HornId id, const ParamVector& params, EvalPoint p) override;
  double theta(HornId id, const ParamVector& params, EvalPoint p, ThetaWeights w) override;
  double theta_product(HornId id, const ParamVector& params, EvalPoint p, int s) override;
  double partial(HornId id, const ParamVector& params, EvalPoint p, Axis axis, int s) override;
  double integral(HornId id, const ParamVector& params, EvalPoint p,
                  OperatorApplication op) override;
  double inv(double d) override;
  double inv_coord(double c) override;
  double poch(double a, int k) override;
  double inv_poch(double a, int k) override;

 private:
  SeriesConfig cfg_;
};

using Side = std::function<SideValue(Evaluator&, const Instance&)>;

// Parameter shift that one step of a recursion performs, e.g. alpha -> alpha+1.
struct RecStep {
  Slot slot;
  double delta;
  std::string contig_id;  // single-step relation, empty if none is catalogued
};

struct IdentityRecord {
  std::string id;
  Family family;
  HornId function;
  std::string anchor;
  std::string free_name;  // "", "k", "s" or "R"
  std::vector<int> fixed_free;  // non-empty when the free integer is pinned (e.g. I^2 has s = 2)
  RegistryStatus status = RegistryStatus::ACTIVE;
  bool open_question = false;
  std::string note;
  Side lhs;
  Side rhs;
  std::optional<Axis> derivative_axis;  // DIFF_DERIV only
  std::optional<RecStep> step;          // REC only
};

const std::vector<IdentityRecord>& catalog();
const IdentityRecord* find_identity(std::string_view id);
// Throws std::out_of_range for unknown ids.
const IdentityRecord& lookup(std::string_view id);

// [{identity_id, family, function, paper_anchor, free_integers, status, ...}]
std::string registry_json(const std::vector<IdentityRecord>& records, int indent = 2);

struct Tolerance {
  double a_tol;
  double r_tol;
};

struct TolerancePolicy {
  static constexpr double kFloor = 1e-30;

  double a_tol = 1e-10;
  double r_tol = 1e-7;
  std::map<Family, Tolerance> overrides;

  // REC r_tol 1e-6, DIFF_DERIV r_tol 1e-9, everything else the defaults.
  static TolerancePolicy standard();
  Tolerance for_family(Family f) const;
  void validate() const;
};

// Relative tolerance of the finite-difference leg of DIFF_DERIV checks.
inline constexpr double kFdRelTol = 1e-5;

struct AdmissibilityMargins {
  double param = kPoleEps;  // distance from excluded integers and zero divisors
  double coord = 0.0;       // |x|, |y| must exceed this where an identity divides by them
};

/// True when every evaluation either side performs is admissible: shifted
/// parameters clear of their exclusions, points inside the safe boxes,
/// divisors and divided coordinates clear of zero.
bool admissible(const IdentityRecord& rec, const Instance& inst,
                const AdmissibilityMargins& margins = {});

// Why `admissible` failed, or "" when it holds.
std::string admissibility_failure(const IdentityRecord& rec, const Instance& inst,
                                  const AdmissibilityMargins& margins = {});

struct IdentityCheckOutcome {
  double lhs = 0.0;
  double rhs = 0.0;
  double abs_err = 0.0;
  double rel_err = 0.0;
  double bound = 0.0;  // |L - R| had to stay below this
  bool pass = false;
  Instance witness;
  std::string error;  // set when an evaluation threw; pass is then false
  std::optional<double> fd_value;  // finite-difference leg of DIFF_DERIV, s <= 2
  std::optional<double> fd_rel_err;
};

/// Evaluates one instance. Throws AdmissibilityError when the instance is not
/// admissible; evaluation failures (pole, non-convergence) are returned as
/// failed outcomes with `error` set.
IdentityCheckOutcome check(const IdentityRecord& rec, const Instance& inst,
                           const SeriesConfig& cfg = {},
                           const TolerancePolicy& tol = TolerancePolicy::standard());

struct KInduction {
  std::vector<IdentityCheckOutcome> outcomes;     // k = 1..k_max
  std::vector<IdentityCheckOutcome> telescoping;  // RHS(k) - RHS(k-1) vs one step at level k
};

/// Checks a REC record for k = 1..k_max and the telescoping consistency of
/// consecutive levels against the single contiguous step (the catalogued
/// contiguous relation where one exists, otherwise LHS(k) - LHS(k-1)).
KInduction check_k_induction(const IdentityRecord& rec, const ParamVector& params, EvalPoint p,
                             int k_max, const SeriesConfig& cfg = {},
                             const TolerancePolicy& tol = TolerancePolicy::standard());

}  // namespace horn
