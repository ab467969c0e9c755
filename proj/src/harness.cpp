#include "horn/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <limits>
#include <random>
#include <stdexcept>
#include <thread>

#include <json.hpp>

namespace horn {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t fnv1a64(std::string_view text) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

void SamplePlan::validate() const {
  if (n_samples < 1) throw std::invalid_argument("n_samples must be at least 1");
  if (!(point_shrink > 0.0 && point_shrink <= 1.0)) {
    throw std::invalid_argument("point_shrink must lie in (0, 1]");
  }
  if (!(param_range.lo < param_range.hi)) throw std::invalid_argument("empty parameter range");
  if (!(t_range.lo <= t_range.hi) || std::abs(t_range.lo) >= 1.0 || std::abs(t_range.hi) >= 1.0) {
    throw std::invalid_argument("t range must be a subinterval of (-1, 1)");
  }
  if (!(exclusion_margin >= 0.0)) throw std::invalid_argument("negative exclusion margin");
  if (R < 0) throw std::invalid_argument("R must be nonnegative");
  if (k_values.empty() || s_values.empty()) throw std::invalid_argument("empty k or s values");
  for (int s : s_values) {
    if (s < 1) throw std::invalid_argument("s values must be positive");
  }
}

std::vector<int> free_values(const IdentityRecord& rec, const SamplePlan& plan) {
  if (!rec.fixed_free.empty()) return rec.fixed_free;
  if (rec.free_name == "k") return plan.k_values;
  if (rec.free_name == "s") return plan.s_values;
  if (rec.free_name == "R") return {plan.R};
  return {0};
}

namespace {

// Uniform double in [lo, hi) from the top 53 bits; unlike the standard
// distributions this is identical on every platform.
double uniform(std::mt19937_64& g, Interval iv) {
  const double u = static_cast<double>(g() >> 11) * 0x1.0p-53;
  return iv.lo + (iv.hi - iv.lo) * u;
}

}  // namespace

Instance sample_instance(const IdentityRecord& rec, const SamplePlan& plan, int draw_index) {
  const std::vector<int> values = free_values(rec, plan);
  const int total = static_cast<int>(values.size()) * plan.n_samples;
  if (draw_index < 0 || draw_index >= total) throw std::out_of_range("draw index out of range");

  std::mt19937_64 gen(splitmix64(splitmix64(plan.seed ^ fnv1a64(rec.id)) +
                                 static_cast<std::uint64_t>(draw_index)));
  const SafeBox box = safe_box(rec.function);
  const Interval xs{-box.x * plan.point_shrink, box.x * plan.point_shrink};
  const Interval ys{-box.y * plan.point_shrink, box.y * plan.point_shrink};
  const AdmissibilityMargins margins{plan.exclusion_margin, 0.05 * std::min(box.x, box.y)};
  const std::size_t arity = param_arity(rec.function);

  Instance inst;
  inst.free = values[static_cast<std::size_t>(draw_index / plan.n_samples)];
  for (int attempt = 0; attempt < kMaxRejections; ++attempt) {
    double p[ParamVector::kCapacity];
    for (std::size_t i = 0; i < arity; ++i) p[i] = uniform(gen, plan.param_range);
    inst.params = ParamVector(std::span<const double>(p, arity));
    inst.point.x = uniform(gen, xs);
    inst.point.y = uniform(gen, ys);
    inst.t = rec.family == Family::SUM ? uniform(gen, plan.t_range) : 0.0;
    if (admissible(rec, inst, margins)) return inst;
  }
  throw SamplingExhausted(rec.id + ": no admissible instance after " +
                          std::to_string(kMaxRejections) + " candidates");
}

std::string_view to_string(VerificationStatus s) {
  switch (s) {
    case VerificationStatus::VERIFIED: return "VERIFIED";
    case VerificationStatus::DISPUTED: return "DISPUTED";
    case VerificationStatus::SKIPPED: return "SKIPPED";
  }
  return "?";
}

int VerificationReport::count(VerificationStatus s) const {
  return static_cast<int>(std::count_if(identities.begin(), identities.end(),
                                        [s](const IdentityReport& r) { return r.status == s; }));
}

bool VerificationReport::has_blocking_dispute() const {
  return std::any_of(identities.begin(), identities.end(), [](const IdentityReport& r) {
    return r.status == VerificationStatus::DISPUTED && !r.open_question;
  });
}

std::string config_hash(const SamplePlan& plan, const TolerancePolicy& tol,
                        const SeriesConfig& cfg) {
  nlohmann::json j;
  j["plan"] = {{"seed", plan.seed},
               {"n_samples", plan.n_samples},
               {"param_range", {plan.param_range.lo, plan.param_range.hi}},
               {"exclusion_margin", plan.exclusion_margin},
               {"point_shrink", plan.point_shrink},
               {"k_values", plan.k_values},
               {"s_values", plan.s_values},
               {"t_range", {plan.t_range.lo, plan.t_range.hi}},
               {"R", plan.R}};
  nlohmann::json over = nlohmann::json::object();
  for (const auto& [f, t] : tol.overrides) over[std::string(to_string(f))] = {t.a_tol, t.r_tol};
  j["tol"] = {{"a_tol", tol.a_tol}, {"r_tol", tol.r_tol}, {"overrides", over}};
  j["series"] = {{"max_m", cfg.max_m},
                 {"max_n", cfg.max_n},
                 {"tail_tol", cfg.tail_tol},
                 {"mode", cfg.mode == SummationMode::plain ? "plain" : "compensated"}};
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fnv1a64(j.dump())));
  return buf;
}

namespace {

struct DrawResult {
  bool skipped = false;
  std::string skip_reason;
  Instance instance;
  IdentityCheckOutcome outcome;
};

DrawResult run_draw(const IdentityRecord& rec, const SamplePlan& plan, int draw,
                    const TolerancePolicy& tol, const SeriesConfig& cfg) {
  DrawResult r;
  try {
    r.instance = sample_instance(rec, plan, draw);
  } catch (const SamplingExhausted&) {
    r.skipped = true;
    r.skip_reason = "sampling exhausted";
    return r;
  }
  try {
    r.outcome = check(rec, r.instance, cfg, tol);
  } catch (const std::exception& e) {
    r.outcome.witness = r.instance;
    r.outcome.pass = false;
    r.outcome.error = e.what();
  }
  return r;
}

// Failures outrank passes; within each, larger relative error wins.
bool worse(const IdentityCheckOutcome& a, const IdentityCheckOutcome& b) {
  if (a.pass != b.pass) return !a.pass;
  auto key = [](const IdentityCheckOutcome& o) {
    return o.error.empty() && !std::isnan(o.rel_err) ? o.rel_err
                                                     : std::numeric_limits<double>::infinity();
  };
  return key(a) > key(b);
}

IdentityReport aggregate(const IdentityRecord& rec, const std::vector<DrawResult>& draws) {
  IdentityReport rep;
  rep.identity_id = rec.id;
  rep.paper_anchor = rec.anchor;
  rep.family = rec.family;
  rep.function = rec.function;
  rep.registry_status = rec.status;
  rep.open_question = rec.open_question;
  rep.samples_planned = static_cast<int>(draws.size());

  double sum_rel = 0.0;
  int n_rel = 0;
  for (std::size_t i = 0; i < draws.size(); ++i) {
    const DrawResult& d = draws[i];
    if (d.skipped) {
      ++rep.skipped[d.skip_reason];
      continue;
    }
    ++rep.samples_run;
    if (d.outcome.pass) ++rep.samples_passed;
    if (!d.outcome.error.empty()) {
      ++rep.evaluation_errors;
    } else if (std::isfinite(d.outcome.rel_err)) {
      rep.max_rel_err = std::max(rep.max_rel_err, d.outcome.rel_err);
      sum_rel += d.outcome.rel_err;
      ++n_rel;
    }
    if (!rep.worst_witness || worse(d.outcome, rep.worst_witness->outcome)) {
      rep.worst_witness = Witness{static_cast<int>(i), d.instance, d.outcome};
    }
  }
  rep.mean_rel_err = n_rel > 0 ? sum_rel / n_rel : 0.0;

  const int failed = rep.samples_run - rep.samples_passed;
  if (rep.samples_run == 0) {
    rep.status = VerificationStatus::SKIPPED;
    rep.reason = rep.skipped.empty() ? "no samples" : "no admissible instance: " +
                                                          rep.skipped.begin()->first;
  } else if (failed == 0) {
    rep.status = VerificationStatus::VERIFIED;
  } else if (10 * failed >= 9 * rep.samples_run && rep.worst_witness) {
    rep.status = VerificationStatus::DISPUTED;
  } else {
    rep.status = VerificationStatus::SKIPPED;
    rep.reason = "inconclusive: " + std::to_string(failed) + " of " +
                 std::to_string(rep.samples_run) + " samples failed";
  }
  return rep;
}

}  // namespace

VerificationReport run(const std::vector<IdentityRecord>& records, const SamplePlan& plan,
                       const TolerancePolicy& tol, const SeriesConfig& cfg, int jobs) {
  plan.validate();
  tol.validate();
  cfg.validate();
  const auto start = std::chrono::steady_clock::now();

  struct Task {
    std::size_t record;
    int draw;
  };
  std::vector<Task> tasks;
  std::vector<std::vector<DrawResult>> results(records.size());
  for (std::size_t i = 0; i < records.size(); ++i) {
    const int total = static_cast<int>(free_values(records[i], plan).size()) * plan.n_samples;
    results[i].resize(static_cast<std::size_t>(total));
    for (int d = 0; d < total; ++d) tasks.push_back({i, d});
  }

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t t = next++; t < tasks.size(); t = next++) {
      const Task& task = tasks[t];
      results[task.record][static_cast<std::size_t>(task.draw)] =
          run_draw(records[task.record], plan, task.draw, tol, cfg);
    }
  };
  if (jobs <= 0) jobs = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  VerificationReport report;
  report.plan = plan;
  report.config_hash = config_hash(plan, tol, cfg);
  for (std::size_t i = 0; i < records.size(); ++i) {
    report.identities.push_back(aggregate(records[i], results[i]));
  }
  std::sort(report.identities.begin(), report.identities.end(),
            [](const IdentityReport& a, const IdentityReport& b) {
              return a.identity_id < b.identity_id;
            });
  report.wall_time_s =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace horn
