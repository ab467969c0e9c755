#pragma once

// Seeded sampling of admissible identity instances and aggregation of the
// checks into a verification report.
//
// Stream split: the generator for draw i of identity `id` is std::mt19937_64
// seeded with splitmix64(splitmix64(seed ^ fnv1a64(id)) + i). Every draw is
// therefore independent of execution order and thread count.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "horn/catalog.hpp"

namespace horn {

std::uint64_t splitmix64(std::uint64_t x);
std::uint64_t fnv1a64(std::string_view text);

struct Interval {
  double lo;
  double hi;
};

struct SamplePlan {
  std::uint64_t seed = 0;
  int n_samples = 100;
  Interval param_range{-3.5, 3.5};
  double exclusion_margin = 0.1;
  double point_shrink = 0.8;
  std::vector<int> k_values{1, 2, 3};
  std::vector<int> s_values{1, 2, 3};
  Interval t_range{-0.3, 0.3};
  int R = 40;

  // Throws std::invalid_argument when an invariant is violated.
  void validate() const;
};

inline constexpr int kMaxRejections = 1000;

// Values the free integer of `rec` takes in a run: k_values, s_values, {R},
// the pinned set, or {0} for records without one.
std::vector<int> free_values(const IdentityRecord& rec, const SamplePlan& plan);

/// Draw `draw_index` of `rec`. Indices [j*n_samples, (j+1)*n_samples) use the
/// j-th free value. Throws SamplingExhausted after kMaxRejections rejected
/// candidates.
Instance sample_instance(const IdentityRecord& rec, const SamplePlan& plan, int draw_index);

struct Witness {
  int draw_index = 0;
  Instance instance;
  IdentityCheckOutcome outcome;
};

enum class VerificationStatus { VERIFIED, DISPUTED, SKIPPED };
std::string_view to_string(VerificationStatus s);

struct IdentityReport {
  std::string identity_id;
  std::string paper_anchor;
  Family family = Family::CONTIG;
  HornId function = HornId::H1;
  RegistryStatus registry_status = RegistryStatus::ACTIVE;
  bool open_question = false;
  int samples_planned = 0;
  int samples_run = 0;
  int samples_passed = 0;
  int evaluation_errors = 0;            // counted in samples_run, never passed
  std::map<std::string, int> skipped;   // reason -> count, not in samples_run
  double max_rel_err = 0.0;
  double mean_rel_err = 0.0;
  std::optional<Witness> worst_witness;  // worst failure, else worst pass
  VerificationStatus status = VerificationStatus::SKIPPED;
  std::string reason;  // set for SKIPPED
};

struct VerificationReport {
  SamplePlan plan;
  std::string config_hash;
  std::vector<IdentityReport> identities;  // sorted by identity_id
  std::optional<double> wall_time_s;

  int count(VerificationStatus s) const;
  // True when some identity outside the open questions is DISPUTED.
  bool has_blocking_dispute() const;
};

// Hash of (plan, tolerances, series config), 16 hex digits.
std::string config_hash(const SamplePlan& plan, const TolerancePolicy& tol,
                        const SeriesConfig& cfg);

/// Checks n_samples instances per free value for every record. jobs <= 0 uses
/// the hardware concurrency. The result does not depend on jobs.
VerificationReport run(const std::vector<IdentityRecord>& records, const SamplePlan& plan,
                       const TolerancePolicy& tol = TolerancePolicy::standard(),
                       const SeriesConfig& cfg = {}, int jobs = 1);

// Canonical JSON: sorted keys, shortest round-trip floats.
std::string report_json(const VerificationReport& report, int indent = 2);
// One row per identity.
std::string report_csv(const VerificationReport& report);
std::string report_text(const VerificationReport& report);

}  // namespace horn
