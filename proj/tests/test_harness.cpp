#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include <gtest/gtest.h>
#include <json.hpp>

#include "horn/harness.hpp"

using namespace horn;

namespace {

// 701 of 1000 measured; about four standard deviations below.
constexpr int kContiguousFirstPassFloor = 650;

std::vector<IdentityRecord> pick(std::initializer_list<const char*> ids) {
  std::vector<IdentityRecord> out;
  for (const char* id : ids) out.push_back(lookup(id));
  return out;
}

SamplePlan small_plan(std::uint64_t seed, int n) {
  SamplePlan p;
  p.seed = seed;
  p.n_samples = n;
  return p;
}

bool same(const Instance& a, const Instance& b) {
  return std::equal(a.params.values().begin(), a.params.values().end(), b.params.values().begin(),
                    b.params.values().end()) &&
         a.point.x == b.point.x && a.point.y == b.point.y && a.free == b.free && a.t == b.t;
}

}  // namespace

TEST(Prng, KnownValues) {
  EXPECT_EQ(splitmix64(0), 0xe220a8397b1dcdafULL);
  EXPECT_EQ(fnv1a64(""), 0xcbf29ce484222325ULL);
  EXPECT_EQ(fnv1a64("a"), 0xaf63dc4c8601ec8cULL);
}

TEST(Plan, Validate) {
  SamplePlan p;
  EXPECT_NO_THROW(p.validate());
  p.n_samples = 0;
  EXPECT_THROW(p.validate(), std::invalid_argument);
  p = {};
  p.point_shrink = 0;
  EXPECT_THROW(p.validate(), std::invalid_argument);
  p.point_shrink = 1.0;
  EXPECT_NO_THROW(p.validate());
  p.point_shrink = 1.01;
  EXPECT_THROW(p.validate(), std::invalid_argument);
  p = {};
  p.t_range = {-1.0, 0.3};
  EXPECT_THROW(p.validate(), std::invalid_argument);
}

TEST(Sampler, Deterministic) {
  const SamplePlan plan = small_plan(42, 10);
  for (const auto& rec : catalog()) {
    for (int i : {0, 7}) {
      EXPECT_TRUE(same(sample_instance(rec, plan, i), sample_instance(rec, plan, i))) << rec.id;
    }
  }
  const IdentityRecord& rec = lookup("H1.CONTIG.2.3");
  EXPECT_FALSE(same(sample_instance(rec, plan, 0), sample_instance(rec, plan, 1)));
  EXPECT_FALSE(same(sample_instance(rec, plan, 0), sample_instance(rec, small_plan(43, 10), 0)));
  EXPECT_THROW(sample_instance(rec, plan, 10), std::out_of_range);
}

TEST(Sampler, FreeIntegerLayout) {
  const SamplePlan plan = small_plan(1, 5);
  const IdentityRecord& rec = lookup("H1.REC.alpha");
  for (int i = 0; i < 15; ++i) EXPECT_EQ(sample_instance(rec, plan, i).free, 1 + i / 5);
  EXPECT_EQ(sample_instance(lookup("H1.SUM.beta"), plan, 0).free, 40);
  EXPECT_EQ(sample_instance(lookup("H3.INT.I2"), plan, 4).free, 2);
  EXPECT_EQ(free_values(lookup("H1.CONTIG.2.3"), plan), std::vector<int>{0});
}

TEST(Sampler, RecursionAlphaClearsShiftedIntegers) {
  const SamplePlan plan = small_plan(3, 200);
  const IdentityRecord& rec = lookup("H1.REC.alpha");
  for (int i = 2 * plan.n_samples; i < 3 * plan.n_samples; ++i) {
    const Instance in = sample_instance(rec, plan, i);
    ASSERT_EQ(in.free, 3);
    const double a = in.params[0];
    for (int r = 1; r <= 3; ++r) {
      for (double n : {1.0 - r, 2.0 - r}) EXPECT_GE(std::abs(a - n), 0.1) << a;
    }
  }
}

TEST(Sampler, DrawsStayInsideShrunkBoxes) {
  const SamplePlan plan = small_plan(9, 20);
  for (const auto& rec : catalog()) {
    const SafeBox b = safe_box(rec.function);
    const int total = static_cast<int>(free_values(rec, plan).size()) * plan.n_samples;
    for (int i = 0; i < total; ++i) {
      const Instance in = sample_instance(rec, plan, i);
      EXPECT_LE(std::abs(in.point.x), 0.8 * b.x);
      EXPECT_LE(std::abs(in.point.y), 0.8 * b.y);
      for (double v : in.params.values()) EXPECT_TRUE(v >= -3.5 && v < 3.5);
      if (rec.family == Family::SUM) EXPECT_LE(std::abs(in.t), 0.3);
      EXPECT_TRUE(admissible(rec, in, {0.1, 0.05 * std::min(b.x, b.y)})) << rec.id;
    }
  }
}

// At least 990 of 1000 draws for the first contiguous relation yield an
// instance within the rejection budget. Raw candidates from the sampler's
// distribution pass admissibility at the first attempt about 70% of the time.
TEST(Sampler, ContiguousAdmissibleRate) {
  const IdentityRecord& rec = lookup("H1.CONTIG.2.3");
  const SamplePlan plan = small_plan(2024, 1000);
  int ok = 0;
  for (int i = 0; i < 1000; ++i) {
    try {
      sample_instance(rec, plan, i);
      ++ok;
    } catch (const SamplingExhausted&) {
    }
  }
  EXPECT_GE(ok, 990);

  std::mt19937_64 g(2024);
  std::uniform_real_distribution<double> u(-3.5, 3.5), ux(-0.2, 0.2);
  const AdmissibilityMargins margins{0.1, 0.0125};
  int first = 0;
  for (int i = 0; i < 1000; ++i) {
    Instance in{{u(g), u(g), u(g), u(g)}, {ux(g), ux(g)}, 0, 0.0};
    first += admissible(rec, in, margins);
  }
  EXPECT_GE(first, kContiguousFirstPassFloor);
}

TEST(Run, StatusRulesAndAccounting) {
  const auto recs = pick({"H1.CONTIG.2.7", "H2.REC.alpha", "H1.INT.Ix_s", "H3.SUM.alpha"});
  const SamplePlan plan = small_plan(11, 8);
  const VerificationReport rep = run(recs, plan);
  ASSERT_EQ(rep.identities.size(), 4u);
  EXPECT_TRUE(std::is_sorted(rep.identities.begin(), rep.identities.end(),
                             [](const auto& a, const auto& b) {
                               return a.identity_id < b.identity_id;
                             }));
  for (const auto& r : rep.identities) {
    int skipped = 0;
    for (const auto& [reason, n] : r.skipped) skipped += n;
    EXPECT_EQ(r.samples_run + skipped, r.samples_planned) << r.identity_id;
    EXPECT_LE(r.samples_passed, r.samples_run);
    EXPECT_EQ(r.status == VerificationStatus::VERIFIED,
              r.samples_run > 0 && r.samples_passed == r.samples_run)
        << r.identity_id;
    if (r.status == VerificationStatus::DISPUTED) {
      EXPECT_GE(10 * (r.samples_run - r.samples_passed), 9 * r.samples_run);
      ASSERT_TRUE(r.worst_witness.has_value());
      // The stored witness reproduces.
      const IdentityCheckOutcome again = check(lookup(r.identity_id), r.worst_witness->instance);
      EXPECT_FALSE(again.pass);
      EXPECT_EQ(again.lhs, r.worst_witness->outcome.lhs);
      EXPECT_EQ(again.rhs, r.worst_witness->outcome.rhs);
    }
    if (r.status == VerificationStatus::SKIPPED) EXPECT_FALSE(r.reason.empty());
  }
  auto find = [&](const char* id) {
    return *std::find_if(rep.identities.begin(), rep.identities.end(),
                         [&](const auto& r) { return r.identity_id == id; });
  };
  EXPECT_EQ(find("H1.CONTIG.2.7").samples_planned, 8);
  EXPECT_EQ(find("H1.CONTIG.2.7").status, VerificationStatus::VERIFIED);
  EXPECT_EQ(find("H2.REC.alpha").samples_planned, 24);
  EXPECT_EQ(find("H2.REC.alpha").status, VerificationStatus::DISPUTED);
  EXPECT_EQ(find("H1.INT.Ix_s").status, VerificationStatus::DISPUTED);
  EXPECT_EQ(find("H3.SUM.alpha").samples_planned, 8);
  EXPECT_TRUE(rep.has_blocking_dispute());
  EXPECT_EQ(rep.count(VerificationStatus::VERIFIED) + rep.count(VerificationStatus::DISPUTED) +
                rep.count(VerificationStatus::SKIPPED),
            4);
}

TEST(Run, ExhaustedSamplingIsSkippedWithReason) {
  SamplePlan plan = small_plan(5, 3);
  plan.param_range = {0.999, 1.001};  // every alpha sits on a pole
  const VerificationReport rep = run(pick({"H1.CONTIG.2.3"}), plan);
  const IdentityReport& r = rep.identities.at(0);
  EXPECT_EQ(r.status, VerificationStatus::SKIPPED);
  EXPECT_EQ(r.samples_run, 0);
  EXPECT_EQ(r.skipped.at("sampling exhausted"), 3);
  EXPECT_NE(r.reason.find("sampling exhausted"), std::string::npos);
  EXPECT_FALSE(rep.has_blocking_dispute());
}

TEST(Run, JsonReproducible) {
  const SamplePlan plan = small_plan(1, 1);
  VerificationReport a = run(catalog(), plan);
  VerificationReport b = run(catalog(), plan);
  ASSERT_TRUE(a.wall_time_s.has_value());
  a.wall_time_s.reset();
  b.wall_time_s.reset();
  const std::string ja = report_json(a);
  EXPECT_EQ(ja, report_json(b));
  const auto doc = nlohmann::json::parse(ja);
  EXPECT_EQ(doc["metadata"]["seed"], 1);
  EXPECT_FALSE(doc["metadata"].contains("wall_time_s"));
  EXPECT_EQ(doc["metadata"]["config_hash"].get<std::string>().size(), 16u);
  // Canonical form: keys sorted at every level.
  EXPECT_EQ(nlohmann::json::parse(ja).dump(2), ja);
}

TEST(Run, JobsDoNotChangeTheReport) {
  const auto recs = pick({"H1.CONTIG.2.3", "H4.DIFF_THETA.alpha", "H6.REC.beta", "H7.SUM.gamma"});
  const SamplePlan plan = small_plan(77, 6);
  VerificationReport a = run(recs, plan, TolerancePolicy::standard(), {}, 1);
  VerificationReport b = run(recs, plan, TolerancePolicy::standard(), {}, 4);
  a.wall_time_s.reset();
  b.wall_time_s.reset();
  EXPECT_EQ(report_json(a), report_json(b));
}

TEST(Run, RemovingARecordRemovesOneRow) {
  const SamplePlan plan = small_plan(4, 2);
  auto recs = pick({"H1.CONTIG.2.3", "H1.CONTIG.2.7", "H5.DIFF_THETA.beta"});
  VerificationReport full = run(recs, plan);
  recs.erase(recs.begin() + 1);
  VerificationReport less = run(recs, plan);
  ASSERT_EQ(less.identities.size() + 1, full.identities.size());
  full.identities.erase(full.identities.begin() + 1);
  full.wall_time_s.reset();
  less.wall_time_s.reset();
  // Identical apart from the missing row (the config hash does not see the catalog).
  EXPECT_EQ(report_json(full), report_json(less));
}

TEST(Run, ConfigHashTracksInputs) {
  SamplePlan plan;
  const std::string h = config_hash(plan, TolerancePolicy::standard(), {});
  EXPECT_EQ(h, config_hash(plan, TolerancePolicy::standard(), {}));
  plan.seed = 1;
  EXPECT_NE(h, config_hash(plan, TolerancePolicy::standard(), {}));
  SeriesConfig cfg;
  cfg.tail_tol = 1e-14;
  EXPECT_NE(h, config_hash(SamplePlan{}, TolerancePolicy::standard(), cfg));
}

TEST(Report, CsvAndText) {
  const VerificationReport rep = run(pick({"H1.CONTIG.2.3", "H2.REC.alpha"}), small_plan(2, 3));
  const std::string csv = report_csv(rep);
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 3);
  EXPECT_EQ(csv.rfind("identity_id,family,function,status", 0), 0u);
  EXPECT_NE(csv.find("H2.REC.alpha,REC,H2,DISPUTED,false,9,0,"), std::string::npos);
  const std::string text = report_text(rep);
  EXPECT_NE(text.find("H1.CONTIG.2.3"), std::string::npos);
  EXPECT_NE(text.find("DISPUTED"), std::string::npos);
}
