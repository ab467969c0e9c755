#include <cmath>
#include <map>
#include <random>
#include <set>

#include <gtest/gtest.h>
#include <json.hpp>

#include "horn/catalog.hpp"
#include "oracle.hpp"

using namespace horn;
using oracle::rel;

namespace {

std::vector<double> to_vec(const ParamVector& p) { return {p.values().begin(), p.values().end()}; }

}  // namespace

TEST(Registry, Contents) {
  const auto& all = catalog();
  EXPECT_GE(all.size(), 70u);
  EXPECT_EQ(lookup("H1.CONTIG.2.3").function, HornId::H1);
  EXPECT_THROW(lookup("NO.SUCH"), std::out_of_range);
  EXPECT_EQ(find_identity("NO.SUCH"), nullptr);

  std::set<std::string> ids;
  for (const auto& r : all) {
    EXPECT_FALSE(r.anchor.empty()) << r.id;
    EXPECT_TRUE(ids.insert(r.id).second) << "duplicate " << r.id;
    EXPECT_EQ(r.id.substr(0, 2), to_string(r.function)) << r.id;
    EXPECT_NE(r.id.find(std::string(".") + std::string(to_string(r.family)) + "."),
              std::string::npos)
        << r.id;
    EXPECT_TRUE(r.lhs && r.rhs) << r.id;
    switch (r.family) {
      case Family::REC:
        EXPECT_EQ(r.free_name, "k") << r.id;
        EXPECT_TRUE(r.step.has_value()) << r.id;
        break;
      case Family::SUM: EXPECT_EQ(r.free_name, "R") << r.id; break;
      case Family::DIFF_DERIV:
        EXPECT_TRUE(r.derivative_axis.has_value()) << r.id;
        break;
      case Family::CONTIG:
      case Family::DIFF_THETA: EXPECT_EQ(r.free_name, "") << r.id; break;
      case Family::INT: break;
    }
  }
}

// Minimum per-family counts from the equation tally.
TEST(Registry, FamilyTally) {
  std::map<Family, int> n;
  std::map<std::pair<HornId, Family>, int> per;
  for (const auto& r : catalog()) {
    ++n[r.family];
    ++per[{r.function, r.family}];
  }
  EXPECT_EQ(n[Family::CONTIG], 4);
  EXPECT_EQ(n[Family::REC], 4 + 5 + 3 + 3 + 4);
  EXPECT_EQ(n[Family::DIFF_THETA], 4 + 5 + 3 + 4 + 3 + 3 + 4);
  EXPECT_GE(n[Family::DIFF_DERIV], 3 + 6);
  EXPECT_EQ(n[Family::INT], 5 * 7);
  EXPECT_EQ(n[Family::SUM], 3 + 2 + 2 + 2 + 2 + 3 + 3);
  for (HornId id : kAllHornIds) EXPECT_EQ((per[{id, Family::INT}]), 5);
  EXPECT_NE(find_identity("H1.DIFF_DERIV.3.19"), nullptr);
}

TEST(Registry, Json) {
  const auto j = nlohmann::json::parse(registry_json(catalog()));
  ASSERT_EQ(j.size(), catalog().size());
  bool seen = false;
  for (const auto& e : j) {
    for (const char* key :
         {"identity_id", "family", "function", "paper_anchor", "free_integers", "status"}) {
      EXPECT_TRUE(e.contains(key)) << key;
    }
    EXPECT_FALSE(e["paper_anchor"].get<std::string>().empty());
    if (e["identity_id"] == "H1.REC.alpha") {
      seen = true;
      EXPECT_EQ(e.at("free_integers").at(0).at("name"), "k");
    }
    if (e["identity_id"] == "H1.INT.I2") EXPECT_EQ(e.at("free_integers").at(0).at("fixed").at(0), 2);
  }
  EXPECT_TRUE(seen);
}

TEST(Tolerance, Policy) {
  const TolerancePolicy t = TolerancePolicy::standard();
  EXPECT_EQ(t.for_family(Family::CONTIG).r_tol, 1e-7);
  EXPECT_EQ(t.for_family(Family::CONTIG).a_tol, 1e-10);
  EXPECT_EQ(t.for_family(Family::REC).r_tol, 1e-6);
  EXPECT_EQ(t.for_family(Family::DIFF_DERIV).r_tol, 1e-9);
  EXPECT_NO_THROW(t.validate());
  TolerancePolicy bad = t;
  bad.r_tol = 0;
  EXPECT_THROW(bad.validate(), std::invalid_argument);
  bad = t;
  bad.overrides[Family::SUM] = {1e-10, -1};
  EXPECT_THROW(bad.validate(), std::invalid_argument);
}

// Both sides of the relation evaluated with the brute-force square as well.
TEST(Check, ContiguousExample) {
  const IdentityRecord& rec = lookup("H1.CONTIG.2.3");
  const ParamVector P{0.3, 0.7, 1.1, 1.9};
  const EvalPoint p{0.1, 0.1};
  const IdentityCheckOutcome o = check(rec, {P, p, 0});
  EXPECT_TRUE(o.pass);
  EXPECT_LE(o.rel_err, 1e-8);
  EXPECT_TRUE(o.error.empty());

  const double a = P[0], b = P[1], c = P[2], d = P[3];
  auto H = [&](double a_, double b_, double c_, double d_) {
    return oracle::horn(1, {a_, b_, c_, d_}, p.x, p.y);
  };
  const double lhs = H(a + 1, b, c, d);
  const double rhs = H(a, b, c, d) + b * p.x / d * H(a + 1, b + 1, c, d + 1) -
                     b * c * p.y / (a * (a - 1)) * H(a - 1, b + 1, c + 1, d);
  EXPECT_LE(rel(lhs, rhs), 1e-12);
  EXPECT_LE(rel(o.lhs, lhs), 1e-12);
  EXPECT_LE(rel(o.rhs, rhs), 1e-12);
}

TEST(Check, ZeroDepthRecursionIsExact) {
  for (const char* id : {"H1.REC.alpha", "H2.REC.beta", "H6.REC.gamma", "H7.REC.delta"}) {
    const IdentityRecord& rec = lookup(id);
    const std::size_t n = param_arity(rec.function);
    const double vals[] = {0.37, 0.61, 1.23, 1.87, 2.41};
    const ParamVector P(std::span<const double>(vals, n));
    const IdentityCheckOutcome o = check(rec, {P, {0.05, 0.07}, 0});
    EXPECT_EQ(o.lhs, o.rhs) << id;
    EXPECT_TRUE(o.pass) << id;
  }
}

TEST(Check, SummationAtZeroTIsExact) {
  const IdentityRecord& rec = lookup("H1.SUM.alpha");
  Instance in{{0.3, 0.7, 1.1, 1.9}, {0.1, -0.1}, 40, 0.0};
  const IdentityCheckOutcome o = check(rec, in);
  EXPECT_EQ(o.lhs, o.rhs);
  EXPECT_EQ(o.lhs, eval(HornId::H1, in.params, in.point).value);
  EXPECT_TRUE(o.pass);
}

TEST(Check, DerivativeThreeWay) {
  const IdentityRecord& rec = lookup("H1.DIFF_DERIV.3.19");
  const ParamVector P{0.3, 0.7, 1.1, 1.9};
  const IdentityCheckOutcome o = check(rec, {P, {0.1, 0.1}, 1});
  EXPECT_TRUE(o.pass);
  EXPECT_LE(o.rel_err, 1e-9);
  ASSERT_TRUE(o.fd_value.has_value());
  EXPECT_LE(*o.fd_rel_err, 1e-5);
  // Independent closed form: (ab/d) H1(a+1, b+1, c; d+1)
  const double closed = P[0] * P[1] / P[3] * oracle::horn(1, {1.3, 1.7, 1.1, 2.9}, 0.1, 0.1);
  EXPECT_LE(rel(o.rhs, closed), 1e-12);
  EXPECT_LE(rel(o.lhs, closed), 1e-9);
}

TEST(Check, Admissibility) {
  const IdentityRecord& rec = lookup("H1.REC.alpha");
  // alpha + r - 2 lands on an integer.
  EXPECT_THROW(check(rec, {{1.0, 0.7, 1.1, 1.9}, {0.1, 0.1}, 2}), AdmissibilityError);
  EXPECT_FALSE(admissible(rec, {{2.0, 0.7, 1.1, 1.9}, {0.1, 0.1}, 1}));
  // Shifted alpha within the margin of an integer.
  AdmissibilityMargins wide{0.1, 0.0};
  EXPECT_FALSE(admissible(rec, {{1.95, 0.7, 1.1, 1.9}, {0.1, 0.1}, 3}, wide));
  EXPECT_TRUE(admissible(rec, {{1.5, 0.7, 1.1, 1.9}, {0.1, 0.1}, 3}, wide));
  // Outside the safe box.
  EXPECT_NE(admissibility_failure(rec, {{1.5, 0.7, 1.1, 1.9}, {0.3, 0.1}, 1}), "");
  // Wrong arity, negative k.
  EXPECT_NE(admissibility_failure(rec, {{1.5, 0.7, 1.1}, {0.1, 0.1}, 1}), "");
  EXPECT_NE(admissibility_failure(rec, {{1.5, 0.7, 1.1, 1.9}, {0.1, 0.1}, -1}), "");
  // Closed forms that divide by x need x != 0.
  EXPECT_NE(admissibility_failure(lookup("H1.INT.Ix_s"), {{0.3, 0.7, 1.1, 1.9}, {0.0, 0.1}, 1}),
            "");
  // Pinned free integer.
  EXPECT_NE(admissibility_failure(lookup("H1.INT.I2"), {{0.3, 0.7, 1.1, 1.9}, {0.1, 0.1}, 3}), "");
  // SUM shifts the point by 1/(1-t)^2.
  EXPECT_NE(admissibility_failure(lookup("H3.SUM.alpha"), {{0.3, 0.7, 1.1}, {0.1, 0.1}, 40, 0.3}),
            "");
}

TEST(KInduction, SingleStepIsTheContiguousRelation) {
  const IdentityRecord& rec = lookup("H1.REC.alpha");
  const IdentityRecord& contig = lookup("H1.CONTIG.2.3");
  const ParamVector P{0.3, 0.7, 1.1, 1.9};
  const EvalPoint p{0.12, -0.08};
  const KInduction r = check_k_induction(rec, P, p, 1);
  ASSERT_EQ(r.outcomes.size(), 1u);
  const IdentityCheckOutcome c = check(contig, {P, p, 0});
  EXPECT_LE(rel(r.outcomes[0].lhs, c.lhs), 1e-15);
  EXPECT_LE(rel(r.outcomes[0].rhs, c.rhs), 1e-13);
  EXPECT_TRUE(r.telescoping[0].pass);
}

TEST(KInduction, DeltaRecursionThreeLevels) {
  const IdentityRecord& rec = lookup("H1.REC.delta");
  const ParamVector P{0.3, 0.7, 1.1, 2.7};
  const KInduction r = check_k_induction(rec, P, {0.1, 0.1}, 3);
  ASSERT_EQ(r.outcomes.size(), 3u);
  ASSERT_EQ(r.telescoping.size(), 3u);
  for (int k = 0; k < 3; ++k) {
    EXPECT_TRUE(r.outcomes[k].pass) << k + 1;
    EXPECT_LE(r.outcomes[k].rel_err, 1e-8) << k + 1;
    EXPECT_TRUE(r.telescoping[k].pass) << k + 1;
    EXPECT_EQ(r.outcomes[k].witness.free, k + 1);
  }
  EXPECT_THROW(check_k_induction(lookup("H1.CONTIG.2.3"), P, {0.1, 0.1}, 1),
               std::invalid_argument);
  EXPECT_THROW(check_k_induction(rec, P, {0.1, 0.1}, 0), std::invalid_argument);
}

TEST(KInduction, WithoutContiguousRecordUsesLeftSide) {
  const IdentityRecord& rec = lookup("H6.REC.alpha");
  const KInduction r = check_k_induction(rec, {0.37, 0.61, 1.23}, {0.05, 0.1}, 3);
  for (const auto& o : r.telescoping) EXPECT_TRUE(o.pass);
}

// The I_x closed form for H1 differs from the term-wise operator by exactly
// the m = 0 row of the shifted series it is built from.
TEST(Disputed, IntegralClosedFormMissesBoundaryRow) {
  const IdentityRecord& rec = lookup("H1.INT.Ix_s");
  const ParamVector P{0.3, 0.7, 1.1, 1.9};
  const EvalPoint p{0.15, 0.2};
  const IdentityCheckOutcome o = check(rec, {P, p, 1});
  EXPECT_FALSE(o.pass);
  const double a = P[0], b = P[1], c = P[2], d = P[3];
  const double pref = (d - 1) / (p.x * (a - 1) * (b - 1));
  const double row0 = oracle::single(
      [&](int n) { return oracle::rf(a - 1, -n) * oracle::rf(b - 1, n) * oracle::rf(c, n); }, p.y);
  EXPECT_LE(rel(o.lhs, o.rhs - pref * row0), 1e-11);
  const double lhs_ref = oracle::horn_weighted(1, to_vec(P), p.x, p.y,
                                               [](int m, int) { return 1.0L / (m + 1); });
  EXPECT_LE(rel(o.lhs, lhs_ref), 1e-12);
}

// Expanding (a+1)_{m-n} term by term gives beta x / epsilon as the first
// coefficient of the H2 alpha recursion.
TEST(Disputed, H2AlphaRecursionCoefficient) {
  const IdentityRecord& rec = lookup("H2.REC.alpha");
  const ParamVector P{0.3, 0.7, 1.1, 1.4, 1.9};
  const EvalPoint p{0.1, 0.12};
  const IdentityCheckOutcome o = check(rec, {P, p, 1});
  EXPECT_FALSE(o.pass);
  auto H = [&](double a, double b, double c, double d, double e) {
    return oracle::horn(2, {a, b, c, d, e}, p.x, p.y);
  };
  const double a = P[0], b = P[1], c = P[2], d = P[3], e = P[4];
  const double corrected = H(a, b, c, d, e) + b * p.x / e * H(a + 1, b + 1, c, d, e + 1) -
                           c * d * p.y / (a * (a - 1)) * H(a - 1, b, c + 1, d + 1, e);
  EXPECT_LE(rel(o.lhs, corrected), 1e-12);
}

TEST(Check, EveryRecordRunsOnAnAdmissibleInstance) {
  // A crude instance generator independent of the harness sampler.
  std::mt19937_64 g(17);
  std::uniform_real_distribution<double> u(-3.5, 3.5), t(-0.3, 0.3);
  for (const auto& rec : catalog()) {
    const SafeBox b = safe_box(rec.function);
    std::uniform_real_distribution<double> ux(-0.8 * b.x, 0.8 * b.x), uy(-0.8 * b.y, 0.8 * b.y);
    bool found = false;
    for (int tries = 0; tries < 5000 && !found; ++tries) {
      std::vector<double> v(param_arity(rec.function));
      for (double& x : v) x = u(g);
      Instance in{ParamVector(v), {ux(g), uy(g)}, 1, 0.0};
      if (rec.family == Family::SUM) {
        in.free = 40;
        in.t = t(g);
      }
      if (!rec.fixed_free.empty()) in.free = rec.fixed_free.front();
      if (!admissible(rec, in, {0.1, 0.01})) continue;
      found = true;
      const IdentityCheckOutcome o = check(rec, in);
      EXPECT_TRUE(o.error.empty()) << rec.id << ": " << o.error;
      EXPECT_TRUE(std::isfinite(o.lhs) && std::isfinite(o.rhs)) << rec.id;
      EXPECT_GE(o.bound, 1e-10) << rec.id;
    }
    EXPECT_TRUE(found) << rec.id;
  }
}
