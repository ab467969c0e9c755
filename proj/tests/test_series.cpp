#include <cmath>
#include <numbers>
#include <random>
#include <thread>
#include <vector>

#include <gtest/gtest.h>

#include "horn/series.hpp"
#include "oracle.hpp"

using namespace horn;
using oracle::rel;

namespace {

std::vector<double> to_vec(const ParamVector& p) { return {p.values().begin(), p.values().end()}; }

// Parameters in [-3.5, 3.5] at least 0.1 from every excluded integer.
ParamVector draw_params(HornId id, std::mt19937_64& g) {
  std::uniform_real_distribution<double> u(-3.5, 3.5);
  for (;;) {
    std::vector<double> v(param_arity(id));
    for (double& x : v) x = u(g);
    ParamVector p(v);
    if (params_admissible(id, p, 0.1)) return p;
  }
}

EvalPoint draw_point(HornId id, std::mt19937_64& g, double shrink = 0.8) {
  const SafeBox b = safe_box(id);
  std::uniform_real_distribution<double> ux(-b.x * shrink, b.x * shrink);
  std::uniform_real_distribution<double> uy(-b.y * shrink, b.y * shrink);
  return {ux(g), uy(g)};
}

}  // namespace

TEST(Term, Examples) {
  for (HornId id : kAllHornIds) {
    std::mt19937_64 g(static_cast<int>(id));
    EXPECT_EQ(term(id, draw_params(id, g), 0, 0), 1.0) << to_string(id);
  }
  for (double gamma : {-2.3, 0.4, 1.7}) {
    for (int m = 0; m <= 10; ++m) EXPECT_DOUBLE_EQ(term(HornId::H1, {1, 1, gamma, 1}, m, 0), 1.0);
  }
  // H6 (0,1): (a)_{-1} (b)_1 (c)_1 / 1!.
  const double a = 0.3, b = 1.7, c = -0.6;
  EXPECT_DOUBLE_EQ(term(HornId::H6, {a, b, c}, 0, 1), -b * c / (1 - a));
}

TEST(Term, MatchesExplicitTermLaws) {
  std::mt19937_64 g(21);
  for (HornId id : kAllHornIds) {
    const int fn = static_cast<int>(id);
    for (int i = 0; i < 20; ++i) {
      const ParamVector p = draw_params(id, g);
      for (int m = 0; m < 8; ++m) {
        for (int n = 0; n < 8; ++n) {
          EXPECT_LE(rel(term(id, p, m, n), static_cast<double>(oracle::coef(fn, to_vec(p), m, n))),
                    1e-13)
              << to_string(id) << " m=" << m << " n=" << n;
        }
      }
    }
  }
}

TEST(Term, PolesAndArity) {
  EXPECT_THROW(term(HornId::H1, {0.5, 0.5, 0.5, -2.0}, 1, 1), PoleError);
  EXPECT_THROW(term(HornId::H1, {1.0, 0.5, 0.5, 1.5}, 0, 1), PoleError);
  EXPECT_THROW(term(HornId::H1, {0.5, 0.5, 0.5}, 0, 0), std::invalid_argument);
  EXPECT_THROW(term(HornId::H1, {0.5, 0.5, 0.5, 1.5}, -1, 0), std::invalid_argument);
}

TEST(Domain, Examples) {
  for (HornId id : kAllHornIds) EXPECT_TRUE(in_domain(id, {0, 0}));
  EXPECT_FALSE(in_domain(HornId::H1, {10, 10}));
  EXPECT_TRUE(in_domain(HornId::H1, {-0.25, 0.25}));
  EXPECT_FALSE(in_domain(HornId::H5, {0.05, 0.0}));
}

// (0.24, 0) lies outside the H3 box |x| <= 0.12. On the axis the series is
// 2F1(a/2, (a+1)/2; c; 4x), radius 1/4 in x, so it still converges there.
TEST(Domain, H3AxisOutsideBoxStillConverges) {
  EXPECT_FALSE(in_domain(HornId::H3, {0.24, 0.0}));
  const double a = 0.7, b = 1.3, c = 2.2;
  SeriesConfig cfg;
  cfg.max_m = 2000;
  cfg.max_n = 1;
  const EvalResult r = eval(HornId::H3, {a, b, c}, {0.24, 0.0}, cfg);
  EXPECT_FALSE(r.in_domain);
  EXPECT_TRUE(r.truncated_cleanly);
  EXPECT_LE(rel(r.value, oracle::f21(a / 2, (a + 1) / 2, c, 0.96)), 1e-10);
}

TEST(Eval, OriginIsExactlyOne) {
  std::mt19937_64 g(31);
  for (HornId id : kAllHornIds) {
    for (int i = 0; i < 20; ++i) {
      const EvalResult r = eval(id, draw_params(id, g), {0, 0});
      EXPECT_EQ(r.value, 1.0);
      EXPECT_EQ(r.err_estimate, 0.0);
      EXPECT_TRUE(r.truncated_cleanly);
    }
  }
}

TEST(Eval, Examples) {
  const EvalResult h1 = eval(HornId::H1, {1, 1, 2, 1}, {0.5, 0});
  EXPECT_NEAR(h1.value, 2.0, 1e-12);
  EXPECT_FALSE(h1.in_domain);
  EXPECT_TRUE(h1.truncated_cleanly);
  EXPECT_NEAR(eval(HornId::H4, {1, 1, 1, 1}, {0, 0.5}).value, 2.0, 1e-12);
  EXPECT_EQ(eval(HornId::H1, {1, 1, 2, 1}, {0, 0}).value, 1.0);
}

TEST(Eval, Errors) {
  EXPECT_THROW(eval(HornId::H1, {1, 1, 2, 0}, {0.1, 0.1}), PoleError);
  EXPECT_THROW(eval(HornId::H1, {1, 1, 2, 0}, {0, 0}), PoleError);
  // Integer alpha is fine on y = 0 but not once the n-direction is summed.
  EXPECT_THROW(eval(HornId::H1, {1, 1, 2, 1}, {0.1, 0.1}), PoleError);
  EXPECT_THROW(eval(HornId::H1, {0.5, 0.5, 0.5, 1.5}, {10, 10}), NonConvergence);
  SeriesConfig bad;
  bad.max_m = 0;
  EXPECT_THROW(eval(HornId::H1, {0.5, 0.5, 0.5, 1.5}, {0.1, 0.1}, bad), std::invalid_argument);
  bad = {};
  bad.tail_tol = 0;
  EXPECT_THROW(bad.validate(), std::invalid_argument);
}

TEST(Eval, AgreesWithBruteForceSquare) {
  std::mt19937_64 g(41);
  for (HornId id : kAllHornIds) {
    for (int i = 0; i < 40; ++i) {
      const ParamVector p = draw_params(id, g);
      const EvalPoint pt = draw_point(id, g);
      const EvalResult r = eval(id, p, pt);
      const double ref = oracle::horn(static_cast<int>(id), to_vec(p), pt.x, pt.y);
      EXPECT_LE(std::abs(r.value - ref), 1e-11 * std::max(1.0, std::abs(ref)))
          << to_string(id) << " draw " << i;
      EXPECT_GE(r.err_estimate, 0.0);
      EXPECT_LE(r.terms_used, 161L * 161L);
      EXPECT_TRUE(r.in_domain);
    }
  }
}

TEST(Reduction2F1, Examples) {
  EXPECT_NEAR(eval_reduction_2f1(1, 1, 1, 0.5), 2.0, 1e-15);
  EXPECT_EQ(eval_reduction_2f1(0.3, -1.2, 2.5, 0), 1.0);
  const double ref = oracle::single(
      [](int n) { return oracle::rf(0.5, n) * oracle::rf(0.5, n) / oracle::rf(1.5, n); }, 0.25);
  EXPECT_LE(rel(eval_reduction_2f1(0.5, 0.5, 1.5, 0.25), ref), 1e-14);
  // 2F1(1/2, 1/2; 3/2; z^2) = asin(z) / z
  EXPECT_LE(rel(eval_reduction_2f1(0.5, 0.5, 1.5, 0.25), std::numbers::pi / 3), 1e-14);
}

TEST(Reduction2F1, AgainstBoost) {
  std::mt19937_64 g(51);
  std::uniform_real_distribution<double> u(-3.5, 3.5), z(-0.6, 0.6);
  for (int i = 0; i < 200; ++i) {
    const double a = u(g), b = u(g), c = oracle::nonint(g, -3.5, 3.5);
    const double x = z(g);
    const double ref = oracle::f21(a, b, c, x);
    EXPECT_LE(std::abs(eval_reduction_2f1(a, b, c, x) - ref), 1e-12 * std::max(1.0, std::abs(ref)));
  }
}

// One-variable axis reductions, 50 draws, |z| <= 0.4.
TEST(SeriesProperty, AxisReductions) {
  std::mt19937_64 g(61);
  std::uniform_real_distribution<double> uz(-0.4, 0.4);
  using LD = oracle::LD;
  auto close = [](double got, double ref) {
    return std::abs(got - ref) <= 1e-10 * std::max(1.0, std::abs(ref));
  };
  for (int i = 0; i < 50; ++i) {
    const double z = uz(g);
    ParamVector p = draw_params(HornId::H1, g);
    EXPECT_TRUE(close(eval(HornId::H1, p, {z, 0}).value, oracle::f21(p[0], p[1], p[3], z)));

    p = draw_params(HornId::H2, g);
    EXPECT_TRUE(close(eval(HornId::H2, p, {z, 0}).value, oracle::f21(p[0], p[1], p[4], z)));
    const double h2y = oracle::single(
        [&](int n) -> LD { return oracle::rf(p[0], -n) * oracle::rf(p[2], n) * oracle::rf(p[3], n); },
        z);
    EXPECT_TRUE(close(eval(HornId::H2, p, {0, z}).value, h2y));

    p = draw_params(HornId::H3, g);
    EXPECT_TRUE(close(eval(HornId::H3, p, {0, z}).value, oracle::f21(p[0], p[1], p[2], z)));

    p = draw_params(HornId::H4, g);
    EXPECT_TRUE(close(eval(HornId::H4, p, {0, z}).value, oracle::f21(p[0], p[1], p[3], z)));

    p = draw_params(HornId::H5, g);
    EXPECT_TRUE(close(eval(HornId::H5, p, {0, z}).value, oracle::f21(p[0], p[1], p[2], z)));

    p = draw_params(HornId::H6, g);
    const double h6y = oracle::single(
        [&](int n) -> LD { return oracle::rf(p[0], -n) * oracle::rf(p[1], n) * oracle::rf(p[2], n); },
        z);
    EXPECT_TRUE(close(eval(HornId::H6, p, {0, z}).value, h6y));

    p = draw_params(HornId::H7, g);
    const double h7y = oracle::single(
        [&](int n) -> LD { return oracle::rf(p[0], -n) * oracle::rf(p[1], n) * oracle::rf(p[2], n); },
        z);
    EXPECT_TRUE(close(eval(HornId::H7, p, {0, z}).value, h7y));
  }
}

TEST(SeriesProperty, H2SymmetricInGammaDelta) {
  std::mt19937_64 g(71);
  SeriesConfig plain;
  plain.mode = SummationMode::plain;
  for (int i = 0; i < 50; ++i) {
    const ParamVector p = draw_params(HornId::H2, g);
    ParamVector q = p;
    q[kGamma] = p[kDelta];
    q[kDelta] = p[kGamma];
    const EvalPoint pt = draw_point(HornId::H2, g);
    EXPECT_EQ(eval(HornId::H2, p, pt, plain).value, eval(HornId::H2, q, pt, plain).value);
  }
}

TEST(SeriesProperty, MonotoneRefinement) {
  std::mt19937_64 g(81);
  for (HornId id : kAllHornIds) {
    for (int i = 0; i < 20; ++i) {
      const ParamVector p = draw_params(id, g);
      const EvalPoint pt = draw_point(id, g);
      SeriesConfig small;
      small.max_m = small.max_n = 60;
      const EvalResult a = eval(id, p, pt, small);
      if (!a.truncated_cleanly) continue;
      for (int size : {80, 120, 160, 320}) {
        SeriesConfig big;
        big.max_m = big.max_n = size;
        EXPECT_LE(eval(id, p, pt, big).err_estimate, a.err_estimate);
      }
    }
  }
}

TEST(SeriesProperty, CompensatedMatchesPlain) {
  std::mt19937_64 g(91);
  SeriesConfig plain;
  plain.mode = SummationMode::plain;
  for (HornId id : kAllHornIds) {
    const SafeBox b = safe_box(id);
    std::uniform_real_distribution<double> ux(-std::min(0.2, b.x), std::min(0.2, b.x));
    std::uniform_real_distribution<double> uy(-0.2, 0.2);
    for (int i = 0; i < 30; ++i) {
      const ParamVector p = draw_params(id, g);
      const EvalPoint pt{ux(g), uy(g)};
      EXPECT_LE(rel(eval(id, p, pt).value, eval(id, p, pt, plain).value), 1e-12);
    }
  }
}

TEST(SeriesProperty, ConcurrentEvaluationIsDeterministic) {
  const ParamVector p{0.3, -1.7, 2.2, 1.4};
  const EvalPoint pt{0.1, -0.2};
  const double ref = eval(HornId::H1, p, pt).value;
  std::vector<double> out(8);
  std::vector<std::thread> pool;
  for (std::size_t t = 0; t < out.size(); ++t) {
    pool.emplace_back([&, t] {
      for (int i = 0; i < 50; ++i) out[t] = eval(HornId::H1, p, pt).value;
    });
  }
  for (auto& th : pool) th.join();
  for (double v : out) EXPECT_EQ(v, ref);
}

TEST(HornId, NamesAndArity) {
  EXPECT_EQ(parse_horn_id("h3"), HornId::H3);
  EXPECT_EQ(parse_horn_id("H7"), HornId::H7);
  EXPECT_FALSE(parse_horn_id("H8").has_value());
  const std::size_t arity[] = {4, 5, 3, 4, 3, 3, 4};
  for (HornId id : kAllHornIds) EXPECT_EQ(param_arity(id), arity[static_cast<int>(id) - 1]);
}
