#include "horn/operators.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "series_kernel.hpp"

namespace horn {

namespace {

double binomial(int n, int k) {
  double c = 1.0;
  for (int j = 1; j <= k; ++j) c = c * (n - k + j) / j;
  return c;
}

double inv_power(int base, int e) { return 1.0 / std::pow(static_cast<double>(base), e); }

SeriesConfig full_rectangle(SeriesConfig cfg) {
  cfg.tail_tol = std::numeric_limits<double>::min();
  return cfg;
}

struct SimpsonState {
  const std::function<double(double)>& f;
  bool failed = false;
};

double simpson(SimpsonState& st, double a, double b, double fa, double fm, double fb, double whole,
               double tol, int depth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m);
  const double rm = 0.5 * (m + b);
  const double flm = st.f(lm);
  const double frm = st.f(rm);
  const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  const double delta = left + right - whole;
  if (std::abs(delta) <= 15.0 * tol) return left + right + delta / 15.0;
  if (depth >= 20) {
    st.failed = true;
    return left + right + delta / 15.0;
  }
  return simpson(st, a, m, fa, flm, fm, left, 0.5 * tol, depth + 1) +
         simpson(st, m, b, fm, frm, fb, right, 0.5 * tol, depth + 1);
}

}  // namespace

EvalResult apply_theta(HornId id, const ParamVector& params, EvalPoint p, ThetaWeights w,
                       const SeriesConfig& cfg) {
  if (std::abs(w.wx) > 2 || std::abs(w.wy) > 2) {
    throw std::invalid_argument("theta weights must satisfy |w| <= 2");
  }
  return detail::sum_series(id, params, p, cfg, 0, 0, [w](int m, int n) {
    return static_cast<double>(w.wx * m + w.wy * n);
  });
}

EvalResult apply_theta_product(HornId id, const ParamVector& params, EvalPoint p, int s,
                               const SeriesConfig& cfg) {
  if (s < 0) throw std::invalid_argument("theta product order must be >= 0");
  return detail::sum_series(id, params, p, cfg, 0, 0, [s](int m, int n) {
    double v = 1.0;
    for (int k = 1; k <= s; ++k) v *= static_cast<double>(m + n - k + 1);
    return v;
  });
}

EvalResult partial_derivative_series(HornId id, const ParamVector& params, EvalPoint p, Axis axis,
                                     int s, const SeriesConfig& cfg) {
  if (s < 0 || s > 6) throw std::invalid_argument("derivative order must be in [0, 6]");
  const int sx = axis == Axis::x ? s : 0;
  const int sy = axis == Axis::y ? s : 0;
  return detail::sum_series(id, params, p, cfg, sx, sy, [](int, int) { return 1.0; });
}

double default_fd_step(double coordinate) { return 1e-5 * std::max(1.0, std::abs(coordinate)); }

double finite_difference(const std::function<double(double)>& f, double at, int s, double h) {
  if (!(h > 0.0)) throw std::invalid_argument("finite difference step must be > 0");
  switch (s) {
    case 1: return (f(at + h) - f(at - h)) / (2.0 * h);
    case 2: return (f(at + h) - 2.0 * f(at) + f(at - h)) / (h * h);
    default: throw std::invalid_argument("finite differences support s = 1 or 2 only");
  }
}

double finite_difference(HornId id, const ParamVector& params, EvalPoint p, Axis axis, int s,
                         double h, const SeriesConfig& cfg) {
  const double at = axis == Axis::x ? p.x : p.y;
  if (h <= 0.0) h = default_fd_step(at);
  const EvalPoint lo = axis == Axis::x ? EvalPoint{p.x - h, p.y} : EvalPoint{p.x, p.y - h};
  const EvalPoint hi = axis == Axis::x ? EvalPoint{p.x + h, p.y} : EvalPoint{p.x, p.y + h};
  if (!in_domain(id, lo) || !in_domain(id, hi)) {
    throw DomainError("finite-difference stencil leaves the safe box of " +
                      std::string(to_string(id)));
  }
  const SeriesConfig full = full_rectangle(cfg);
  const auto f = [&](double c) {
    const EvalPoint q = axis == Axis::x ? EvalPoint{c, p.y} : EvalPoint{p.x, c};
    return eval(id, params, q, full).value;
  };
  return finite_difference(f, at, s, h);
}

EvalResult apply_integral(HornId id, const ParamVector& params, EvalPoint p,
                          OperatorApplication op, const SeriesConfig& cfg) {
  const int s = op.order;
  if (s < 1) throw std::invalid_argument("integral operator order must be >= 1");
  switch (op.kind) {
    case OperatorKind::IX:
      return detail::sum_series(id, params, p, cfg, 0, 0,
                                [s](int m, int) { return inv_power(m + 1, s); });
    case OperatorKind::IY:
      return detail::sum_series(id, params, p, cfg, 0, 0,
                                [s](int, int n) { return inv_power(n + 1, s); });
    case OperatorKind::IXIY:
      return detail::sum_series(id, params, p, cfg, 0, 0, [s](int m, int n) {
        return inv_power(m + 1, s) * inv_power(n + 1, s);
      });
    case OperatorKind::I_FULL: {
      std::vector<double> coef(static_cast<std::size_t>(s) + 1);
      for (int j = 0; j <= s; ++j) coef[j] = binomial(s, j);
      return detail::sum_series(id, params, p, cfg, 0, 0, [s, &coef](int m, int n) {
        double v = 0.0;
        for (int j = 0; j <= s; ++j) v += coef[j] * inv_power(m + 1, j) * inv_power(n + 1, s - j);
        return v;
      });
    }
    default:
      throw std::invalid_argument("apply_integral needs IX, IY, IXIY or I_FULL");
  }
}

double quadrature_cross_check(HornId id, const ParamVector& params, EvalPoint p, OperatorKind kind,
                              const SeriesConfig& cfg) {
  if (kind != OperatorKind::IX && kind != OperatorKind::IY) {
    throw std::invalid_argument("quadrature cross-check supports IX and IY only");
  }
  const bool along_x = kind == OperatorKind::IX;
  const double upper = along_x ? p.x : p.y;
  const std::function<double(double)> f = [&](double t) {
    const EvalPoint q = along_x ? EvalPoint{t, p.y} : EvalPoint{p.x, t};
    return eval(id, params, q, cfg).value;
  };
  if (upper == 0.0) return f(0.0);

  SimpsonState st{f};
  const double fa = f(0.0);
  const double fm = f(0.5 * upper);
  const double fb = f(upper);
  const double whole = upper / 6.0 * (fa + 4.0 * fm + fb);
  // The tolerance is absolute on the averaged value (1/x) int_0^x.
  const double integral = simpson(st, 0.0, upper, fa, fm, fb, whole, 1e-10 * std::abs(upper), 0);
  if (st.failed) {
    throw QuadratureFailure("adaptive Simpson exceeded 20 levels for " +
                            std::string(to_string(id)));
  }
  return integral / upper;
}

}  // namespace horn
