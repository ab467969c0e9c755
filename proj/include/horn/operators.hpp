#pragma once

// Operators acting term-wise on the Horn double series: Euler theta
// operators, partial derivatives, and the averaged antiderivatives
//   Ix = (1/x) int_0^x dx,   Iy = (1/y) int_0^y dy,   I = Ix + Iy.
// Independent oracles (finite differences, adaptive Simpson) live here too.

#include <functional>

#include "horn/series.hpp"

namespace horn {

// wx*theta_x + wy*theta_y, |wx|, |wy| <= 2.
struct ThetaWeights {
  int wx = 0;
  int wy = 0;
};

enum class Axis { x, y };

enum class OperatorKind { THETA, PARTIAL_X, PARTIAL_Y, IX, IY, IXIY, I_FULL };

struct OperatorApplication {
  OperatorKind kind = OperatorKind::IX;
  int order = 1;
};

/// Sum of (wx*m + wy*n) * term(m, n) x^m y^n.
EvalResult apply_theta(HornId id, const ParamVector& params, EvalPoint p, ThetaWeights w,
                       const SeriesConfig& cfg = {});

/// prod_{k=1}^{s} (theta_x + theta_y - k + 1) applied term-wise, i.e. weight
/// (m+n)(m+n-1)...(m+n-s+1). s = 0 is the identity.
EvalResult apply_theta_product(HornId id, const ParamVector& params, EvalPoint p, int s,
                               const SeriesConfig& cfg = {});

/// Term-wise s-th partial derivative, 0 <= s <= 6.
EvalResult partial_derivative_series(HornId id, const ParamVector& params, EvalPoint p, Axis axis,
                                     int s, const SeriesConfig& cfg = {});

// Default step for finite_difference: 1e-5 * max(1, |coordinate|).
double default_fd_step(double coordinate);

/// Central difference of order s (1 or 2) of a scalar function.
double finite_difference(const std::function<double(double)>& f, double at, int s, double h);

/// Central difference of the series along one axis. h <= 0 picks the default
/// step. The stencil must stay inside the safe box (DomainError otherwise).
/// Stencil points are summed over the full truncation rectangle so that the
/// differences are not polluted by truncation-point jitter.
double finite_difference(HornId id, const ParamVector& params, EvalPoint p, Axis axis, int s,
                         double h = 0.0, const SeriesConfig& cfg = {});

/// IX^s, IY^s, (IX IY)^s or I^s acting term-wise. I^s expands binomially,
/// sum_j C(s, j) IX^j IY^(s-j). At x = 0 or y = 0 the continuous extension is
/// returned.
EvalResult apply_integral(HornId id, const ParamVector& params, EvalPoint p,
                          OperatorApplication op, const SeriesConfig& cfg = {});

/// (1/x) int_0^x H(t, y) dt (kind IX) or the y analogue (kind IY) by adaptive
/// Simpson over eval(), absolute tolerance 1e-10, at most 20 levels.
double quadrature_cross_check(HornId id, const ParamVector& params, EvalPoint p, OperatorKind kind,
                              const SeriesConfig& cfg = {});

}  // namespace horn
