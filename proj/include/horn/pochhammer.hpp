#pragma once

// Pochhammer symbols (rising factorials) over real bases with positive,
// negative and mixed (m - n) indices, plus an overflow-safe logarithmic form
// and ln Gamma on the positive axis.

#include "horn/errors.hpp"

namespace horn {

// Parameters closer than this to an excluded integer are rejected.
inline constexpr double kPoleEps = 1e-9;

// Default bound on |index| for every Pochhammer loop.
inline constexpr int kMaxIndex = 4096;

bool near_integer(double v, double eps = kPoleEps);
bool near_nonpositive_integer(double v, double eps = kPoleEps);

/// (base)_k for any integer k.
///
/// k >= 0 is the direct product base (base+1) ... (base+k-1), with (base)_0 = 1
/// exactly. k < 0 uses (base)_{-j} = (-1)^j / (1-base)_j; a factor of
/// (1-base)_j within kPoleEps of zero is a pole (base in {1, ..., j}).
///
/// Throws PoleError, OverflowError, or std::invalid_argument when |k| > max_index.
double pochhammer(double base, int k, int max_index = kMaxIndex);

/// (base)_{m-n} for nonnegative m, n. Forward product when m >= n, otherwise
/// the reflected form (-1)^{n-m} / (1-base)_{n-m}.
double pochhammer_mixed(double base, int m, int n, int max_index = kMaxIndex);

struct LogPochhammer {
  int sign = 1;  // -1, 0 (some factor is exactly zero) or +1
  double log_magnitude = 0.0;
};

/// sign * exp(log_magnitude) == (base)_k for k >= 0, without overflow.
LogPochhammer log_pochhammer(double base, int k, int max_index = kMaxIndex);

/// ln Gamma(x) for x > 0. Throws DomainError otherwise.
double gamma_ln(double x);

}  // namespace horn
