#pragma once

// Truncated double-series evaluation of the Horn functions H1..H7.
//
//   H1(a,b,c;d;x,y)   = sum (a)_{m-n} (b)_{m+n} (c)_n / ((d)_m m! n!)        x^m y^n
//   H2(a,b,c,d;e;x,y) = sum (a)_{m-n} (b)_m (c)_n (d)_n / ((e)_m m! n!)      x^m y^n
//   H3(a,b;c;x,y)     = sum (a)_{2m+n} (b)_n / ((c)_{m+n} m! n!)             x^m y^n
//   H4(a,b;c,d;x,y)   = sum (a)_{2m+n} (b)_n / ((c)_m (d)_n m! n!)           x^m y^n
//   H5(a,b;c;x,y)     = sum (a)_{2m+n} (b)_{n-m} / ((c)_n m! n!)             x^m y^n
//   H6(a,b,c;x,y)     = sum (a)_{2m-n} (b)_{n-m} (c)_n / (m! n!)             x^m y^n
//   H7(a,b,c;d;x,y)   = sum (a)_{2m-n} (b)_n (c)_n / ((d)_m m! n!)           x^m y^n
//
// Parameters are stored in the order written above (alpha, beta, gamma,
// delta, epsilon), which is also the CLI order.

#include <array>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "horn/pochhammer.hpp"

namespace horn {

enum class HornId { H1 = 1, H2, H3, H4, H5, H6, H7 };

inline constexpr std::array<HornId, 7> kAllHornIds = {HornId::H1, HornId::H2, HornId::H3,
                                                     HornId::H4, HornId::H5, HornId::H6,
                                                     HornId::H7};

std::size_t param_arity(HornId id);
std::string_view to_string(HornId id);
// Accepts "H3" or "h3".
std::optional<HornId> parse_horn_id(std::string_view text);

// Parameter slots, shared by all seven functions.
enum Slot : std::size_t { kAlpha = 0, kBeta = 1, kGamma = 2, kDelta = 3, kEpsilon = 4 };

class ParamVector {
 public:
  static constexpr std::size_t kCapacity = 5;

  ParamVector() = default;
  ParamVector(std::initializer_list<double> values);
  explicit ParamVector(std::span<const double> values);

  std::size_t size() const { return size_; }
  double operator[](std::size_t i) const { return values_[i]; }
  double& operator[](std::size_t i) { return values_[i]; }
  std::span<const double> values() const { return {values_.data(), size_}; }

  // Copy with values[slot] += delta.
  ParamVector shifted(std::size_t slot, double delta) const;

  friend bool operator==(const ParamVector& a, const ParamVector& b);

 private:
  std::array<double, kCapacity> values_{};
  std::size_t size_ = 0;
};

struct EvalPoint {
  double x = 0.0;
  double y = 0.0;
};

enum class SummationMode { plain, compensated };

struct SeriesConfig {
  int max_m = 160;
  int max_n = 160;
  double tail_tol = 1e-12;
  SummationMode mode = SummationMode::compensated;

  // Throws std::invalid_argument on max_m/max_n < 1, tail_tol <= 0 or
  // rectangles that would exceed kMaxIndex.
  void validate() const;
};

struct EvalResult {
  double value = 0.0;
  double err_estimate = 0.0;  // absolute, heuristic
  long terms_used = 0;
  bool in_domain = true;
  bool truncated_cleanly = false;
};

// (param)_{cm*m + cn*n}
struct PochFactor {
  std::size_t slot;
  int cm;
  int cn;
};

// Coefficient of x^m y^n is prod num / (prod den * m! * n!).
struct TermLaw {
  std::array<PochFactor, 4> num{};
  std::size_t num_count = 0;
  std::array<PochFactor, 2> den{};
  std::size_t den_count = 0;
};

const TermLaw& term_law(HornId id);

// Conservative interior box of the convergence region: |x| <= x, |y| <= y.
struct SafeBox {
  double x;
  double y;
};

SafeBox safe_box(HornId id);
bool in_domain(HornId id, EvalPoint p);

// True when every denominator parameter is more than `margin` away from
// {0, -1, -2, ...} and every parameter that can carry a negative index is more
// than `margin` away from every integer. Arity must match.
bool params_admissible(HornId id, const ParamVector& params, double margin = kPoleEps);

// Throws std::invalid_argument on an arity mismatch and PoleError on an
// excluded parameter.
void validate_params(HornId id, const ParamVector& params);

/// Coefficient of x^m y^n, evaluated factor by factor through pochhammer().
/// Denominator parameters are validated up front; a negative-index factor
/// throws PoleError only when one of its reflected factors vanishes.
double term(HornId id, const ParamVector& params, int m, int n);

/// Sum of the double series in order of increasing total degree m+n.
///
/// Stops once the absolute term mass of the last two complete diagonals
/// falls to cfg.tail_tol (truncated_cleanly = true); that mass is reported as
/// err_estimate. Points outside the safe box are still summed, with
/// in_domain = false. Throws PoleError for excluded parameters and
/// NonConvergence when the rectangle is exhausted with a growing tail.
EvalResult eval(HornId id, const ParamVector& params, EvalPoint p, const SeriesConfig& cfg = {});

/// Gauss 2F1(a, b; c; z) by its single series, |z| < 1. Intended as an
/// independent oracle for the one-variable reductions of the Horn series.
double eval_reduction_2f1(double a, double b, double c, double z);

}  // namespace horn
