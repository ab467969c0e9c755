#pragma once

// Shared summation kernel behind eval(), the theta/derivative/integral
// operators and the term-wise oracles. Not part of the public API.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include "horn/errors.hpp"
#include "horn/series.hpp"

namespace horn::detail {

// Terms are formed and summed in extended precision: near the edge of the
// safe boxes the double series can cancel by eight or nine digits.
using Real = long double;

// mant * 2^exp with mant in [0.5, 1) (or exactly 0). Keeps Pochhammer
// tables and factorials representable far past the double range.
struct Scaled {
  Real mant = 0.5L;
  int exp = 1;
};

inline Scaled make_scaled(Real v) {
  int e = 0;
  const Real m = std::frexp(v, &e);
  return {m, e};
}

inline Scaled operator*(Scaled a, Scaled b) {
  int e = 0;
  const Real m = std::frexp(a.mant * b.mant, &e);
  return {m, a.exp + b.exp + e};
}

inline Scaled reciprocal(Scaled a) {
  int e = 0;
  const Real m = std::frexp(1.0L / a.mant, &e);
  return {m, e - a.exp};
}

inline double to_double(Scaled s) { return static_cast<double>(std::ldexp(s.mant, s.exp)); }

// (a)_j for j in [lo, hi], lo <= 0 <= hi; optionally inverted.
class PochTable {
 public:
  PochTable() = default;
  PochTable(double a, int lo, int hi, bool invert);

  Scaled at(int j) const { return values_[static_cast<std::size_t>(j - lo_)]; }

 private:
  std::vector<Scaled> values_;
  int lo_ = 0;
};

class Accumulator {
 public:
  explicit Accumulator(SummationMode mode) : mode_(mode) {}

  void add(Real v) {
    if (mode_ == SummationMode::plain) {
      sum_ += v;
      return;
    }
    // Neumaier's variant of Kahan summation.
    const Real t = sum_ + v;
    if (std::abs(sum_) >= std::abs(v)) {
      comp_ += (sum_ - t) + v;
    } else {
      comp_ += (v - t) + sum_;
    }
    sum_ = t;
  }

  Real value() const { return sum_ + comp_; }

 private:
  SummationMode mode_;
  Real sum_ = 0.0L;
  Real comp_ = 0.0L;
};

// Precomputed factor tables for one (law, params, point, shift) combination.
//
// Exponent indices (i, j) run over the truncation rectangle; the coefficient
// index is (m, n) = (i + shift_x, j + shift_y). The row/column tables carry
// 1/i!, 1/j! rather than 1/m!, 1/n!, which realises the term-wise
// derivative d^sx/dx^sx d^sy/dy^sy without an explicit falling-factorial weight.
class SeriesTables {
 public:
  SeriesTables(const TermLaw& law, const ParamVector& params, EvalPoint p, const SeriesConfig& cfg,
               int shift_x, int shift_y);

  int max_i() const { return max_i_; }
  int max_j() const { return max_j_; }
  int shift_x() const { return shift_x_; }
  int shift_y() const { return shift_y_; }

  // mant/exp of the scaled term at exponent indices (i, j).
  void term(int i, int j, Real& mant, int& exp) const {
    const Scaled r = row_[static_cast<std::size_t>(i)];
    const Scaled c = col_[static_cast<std::size_t>(j)];
    mant = r.mant * c.mant;
    exp = r.exp + c.exp;
    const int m = i + shift_x_;
    const int n = j + shift_y_;
    for (std::size_t k = 0; k < mixed_count_; ++k) {
      const Scaled s = mixed_[k].at(mixed_cm_[k] * m + mixed_cn_[k] * n);
      mant *= s.mant;
      exp += s.exp;
    }
  }

 private:
  std::vector<Scaled> row_;
  std::vector<Scaled> col_;
  std::array<PochTable, 4> mixed_{};
  std::array<int, 4> mixed_cm_{};
  std::array<int, 4> mixed_cn_{};
  std::size_t mixed_count_ = 0;
  int max_i_ = 0;
  int max_j_ = 0;
  int shift_x_ = 0;
  int shift_y_ = 0;
};

inline constexpr int kMinDiagonals = 3;

// validate_params restricted to the directions the sum actually visits.
void validate_params_on(HornId id, const ParamVector& params, bool use_m, bool use_n);

/// Weighted diagonal sweep: sum over exponent indices (i, j) of
/// weight(m, n) * coeff(m, n) * x^i * y^j with (m, n) = (i + sx, j + sy).
template <class Weight>
EvalResult sum_series(HornId id, const ParamVector& params, EvalPoint p, const SeriesConfig& cfg,
                      int shift_x, int shift_y, Weight&& weight) {
  cfg.validate();
  // An exact zero coordinate removes its direction, and with it any pole that
  // only the removed terms would reach (H1 with integer alpha on y = 0).
  SeriesConfig used = cfg;
  if (p.x == 0.0) used.max_m = 0;
  if (p.y == 0.0) used.max_n = 0;
  validate_params_on(id, params, used.max_m > 0, used.max_n > 0);
  const SeriesTables tables(term_law(id), params, p, used, shift_x, shift_y);

  EvalResult out;
  out.in_domain = in_domain(id, p);

  Accumulator acc(cfg.mode);
  const int max_i = tables.max_i();
  const int max_j = tables.max_j();
  const int complete = (max_i == 0 || max_j == 0) ? std::max(max_i, max_j) : std::min(max_i, max_j);
  std::vector<double> diag_mass;
  diag_mass.reserve(static_cast<std::size_t>(max_i + max_j + 1));

  for (int d = 0; d <= max_i + max_j; ++d) {
    const int i_lo = std::max(0, d - max_j);
    const int i_hi = std::min(d, max_i);
    double mass = 0.0;
    for (int i = i_lo; i <= i_hi; ++i) {
      const int j = d - i;
      Real mant = 0.0L;
      int exp = 0;
      tables.term(i, j, mant, exp);
      ++out.terms_used;
      if (mant == 0.0) continue;
      const Real t = std::ldexp(mant, exp) * static_cast<Real>(weight(i + shift_x, j + shift_y));
      acc.add(t);
      mass += static_cast<double>(std::abs(t));
    }
    diag_mass.push_back(mass);
    if (d >= kMinDiagonals && d <= complete) {
      const double est = mass + diag_mass[static_cast<std::size_t>(d - 1)];
      if (est <= cfg.tail_tol) {
        out.err_estimate = est;
        out.truncated_cleanly = true;
        break;
      }
    }
  }

  out.value = static_cast<double>(acc.value());
  if (max_i == 0 && max_j == 0) {
    out.err_estimate = 0.0;  // only the constant term exists
    out.truncated_cleanly = true;
  }
  if (!out.truncated_cleanly) {
    // Diagonals past `complete` are clipped by the rectangle; their mass says
    // nothing about the tail.
    const std::size_t n = std::min(diag_mass.size(), static_cast<std::size_t>(complete) + 1);
    out.err_estimate = n >= 2 ? diag_mass[n - 1] + diag_mass[n - 2] : diag_mass[n - 1];
    bool growing = n >= 5;
    for (std::size_t k = n >= 5 ? n - 4 : n; k < n; ++k) {
      if (!(diag_mass[k] > diag_mass[k - 1])) growing = false;
    }
    if (growing || !std::isfinite(out.value)) {
      throw NonConvergence(std::string(to_string(id)) + " series does not converge at (" +
                           std::to_string(p.x) + ", " + std::to_string(p.y) + ")");
    }
  }
  return out;
}

}  // namespace horn::detail
