#include "horn/series.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <stdexcept>
#include <string>

#include "series_kernel.hpp"

namespace horn {

namespace {

TermLaw make_law(std::initializer_list<PochFactor> num, std::initializer_list<PochFactor> den) {
  TermLaw law;
  for (const auto& f : num) law.num[law.num_count++] = f;
  for (const auto& f : den) law.den[law.den_count++] = f;
  return law;
}

const std::array<TermLaw, 7>& all_laws() {
  static const std::array<TermLaw, 7> laws = {
      make_law({{kAlpha, 1, -1}, {kBeta, 1, 1}, {kGamma, 0, 1}}, {{kDelta, 1, 0}}),
      make_law({{kAlpha, 1, -1}, {kBeta, 1, 0}, {kGamma, 0, 1}, {kDelta, 0, 1}},
               {{kEpsilon, 1, 0}}),
      make_law({{kAlpha, 2, 1}, {kBeta, 0, 1}}, {{kGamma, 1, 1}}),
      make_law({{kAlpha, 2, 1}, {kBeta, 0, 1}}, {{kGamma, 1, 0}, {kDelta, 0, 1}}),
      make_law({{kAlpha, 2, 1}, {kBeta, -1, 1}}, {{kGamma, 0, 1}}),
      make_law({{kAlpha, 2, -1}, {kBeta, -1, 1}, {kGamma, 0, 1}}, {}),
      make_law({{kAlpha, 2, -1}, {kBeta, 0, 1}, {kGamma, 0, 1}}, {{kDelta, 1, 0}}),
  };
  return laws;
}

std::size_t index_of(HornId id) { return static_cast<std::size_t>(id) - 1; }

std::string describe(HornId id, const ParamVector& params) {
  std::string s(to_string(id));
  s += "(";
  for (std::size_t i = 0; i < params.size(); ++i) {
    if (i) s += ", ";
    s += std::to_string(params[i]);
  }
  return s + ")";
}

// Smallest and largest value of cm*m + cn*n over the rectangle, widened to
// contain 0 so the table can be grown outward from (a)_0 = 1.
std::pair<int, int> index_range(int cm, int cn, int m_lo, int m_hi, int n_lo, int n_hi) {
  const int lo = std::min(cm * m_lo, cm * m_hi) + std::min(cn * n_lo, cn * n_hi);
  const int hi = std::max(cm * m_lo, cm * m_hi) + std::max(cn * n_lo, cn * n_hi);
  return {std::min(lo, 0), std::max(hi, 0)};
}

std::vector<detail::Scaled> power_table(double x, int count) {
  std::vector<detail::Scaled> pw(static_cast<std::size_t>(count) + 1);
  pw[0] = detail::make_scaled(1.0);
  const detail::Scaled base = detail::make_scaled(x);
  for (int i = 1; i <= count; ++i) pw[i] = pw[i - 1] * base;
  return pw;
}

std::vector<detail::Scaled> inverse_factorials(int count) {
  std::vector<detail::Scaled> f(static_cast<std::size_t>(count) + 1);
  f[0] = detail::make_scaled(1.0);
  for (int i = 1; i <= count; ++i) f[i] = f[i - 1] * detail::reciprocal(detail::make_scaled(i));
  return f;
}

}  // namespace

std::size_t param_arity(HornId id) {
  switch (id) {
    case HornId::H1: return 4;
    case HornId::H2: return 5;
    case HornId::H3: return 3;
    case HornId::H4: return 4;
    case HornId::H5: return 3;
    case HornId::H6: return 3;
    case HornId::H7: return 4;
  }
  return 0;
}

std::string_view to_string(HornId id) {
  static constexpr std::array<std::string_view, 7> names = {"H1", "H2", "H3", "H4",
                                                            "H5", "H6", "H7"};
  return names[index_of(id)];
}

std::optional<HornId> parse_horn_id(std::string_view text) {
  if (text.size() != 2 || (text[0] != 'H' && text[0] != 'h')) return std::nullopt;
  if (text[1] < '1' || text[1] > '7') return std::nullopt;
  return static_cast<HornId>(text[1] - '0');
}

ParamVector::ParamVector(std::initializer_list<double> values)
    : ParamVector(std::span<const double>(values.begin(), values.size())) {}

ParamVector::ParamVector(std::span<const double> values) {
  if (values.size() > kCapacity) throw std::invalid_argument("at most 5 parameters");
  std::copy(values.begin(), values.end(), values_.begin());
  size_ = values.size();
}

ParamVector ParamVector::shifted(std::size_t slot, double delta) const {
  ParamVector out = *this;
  out.values_[slot] += delta;
  return out;
}

bool operator==(const ParamVector& a, const ParamVector& b) {
  return a.size_ == b.size_ && std::equal(a.values_.begin(), a.values_.begin() + a.size_,
                                          b.values_.begin());
}

void SeriesConfig::validate() const {
  if (max_m < 1 || max_n < 1) throw std::invalid_argument("max_m and max_n must be >= 1");
  if (!(tail_tol > 0.0)) throw std::invalid_argument("tail_tol must be > 0");
  // Largest Pochhammer index any law reaches is 2*max_m + max_n (+ small shifts).
  if (2 * max_m + max_n + 16 > kMaxIndex) {
    throw std::invalid_argument("truncation rectangle exceeds the Pochhammer index bound");
  }
}

const TermLaw& term_law(HornId id) { return all_laws()[index_of(id)]; }

SafeBox safe_box(HornId id) {
  switch (id) {
    case HornId::H1: return {0.25, 0.25};
    case HornId::H2: return {0.25, 0.25};
    case HornId::H3: return {0.12, 0.25};
    case HornId::H4: return {0.12, 0.25};
    case HornId::H5: return {0.04, 0.25};
    case HornId::H6: return {0.12, 0.25};
    case HornId::H7: return {0.12, 0.25};
  }
  return {0.0, 0.0};
}

bool in_domain(HornId id, EvalPoint p) {
  const SafeBox box = safe_box(id);
  return std::abs(p.x) <= box.x && std::abs(p.y) <= box.y;
}

namespace {

bool admissible_on(HornId id, const ParamVector& params, double margin, bool use_m, bool use_n) {
  if (params.size() != param_arity(id)) return false;
  const TermLaw& law = term_law(id);
  for (std::size_t k = 0; k < law.den_count; ++k) {
    if (near_nonpositive_integer(params[law.den[k].slot], margin)) return false;
  }
  for (std::size_t k = 0; k < law.num_count; ++k) {
    const PochFactor& f = law.num[k];
    const bool negative = (use_m && f.cm < 0) || (use_n && f.cn < 0);
    if (negative && near_integer(params[f.slot], margin)) return false;
  }
  for (double v : params.values()) {
    if (!std::isfinite(v)) return false;
  }
  return true;
}

}  // namespace

bool params_admissible(HornId id, const ParamVector& params, double margin) {
  return admissible_on(id, params, margin, true, true);
}

void validate_params(HornId id, const ParamVector& params) {
  if (params.size() != param_arity(id)) {
    throw std::invalid_argument(std::string(to_string(id)) + " takes " +
                                std::to_string(param_arity(id)) + " parameters, got " +
                                std::to_string(params.size()));
  }
  if (!params_admissible(id, params, kPoleEps)) {
    throw PoleError(describe(id, params) + ": parameter on an excluded integer");
  }
}

namespace detail {

void validate_params_on(HornId id, const ParamVector& params, bool use_m, bool use_n) {
  if (params.size() != param_arity(id)) validate_params(id, params);
  if (!admissible_on(id, params, kPoleEps, use_m, use_n)) {
    throw PoleError(describe(id, params) + ": parameter on an excluded integer");
  }
}

}  // namespace detail

double term(HornId id, const ParamVector& params, int m, int n) {
  if (m < 0 || n < 0) throw std::invalid_argument("term needs m, n >= 0");
  // Negative-index factors are left to pochhammer_mixed, which only fails on
  // a vanishing factor.
  detail::validate_params_on(id, params, false, false);
  const TermLaw& law = term_law(id);
  double v = 1.0;
  for (std::size_t k = 0; k < law.num_count; ++k) {
    const PochFactor& f = law.num[k];
    const int pos = (f.cm > 0 ? f.cm * m : 0) + (f.cn > 0 ? f.cn * n : 0);
    const int neg = (f.cm < 0 ? -f.cm * m : 0) + (f.cn < 0 ? -f.cn * n : 0);
    v *= pochhammer_mixed(params[f.slot], pos, neg);
  }
  for (std::size_t k = 0; k < law.den_count; ++k) {
    const PochFactor& f = law.den[k];
    v /= pochhammer(params[f.slot], f.cm * m + f.cn * n);
  }
  return v / (std::tgamma(m + 1.0) * std::tgamma(n + 1.0));
}

EvalResult eval(HornId id, const ParamVector& params, EvalPoint p, const SeriesConfig& cfg) {
  return detail::sum_series(id, params, p, cfg, 0, 0, [](int, int) { return 1.0; });
}

double eval_reduction_2f1(double a, double b, double c, double z) {
  if (!(std::abs(z) < 1.0)) throw DomainError("2F1 series needs |z| < 1");
  if (near_nonpositive_integer(c)) throw PoleError("2F1 lower parameter on a nonpositive integer");
  long double sum = 1.0L;
  long double t = 1.0L;
  for (int k = 0; k < 100000; ++k) {
    const long double ratio = (static_cast<long double>(a) + k) * (static_cast<long double>(b) + k) /
                              ((static_cast<long double>(c) + k) * (k + 1.0L)) * z;
    t *= ratio;
    sum += t;
    if (t == 0.0L) return static_cast<double>(sum);
    const long double rho = std::max(std::abs(ratio), static_cast<long double>(std::abs(z)));
    if (rho < 1.0L) {
      const long double tail = std::abs(t) * rho / (1.0L - rho);
      if (tail <= 1e-17L * std::abs(sum) || tail <= 1e-300L) return static_cast<double>(sum);
    }
  }
  throw NonConvergence("2F1 series did not reach its tail bound");
}

namespace detail {

PochTable::PochTable(double a, int lo, int hi, bool invert) : lo_(lo) {
  values_.resize(static_cast<std::size_t>(hi - lo + 1));
  const auto at = [&](int j) -> Scaled& { return values_[static_cast<std::size_t>(j - lo)]; };
  at(0) = make_scaled(1.0);
  for (int j = 0; j < hi; ++j) at(j + 1) = at(j) * make_scaled(static_cast<Real>(a) + j);
  for (int j = 0; j > lo; --j) {
    const Real f = static_cast<Real>(a) + (j - 1);
    if (f == 0.0L) throw PoleError("negative Pochhammer index reached a pole");
    at(j - 1) = at(j) * reciprocal(make_scaled(f));
  }
  if (invert) {
    for (Scaled& s : values_) {
      if (s.mant == 0.0L) throw PoleError("denominator Pochhammer symbol vanishes");
      s = reciprocal(s);
    }
  }
}

SeriesTables::SeriesTables(const TermLaw& law, const ParamVector& params, EvalPoint p,
                           const SeriesConfig& cfg, int shift_x, int shift_y)
    : max_i_(cfg.max_m), max_j_(cfg.max_n), shift_x_(shift_x), shift_y_(shift_y) {
  const int m_lo = shift_x, m_hi = cfg.max_m + shift_x;
  const int n_lo = shift_y, n_hi = cfg.max_n + shift_y;

  row_ = inverse_factorials(max_i_);
  col_ = inverse_factorials(max_j_);
  {
    const auto px = power_table(p.x, max_i_);
    const auto py = power_table(p.y, max_j_);
    for (int i = 0; i <= max_i_; ++i) row_[i] = row_[i] * px[i];
    for (int j = 0; j <= max_j_; ++j) col_[j] = col_[j] * py[j];
  }

  // Row-only and column-only factors are folded into row_/col_. Numerators
  // are multiplied in first, pairwise, so that permuting two parameters with
  // identical roles leaves every term bit-for-bit unchanged.
  auto fold = [&](const PochFactor& f, bool invert) -> bool {
    const double a = params[f.slot];
    if (f.cn == 0) {
      const auto [lo, hi] = index_range(f.cm, 0, m_lo, m_hi, 0, 0);
      const PochTable tab(a, lo, hi, invert);
      for (int i = 0; i <= max_i_; ++i) row_[i] = tab.at(f.cm * (i + shift_x)) * row_[i];
      return true;
    }
    if (f.cm == 0) {
      const auto [lo, hi] = index_range(0, f.cn, 0, 0, n_lo, n_hi);
      const PochTable tab(a, lo, hi, invert);
      for (int j = 0; j <= max_j_; ++j) col_[j] = tab.at(f.cn * (j + shift_y)) * col_[j];
      return true;
    }
    const auto [lo, hi] = index_range(f.cm, f.cn, m_lo, m_hi, n_lo, n_hi);
    mixed_[mixed_count_] = PochTable(a, lo, hi, invert);
    mixed_cm_[mixed_count_] = f.cm;
    mixed_cn_[mixed_count_] = f.cn;
    ++mixed_count_;
    return false;
  };

  // Column numerators first as a commutative pair product.
  std::vector<Scaled> col_num(static_cast<std::size_t>(max_j_) + 1, make_scaled(1.0));
  std::vector<Scaled> row_num(static_cast<std::size_t>(max_i_) + 1, make_scaled(1.0));
  for (std::size_t k = 0; k < law.num_count; ++k) {
    const PochFactor& f = law.num[k];
    const double a = params[f.slot];
    if (f.cm == 0) {
      const auto [lo, hi] = index_range(0, f.cn, 0, 0, n_lo, n_hi);
      const PochTable tab(a, lo, hi, false);
      for (int j = 0; j <= max_j_; ++j) col_num[j] = col_num[j] * tab.at(f.cn * (j + shift_y));
    } else if (f.cn == 0) {
      const auto [lo, hi] = index_range(f.cm, 0, m_lo, m_hi, 0, 0);
      const PochTable tab(a, lo, hi, false);
      for (int i = 0; i <= max_i_; ++i) row_num[i] = row_num[i] * tab.at(f.cm * (i + shift_x));
    } else {
      fold(f, false);
    }
  }
  for (int j = 0; j <= max_j_; ++j) col_[j] = col_num[j] * col_[j];
  for (int i = 0; i <= max_i_; ++i) row_[i] = row_num[i] * row_[i];
  for (std::size_t k = 0; k < law.den_count; ++k) fold(law.den[k], true);
}

}  // namespace detail

}  // namespace horn
