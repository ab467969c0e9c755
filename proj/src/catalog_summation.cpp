// SUM records: generating-function sums over one numerator parameter,
//   sum_r (a)_r/r! t^r H(a + r) = (1-t)^{-a} H(transformed point).

#include <cmath>

#include "catalog_build.hpp"

namespace horn::detail {

namespace {

// Point map applied on the RHS: x -> x (1-t)^px, y -> y (1-t)^py.
struct SumSpec {
  HornId fn;
  Slot slot;
  const char* name;
  const char* anchor;
  int px;
  int py;
  const char* note = nullptr;
};

const SumSpec kSpecs[] = {
    {HornId::H1, kAlpha, "alpha", "Eq. (5.1): sum_r (a)_r/r! H1(a+r,b,c;d) t^r = (1-t)^{-a} H1(x/(1-t), y(1-t))", -1, 1},
    {HornId::H1, kBeta, "beta", "Eq. (5.2): sum_r (b)_r/r! H1(a,b+r,c;d) t^r = (1-t)^{-b} H1(x/(1-t), y/(1-t))", -1, -1},
    {HornId::H1, kGamma, "gamma", "Eq. (5.3): sum_r (c)_r/r! H1(a,b,c+r;d) t^r = (1-t)^{-c} H1(x, y/(1-t))", 0, -1},
    {HornId::H2, kGamma, "gamma", "Eq. (5.4): sum_r (c)_r/r! H2(a,b,c+r,d;e) t^r = (1-t)^{-c} H2(x, y/(1-t))", 0, -1},
    {HornId::H2, kDelta, "delta", "Eq. (5.4): sum_r (d)_r/r! H2(a,b,c,d+r;x,y) t^r = (1-t)^{-d} H1(a,b,c;d;x, y/(1-t))", 0, -1,
     "The LHS omits e and the RHS prints H1; evaluated as H2(a,b,c,d;e; x, y/(1-t))."},
    {HornId::H3, kAlpha, "alpha", "Eq. (5.5): sum_r (a)_r/r! H3(a+r,b;c) t^r = (1-t)^{-a} H3(x/(1-t)^2, y/(1-t))", -2, -1},
    {HornId::H3, kBeta, "beta", "Eq. (5.5): sum_r (b)_r/r! H3(a,b+r;c) t^r = (1-t)^{-b} H3(x, y/(1-t))", 0, -1},
    {HornId::H4, kAlpha, "alpha", "Eq. (5.6): sum_r (a)_r/r! H4(a+r,b;c,d) t^r = (1-t)^{-a} H4(x/(1-t)^2, y/(1-t))", -2, -1},
    {HornId::H4, kBeta, "beta", "Eq. (5.6): sum_r (b)_r/r! H4(a,b+r;c,d) t^r = (1-t)^{-b} H4(x, y/(1-t))", 0, -1},
    {HornId::H5, kAlpha, "alpha", "Eq. (5.7): sum_r (a)_r/r! H5(a+r,b;c) t^r = (1-t)^{-a} H5(x/(1-t)^2, y/(1-t))", -2, -1},
    {HornId::H5, kBeta, "beta", "Eq. (5.7): sum_r (b)_r/r! H5(a,b+r;c) t^r = (1-t)^{-b} H5(x(1-t), y/(1-t))", 1, -1},
    {HornId::H6, kAlpha, "alpha", "Eq. (5.8): sum_r (a)_r/r! H6(a+r,b,c) t^r = (1-t)^{-a} H6(x/(1-t)^2, y(1-t))", -2, 1},
    {HornId::H6, kBeta, "beta", "Eq. (5.8): sum_r (b)_r/r! H6(a,b+r,c) t^r = (1-t)^{-b} H6(x(1-t), y/(1-t))", 1, -1},
    {HornId::H6, kGamma, "gamma", "Eq. (5.8): sum_r (c)_r/r! H6(a,b,c+r) t^r = (1-t)^{-c} H6(x, y/(1-t))", 0, -1},
    {HornId::H7, kAlpha, "alpha", "Eq. (5.9): sum_r (a)_r/r! H7(a+r,b,c;d) t^r = (1-t)^{-a} H7(x/(1-t)^2, y(1-t))", -2, 1},
    {HornId::H7, kBeta, "beta", "Eq. (5.9): sum_r (b)_r/r! H7(a,b+r,c;d) t^r = (1-t)^{-b} H7(x, y/(1-t))", 0, -1},
    {HornId::H7, kGamma, "gamma", "Eq. (5.9): sum_r (c)_r/r! H7(a,b,c+r;d) t^r = (1-t)^{-c} H7(x, y/(1-t))", 0, -1},
};

}  // namespace

void add_summation(std::vector<IdentityRecord>& out) {
  for (const SumSpec& spec : kSpecs) {
    const HornId fn = spec.fn;
    const Slot slot = spec.slot;
    const int px = spec.px, py = spec.py;

    // Truncated at r = R.
    Side lhs = [=](Evaluator& ev, const Instance& in) {
      const double a = in.params[slot];
      double sum = 0.0, comp = 0.0, last = 0.0, prev = 0.0;
      double tr = 1.0, fact = 1.0;
      for (int r = 0; r <= in.free; ++r) {
        if (r > 0) {
          tr *= in.t;
          fact *= r;
        }
        if (tr == 0.0) {
          prev = last;
          last = 0.0;
          continue;
        }
        const double term =
            ev.poch(a, r) * tr / fact * ev.H(fn, sh(in.params, {{slot, double(r)}}), in.point);
        const double s = sum + term;
        comp += std::abs(sum) >= std::abs(term) ? (sum - s) + term : (term - s) + sum;
        sum = s;
        prev = last;
        last = term;
      }
      // Geometric remainder from the last ratio; a ratio >= 1 means the sum
      // has not started to converge and no allowance is made beyond two terms.
      const double q = prev != 0.0 ? std::abs(last / prev) : 0.0;
      const double tail = q < 1.0 ? std::abs(last) * q / (1.0 - q) : std::abs(last) + std::abs(prev);
      return SideValue(sum + comp, tail);
    };

    Side rhs = [=](Evaluator& ev, const Instance& in) {
      const double u = 1.0 - in.t;
      const EvalPoint q{in.point.x * std::pow(u, px), in.point.y * std::pow(u, py)};
      return SideValue(std::pow(u, -in.params[slot]) * ev.H(fn, in.params, q));
    };

    IdentityRecord r = make_record(std::string(to_string(fn)) + ".SUM." + spec.name, Family::SUM,
                                   fn, spec.anchor, "R", std::move(lhs), std::move(rhs));
    if (spec.note != nullptr) r.note = spec.note;
    out.push_back(std::move(r));
  }
}

}  // namespace horn::detail
