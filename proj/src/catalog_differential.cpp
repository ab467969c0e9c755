// DIFF_THETA records (parameter shift = 1 + weighted theta / parameter) and
// DIFF_DERIV records (closed forms of s-th partial derivatives).

#include <functional>

#include "catalog_build.hpp"

namespace horn::detail {

namespace {

struct ThetaSpec {
  const char* id;
  HornId fn;
  const char* anchor;
  Slot slot;
  int delta;  // +1 numerator shift, -1 denominator shift
  ThetaWeights w;
  const char* note;
};

// Divisor is the parameter itself for numerator shifts and (param - 1) for
// denominator shifts.
IdentityRecord theta_record(const ThetaSpec& t) {
  const HornId fn = t.fn;
  const Slot slot = t.slot;
  const int delta = t.delta;
  const ThetaWeights w = t.w;
  IdentityRecord r = make_record(
      t.id, Family::DIFF_THETA, fn, t.anchor, "",
      [=](Evaluator& ev, const Instance& in) {
        return SideValue(ev.H(fn, sh(in.params, {{slot, static_cast<double>(delta)}}), in.point));
      },
      [=](Evaluator& ev, const Instance& in) {
        const double divisor = delta > 0 ? in.params[slot] : in.params[slot] - 1.0;
        return SideValue(ev.H(fn, in.params, in.point) +
                         ev.inv(divisor) * ev.theta(fn, in.params, in.point, w));
      });
  if (t.note != nullptr) r.note = t.note;
  return r;
}

constexpr HornId H1 = HornId::H1, H2 = HornId::H2, H3 = HornId::H3, H4 = HornId::H4,
                 H5 = HornId::H5, H6 = HornId::H6, H7 = HornId::H7;

const ThetaSpec kThetaSpecs[] = {
    {"H1.DIFF_THETA.alpha", H1, "Eq. (3.1): H1(a+1) = (1 + (tx - ty)/a) H1", kAlpha, 1, {1, -1}, nullptr},
    {"H1.DIFF_THETA.beta", H1, "Eq. (3.2): H1(b+1) = (1 + (ty + tx)/b) H1", kBeta, 1, {1, 1}, nullptr},
    {"H1.DIFF_THETA.gamma", H1, "Eq. (3.3): H1(c+1) = (1 + ty/c) H1", kGamma, 1, {0, 1}, nullptr},
    {"H1.DIFF_THETA.delta", H1, "Eq. (3.4): H1(d-1) = (1 + tx/(d-1)) H1", kDelta, -1, {1, 0}, nullptr},

    {"H2.DIFF_THETA.alpha", H2, "Eq. (3.5) first: H2(a+1) = (1 + (tx - ty)/a) H2", kAlpha, 1, {1, -1}, nullptr},
    {"H2.DIFF_THETA.beta", H2, "Eq. (3.5) second: H2(b+1) = (1 + tx/b) H2", kBeta, 1, {1, 0}, nullptr},
    {"H2.DIFF_THETA.gamma", H2, "Eq. (3.5) third: H2(c+1) = (1 + ty/c) H2", kGamma, 1, {0, 1}, nullptr},
    {"H2.DIFF_THETA.delta", H2, "Eq. (3.5) fourth: H2(d+1) = (1 + ty/d) H2", kDelta, 1, {0, 1}, nullptr},
    {"H2.DIFF_THETA.epsilon", H2, "Eq. (3.5) fifth: H2(e-1) = (1 + tx/(e-1)) H2", kEpsilon, -1, {1, 0}, nullptr},

    {"H3.DIFF_THETA.alpha", H3, "Eq. (3.7) first: H3(a+1) = (1 + (2tx + ty)/a) H3", kAlpha, 1, {2, 1}, nullptr},
    {"H3.DIFF_THETA.beta", H3, "Eq. (3.7) second: H3(b+1) = (1 + ty/b) H3", kBeta, 1, {0, 1}, nullptr},
    {"H3.DIFF_THETA.gamma", H3, "Eq. (3.7) third: H3(c-1) = (1 + (tx + ty)/(c-1)) H2(a,b;c)", kGamma, -1, {1, 1},
     "The printed right-hand side names H2 with H3's parameter list; evaluated as H3."},

    {"H4.DIFF_THETA.alpha", H4, "Eq. (3.9) first: H4(a+1) = (1 + (2tx + ty)/a) H4", kAlpha, 1, {2, 1}, nullptr},
    {"H4.DIFF_THETA.beta", H4, "Eq. (3.9) second: H4(b+1) = (1 + ty/b) H4", kBeta, 1, {0, 1}, nullptr},
    {"H4.DIFF_THETA.gamma", H4, "Eq. (3.9) third: H4(c-1) = (1 + tx/(c-1)) H4", kGamma, -1, {1, 0}, nullptr},
    {"H4.DIFF_THETA.delta", H4, "Eq. (3.9) fourth: H4(d-1) = (1 + ty/(d-1)) H4", kDelta, -1, {0, 1}, nullptr},

    {"H5.DIFF_THETA.alpha", H5, "Eq. (3.11) first: H5(a+1) = (1 + (2tx + ty)/a) H5", kAlpha, 1, {2, 1}, nullptr},
    {"H5.DIFF_THETA.beta", H5, "Eq. (3.11) second: H5(b+1) = (1 + (ty - tx)/b) H5", kBeta, 1, {-1, 1}, nullptr},
    {"H5.DIFF_THETA.gamma", H5, "Eq. (3.11) third: H5(c-1) = (1 + ty/(c-1)) H5", kGamma, -1, {0, 1}, nullptr},

    {"H6.DIFF_THETA.alpha", H6, "Eq. (3.13) first: H6(a+1) = (1 + (2tx - ty)/a) H6", kAlpha, 1, {2, -1}, nullptr},
    {"H6.DIFF_THETA.beta", H6, "Eq. (3.13) second: H6(b+1) = (1 + (ty - tx)/b) H6", kBeta, 1, {-1, 1}, nullptr},
    {"H6.DIFF_THETA.gamma", H6, "Eq. (3.13) third: H6(c+1) = (1 + ty/c) H6", kGamma, 1, {0, 1}, nullptr},

    {"H7.DIFF_THETA.alpha", H7, "Eq. (3.15) first: H7(a+1) = (1 + (2tx - ty)/a) H7", kAlpha, 1, {2, -1}, nullptr},
    {"H7.DIFF_THETA.beta", H7, "Eq. (3.15) second: H7(b+1) = (1 + ty/b) H7", kBeta, 1, {0, 1}, nullptr},
    {"H7.DIFF_THETA.gamma", H7, "Eq. (3.15) third: H7(c+1) = (1 + ty/c) H7", kGamma, 1, {0, 1}, nullptr},
    {"H7.DIFF_THETA.delta", H7, "Eq. (3.15) fourth: H7(d-1) = (1 + tx/(d-1)) H7", kDelta, -1, {1, 0}, nullptr},
};

using Coef = std::function<double(Evaluator&, const ParamVector&, int)>;

struct DerivSpec {
  const char* id;
  HornId fn;
  Axis axis;
  const char* anchor;
  Coef coef;
  // Parameter shifts per unit of s on the right-hand side.
  std::vector<std::pair<Slot, int>> shift;
  int fixed_s;  // 0 when s is free
  bool open_question;
  const char* note;
};

IdentityRecord deriv_record(const DerivSpec& d) {
  const HornId fn = d.fn;
  const Axis axis = d.axis;
  const Coef coef = d.coef;
  const auto shift = d.shift;
  IdentityRecord r = make_record(
      d.id, Family::DIFF_DERIV, fn, d.anchor, d.fixed_s ? "" : "s",
      [=](Evaluator& ev, const Instance& in) {
        return SideValue(ev.partial(fn, in.params, in.point, axis, in.free));
      },
      [=](Evaluator& ev, const Instance& in) {
        ParamVector q = in.params;
        for (const auto& [slot, per_s] : shift) q[slot] += per_s * in.free;
        return SideValue(coef(ev, in.params, in.free) * ev.H(fn, q, in.point));
      });
  r.derivative_axis = axis;
  if (d.fixed_s) r.fixed_free = {d.fixed_s};
  r.open_question = d.open_question;
  if (d.note != nullptr) r.note = d.note;
  return r;
}

std::vector<DerivSpec> deriv_specs() {
  return {
      {"H1.DIFF_DERIV.dx_s", H1, Axis::x,
       "Eq. (3.17): d^s/dx^s H1 = (a)_s (b)_s/(d)_s H1(a+s,b+s,c;d+s)",
       [](Evaluator& ev, const ParamVector& P, int s) {
         return ev.poch(P[kAlpha], s) * ev.poch(P[kBeta], s) * ev.inv_poch(P[kDelta], s);
       },
       {{kAlpha, 1}, {kBeta, 1}, {kDelta, 1}}, 0, true,
       "The iterated form in the proof carries d+r; read as d+s."},
      {"H1.DIFF_DERIV.dy_s", H1, Axis::y,
       "Eq. (3.18): d^s/dy^s H1 = (-1)^s (b)_s (c)_s/(1-a)_s H1(a-s,b+s,c+s;d)",
       [](Evaluator& ev, const ParamVector& P, int s) {
         return sign_pow(s) * ev.poch(P[kBeta], s) * ev.poch(P[kGamma], s) *
                ev.inv_poch(1 - P[kAlpha], s);
       },
       {{kAlpha, -1}, {kBeta, 1}, {kGamma, 1}}, 0, false, nullptr},
      {"H1.DIFF_DERIV.3.19", H1, Axis::x,
       "Eq. (3.19): d/dx H1 = (a b/d) H1(a+1,b+1,c;d+1)",
       [](Evaluator& ev, const ParamVector& P, int) {
         return P[kAlpha] * P[kBeta] * ev.inv(P[kDelta]);
       },
       {{kAlpha, 1}, {kBeta, 1}, {kDelta, 1}}, 1, false, nullptr},

      {"H2.DIFF_DERIV.dx_s", H2, Axis::x,
       "Eq. (3.21) first: d^s/dx^s H2 = (a)_s (b)_s/(e)_s H2(a+s,b+s,c,d;e+s)",
       [](Evaluator& ev, const ParamVector& P, int s) {
         return ev.poch(P[kAlpha], s) * ev.poch(P[kBeta], s) * ev.inv_poch(P[kEpsilon], s);
       },
       {{kAlpha, 1}, {kBeta, 1}, {kEpsilon, 1}}, 0, false, nullptr},
      {"H2.DIFF_DERIV.dy_s", H2, Axis::y,
       "Eq. (3.21) second: d^s/dy^s H2 = (-1)^s (c)_s (d)_s/(1-a)_s H2(a-s,b,c+s,d+s;e)",
       [](Evaluator& ev, const ParamVector& P, int s) {
         return sign_pow(s) * ev.poch(P[kGamma], s) * ev.poch(P[kDelta], s) *
                ev.inv_poch(1 - P[kAlpha], s);
       },
       {{kAlpha, -1}, {kGamma, 1}, {kDelta, 1}}, 0, false, nullptr},

      {"H3.DIFF_DERIV.dx_s", H3, Axis::x,
       "Eq. (3.22) first: d^s/dx^s H3 = (a)_{2s}/(c)_s H3(a+2s,b;c+s)",
       [](Evaluator& ev, const ParamVector& P, int s) {
         return ev.poch(P[kAlpha], 2 * s) * ev.inv_poch(P[kGamma], s);
       },
       {{kAlpha, 2}, {kGamma, 1}}, 0, false, nullptr},
      {"H3.DIFF_DERIV.dy_s", H3, Axis::y,
       "Eq. (3.22) second: d^s/dy^s H3 = (a)_s (b)_s/(c)_s H3(a+s,b+s;c+s)",
       [](Evaluator& ev, const ParamVector& P, int s) {
         return ev.poch(P[kAlpha], s) * ev.poch(P[kBeta], s) * ev.inv_poch(P[kGamma], s);
       },
       {{kAlpha, 1}, {kBeta, 1}, {kGamma, 1}}, 0, false, nullptr},

      {"H4.DIFF_DERIV.dx_s", H4, Axis::x,
       "Eq. (3.23) first: d^s/dx^s H4 = (a)_{2s}/(c)_s H4(a+2s,b;c+s,d)",
       [](Evaluator& ev, const ParamVector& P, int s) {
         return ev.poch(P[kAlpha], 2 * s) * ev.inv_poch(P[kGamma], s);
       },
       {{kAlpha, 2}, {kGamma, 1}}, 0, false, nullptr},
      {"H4.DIFF_DERIV.dy_s", H4, Axis::y,
       "Eq. (3.23) second: d^s/dy^s H4 = (a)_s (b)_s/(d)_s H4(a+s,b+s;c,d+s)",
       [](Evaluator& ev, const ParamVector& P, int s) {
         return ev.poch(P[kAlpha], s) * ev.poch(P[kBeta], s) * ev.inv_poch(P[kDelta], s);
       },
       {{kAlpha, 1}, {kBeta, 1}, {kDelta, 1}}, 0, false, nullptr},

      {"H5.DIFF_DERIV.dx_s", H5, Axis::x,
       "Eq. (3.24) first: d^s/dx^s H5 = (-1)^s (a)_{2s}/(1-b)_s H5(a+2s,b-s;c)",
       [](Evaluator& ev, const ParamVector& P, int s) {
         return sign_pow(s) * ev.poch(P[kAlpha], 2 * s) * ev.inv_poch(1 - P[kBeta], s);
       },
       {{kAlpha, 2}, {kBeta, -1}}, 0, false, nullptr},
      {"H5.DIFF_DERIV.dy_s", H5, Axis::y,
       "Eq. (3.24) second: d^s/dy^s H5 = (a)_s (b)_s/(c)_s H5(a+s,b+s;c+s)",
       [](Evaluator& ev, const ParamVector& P, int s) {
         return ev.poch(P[kAlpha], s) * ev.poch(P[kBeta], s) * ev.inv_poch(P[kGamma], s);
       },
       {{kAlpha, 1}, {kBeta, 1}, {kGamma, 1}}, 0, false, nullptr},

      {"H6.DIFF_DERIV.dx_s", H6, Axis::x,
       "Eq. (3.25) first: d^s/dx^s H6 = (-1)^s (a)_{2s}/(1-b)_s H6(a+2s,b-s,c)",
       [](Evaluator& ev, const ParamVector& P, int s) {
         return sign_pow(s) * ev.poch(P[kAlpha], 2 * s) * ev.inv_poch(1 - P[kBeta], s);
       },
       {{kAlpha, 2}, {kBeta, -1}}, 0, false, nullptr},
      {"H6.DIFF_DERIV.dy_s", H6, Axis::y,
       "Eq. (3.25) second: d^s/dy^s H6 = (-1)^s (b)_s (c)_s/(1-a)_s H6(a-s,b+s,c+s)",
       [](Evaluator& ev, const ParamVector& P, int s) {
         return sign_pow(s) * ev.poch(P[kBeta], s) * ev.poch(P[kGamma], s) *
                ev.inv_poch(1 - P[kAlpha], s);
       },
       {{kAlpha, -1}, {kBeta, 1}, {kGamma, 1}}, 0, false, nullptr},

      {"H7.DIFF_DERIV.dx_s", H7, Axis::x,
       "Eq. (3.26) first: d^s/dx^s H7 = (a)_{2s}/(d)_s H7(a+2r,b,c;d+r)",
       [](Evaluator& ev, const ParamVector& P, int s) {
         return ev.poch(P[kAlpha], 2 * s) * ev.inv_poch(P[kDelta], s);
       },
       {{kAlpha, 2}, {kDelta, 1}}, 0, true,
       "The printed shifts a+2r, d+r use r where the order is s; read as a+2s, d+s."},
      {"H7.DIFF_DERIV.dy_s", H7, Axis::y,
       "Eq. (3.26) second: d^s/dy^s H7 = (-1)^s (b)_s (c)_s/(1-a)_s H7(a-s,b+s,c+s;d)",
       [](Evaluator& ev, const ParamVector& P, int s) {
         return sign_pow(s) * ev.poch(P[kBeta], s) * ev.poch(P[kGamma], s) *
                ev.inv_poch(1 - P[kAlpha], s);
       },
       {{kAlpha, -1}, {kBeta, 1}, {kGamma, 1}}, 0, false, nullptr},
  };
}

}  // namespace

void add_differential(std::vector<IdentityRecord>& out) {
  for (const ThetaSpec& t : kThetaSpecs) out.push_back(theta_record(t));
  for (const DerivSpec& d : deriv_specs()) out.push_back(deriv_record(d));
}

}  // namespace horn::detail
