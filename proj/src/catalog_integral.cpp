// INT records: closed forms for Ix^s, Iy^s, (Ix Iy)^s, I^2 and I^s acting on
// H1..H7, checked against the term-wise integral operators.

#include "catalog_build.hpp"

namespace horn::detail {

namespace {

constexpr HornId H1 = HornId::H1, H2 = HornId::H2, H3 = HornId::H3, H4 = HornId::H4,
                 H5 = HornId::H5, H6 = HornId::H6, H7 = HornId::H7;

// 1 / c^s through the evaluator, so admissibility sees the coordinate.
double inv_pow(Evaluator& ev, double c, int s) {
  double v = 1.0;
  for (int j = 0; j < s; ++j) v *= ev.inv_coord(c);
  return v;
}

using Rhs = std::function<double(Evaluator&, const ParamVector&, EvalPoint, int)>;

struct IntSpec {
  const char* suffix;  // "Ix_s", "Iy_s", "IxIy_s", "I2", "I_s"
  const char* anchor;
  Rhs rhs;
  const char* note = nullptr;
};

OperatorKind kind_of(const std::string& suffix) {
  if (suffix == "Ix_s") return OperatorKind::IX;
  if (suffix == "Iy_s") return OperatorKind::IY;
  if (suffix == "IxIy_s") return OperatorKind::IXIY;
  return OperatorKind::I_FULL;
}

void add_family(std::vector<IdentityRecord>& out, HornId fn, bool open_question,
                const std::vector<IntSpec>& specs) {
  for (const IntSpec& spec : specs) {
    const std::string suffix = spec.suffix;
    const OperatorKind kind = kind_of(suffix);
    const bool fixed_two = suffix == "I2";
    const Rhs rhs = spec.rhs;
    IdentityRecord r = make_record(
        std::string(to_string(fn)) + ".INT." + suffix, Family::INT, fn, spec.anchor, "s",
        [=](Evaluator& ev, const Instance& in) {
          return SideValue(ev.integral(fn, in.params, in.point, {kind, in.free}));
        },
        [=](Evaluator& ev, const Instance& in) {
          return SideValue(rhs(ev, in.params, in.point, in.free));
        });
    if (fixed_two) r.fixed_free = {2};
    r.open_question = open_question;
    if (spec.note != nullptr) r.note = spec.note;
    out.push_back(std::move(r));
  }
}

// Shorthand used in every closed form below.
#define HORN_PARAMS                                                              \
  [[maybe_unused]] const double a = P[kAlpha];                                   \
  [[maybe_unused]] const double b = P[kBeta];                                    \
  [[maybe_unused]] const double c = P.size() > 2 ? P[kGamma] : 0.0;              \
  [[maybe_unused]] const double d = P.size() > 3 ? P[kDelta] : 0.0;              \
  [[maybe_unused]] const double e = P.size() > 4 ? P[kEpsilon] : 0.0;            \
  [[maybe_unused]] const double x = p.x;                                         \
  [[maybe_unused]] const double y = p.y

void add_h1(std::vector<IdentityRecord>& out) {
  add_family(out, H1, false, {
      {"Ix_s", "Eq. (4.3): Ix^s H1 = (-1)^s (1-d)_s/(x^s (1-a)_s (1-b)_s) H1(a-s,b-s,c;d-s)",
       [](Evaluator& ev, const ParamVector& P, EvalPoint p, int s) {
         HORN_PARAMS;
         return sign_pow(s) * ev.poch(1 - d, s) * inv_pow(ev, x, s) * ev.inv_poch(1 - a, s) *
                ev.inv_poch(1 - b, s) *
                ev.H(H1, sh(P, {{kAlpha, -s}, {kBeta, -s}, {kDelta, -s}}), p);
       }},
      {"Iy_s", "Eq. (4.4): Iy^s H1 = (a)_s/(y^s (1-b)_s (1-c)_s) H1(a+s,b-s,c-s;d)",
       [](Evaluator& ev, const ParamVector& P, EvalPoint p, int s) {
         HORN_PARAMS;
         return ev.poch(a, s) * inv_pow(ev, y, s) * ev.inv_poch(1 - b, s) *
                ev.inv_poch(1 - c, s) *
                ev.H(H1, sh(P, {{kAlpha, s}, {kBeta, -s}, {kGamma, -s}}), p);
       }},
      {"IxIy_s",
       "Eq. (4.5): (Ix Iy)^s H1 = (1-d)_s/(x^s y^s (1-b)_{2s} (1-c)_s) H1(a,b-2s,c-s;d-s)",
       [](Evaluator& ev, const ParamVector& P, EvalPoint p, int s) {
         HORN_PARAMS;
         return ev.poch(1 - d, s) * inv_pow(ev, x, s) * inv_pow(ev, y, s) *
                ev.inv_poch(1 - b, 2 * s) * ev.inv_poch(1 - c, s) *
                ev.H(H1, sh(P, {{kBeta, -2 * s}, {kGamma, -s}, {kDelta, -s}}), p);
       }},
      {"I2", "Eq. (4.1): I^2 H1 as the three-term sum over H1(a-2,b-2,c;d-2), H1(a,b-2,c-1;d-1), H1(a+2,b-2,c-2;d)",
       [](Evaluator& ev, const ParamVector& P, EvalPoint p, int) {
         HORN_PARAMS;
         const double t1 = (d - 1) * (d - 2) * inv_pow(ev, x, 2) * ev.inv(a - 1) * ev.inv(a - 2) *
                           ev.inv(b - 1) * ev.inv(b - 2) *
                           ev.H(H1, sh(P, {{kAlpha, -2}, {kBeta, -2}, {kDelta, -2}}), p);
         const double t2 = 2 * (d - 1) * ev.inv_coord(x) * ev.inv_coord(y) * ev.inv(b - 1) *
                           ev.inv(b - 2) * ev.inv(c - 1) *
                           ev.H(H1, sh(P, {{kBeta, -2}, {kGamma, -1}, {kDelta, -1}}), p);
         const double t3 = a * (a + 1) * inv_pow(ev, y, 2) * ev.inv(b - 1) * ev.inv(b - 2) *
                           ev.inv(c - 1) * ev.inv(c - 2) *
                           ev.H(H1, sh(P, {{kAlpha, 2}, {kBeta, -2}, {kGamma, -2}}), p);
         return t1 + t2 + t3;
       }},
      {"I_s",
       "Thm 4.3: I^s H1 = (1-d)_s/(x^s y^s (1-b)_{2s} (1-c)_s) prod_k (tx+ty-k+1) H1(a,b-2s,c-s;d-s)",
       [](Evaluator& ev, const ParamVector& P, EvalPoint p, int s) {
         HORN_PARAMS;
         return ev.poch(1 - d, s) * inv_pow(ev, x, s) * inv_pow(ev, y, s) *
                ev.inv_poch(1 - b, 2 * s) * ev.inv_poch(1 - c, s) *
                ev.theta_product(H1, sh(P, {{kBeta, -2 * s}, {kGamma, -s}, {kDelta, -s}}), p, s);
       },
       "The theta product acts term-wise on the shifted series."},
  });
  // I_s is an open question (operator order); the other four closed forms are not.
  out.back().open_question = true;
}

void add_h2(std::vector<IdentityRecord>& out) {
  add_family(out, H2, true, {
      {"Ix_s", "Thm 4.4 H2 Ix^s: (-1)^s (1-e)_s/(x^s (1-a)_s (1-b)_s) H2(a-s,b-s,c,d;e-s)",
       [](Evaluator& ev, const ParamVector& P, EvalPoint p, int s) {
         HORN_PARAMS;
         return sign_pow(s) * ev.poch(1 - e, s) * inv_pow(ev, x, s) * ev.inv_poch(1 - a, s) *
                ev.inv_poch(1 - b, s) *
                ev.H(H2, sh(P, {{kAlpha, -s}, {kBeta, -s}, {kEpsilon, -s}}), p);
       }},
      {"Iy_s", "Thm 4.4 H2 Iy^s: (a)_s/(y^s (1-c)_s (1-d)_s) H2(a+s,b,c-s,d-s;e)",
       [](Evaluator& ev, const ParamVector& P, EvalPoint p, int s) {
         HORN_PARAMS;
         return ev.poch(a, s) * inv_pow(ev, y, s) * ev.inv_poch(1 - c, s) *
                ev.inv_poch(1 - d, s) *
                ev.H(H2, sh(P, {{kAlpha, s}, {kGamma, -s}, {kDelta, -s}}), p);
       }},
      {"IxIy_s",
       "Thm 4.4 H2 (Ix Iy)^s: (1-e)_s/(x^s y^s (1-b)_s (1-c)_s (1-d)_s) H2(a,b-s,c-s,d-s;e-s)",
       [](Evaluator& ev, const ParamVector& P, EvalPoint p, int s) {
         HORN_PARAMS;
         return ev.poch(1 - e, s) * inv_pow(ev, x, s) * inv_pow(ev, y, s) *
                ev.inv_poch(1 - b, s) * ev.inv_poch(1 - c, s) * ev.inv_poch(1 - d, s) *
                ev.H(H2, sh(P, {{kBeta, -s}, {kGamma, -s}, {kDelta, -s}, {kEpsilon, -s}}), p);
       }},
      {"I2", "Thm 4.4 H2 I^2: three-term sum over H2(a-2,b-2,c,d;e-2), H1(a,b-1,c-1,d-1;e-1), H2(a+2,b,c-2,d-2;e)",
       [](Evaluator& ev, const ParamVector& P, EvalPoint p, int) {
         HORN_PARAMS;
         const double t1 = (e - 1) * (e - 2) * inv_pow(ev, x, 2) * ev.inv(a - 1) * ev.inv(a - 2) *
                           ev.inv(b - 1) * ev.inv(b - 2) *
                           ev.H(H2, sh(P, {{kAlpha, -2}, {kBeta, -2}, {kEpsilon, -2}}), p);
         const double t2 =
             2 * (e - 1) * ev.inv_coord(x) * ev.inv_coord(y) * ev.inv(b - 1) * ev.inv(c - 1) *
             ev.inv(d - 1) *
             ev.H(H2, sh(P, {{kBeta, -1}, {kGamma, -1}, {kDelta, -1}, {kEpsilon, -1}}), p);
         const double t3 = a * (a + 1) * inv_pow(ev, y, 2) * ev.inv(c - 1) * ev.inv(c - 2) *
                           ev.inv(d - 1) * ev.inv(d - 2) *
                           ev.H(H2, sh(P, {{kAlpha, 2}, {kGamma, -2}, {kDelta, -2}}), p);
         return t1 + t2 + t3;
       },
       "The middle term prints H1 with H2's five-slot parameter list; evaluated as H2."},
      {"I_s",
       "Thm 4.4 H2 I^s: (1-e)_s/(x^s y^s (1-b)_s (1-c)_s (1-d)_s) prod_k (tx+ty-k+1) H2(a,b-s,c-s,d-s;e-s)",
       [](Evaluator& ev, const ParamVector& P, EvalPoint p, int s) {
         HORN_PARAMS;
         return ev.poch(1 - e, s) * inv_pow(ev, x, s) * inv_pow(ev, y, s) *
                ev.inv_poch(1 - b, s) * ev.inv_poch(1 - c, s) * ev.inv_poch(1 - d, s) *
                ev.theta_product(
                    H2, sh(P, {{kBeta, -s}, {kGamma, -s}, {kDelta, -s}, {kEpsilon, -s}}), p, s);
       }},
  });
}

void add_h3(std::vector<IdentityRecord>& out) {
  add_family(out, H3, true, {
      {"Ix_s", "Thm 4.4 H3 Ix^s: (-1)^s (1-c)_s/(x^s (1-a)_{2s}) H3(a-2s,b;c-s)",
       [](Evaluator& ev, const ParamVector& P, EvalPoint p, int s) {
         HORN_PARAMS;
         return sign_pow(s) * ev.poch(1 - c, s) * inv_pow(ev, x, s) * ev.inv_poch(1 - a, 2 * s) *
                ev.H(H3, sh(P, {{kAlpha, -2 * s}, {kGamma, -s}}), p);
       }},
      {"Iy_s", "Thm 4.4 H3 Iy^s: (-1)^s (1-d)_s/(y^s (1-a)_s (1-b)_s) H3(a-s,b-s;c-s)",
       [](Evaluator& ev, const ParamVector& P, EvalPoint p, int s) {
         HORN_PARAMS;
         return sign_pow(s) * ev.poch(1 - c, s) * inv_pow(ev, y, s) * ev.inv_poch(1 - a, s) *
                ev.inv_poch(1 - b, s) *
                ev.H(H3, sh(P, {{kAlpha, -s}, {kBeta, -s}, {kGamma, -s}}), p);
       },
       "H3 has no d parameter; the printed (1-d)_s is read as (1-c)_s."},
      {"IxIy_s",
       "Thm 4.4 H3 (Ix Iy)^s: (1-c)_{2s}/(x^s y^s (1-a)_{3s} (1-b)_s) H3(a-3s,b-s;c-2s)",
       [](Evaluator& ev, const ParamVector& P, EvalPoint p, int s) {
         HORN_PARAMS;
         return ev.poch(1 - c, 2 * s) * inv_pow(ev, x, s) * inv_pow(ev, y, s) *
                ev.inv_poch(1 - a, 3 * s) * ev.inv_poch(1 - b, s) *
                ev.H(H3, sh(P, {{kAlpha, -3 * s}, {kBeta, -s}, {kGamma, -2 * s}}), p);
       }},
      {"I2", "Thm 4.4 H3 I^2: three-term sum over H3(a-4,b;c-2), H3(a-3,b-1;c-2), H3(a-2,b-2;c-2)",
       [](Evaluator& ev, const ParamVector& P, EvalPoint p, int) {
         HORN_PARAMS;
         const double cc = (c - 1) * (c - 2);
         const double t1 = cc * inv_pow(ev, x, 2) * ev.inv(a - 1) * ev.inv(a - 2) *
                           ev.inv(a - 3) * ev.inv(a - 4) *
                           ev.H(H3, sh(P, {{kAlpha, -4}, {kGamma, -2}}), p);
         const double t2 = 2 * cc * ev.inv_coord(x) * ev.inv_coord(y) * ev.inv(a - 1) *
                           ev.inv(a - 2) * ev.inv(a - 3) * ev.inv(b - 1) *
                           ev.H(H3, sh(P, {{kAlpha, -3}, {kBeta, -1}, {kGamma, -2}}), p);
         const double t3 = cc * inv_pow(ev, y, 2) * ev.inv(a - 1) * ev.inv(a - 2) *
                           ev.inv(b - 1) * ev.inv(b - 2) *
                           ev.H(H3, sh(P, {{kAlpha, -2}, {kBeta, -2}, {kGamma, -2}}), p);
         return t1 + t2 + t3;
       }},
      {"I_s",
       "Thm 4.4 H3 I^s: (1-c)_{2r}/(x^s y^s (1-a)_{3s} (1-b)_s) prod_k (tx+ty-k+1) H1(a-3s,b-s;c-2s)",
       [](Evaluator& ev, const ParamVector& P, EvalPoint p, int s) {
         HORN_PARAMS;
         return ev.poch(1 - c, 2 * s) * inv_pow(ev, x, s) * inv_pow(ev, y, s) *
                ev.inv_poch(1 - a, 3 * s) * ev.inv_poch(1 - b, s) *
                ev.theta_product(H3, sh(P, {{kAlpha, -3 * s}, {kBeta, -s}, {kGamma, -2 * s}}), p,
                                 s);
       },
       "Read (1-c)_{2r} as (1-c)_{2s}, and the printed H1 with H3's parameter list as H3."},
  });
}

void add_h4(std::vector<IdentityRecord>& out) {
  add_family(out, H4, true, {
      {"Ix_s", "Thm 4.4 H4 Ix^s: (-1)^s (1-c)_s/(x^s (1-a)_{2s}) H4(a-2s,b;c-s,d)",
       [](Evaluator& ev, const ParamVector& P, EvalPoint p, int s) {
         HORN_PARAMS;
         return sign_pow(s) * ev.poch(1 - c, s) * inv_pow(ev, x, s) * ev.inv_poch(1 - a, 2 * s) *
                ev.H(H4, sh(P, {{kAlpha, -2 * s}, {kGamma, -s}}), p);
       }},
      {"Iy_s", "Thm 4.4 H4 Iy^s: (-1)^s (1-c)_s/(y^s (1-a)_s (1-b)_s) H4(a-s,b-s;c,d-s)",
       [](Evaluator& ev, const ParamVector& P, EvalPoint p, int s) {
         HORN_PARAMS;
         return sign_pow(s) * ev.poch(1 - c, s) * inv_pow(ev, y, s) * ev.inv_poch(1 - a, s) *
                ev.inv_poch(1 - b, s) *
                ev.H(H4, sh(P, {{kAlpha, -s}, {kBeta, -s}, {kDelta, -s}}), p);
       },
       "Encoded with the printed (1-c)_s although the shifted parameter is d."},
      {"IxIy_s",
       "Thm 4.4 H4 (Ix Iy)^s: (1-c)_s (1-d)_s/(x^s y^s (1-a)_{3r} (1-b)_s) H4(a-3s,b-s;c-s,d-s)",
       [](Evaluator& ev, const ParamVector& P, EvalPoint p, int s) {
         HORN_PARAMS;
         return ev.poch(1 - c, s) * ev.poch(1 - d, s) * inv_pow(ev, x, s) * inv_pow(ev, y, s) *
                ev.inv_poch(1 - a, 3 * s) * ev.inv_poch(1 - b, s) *
                ev.H(H4, sh(P, {{kAlpha, -3 * s}, {kBeta, -s}, {kGamma, -s}, {kDelta, -s}}), p);
       },
       "Read (1-a)_{3r} as (1-a)_{3s}."},
      {"I2", "Thm 4.4 H4 I^2: three-term sum over H4(a-4,b;c-2,d), H4(a-3,b-1;c-1,d-1), H4(a-2,b-2;c,d-2)",
       [](Evaluator& ev, const ParamVector& P, EvalPoint p, int) {
         HORN_PARAMS;
         const double t1 = (c - 1) * (c - 2) * inv_pow(ev, x, 2) * ev.inv(a - 1) * ev.inv(a - 2) *
                           ev.inv(a - 3) * ev.inv(a - 4) *
                           ev.H(H4, sh(P, {{kAlpha, -4}, {kGamma, -2}}), p);
         const double t2 = 2 * (c - 1) * (d - 1) * ev.inv_coord(x) * ev.inv_coord(y) *
                           ev.inv(a - 1) * ev.inv(a - 2) * ev.inv(a - 3) * ev.inv(b - 1) *
                           ev.H(H4, sh(P, {{kAlpha, -3}, {kBeta, -1}, {kGamma, -1}, {kDelta, -1}}), p);
         const double t3 = (d - 1) * (d - 2) * inv_pow(ev, y, 2) * ev.inv(a - 1) * ev.inv(a - 2) *
                           ev.inv(b - 1) * ev.inv(b - 2) *
                           ev.H(H4, sh(P, {{kAlpha, -2}, {kBeta, -2}, {kDelta, -2}}), p);
         return t1 + t2 + t3;
       }},
      {"I_s",
       "Thm 4.4 H4 I^s: (1-c)_s (1-d)_s/(x^s y^s (1-a)_{3s} (1-b)_s) prod_k (tx+ty-k+1) H4(a-3s,b-s;c-s,d-r)",
       [](Evaluator& ev, const ParamVector& P, EvalPoint p, int s) {
         HORN_PARAMS;
         return ev.poch(1 - c, s) * ev.poch(1 - d, s) * inv_pow(ev, x, s) * inv_pow(ev, y, s) *
                ev.inv_poch(1 - a, 3 * s) * ev.inv_poch(1 - b, s) *
                ev.theta_product(
                    H4, sh(P, {{kAlpha, -3 * s}, {kBeta, -s}, {kGamma, -s}, {kDelta, -s}}), p, s);
       },
       "Read d-r as d-s."},
  });
}

void add_h5(std::vector<IdentityRecord>& out) {
  add_family(out, H5, true, {
      {"Ix_s", "Thm 4.4 H5 Ix^s: (b)_s/(x^s (1-a)_{2s}) H5(a-2s,b+s;c)",
       [](Evaluator& ev, const ParamVector& P, EvalPoint p, int s) {
         HORN_PARAMS;
         return ev.poch(b, s) * inv_pow(ev, x, s) * ev.inv_poch(1 - a, 2 * s) *
                ev.H(H5, sh(P, {{kAlpha, -2 * s}, {kBeta, s}}), p);
       }},
      {"Iy_s", "Thm 4.4 H5 Iy^s: (-1)^s (1-c)_s/(y^s (1-a)_s (1-b)_s) H5(a-s,b-s;c-s)",
       [](Evaluator& ev, const ParamVector& P, EvalPoint p, int s) {
         HORN_PARAMS;
         return sign_pow(s) * ev.poch(1 - c, s) * inv_pow(ev, y, s) * ev.inv_poch(1 - a, s) *
                ev.inv_poch(1 - b, s) *
                ev.H(H5, sh(P, {{kAlpha, -s}, {kBeta, -s}, {kGamma, -s}}), p);
       }},
      {"IxIy_s", "Thm 4.4 H5 (Ix Iy)^s: (1-c)_s/(x^s y^s (1-a)_{3s}) H5(a-3s,b;c-s)",
       [](Evaluator& ev, const ParamVector& P, EvalPoint p, int s) {
         HORN_PARAMS;
         return ev.poch(1 - c, s) * inv_pow(ev, x, s) * inv_pow(ev, y, s) *
                ev.inv_poch(1 - a, 3 * s) *
                ev.H(H5, sh(P, {{kAlpha, -3 * s}, {kGamma, -s}}), p);
       }},
      {"I2", "Thm 4.4 H5 I^2: three-term sum over H5(a-4,b+2;c), H5(a-3,b;c-1), H5(a-2,b-2;c-2)",
       [](Evaluator& ev, const ParamVector& P, EvalPoint p, int) {
         HORN_PARAMS;
         const double t1 = b * (b + 1) * inv_pow(ev, x, 2) * ev.inv(a - 1) * ev.inv(a - 2) *
                           ev.inv(a - 3) * ev.inv(a - 4) *
                           ev.H(H5, sh(P, {{kAlpha, -4}, {kBeta, 2}}), p);
         const double t2 = 2 * (c - 1) * ev.inv_coord(x) * ev.inv_coord(y) * ev.inv(a - 1) *
                           ev.inv(a - 2) * ev.inv(a - 3) *
                           ev.H(H5, sh(P, {{kAlpha, -3}, {kGamma, -1}}), p);
         const double t3 = (c - 1) * (c - 2) * inv_pow(ev, y, 2) * ev.inv(a - 1) * ev.inv(a - 2) *
                           ev.inv(b - 1) * ev.inv(b - 2) *
                           ev.H(H5, sh(P, {{kAlpha, -2}, {kBeta, -2}, {kGamma, -2}}), p);
         return t1 + t2 + t3;
       },
       "The printed symbol b is read as the second parameter."},
      {"I_s",
       "Thm 4.4 H5 I^s: (1-c)_s/(x^s y^s (1-a)_{3s}) prod_k (tx+ty-k+1) H5(a-3s,b;c-r)",
       [](Evaluator& ev, const ParamVector& P, EvalPoint p, int s) {
         HORN_PARAMS;
         return ev.poch(1 - c, s) * inv_pow(ev, x, s) * inv_pow(ev, y, s) *
                ev.inv_poch(1 - a, 3 * s) *
                ev.theta_product(H5, sh(P, {{kAlpha, -3 * s}, {kGamma, -s}}), p, s);
       },
       "Read c-r as c-s."},
  });
}

void add_h6(std::vector<IdentityRecord>& out) {
  add_family(out, H6, true, {
      {"Ix_s", "Thm 4.4 H6 Ix^s: (b)_s/(x^s (1-a)_{2s}) H6(a-2s,b+s,c)",
       [](Evaluator& ev, const ParamVector& P, EvalPoint p, int s) {
         HORN_PARAMS;
         return ev.poch(b, s) * inv_pow(ev, x, s) * ev.inv_poch(1 - a, 2 * s) *
                ev.H(H6, sh(P, {{kAlpha, -2 * s}, {kBeta, s}}), p);
       }},
      {"Iy_s", "Thm 4.4 H6 Iy^s: (a)_s/(y^s (1-b)_s (1-c)_s) H6(a+s,b-s,c-s)",
       [](Evaluator& ev, const ParamVector& P, EvalPoint p, int s) {
         HORN_PARAMS;
         return ev.poch(a, s) * inv_pow(ev, y, s) * ev.inv_poch(1 - b, s) *
                ev.inv_poch(1 - c, s) *
                ev.H(H6, sh(P, {{kAlpha, s}, {kBeta, -s}, {kGamma, -s}}), p);
       }},
      {"IxIy_s", "Thm 4.4 H6 (Ix Iy)^s: 1/(x^s y^s (1-a)_s (1-c)_s) H6(a-s,b,c-s)",
       [](Evaluator& ev, const ParamVector& P, EvalPoint p, int s) {
         HORN_PARAMS;
         return inv_pow(ev, x, s) * inv_pow(ev, y, s) * ev.inv_poch(1 - a, s) *
                ev.inv_poch(1 - c, s) * ev.H(H6, sh(P, {{kAlpha, -s}, {kGamma, -s}}), p);
       }},
      {"I2", "Thm 4.4 H6 I^2: three-term sum over H6(a-4,b+2,c), H6(a-1,b,c-1), H6(a+2,b-2,c-2)",
       [](Evaluator& ev, const ParamVector& P, EvalPoint p, int) {
         HORN_PARAMS;
         const double t1 = b * (b + 1) * inv_pow(ev, x, 2) * ev.inv(a - 1) * ev.inv(a - 2) *
                           ev.inv(a - 3) * ev.inv(a - 4) *
                           ev.H(H6, sh(P, {{kAlpha, -4}, {kBeta, 2}}), p);
         const double t2 = 2 * ev.inv_coord(x) * ev.inv_coord(y) * ev.inv(a - 1) * ev.inv(c - 1) *
                           ev.H(H6, sh(P, {{kAlpha, -1}, {kGamma, -1}}), p);
         const double t3 = a * (a + 1) * inv_pow(ev, y, 2) * ev.inv(b - 1) * ev.inv(b - 2) *
                           ev.inv(c - 1) * ev.inv(c - 2) *
                           ev.H(H6, sh(P, {{kAlpha, 2}, {kBeta, -2}, {kGamma, -2}}), p);
         return t1 + t2 + t3;
       }},
      {"I_s",
       "Thm 4.4 H6 I^s: 1/(x^s y^s (1-a)_s (1-c)_s) prod_k (tx+ty-k+1) H6(a-s,b,c-s)",
       [](Evaluator& ev, const ParamVector& P, EvalPoint p, int s) {
         HORN_PARAMS;
         return inv_pow(ev, x, s) * inv_pow(ev, y, s) * ev.inv_poch(1 - a, s) *
                ev.inv_poch(1 - c, s) *
                ev.theta_product(H6, sh(P, {{kAlpha, -s}, {kGamma, -s}}), p, s);
       }},
  });
}

void add_h7(std::vector<IdentityRecord>& out) {
  add_family(out, H7, true, {
      {"Ix_s", "Thm 4.4 H7 Ix^s: (-1)^s (1-d)_s/(x^s (1-a)_{2s}) H7(a-2s,b,c;d-s)",
       [](Evaluator& ev, const ParamVector& P, EvalPoint p, int s) {
         HORN_PARAMS;
         return sign_pow(s) * ev.poch(1 - d, s) * inv_pow(ev, x, s) * ev.inv_poch(1 - a, 2 * s) *
                ev.H(H7, sh(P, {{kAlpha, -2 * s}, {kDelta, -s}}), p);
       }},
      {"Iy_s", "Thm 4.4 H7 Iy^s: (a)_s/(y^s (1-b)_s (1-c)_s) H7(a+s,b-s,c-s;d)",
       [](Evaluator& ev, const ParamVector& P, EvalPoint p, int s) {
         HORN_PARAMS;
         return ev.poch(a, s) * inv_pow(ev, y, s) * ev.inv_poch(1 - b, s) *
                ev.inv_poch(1 - c, s) *
                ev.H(H7, sh(P, {{kAlpha, s}, {kBeta, -s}, {kGamma, -s}}), p);
       }},
      {"IxIy_s",
       "Thm 4.4 H7 (Ix Iy)^s: (1-d)_s/(x^s y^s (1-a)_s (1-b)_s (1-c)_s) H7(a-s,b-s,c-s;d-r)",
       [](Evaluator& ev, const ParamVector& P, EvalPoint p, int s) {
         HORN_PARAMS;
         return ev.poch(1 - d, s) * inv_pow(ev, x, s) * inv_pow(ev, y, s) *
                ev.inv_poch(1 - a, s) * ev.inv_poch(1 - b, s) * ev.inv_poch(1 - c, s) *
                ev.H(H7, sh(P, {{kAlpha, -s}, {kBeta, -s}, {kGamma, -s}, {kDelta, -s}}), p);
       },
       "Read d-r as d-s."},
      {"I2", "Thm 4.4 H7 I^2: three-term sum over H7(a-4,b,c;d-2), H7(a-1,b-1,c-1;d-1), H7(a+2,b-2,c-2;d)",
       [](Evaluator& ev, const ParamVector& P, EvalPoint p, int) {
         HORN_PARAMS;
         const double t1 = (d - 1) * (d - 2) * inv_pow(ev, x, 2) * ev.inv(a - 1) * ev.inv(a - 2) *
                           ev.inv(a - 3) * ev.inv(a - 4) *
                           ev.H(H7, sh(P, {{kAlpha, -4}, {kDelta, -2}}), p);
         const double t2 = 2 * (d - 1) * ev.inv_coord(x) * ev.inv_coord(y) * ev.inv(a - 1) *
                           ev.inv(b - 1) * ev.inv(c - 1) *
                           ev.H(H7, sh(P, {{kAlpha, -1}, {kBeta, -1}, {kGamma, -1}, {kDelta, -1}}), p);
         const double t3 = a * (a + 1) * inv_pow(ev, y, 2) * ev.inv(b - 1) * ev.inv(b - 2) *
                           ev.inv(c - 1) * ev.inv(c - 2) *
                           ev.H(H7, sh(P, {{kAlpha, 2}, {kBeta, -2}, {kGamma, -2}}), p);
         return t1 + t2 + t3;
       }},
      {"I_s",
       "Thm 4.4 H7 I^s: (1-d)_s/(x^s y^s (1-a)_s (1-b)_s (1-c)_s) prod_k (tx+ty-k+1) H7(a-s,b-s,c-s;d-s)",
       [](Evaluator& ev, const ParamVector& P, EvalPoint p, int s) {
         HORN_PARAMS;
         return ev.poch(1 - d, s) * inv_pow(ev, x, s) * inv_pow(ev, y, s) *
                ev.inv_poch(1 - a, s) * ev.inv_poch(1 - b, s) * ev.inv_poch(1 - c, s) *
                ev.theta_product(
                    H7, sh(P, {{kAlpha, -s}, {kBeta, -s}, {kGamma, -s}, {kDelta, -s}}), p, s);
       }},
  });
}

#undef HORN_PARAMS

}  // namespace

void add_integral(std::vector<IdentityRecord>& out) {
  add_h1(out);
  add_h2(out);
  add_h3(out);
  add_h4(out);
  add_h5(out);
  add_h6(out);
  add_h7(out);
}

}  // namespace horn::detail
