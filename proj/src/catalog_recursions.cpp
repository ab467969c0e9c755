// CONTIG and REC records: single-step contiguous relations of H1 and the
// k-step recursions of H1, H2, H5, H6, H7.

#include "catalog_build.hpp"

namespace horn::detail {

namespace {

constexpr HornId H1 = HornId::H1;
constexpr HornId H2 = HornId::H2;
constexpr HornId H5 = HornId::H5;
constexpr HornId H6 = HornId::H6;
constexpr HornId H7 = HornId::H7;

// LHS of a k-step recursion: H with `slot` moved by per_k * k.
Side shifted_lhs(HornId fn, Slot slot, double per_k) {
  return [=](Evaluator& ev, const Instance& in) {
    return SideValue(ev.H(fn, sh(in.params, {{slot, per_k * in.free}}), in.point));
  };
}

IdentityRecord rec(std::string id, HornId fn, std::string anchor, Slot slot, double delta,
                   std::string contig, Side rhs) {
  IdentityRecord r = make_record(std::move(id), Family::REC, fn, std::move(anchor), "k",
                                 shifted_lhs(fn, slot, delta), std::move(rhs));
  r.step = RecStep{slot, delta, std::move(contig)};
  return r;
}

void add_contig(std::vector<IdentityRecord>& out) {
  out.push_back(make_record(
      "H1.CONTIG.2.3", Family::CONTIG, H1,
      "Eq. (2.3): H1(a+1,b,c;d) = H1 + (b x/d) H1(a+1,b+1,c;d+1) - b c y/(a(a-1)) H1(a-1,b+1,c+1;d)",
      "",
      [](Evaluator& ev, const Instance& in) {
        return SideValue(ev.H(H1, sh(in.params, {{kAlpha, 1}}), in.point));
      },
      [](Evaluator& ev, const Instance& in) {
        const auto& P = in.params;
        const double a = P[kAlpha], b = P[kBeta], c = P[kGamma], d = P[kDelta];
        const auto [x, y] = in.point;
        return SideValue(
            ev.H(H1, P, in.point) +
            b * x * ev.inv(d) * ev.H(H1, sh(P, {{kAlpha, 1}, {kBeta, 1}, {kDelta, 1}}), in.point) -
            b * c * y * ev.inv(a) * ev.inv(a - 1) *
                ev.H(H1, sh(P, {{kAlpha, -1}, {kBeta, 1}, {kGamma, 1}}), in.point));
      }));

  out.push_back(make_record(
      "H1.CONTIG.2.7", Family::CONTIG, H1,
      "Eq. (2.7): H1(a,b+1,c;d) = H1 + (a x/d) H1(a+1,b+1,c;d+1) + (c y/(a-1)) H1(a-1,b+1,c+1;d)",
      "",
      [](Evaluator& ev, const Instance& in) {
        return SideValue(ev.H(H1, sh(in.params, {{kBeta, 1}}), in.point));
      },
      [](Evaluator& ev, const Instance& in) {
        const auto& P = in.params;
        const double a = P[kAlpha], c = P[kGamma], d = P[kDelta];
        const auto [x, y] = in.point;
        return SideValue(
            ev.H(H1, P, in.point) +
            a * x * ev.inv(d) * ev.H(H1, sh(P, {{kAlpha, 1}, {kBeta, 1}, {kDelta, 1}}), in.point) +
            c * y * ev.inv(a - 1) * ev.H(H1, sh(P, {{kAlpha, -1}, {kBeta, 1}, {kGamma, 1}}), in.point));
      }));

  out.push_back(make_record(
      "H1.CONTIG.2.11", Family::CONTIG, H1,
      "Eq. (2.11): H1(a,b,c+1;d) = H1 + (b y/(a-1)) H1(a-1,b+1,c+1;d)", "",
      [](Evaluator& ev, const Instance& in) {
        return SideValue(ev.H(H1, sh(in.params, {{kGamma, 1}}), in.point));
      },
      [](Evaluator& ev, const Instance& in) {
        const auto& P = in.params;
        const double a = P[kAlpha], b = P[kBeta];
        return SideValue(ev.H(H1, P, in.point) +
                         b * in.point.y * ev.inv(a - 1) *
                             ev.H(H1, sh(P, {{kAlpha, -1}, {kBeta, 1}, {kGamma, 1}}), in.point));
      }));

  out.push_back(make_record(
      "H1.CONTIG.2.15", Family::CONTIG, H1,
      "Eq. (2.15): H1(a,b,c;d-1) = H1 + a b x/((d-1)d) H1(a+1,b+1,c;d+1)", "",
      [](Evaluator& ev, const Instance& in) {
        return SideValue(ev.H(H1, sh(in.params, {{kDelta, -1}}), in.point));
      },
      [](Evaluator& ev, const Instance& in) {
        const auto& P = in.params;
        const double a = P[kAlpha], b = P[kBeta], d = P[kDelta];
        return SideValue(ev.H(H1, P, in.point) +
                         a * b * in.point.x * ev.inv(d - 1) * ev.inv(d) *
                             ev.H(H1, sh(P, {{kAlpha, 1}, {kBeta, 1}, {kDelta, 1}}), in.point));
      }));
}

void add_h1(std::vector<IdentityRecord>& out) {
  out.push_back(rec(
      "H1.REC.alpha", H1,
      "Eq. (2.1): H1(a+k,b,c;d) = H1 + (b x/d) sum_r H1(a+r,b+1,c;d+1) - b c y sum_r H1(a+r-2,b+1,c+1;d)/((a+r-1)(a+r-2))",
      kAlpha, 1, "H1.CONTIG.2.3", [](Evaluator& ev, const Instance& in) {
        const auto& P = in.params;
        const double a = P[kAlpha], b = P[kBeta], c = P[kGamma], d = P[kDelta];
        const auto [x, y] = in.point;
        double s1 = 0, s2 = 0;
        for (int r = 1; r <= in.free; ++r) {
          s1 += ev.H(H1, sh(P, {{kAlpha, r}, {kBeta, 1}, {kDelta, 1}}), in.point);
          s2 += ev.inv(a + r - 1) * ev.inv(a + r - 2) *
                ev.H(H1, sh(P, {{kAlpha, r - 2}, {kBeta, 1}, {kGamma, 1}}), in.point);
        }
        return SideValue(ev.H(H1, P, in.point) + b * x * ev.inv(d) * s1 - b * c * y * s2);
      }));

  out.push_back(rec(
      "H1.REC.beta", H1,
      "Eq. (2.5): H1(a,b+k,c;d) = H1 + (a x/d) sum_r H1(a+1,b+r,c;d+1) + (c y/(a-1)) sum_r H1(a-1,b+r,c+1;d)",
      kBeta, 1, "H1.CONTIG.2.7", [](Evaluator& ev, const Instance& in) {
        const auto& P = in.params;
        const double a = P[kAlpha], c = P[kGamma], d = P[kDelta];
        const auto [x, y] = in.point;
        double s1 = 0, s2 = 0;
        for (int r = 1; r <= in.free; ++r) {
          s1 += ev.H(H1, sh(P, {{kAlpha, 1}, {kBeta, r}, {kDelta, 1}}), in.point);
          s2 += ev.H(H1, sh(P, {{kAlpha, -1}, {kBeta, r}, {kGamma, 1}}), in.point);
        }
        return SideValue(ev.H(H1, P, in.point) + a * x * ev.inv(d) * s1 +
                         c * y * ev.inv(a - 1) * s2);
      }));

  out.push_back(rec("H1.REC.gamma", H1,
                    "Eq. (2.9): H1(a,b,c+k;d) = H1 + (b y/(a-1)) sum_r H1(a-1,b+1,c+r;d)",
                    kGamma, 1, "H1.CONTIG.2.11", [](Evaluator& ev, const Instance& in) {
                      const auto& P = in.params;
                      const double a = P[kAlpha], b = P[kBeta];
                      double s1 = 0;
                      for (int r = 1; r <= in.free; ++r) {
                        s1 += ev.H(H1, sh(P, {{kAlpha, -1}, {kBeta, 1}, {kGamma, r}}), in.point);
                      }
                      return SideValue(ev.H(H1, P, in.point) +
                                       b * in.point.y * ev.inv(a - 1) * s1);
                    }));

  out.push_back(rec(
      "H1.REC.delta", H1,
      "Eq. (2.13): H1(a,b,c;d-k) = H1 + a b x sum_r H1(a+1,b+1,c;d-r+2)/((d-r)(d-r+1))", kDelta,
      -1, "H1.CONTIG.2.15", [](Evaluator& ev, const Instance& in) {
        const auto& P = in.params;
        const double a = P[kAlpha], b = P[kBeta], d = P[kDelta];
        double s1 = 0;
        for (int r = 1; r <= in.free; ++r) {
          s1 += ev.inv(d - r) * ev.inv(d - r + 1) *
                ev.H(H1, sh(P, {{kAlpha, 1}, {kBeta, 1}, {kDelta, 2 - r}}), in.point);
        }
        return SideValue(ev.H(H1, P, in.point) + a * b * in.point.x * s1);
      }));
}

void add_h2(std::vector<IdentityRecord>& out) {
  IdentityRecord alpha = rec(
      "H2.REC.alpha", H2,
      "Eq. (2.17): H2(a+k,b,c,d;e) = H2 + (a x/e) sum_r H2(a+r,b+1,c,d;e+1) - c d y sum_r H2(a+r-2,b,c+1,d+1;e)/((a+r-1)(a+r-2))",
      kAlpha, 1, "", [](Evaluator& ev, const Instance& in) {
        const auto& P = in.params;
        const double a = P[kAlpha], c = P[kGamma], d = P[kDelta], e = P[kEpsilon];
        const auto [x, y] = in.point;
        double s1 = 0, s2 = 0;
        for (int r = 1; r <= in.free; ++r) {
          s1 += ev.H(H2, sh(P, {{kAlpha, r}, {kBeta, 1}, {kEpsilon, 1}}), in.point);
          s2 += ev.inv(a + r - 1) * ev.inv(a + r - 2) *
                ev.H(H2, sh(P, {{kAlpha, r - 2}, {kGamma, 1}, {kDelta, 1}}), in.point);
        }
        return SideValue(ev.H(H2, P, in.point) + a * x * ev.inv(e) * s1 - c * d * y * s2);
      });
  alpha.status = RegistryStatus::DISPUTED;
  alpha.note =
      "Encoded as printed with coefficient a x/e. Sampling fails systematically; the term-wise "
      "expansion of (a+1)_{m-n} gives b x/e, and the relation holds with that coefficient.";
  out.push_back(std::move(alpha));

  out.push_back(rec("H2.REC.beta", H2,
                    "Eq. (2.21): H2(a,b+k,c,d;e) = H2 + (a x/e) sum_r H2(a+1,b+r,c,d;e+1)", kBeta,
                    1, "", [](Evaluator& ev, const Instance& in) {
                      const auto& P = in.params;
                      const double a = P[kAlpha], e = P[kEpsilon];
                      double s1 = 0;
                      for (int r = 1; r <= in.free; ++r) {
                        s1 += ev.H(H2, sh(P, {{kAlpha, 1}, {kBeta, r}, {kEpsilon, 1}}), in.point);
                      }
                      return SideValue(ev.H(H2, P, in.point) + a * in.point.x * ev.inv(e) * s1);
                    }));

  out.push_back(rec("H2.REC.gamma", H2,
                    "Eq. (2.25): H2(a,b,c+k,d;e) = H2 + (d y/(a-1)) sum_r H2(a-1,b,c+r,d+1;e)",
                    kGamma, 1, "", [](Evaluator& ev, const Instance& in) {
                      const auto& P = in.params;
                      const double a = P[kAlpha], d = P[kDelta];
                      double s1 = 0;
                      for (int r = 1; r <= in.free; ++r) {
                        s1 += ev.H(H2, sh(P, {{kAlpha, -1}, {kGamma, r}, {kDelta, 1}}), in.point);
                      }
                      return SideValue(ev.H(H2, P, in.point) +
                                       d * in.point.y * ev.inv(a - 1) * s1);
                    }));

  out.push_back(rec("H2.REC.delta", H2,
                    "Eq. (2.29): H2(a,b,c,d+k;e) = H2 + (c y/(a-1)) sum_r H2(a-1,b,c+1,d+r;e)",
                    kDelta, 1, "", [](Evaluator& ev, const Instance& in) {
                      const auto& P = in.params;
                      const double a = P[kAlpha], c = P[kGamma];
                      double s1 = 0;
                      for (int r = 1; r <= in.free; ++r) {
                        s1 += ev.H(H2, sh(P, {{kAlpha, -1}, {kGamma, 1}, {kDelta, r}}), in.point);
                      }
                      return SideValue(ev.H(H2, P, in.point) +
                                       c * in.point.y * ev.inv(a - 1) * s1);
                    }));

  out.push_back(rec(
      "H2.REC.epsilon", H2,
      "Eq. (2.33): H2(a,b,c,d;e-k) = H2 + a b x sum_r H2(a+1,b+1,c,d;e-r+2)/((e-r)(e-r+1))",
      kEpsilon, -1, "", [](Evaluator& ev, const Instance& in) {
        const auto& P = in.params;
        const double a = P[kAlpha], b = P[kBeta], e = P[kEpsilon];
        double s1 = 0;
        for (int r = 1; r <= in.free; ++r) {
          s1 += ev.inv(e - r) * ev.inv(e - r + 1) *
                ev.H(H2, sh(P, {{kAlpha, 1}, {kBeta, 1}, {kEpsilon, 2 - r}}), in.point);
        }
        return SideValue(ev.H(H2, P, in.point) + a * b * in.point.x * s1);
      }));
}

void add_h5(std::vector<IdentityRecord>& out) {
  IdentityRecord alpha = rec(
      "H5.REC.alpha", H5,
      "Eq. (2.37): H5(a+k,b;c) = H5 + (2x/(b-1)) sum_r (a+r) H5(a+r+1,b-1;c) + (b y/c) sum_r H5(a+r,b+1;c+1)",
      kAlpha, 1, "", [](Evaluator& ev, const Instance& in) {
        const auto& P = in.params;
        const double a = P[kAlpha], b = P[kBeta], c = P[kGamma];
        const auto [x, y] = in.point;
        double s1 = 0, s2 = 0;
        for (int r = 1; r <= in.free; ++r) {
          s1 += (a + r) * ev.H(H5, sh(P, {{kAlpha, r + 1}, {kBeta, -1}}), in.point);
          s2 += ev.H(H5, sh(P, {{kAlpha, r}, {kBeta, 1}, {kGamma, 1}}), in.point);
        }
        return SideValue(ev.H(H5, P, in.point) + 2 * x * ev.inv(b - 1) * s1 +
                         b * y * ev.inv(c) * s2);
      });
  alpha.open_question = true;
  out.push_back(std::move(alpha));

  IdentityRecord beta = rec(
      "H5.REC.beta", H5,
      "Eq. (2.41): H5(a,b+k;c) = H5 + (a y/c) sum_r H5(a+1,b+r;c+1) - a(a+1) x sum_r H5(a+2,b+r-2;c+1)/((b+r-1)(b+r-2))",
      kBeta, 1, "", [](Evaluator& ev, const Instance& in) {
        const auto& P = in.params;
        const double a = P[kAlpha], b = P[kBeta], c = P[kGamma];
        const auto [x, y] = in.point;
        double s1 = 0, s2 = 0;
        for (int r = 1; r <= in.free; ++r) {
          s1 += ev.H(H5, sh(P, {{kAlpha, 1}, {kBeta, r}, {kGamma, 1}}), in.point);
          s2 += ev.inv(b + r - 1) * ev.inv(b + r - 2) *
                ev.H(H5, sh(P, {{kAlpha, 2}, {kBeta, r - 2}, {kGamma, 1}}), in.point);
        }
        return SideValue(ev.H(H5, P, in.point) + a * y * ev.inv(c) * s1 -
                         a * (a + 1) * x * s2);
      });
  beta.open_question = true;
  beta.status = RegistryStatus::DISPUTED;
  beta.note =
      "Encoded as printed with c+1 in the x-term. Sampling fails systematically; the term-wise "
      "expansion of (b+1)_{n-m} leaves c unshifted in that term.";
  out.push_back(std::move(beta));

  IdentityRecord gamma = rec(
      "H5.REC.gamma", H5,
      "Eq. (2.45): H5(a,b;c-k) = H5 + a b y sum_r H5(a+1,b+1;c-r+2)/((c-r)(c-r+1))", kGamma, -1,
      "", [](Evaluator& ev, const Instance& in) {
        const auto& P = in.params;
        const double a = P[kAlpha], b = P[kBeta], c = P[kGamma];
        double s1 = 0;
        for (int r = 1; r <= in.free; ++r) {
          s1 += ev.inv(c - r) * ev.inv(c - r + 1) *
                ev.H(H5, sh(P, {{kAlpha, 1}, {kBeta, 1}, {kGamma, 2 - r}}), in.point);
        }
        return SideValue(ev.H(H5, P, in.point) + a * b * in.point.y * s1);
      });
  gamma.open_question = true;
  out.push_back(std::move(gamma));
}

void add_h6(std::vector<IdentityRecord>& out) {
  out.push_back(rec(
      "H6.REC.alpha", H6,
      "Eq. (2.49): H6(a+k,b,c) = H6 + (2x/(b-1)) sum_r (a+r) H6(a+r+1,b-1,c) - b c y sum_r H6(a+r-2,b+1,c+1)/((a+r-1)(a+r-2))",
      kAlpha, 1, "", [](Evaluator& ev, const Instance& in) {
        const auto& P = in.params;
        const double a = P[kAlpha], b = P[kBeta], c = P[kGamma];
        const auto [x, y] = in.point;
        double s1 = 0, s2 = 0;
        for (int r = 1; r <= in.free; ++r) {
          s1 += (a + r) * ev.H(H6, sh(P, {{kAlpha, r + 1}, {kBeta, -1}}), in.point);
          s2 += ev.inv(a + r - 1) * ev.inv(a + r - 2) *
                ev.H(H6, sh(P, {{kAlpha, r - 2}, {kBeta, 1}, {kGamma, 1}}), in.point);
        }
        return SideValue(ev.H(H6, P, in.point) + 2 * x * ev.inv(b - 1) * s1 - b * c * y * s2);
      }));

  out.push_back(rec(
      "H6.REC.beta", H6,
      "Eq. (2.53): H6(a,b+k,c) = H6 + (c y/(a-1)) sum_r H6(a-1,b+r,c+1) - a(a+1) x sum_r H6(a+2,b+r-2,c)/((b+r-1)(b+r-2))",
      kBeta, 1, "", [](Evaluator& ev, const Instance& in) {
        const auto& P = in.params;
        const double a = P[kAlpha], b = P[kBeta], c = P[kGamma];
        const auto [x, y] = in.point;
        double s1 = 0, s2 = 0;
        for (int r = 1; r <= in.free; ++r) {
          s1 += ev.H(H6, sh(P, {{kAlpha, -1}, {kBeta, r}, {kGamma, 1}}), in.point);
          s2 += ev.inv(b + r - 1) * ev.inv(b + r - 2) *
                ev.H(H6, sh(P, {{kAlpha, 2}, {kBeta, r - 2}}), in.point);
        }
        return SideValue(ev.H(H6, P, in.point) + c * y * ev.inv(a - 1) * s1 -
                         a * (a + 1) * x * s2);
      }));

  out.push_back(rec("H6.REC.gamma", H6,
                    "Eq. (2.57): H6(a,b,c+k) = H6 + (b y/(a-1)) sum_r H6(a-1,b+1,c+r)", kGamma, 1,
                    "", [](Evaluator& ev, const Instance& in) {
                      const auto& P = in.params;
                      const double a = P[kAlpha], b = P[kBeta];
                      double s1 = 0;
                      for (int r = 1; r <= in.free; ++r) {
                        s1 += ev.H(H6, sh(P, {{kAlpha, -1}, {kBeta, 1}, {kGamma, r}}), in.point);
                      }
                      return SideValue(ev.H(H6, P, in.point) +
                                       b * in.point.y * ev.inv(a - 1) * s1);
                    }));
}

void add_h7(std::vector<IdentityRecord>& out) {
  out.push_back(rec(
      "H7.REC.alpha", H7,
      "Eq. (2.61): H7(a+k,b,c;d) = H7 + (2x/d) sum_r (a+r) H7(a+r+1,b,c;d+1) - b c y sum_r H7(a+r-2,b+1,c+1;d)/((a+r-1)(a+r-2))",
      kAlpha, 1, "", [](Evaluator& ev, const Instance& in) {
        const auto& P = in.params;
        const double a = P[kAlpha], b = P[kBeta], c = P[kGamma], d = P[kDelta];
        const auto [x, y] = in.point;
        double s1 = 0, s2 = 0;
        for (int r = 1; r <= in.free; ++r) {
          s1 += (a + r) * ev.H(H7, sh(P, {{kAlpha, r + 1}, {kDelta, 1}}), in.point);
          s2 += ev.inv(a + r - 1) * ev.inv(a + r - 2) *
                ev.H(H7, sh(P, {{kAlpha, r - 2}, {kBeta, 1}, {kGamma, 1}}), in.point);
        }
        return SideValue(ev.H(H7, P, in.point) + 2 * x * ev.inv(d) * s1 - b * c * y * s2);
      }));

  IdentityRecord beta = rec(
      "H7.REC.beta", H7,
      "Eq. (2.65): H7(a,b+k,c;d) = H7 + (c y/(a-1)) sum_r H7(a-1,b+r,c+1;x,y)", kBeta, 1, "",
      [](Evaluator& ev, const Instance& in) {
        const auto& P = in.params;
        const double a = P[kAlpha], c = P[kGamma];
        double s1 = 0;
        for (int r = 1; r <= in.free; ++r) {
          s1 += ev.H(H7, sh(P, {{kAlpha, -1}, {kBeta, r}, {kGamma, 1}}), in.point);
        }
        return SideValue(ev.H(H7, P, in.point) + c * in.point.y * ev.inv(a - 1) * s1);
      });
  beta.open_question = true;
  beta.note = "The printed right-hand side omits the d slot; d is carried unchanged.";
  out.push_back(std::move(beta));

  IdentityRecord gamma = rec(
      "H7.REC.gamma", H7,
      "Eq. (2.69): H7(a,b,c+k;d) = H7 + (b y/(a-1)) sum_r H7(a-1,b+1,c+r;x,y)", kGamma, 1, "",
      [](Evaluator& ev, const Instance& in) {
        const auto& P = in.params;
        const double a = P[kAlpha], b = P[kBeta];
        double s1 = 0;
        for (int r = 1; r <= in.free; ++r) {
          s1 += ev.H(H7, sh(P, {{kAlpha, -1}, {kBeta, 1}, {kGamma, r}}), in.point);
        }
        return SideValue(ev.H(H7, P, in.point) + b * in.point.y * ev.inv(a - 1) * s1);
      });
  gamma.open_question = true;
  gamma.note = "The printed right-hand side omits the d slot; d is carried unchanged.";
  out.push_back(std::move(gamma));

  out.push_back(rec(
      "H7.REC.delta", H7,
      "Eq. (2.73): H7(a,b,c;d-k) = H7 + a(a+1) x sum_r H7(a+2,b,c;d-r+2)/((d-r)(d-r+1))", kDelta,
      -1, "", [](Evaluator& ev, const Instance& in) {
        const auto& P = in.params;
        const double a = P[kAlpha], d = P[kDelta];
        double s1 = 0;
        for (int r = 1; r <= in.free; ++r) {
          s1 += ev.inv(d - r) * ev.inv(d - r + 1) *
                ev.H(H7, sh(P, {{kAlpha, 2}, {kDelta, 2 - r}}), in.point);
        }
        return SideValue(ev.H(H7, P, in.point) + a * (a + 1) * in.point.x * s1);
      }));
}

}  // namespace

void add_recursions(std::vector<IdentityRecord>& out) {
  add_contig(out);
  add_h1(out);
  add_h2(out);
  add_h5(out);
  add_h6(out);
  add_h7(out);
}

}  // namespace horn::detail
