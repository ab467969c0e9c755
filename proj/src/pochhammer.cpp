#include "horn/pochhammer.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

namespace horn {

namespace {

void check_index(int k, int max_index) {
  if (k > max_index || k < -max_index) {
    throw std::invalid_argument("pochhammer index " + std::to_string(k) +
                                " exceeds bound " + std::to_string(max_index));
  }
}

double checked(double v, double base, int k) {
  if (!std::isfinite(v)) {
    throw OverflowError("pochhammer(" + std::to_string(base) + ", " + std::to_string(k) +
                        ") overflows double range");
  }
  return v;
}

double rising(double base, int k) {
  double p = 1.0;
  for (int j = 0; j < k; ++j) p *= base + j;
  return p;
}

// (base)_{-j} = (-1)^j / (1-base)_j. A denominator factor within kPoleEps of
// zero is a pole.
double reflected(double base, int j) {
  double den = 1.0;
  for (int i = 0; i < j; ++i) {
    const double f = 1.0 - base + i;
    if (std::abs(f) <= kPoleEps) {
      throw PoleError("pochhammer(" + std::to_string(base) + ", " + std::to_string(-j) +
                      "): factor " + std::to_string(i) + " of (1-base)_" + std::to_string(j) +
                      " vanishes");
    }
    den *= f;
  }
  if (!std::isfinite(den)) return 0.0;
  return (j % 2 == 0 ? 1.0 : -1.0) / den;
}

// zeta(k) - 1 for k = 2..40.
constexpr std::array<double, 39> kZetaMinusOne = {
    0.64493406684822643647,      0.2020569031595942854,       0.082323233711138191516,
    0.036927755143369926331,     0.017343061984449139715,     0.0083492773819228268398,
    0.0040773561979443393787,    0.0020083928260822144179,    0.00099457512781808533715,
    0.0004941886041194645587,    0.00024608655330804829864,   0.00012271334757848914675,
    6.1248135058704829259e-05,   3.0588236307020493552e-05,   1.5282259408651871733e-05,
    7.6371976378997622736e-06,   3.8172932649998398565e-06,   1.9082127165539389257e-06,
    9.5396203387279611315e-07,   4.7693298678780646312e-07,   2.3845050272773299e-07,
    1.1921992596531107307e-07,   5.9608189051259479612e-08,   2.9803503514652280186e-08,
    1.4901554828365041235e-08,   7.450711789835429492e-09,    3.7253340247884570548e-09,
    1.8626597235130490064e-09,   9.3132743241966818287e-10,   4.656629065033784073e-10,
    2.328311833676505492e-10,    1.1641550172700519776e-10,   5.8207720879027008892e-11,
    2.9103850444970996869e-11,   1.4551921891041984236e-11,   7.2759598350574810145e-12,
    3.6379795473786511902e-12,   1.8189896503070659476e-12,   9.0949478402638892825e-13,
};

constexpr double kEulerGamma = 0.57721566490153286061;

// ln Gamma(2 + z) for |z| <= 0.5, from the Taylor expansion about 2 with the
// log1p part cancelled analytically. Accurate to a few ulps of the result even
// at the roots x = 1, 2.
double lngamma_two_plus(double z) {
  double sum = 0.0;
  double zk = z;  // z^k
  for (int k = 2; k <= 40; ++k) {
    zk *= z;
    const double term = kZetaMinusOne[k - 2] * zk / k;
    sum += (k % 2 == 0) ? term : -term;
    if (std::abs(term) < 1e-18 * std::abs(sum)) break;
  }
  return z * (1.0 - kEulerGamma) + sum;
}

// Lanczos, g = 7, n = 9; relative error about 1e-15 for x >= 0.5.
double lngamma_lanczos(double x) {
  static constexpr std::array<double, 9> c = {
      0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
      771.32342877765313,      -176.61502916214059,   12.507343278686905,
      -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7};
  const double xm = x - 1.0;
  double a = c[0];
  const double t = xm + 7.5;
  for (int i = 1; i < 9; ++i) a += c[i] / (xm + i);
  return 0.5 * std::log(2.0 * std::numbers::pi) + (xm + 0.5) * std::log(t) - t + std::log(a);
}

}  // namespace

bool near_integer(double v, double eps) { return std::abs(v - std::round(v)) <= eps; }

bool near_nonpositive_integer(double v, double eps) {
  return v < 0.5 && near_integer(v, eps);
}

double pochhammer(double base, int k, int max_index) {
  check_index(k, max_index);
  if (k == 0) return 1.0;
  if (k > 0) return checked(rising(base, k), base, k);
  return checked(reflected(base, -k), base, k);
}

double pochhammer_mixed(double base, int m, int n, int max_index) {
  if (m < 0 || n < 0) throw std::invalid_argument("pochhammer_mixed needs m, n >= 0");
  if (m >= n) return pochhammer(base, m - n, max_index);
  check_index(n - m, max_index);
  return checked(reflected(base, n - m), base, m - n);
}

LogPochhammer log_pochhammer(double base, int k, int max_index) {
  if (k < 0) throw std::invalid_argument("log_pochhammer needs k >= 0");
  check_index(k, max_index);
  LogPochhammer out;
  for (int j = 0; j < k; ++j) {
    const double f = base + j;
    if (f == 0.0) return {0, -std::numeric_limits<double>::infinity()};
    if (f < 0.0) out.sign = -out.sign;
    out.log_magnitude += std::log(std::abs(f));
  }
  return out;
}

double gamma_ln(double x) {
  if (!(x > 0.0)) throw DomainError("gamma_ln needs x > 0, got " + std::to_string(x));
  if (std::isinf(x)) return x;
  if (x < 0.5) {
    // Shift up into the Taylor window around 1 (or further for tiny x).
    return gamma_ln(x + 1.0) - std::log(x);
  }
  if (x <= 1.5) return lngamma_two_plus(x - 1.0) - std::log1p(x - 1.0);
  if (x <= 2.5) return lngamma_two_plus(x - 2.0);
  return lngamma_lanczos(x);
}

}  // namespace horn
