#include "pvi/specfun.hpp"

#include <array>
#include <cmath>
#include <mutex>
#include <vector>

namespace pvi {

const char* to_string(ErrorKind k) {
  switch (k) {
    case ErrorKind::domain: return "domain error";
    case ErrorKind::pole: return "pole error";
    case ErrorKind::divergence: return "divergence error";
    case ErrorKind::resonance: return "resonance error";
    case ErrorKind::degenerate_mismatch: return "degenerate-case mismatch";
    case ErrorKind::singular_system: return "singular linear system";
    case ErrorKind::out_of_disk: return "outside convergence disk";
    case ErrorKind::branch_cut: return "branch-cut error";
    case ErrorKind::near_pole: return "near-pole error";
    case ErrorKind::double_zero: return "double-zero error";
    case ErrorKind::below_threshold: return "below consistency threshold";
    case ErrorKind::no_valid_shift: return "no valid shift";
    case ErrorKind::off_curve: return "off-curve error";
    case ErrorKind::no_pole: return "no sign of a pole";
    case ErrorKind::step_collapse: return "step-size collapse";
    case ErrorKind::invalid_argument: return "invalid argument";
    case ErrorKind::usage: return "usage error";
    case ErrorKind::io: return "I/O error";
  }
  return "error";
}

namespace {

// Lanczos g = 7, n = 9.
constexpr double lanczos_g = 7.0;
constexpr std::array<double, 9> lanczos_c = {
    0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
    771.32342877765313,   -176.61502916214059,   12.507343278686905,
    -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};

bool is_nonpositive_integer(cplx z) {
  return z.imag() == 0.0 && z.real() <= 0.0 && std::floor(z.real()) == z.real();
}

cplx wrap_imag(cplx z) {
  double im = std::remainder(z.imag(), 2.0 * pi);
  if (im <= -pi) im += 2.0 * pi;
  return {z.real(), im};
}

// ln Gamma(z) for Re z >= 1/2, on the branch continuous from the real axis.
cplx lngamma_right(cplx z) {
  z -= 1.0;
  cplx a = lanczos_c[0];
  for (int k = 1; k < 9; ++k) a += lanczos_c[k] / (z + double(k));
  cplx t = z + lanczos_g + 0.5;
  return 0.5 * std::log(2.0 * pi) + (z + 0.5) * std::log(t) - t + std::log(a);
}

// log sin(pi z) continuous in z for the reflection formula; avoids overflow at large |Im z|.
cplx log_sin_pi(cplx z) {
  // sin(pi z) = (e^{i pi z} - e^{-i pi z}) / 2i; factor out the dominant exponential.
  if (z.imag() > 0) {
    // dominant: e^{-i pi z}
    cplx e = std::exp(2.0 * I * pi * z);  // small
    return -I * pi * z + std::log((1.0 - e) / (-2.0 * I));
  }
  cplx e = std::exp(-2.0 * I * pi * z);
  return I * pi * z + std::log((1.0 - e) / (2.0 * I));
}

}  // namespace

cplx ln_gamma_analytic(cplx z) {
  if (is_nonpositive_integer(z))
    throw Error(ErrorKind::pole, "Gamma has a pole at z = " + std::to_string(z.real()));
  if (z.real() >= 0.5) return lngamma_right(z);
  return std::log(pi) - log_sin_pi(z) - lngamma_right(1.0 - z);
}

cplx ln_gamma(cplx z) { return wrap_imag(ln_gamma_analytic(z)); }

cplx digamma(cplx z) {
  if (is_nonpositive_integer(z))
    throw Error(ErrorKind::pole, "digamma has a pole at z = " + std::to_string(z.real()));
  if (z.real() < 0.5) {
    return digamma(1.0 - z) - pi / std::tan(pi * z);
  }
  cplx acc = 0.0;
  while (std::abs(z) < 12.0 || z.real() < 8.0) {
    acc -= 1.0 / z;
    z += 1.0;
  }
  // Asymptotic series with Bernoulli numbers B_2k / (2k).
  static constexpr std::array<double, 8> b = {1.0 / 12,   -1.0 / 120,    1.0 / 252,
                                              -1.0 / 240, 1.0 / 132,     -691.0 / 32760,
                                              1.0 / 12,   -3617.0 / 8160};
  cplx z2 = 1.0 / (z * z);
  cplx p = z2, s = 0.0;
  for (double bk : b) {
    s += bk * p;
    p *= z2;
  }
  return acc + std::log(z) - 0.5 / z - s;
}

namespace {

// Borwein's alternating-series acceleration for eta(s), then zeta = eta / (1 - 2^{1-s}).
double zeta_borwein(int s) {
  constexpr int n = 40;
  std::array<long double, n + 1> d{};
  long double term = 1.0L / n, sum = term;
  d[0] = sum;
  for (int i = 1; i <= n; ++i) {
    term *= (long double)(n + i - 1) * 4.0L * (n - i + 1) / ((2.0L * i - 1) * (2.0L * i));
    sum += term;
    d[i] = sum;
  }
  long double acc = 0.0L;
  for (int k = 0; k < n; ++k) {
    long double t = (d[k] - d[n]) / std::pow((long double)(k + 1), (long double)s);
    acc += (k % 2 == 0) ? t : -t;
  }
  long double eta = -acc / d[n];
  return double(eta / (1.0L - std::pow(2.0L, 1.0L - s)));
}

}  // namespace

double zeta_odd(int n) {
  if (n < 3 || n % 2 == 0)
    throw Error(ErrorKind::invalid_argument, "zeta_odd needs odd n >= 3, got " + std::to_string(n));
  static std::once_flag once;
  static std::array<double, 42> cache{};
  std::call_once(once, [] {
    for (int k = 3; k <= 41; k += 2) cache[k] = zeta_borwein(k);
  });
  if (n <= 41) return cache[n];
  return zeta_borwein(n);
}

cplx hyp_F(cplx x, double tol) {
  if (std::abs(x) >= 1.0) throw Error(ErrorKind::divergence, "hyp_F series needs |x| < 1");
  cplx sum = 1.0, xn = 1.0;
  double c = 1.0;
  for (int n = 0; n < 5000000; ++n) {
    c *= (n + 0.5) / (n + 1.0);
    xn *= x;
    cplx term = c * c * xn;
    sum += term;
    if (std::abs(term) < tol * (1.0 + std::abs(sum))) return sum;
  }
  throw Error(ErrorKind::divergence, "hyp_F series did not converge");
}

cplx hyp_F1(cplx x, double tol) {
  if (std::abs(x) >= 1.0) throw Error(ErrorKind::divergence, "hyp_F1 series needs |x| < 1");
  // 2[psi(n+1/2) - psi(n+1)] updated by the recurrence psi(a+1) = psi(a) + 1/a.
  double bracket = -4.0 * std::log(2.0);
  double c = 1.0;
  cplx sum = bracket, xn = 1.0;
  for (int n = 0; n < 5000000; ++n) {
    bracket += 2.0 * (1.0 / (n + 0.5) - 1.0 / (n + 1.0));
    c *= (n + 0.5) / (n + 1.0);
    xn *= x;
    sum += c * c * bracket * xn;
    // |bracket| <= 4 ln 2, so c^2 |x^n| bounds the term.
    if (c * c * std::abs(xn) < tol * (1.0 + std::abs(sum))) return sum;
  }
  throw Error(ErrorKind::divergence, "hyp_F1 series did not converge");
}

cplx elliptic_K(cplx x) {
  if (x.imag() == 0.0 && x.real() >= 1.0)
    throw Error(ErrorKind::branch_cut, "elliptic_K: x on the cut [1, inf)");
  if (std::abs(x) < 0.5) return 0.5 * pi * hyp_F(x);
  // K(x) = pi / (2 AGM(1, sqrt(1 - x))); pick the root nearer the arithmetic mean.
  cplx a = 1.0, g = std::sqrt(1.0 - x);
  for (int it = 0; it < 100; ++it) {
    cplx an = 0.5 * (a + g);
    cplx gn = std::sqrt(a * g);
    if (std::abs(an - gn) > std::abs(an + gn)) gn = -gn;
    a = an;
    g = gn;
    if (std::abs(a - g) <= 1e-16 * std::abs(a)) break;
  }
  return pi / (2.0 * a);
}

}  // namespace pvi
