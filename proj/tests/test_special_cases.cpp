#include <doctest.h>

#include "helpers.hpp"
#include "pvi/monodromy.hpp"
#include "pvi/special_cases.hpp"
#include "pvi/specfun.hpp"

using namespace pvi;
using pvi::test::qc_data;
using pvi::test::rel;

namespace {

// Distance of a - b to the nearest multiple of pi.
double mod_pi(cplx a, cplx b) {
  cplx d = a - b;
  return std::hypot(std::remainder(d.real(), pi), d.imag());
}

}  // namespace

TEST_CASE("QC parameters") {
  QCParameters q = qc_parameters();
  const double nu = q.params.nu;
  CHECK(std::abs(nu - 0.3063489625) < 1e-10);
  CHECK(std::abs(q.params.d.real() - 1.083234743) < 1e-9);
  // ln(G^2 - 1) = ln G makes Im d exactly pi nu / 2.
  CHECK(std::abs(golden * golden - 1.0 - golden) < 1e-15);
  CHECK(std::abs(q.params.d.imag() - 0.5 * pi * nu) < 1e-13);
  CHECK(q.minus_sign_matches);
  CHECK(rel(q.d_closed, q.d_series) < 1e-9);
  CHECK(mod_pi(q.d_plus_variant, q.d_closed) > 0.1);
  BranchParams m = d_from_monodromy(qc_data());
  CHECK(mod_pi(m.d, q.d_closed) < 1e-12);
  CHECK(std::abs(arccos_series(nu) - 2.0 * std::atan(2.0 * nu)) < 1e-15);
  CHECK(std::abs(arccos_series(nu) - 2.0 * std::acos(1.0 / std::sqrt(1.0 + 4.0 * nu * nu))) < 1e-14);
}

TEST_CASE("QC zero constants") {
  const double nu = qc_parameters().params.nu;
  cplx ratio = (3.0 - 2.0 * I * nu) / (3.0 + 2.0 * I * nu);
  CHECK(std::abs(std::arg(ratio) + 0.4029) < 5e-5);
  CHECK(std::abs(std::arg(ratio) + 2.0 * std::atan(2.0 * nu / 3.0)) < 1e-15);
  CHECK(std::abs(std::exp(std::arg(ratio) / nu) - 0.268) < 5e-4);
  CHECK(std::abs(qc_zeros(1, 0) - cplx(0.0, -2.913e-2)) < 5e-6);
  CHECK(std::abs(qc_zeros(2, 0) / qc_zeros(1, 0) - std::exp(std::arg(ratio) / nu)) < 1e-12);
}

TEST_CASE("QC poles") {
  PolePrediction p = qc_poles(0, 1);
  cplx x = p.x;
  CHECK(std::abs(p.xi - (x - 0.5 * x * x + 0.1792 * x * x * x)) < 1e-4 * std::pow(std::abs(x), 3) + std::pow(std::abs(x), 4));
  CHECK(qc_solver().threshold().K == 0);
}

TEST_CASE("Chazy curve endpoints and unit modulus") {
  ChazyCurvePoint c0 = chazy_curve(0.0);
  CHECK(c0.c2 == 0.0);
  CHECK(c0.c1 == 1.0);
  CHECK(c0.theta_inf == -1.0);
  const double nmax = 2.0 * std::log(golden) / pi;
  ChazyCurvePoint c1 = chazy_curve(nmax);
  CHECK(std::abs(c1.unit + 1.0) < 1e-15);
  CHECK(c1.theta_inf == -2.0);
  CHECK(c1.mu == -1.0);
  for (int i = 0; i < 100; ++i) {
    double nu = nmax * i / 99.0;
    ChazyCurvePoint c = chazy_curve(nu);
    CHECK(std::abs(std::abs(c.unit) - 1.0) < 1e-12);
    CHECK(std::abs(c.cos_pi_theta - std::cos(pi * c.theta_inf)) < 1e-12);
    CHECK(std::abs(chazy_cubic(-2.0 * std::cosh(2.0 * pi * nu), std::cos(2.0 * pi * c.mu))) < 1e-11);
  }
  CHECK_THROWS_AS(chazy_curve(nmax + 0.01), Error);
  CHECK_THROWS_AS(chazy_curve(-0.01), Error);
}

TEST_CASE("Chazy mu and d series") {
  CHECK(std::abs(chazy_mu2_finite_difference() + pi * std::sqrt(3.0) / 2.0) < 1e-5);
  ChazySeries s = chazy_series();
  CHECK(s.mu[0] == -0.5);
  CHECK(std::abs(s.mu[2] + pi * std::sqrt(3.0) / 2.0) < 1e-15);
  CHECK(rel(s.d[1], chazy_d1()) < 1e-15);
  CHECK(std::abs(chazy_d1() - cplx(-5.4933, 1.5708)) < 5e-5);
  CHECK(std::abs(s.d[3]) == 0.0);
  CHECK(rel(s.d[5], -(1.5 * zeta_odd(3) + std::pow(pi, 3) * std::sqrt(3.0) / 30.0) * pi * pi) < 1e-14);
  for (int n = 1; n <= s.tabulated_order; ++n) {
    INFO("n=" << n);
    CHECK(std::abs(s.d[n] - s.d_numeric[n]) < 1e-6 * (1.0 + std::abs(s.d[n])));
  }
}

TEST_CASE("Chazy closed form for d") {
  const double nmax = 2.0 * std::log(golden) / pi;
  cplx dq = chazy_d_closed(nmax, -2.0);
  CHECK(mod_pi(dq, qc_d_closed()) < 1e-11);
  // Both branches agree with the generic monodromy formula at p0x = p01 = px1 = -2 cosh(2 pi nu).
  for (double nu : {0.05, 0.15, 0.25}) {
    ChazyCurvePoint c = chazy_curve(nu);
    cplx p = -2.0 * std::cosh(2.0 * pi * nu);
    CHECK(mod_pi(chazy_d_closed(nu, c.theta_inf, ChazyBranch::vii), d_generic_raw(0.5 * c.theta_inf, nu, p, p)) < 1e-12);
    cplx th = std::acos(cplx(c.cos_pi_theta_i)) / pi;
    CHECK(mod_pi(chazy_d_closed(nu, th, ChazyBranch::i), d_generic_raw(0.5 * th, nu, p, p)) < 1e-12);
  }
  // Small nu: partial sums of the series.
  ChazySeries s = chazy_series();
  for (double nu : {0.02, 0.05}) {
    cplx sum = 0.0;
    for (int n = 1; n <= s.tabulated_order; ++n) sum += s.d[n] * std::pow(nu, n);
    cplx dc = chazy_d_closed(nu, chazy_curve(nu).theta_inf);
    CHECK(mod_pi(dc, sum) < 1000.0 * std::pow(nu, s.tabulated_order + 1));
  }
  CHECK_THROWS_AS(chazy_d_closed(0.1, -1.5), Error);
}

TEST_CASE("logarithmic limit") {
  for (cplx mu : {cplx(-1.0), cplx(0.2, 0.1)}) {
    cplx a = 2.0 * mu - 1.0;
    // Corrections are O(1/ln x).
    double e100 = rel(log_limit_check(mu, -0.3, 1e-100) * std::pow(std::log(1e-100), 2), -4.0 / (a * a));
    double e300 = rel(log_limit_check(mu, -0.3, 1e-300) * std::pow(std::log(1e-300), 2), -4.0 / (a * a));
    CHECK(e300 < 0.03);
    CHECK(e300 < 0.5 * e100);
  }
  CHECK_THROWS_AS(log_limit_check(0.5, 0.1, 0.01), Error);
  cplx x(0.05, 0.01), L = std::log(x), d1 = chazy_d1();
  CHECK(rel(log_limit_check_chazy(x), -1.0 / ((L + d1 + 2.0) * (L + d1))) < 1e-14);
  CHECK(rel(log_limit_check_chazy(x), log_limit_check(-0.5, d1, x)) < 1e-13);
}
