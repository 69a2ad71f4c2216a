#include <doctest.h>

#include "helpers.hpp"
#include "pvi/monodromy.hpp"
#include "pvi/specfun.hpp"

using namespace pvi;
using pvi::test::qc_data;
using pvi::test::rel;

namespace {

// Root of the cubic in p01 for given theta_inf, p0x, px1.
cplx solve_p01(cplx theta, cplx p0x, cplx px1, int which) {
  cplx pinf = 2.0 * std::cos(pi * theta);
  cplx b = p0x * px1 - 2.0 * (2.0 + pinf);
  cplx c = p0x * p0x + px1 * px1 - 2.0 * (p0x + px1) * (2.0 + pinf) + 8.0 + pinf * pinf + 8.0 * pinf;
  cplx s = std::sqrt(b * b - 4.0 * c);
  return which == 0 ? 0.5 * (-b + s) : 0.5 * (-b - s);
}

}  // namespace

TEST_CASE("cubic relation at special points") {
  CHECK(std::abs(cubic_residual(qc_data())) == 0.0);
  CHECK(std::abs(cubic_residual({0.0, 2.0, 2.0, 2.0})) < 1e-14);
  CHECK(std::abs(cubic_residual({-2.0, -7.0, -7.0, -6.0})) > 1.0);
}

TEST_CASE("nu from p0x") {
  CHECK(std::abs(nu_from_p0x(-7.0) - 0.3063489625300331) < 1e-15);
  CHECK(std::abs(nu_from_p0x(-7.0) - 2.0 * std::log(0.5 * (1.0 + std::sqrt(5.0))) / pi) < 1e-15);
  CHECK_THROWS_AS(nu_from_p0x(-2.0), Error);
  CHECK_THROWS_AS(nu_from_p0x(1.0), Error);
}

TEST_CASE("d at the quantum cohomology point") {
  DClassification used;
  BranchParams p = d_from_monodromy(qc_data(), used);
  CHECK(used.kind == DCase::generic);
  CHECK(p.mu == cplx(-1.0));
  CHECK(std::abs(p.d.real() - 1.083234743) < 1e-9);
  CHECK(std::abs(p.d.imag() - 0.5 * pi * p.nu) < 1e-13);
  CHECK(std::abs(p.d.real() / p.nu - 3.535950422) < 1e-8);
  CHECK(p.d.real() >= 0.0);
  CHECK(p.d.real() <= pi);
  CHECK(std::abs(p.raw_d() + double(p.k_shift) * pi - p.d) < 1e-15);
}

TEST_CASE("d at a generic point matches a 40-digit evaluation") {
  const cplx px1(1.5, 0.2);
  MonodromyData m{0.6, -3.0, solve_p01(0.6, -3.0, px1, 0), px1};
  CHECK(rel(m.p01, {4.0713650431375784082, 2.7260021717527195196}) < 1e-14);
  DClassification used;
  BranchParams p = d_from_monodromy(m, used);
  CHECK(used.kind == DCase::generic);
  CHECK(std::abs(p.nu - 0.15317448126501656106) < 1e-15);
  CHECK(rel(p.d, {2.2840647532747800178, -0.046216624005660050562}) < 1e-13);
}

TEST_CASE("off-cubic data is rejected") {
  CHECK_THROWS_AS(d_from_monodromy({-2.0, -7.0, -7.0, -6.0}), Error);
  try {
    d_from_monodromy({-2.0, -7.0, -7.0, -6.0});
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::off_curve);
  }
}

TEST_CASE("braid continuation at the QC data") {
  BranchParams p = d_from_monodromy(qc_data());
  auto [p2, m2] = braid_continuation(p, qc_data());
  CHECK(std::abs(m2.p01 - cplx(-34.0)) < 1e-12);
  CHECK(std::abs(m2.px1 - cplx(-223.0)) < 1e-11);
  CHECK(std::abs(cubic_residual(m2)) < 1e-9);
  CHECK(std::abs(p2.d - (p.d + 2.0 * pi * I * p.nu)) < 1e-14);
  // The braided data give back d + 2 pi i nu up to k pi.
  BranchParams p3 = d_from_monodromy(m2);
  cplx diff = p3.d - p2.d;
  CHECK(std::abs(diff.imag()) < 1e-12);
  CHECK(std::abs(std::remainder(diff.real(), pi)) < 1e-12);
}

TEST_CASE("degenerate classification and resonance") {
  const double nu = 0.3;
  for (int m : {1, 2, 3}) {
    DClassification c = classify_degenerate(0.5 * (2.0 * I * nu + 1.0 - 2.0 * m), nu);
    CHECK(c.kind == DCase::case1);
    CHECK(c.m == m);
  }
  CHECK(classify_degenerate(0.5 * (2.0 * I * nu + 3.0), nu).kind == DCase::case2);
  CHECK(classify_degenerate(0.5 * (-2.0 * I * nu + 3.0), nu).kind == DCase::case3);
  CHECK(classify_degenerate(0.5 * (-2.0 * I * nu - 1.0), nu).kind == DCase::case4);
  CHECK(classify_degenerate(0.3, nu).kind == DCase::generic);
  // m = 1 in the -2i nu family is the resonance itself.
  CHECK_THROWS_AS(classify_degenerate(0.5 * (1.0 + 2.0 * I * nu), nu), Error);
  CHECK_THROWS_AS(validate(BranchParams{0.5 * (1.0 - 2.0 * I * nu), nu, 0.0, 0}), Error);
  CHECK_NOTHROW(validate(BranchParams{-1.0, nu, 1.0, 0}));
}

TEST_CASE("degenerate formulas are limits of the generic one") {
  const double nu = 0.2;
  const int m = 2;
  const cplx mu0 = 0.5 * (2.0 * I * nu + 1.0 - 2.0 * m);
  const cplx px1(0.4, 0.3), p0x = -2.0 * std::cosh(2.0 * pi * nu);
  const cplx p01_0 = 2.0 - (2.0 - px1) * std::exp(2.0 * pi * nu);
  cplx dd = d_degenerate_raw(DCase::case1, m, nu, px1);
  // Approach along the cubic: p01 is the root next to the degenerate value.
  // Smaller eps loses digits to cancellation in the bracket.
  for (double eps : {1e-5, 1e-6}) {
    cplx mu = mu0 + eps;
    cplx r0 = solve_p01(2.0 * mu, p0x, px1, 0), r1 = solve_p01(2.0 * mu, p0x, px1, 1);
    cplx p01 = std::abs(r0 - p01_0) < std::abs(r1 - p01_0) ? r0 : r1;
    cplx diff = dd - d_generic_raw(mu, nu, p01, px1);
    INFO("eps=" << eps);
    CHECK(std::abs(std::remainder(diff.real(), pi)) < 1e-4);
    CHECK(std::abs(diff.imag()) < 1e-4);
  }
}

TEST_CASE("small-nu expansion, first case") {
  const cplx mu = 0.3, px1(-1.3, 0.4);
  MonodromyData m0{2.0 * mu, -2.0, solve_p01(2.0 * mu, -2.0, px1, 0), px1};
  auto d = d_small_nu(m0, 3, SmallNuCurve::first);
  auto dn = d_small_nu_numeric(m0, 3, SmallNuCurve::first);
  CHECK(std::abs(d[0]) == 0.0);
  CHECK(std::abs(dn[0]) < 1e-9);
  CHECK(std::abs(d[1] - d1_first_case(mu, m0.p01, px1)) == 0.0);
  CHECK(rel(dn[1], d[1]) < 1e-8);
}

TEST_CASE("small-nu expansion, degenerate first family") {
  const cplx px1(0.4, 0.3);
  for (int m : {1, 2, 3}) {
    MonodromyData m0{1.0 - 2.0 * m, -2.0, 0.0, px1};
    auto dn = d_small_nu_numeric(m0, 2, SmallNuCurve::case1);
    cplx expect = 2.0 * (digamma(double(m)) + euler_gamma - 2.0 * std::log(2.0));
    CHECK(rel(dn[1], expect) < 1e-8);
    CHECK(std::abs(d_small_nu(m0, 2, SmallNuCurve::case1)[1] - expect) < 1e-15);
  }
}

TEST_CASE("small-nu expansion on the Chazy curve") {
  MonodromyData c{-1.0, -2.0, -2.0, -2.0};
  auto d = d_small_nu(c, 7);
  cplx d1 = I * pi / 2.0 - 4.0 * std::log(2.0) - pi * std::sqrt(3.0) / 2.0;
  CHECK(rel(d[1], d1) < 1e-12);
  CHECK(std::abs(d[1] - cplx(-5.4933, 1.5708)) < 1e-4);
  CHECK(std::abs(d[3]) < 1e-8);
  cplx d5 = -(1.5 * zeta_odd(3) + std::pow(pi, 3) * std::sqrt(3.0) / 30.0) * pi * pi;
  CHECK(rel(d[5], d5) < 1e-8);
}
