#include <doctest.h>

#include "helpers.hpp"
#include "pvi/oracle.hpp"
#include "pvi/picard.hpp"
#include "pvi/poles.hpp"
#include "pvi/series.hpp"
#include "pvi/special_cases.hpp"

using namespace pvi;
using pvi::test::rel;

TEST_CASE("inverse form of the equation") {
  for (cplx mu : {cplx(-1.0), cplx(0.5), cplx(0.3, 0.2)})
    for (auto [x, y, yp] : {std::tuple<cplx, cplx, cplx>{{0.1, 0.05}, {2.0, -1.0}, {0.3, 0.7}},
                            {{-0.2, 0.3}, {0.4, 0.9}, {-1.1, 0.2}}}) {
      cplx ypp = pvi_rhs(mu, x, y, yp);
      cplx u = 1.0 / y, up = -yp / (y * y);
      cplx upp = -ypp / (y * y) + 2.0 * yp * yp / (y * y * y);
      CHECK(rel(pvi_rhs_inverse(mu, x, u, up), upp) < 1e-13);
      CHECK(std::abs(pvi_residual(mu, y, yp, ypp, x)) < 1e-13 * std::abs(ypp));
    }
}

TEST_CASE("integration agrees with the series at a second point") {
  const auto& S = qc_solver();
  const auto& p = S.params();
  cplx L0(std::log(2e-3), 0.3), L1(std::log(1e-3), 1.0);
  BranchJet<cplx> j0 = branch_jet(S.table(), p.d, L0), j1 = branch_jet(S.table(), p.d, L1);
  cplx x0 = std::exp(L0), x1 = std::exp(L1);
  PathSpec path{{x0, std::polar(std::abs(x0), 1.0), x1}, 0.05, 1e-12};
  IntegrationResult r = integrate_pvi(p.mu, x0, 1.0 / j0.w, -j0.dw / (j0.w * j0.w), path);
  const Sample& e = r.samples.back();
  CHECK(e.x == x1);
  CHECK(rel(e.y(), 1.0 / j1.w) < 1e-9);
  CHECK(rel(e.yp(), -j1.dw / (j1.w * j1.w)) < 1e-8);
  // Samples satisfy the equation with y'' from the right-hand side to rounding.
  for (std::size_t i = 0; i < r.samples.size(); i += 7) {
    const Sample& s = r.samples[i];
    if (s.inverted) continue;
    cplx ypp = pvi_rhs(p.mu, s.x, s.y(), s.yp());
    CHECK(std::abs(pvi_residual(p.mu, s.y(), s.yp(), ypp, s.x)) <= 100.0 * 1e-12 * (1.0 + std::abs(ypp)));
  }
}

TEST_CASE("integration errors") {
  PathSpec through_zero{{cplx(0.01), cplx(-0.01)}, 0.05, 1e-12};
  CHECK_THROWS_AS(integrate_pvi(-1.0, 0.01, 0.5, 0.1, through_zero), Error);
  PathSpec wrong_start{{cplx(0.02), cplx(0.03)}, 0.05, 1e-12};
  CHECK_THROWS_AS(integrate_pvi(-1.0, 0.01, 0.5, 0.1, wrong_start), Error);
}

TEST_CASE("QC poles against the oracle") {
  const auto& S = qc_solver();
  for (auto [j, k] : {std::pair{1, 0}, std::pair{2, 0}, std::pair{1, 1}, std::pair{2, 1}}) {
    PoleReport r = verify_pole(S.params(), S.table(), j, k);
    double ax = std::abs(zeros(S.params(), j, k));
    INFO("j=" << j << " k=" << k << " distance=" << r.distance);
    CHECK(r.distance <= 10.0 * ax * ax * ax);
    CHECK(r.distance <= 0.6 * ax * ax);
    CHECK(std::abs(r.located - zeros(S.params(), j, k)) <= 0.6 * ax * ax);
    CHECK(r.residual < 1e-12);
  }
}

TEST_CASE("solution diverges at the located QC pole") {
  const auto& S = qc_solver();
  PoleReport r = verify_pole(S.params(), S.table(), 1, 0);
  const cplx xs = r.start;
  BranchJet<cplx> j = branch_jet(S.table(), S.params().d, std::log(xs));
  const double rxi = std::abs(r.located), axi = std::arg(r.located);
  PathSpec path;
  path.waypoints = {xs, std::polar(std::abs(xs), std::arg(xs) + 0.35), std::polar(rxi, std::arg(xs) + 0.35),
                    std::polar(rxi, axi + 0.05)};
  cplx last = path.waypoints.back();
  path.waypoints.push_back(r.located + 1e-9 * (last - r.located) / std::abs(last - r.located));
  IntegrationResult res = integrate_pvi(S.params().mu, xs, 1.0 / j.w, -j.dw / (j.w * j.w), path);
  CHECK(std::abs(res.samples.back().y()) > 1e6);
}

TEST_CASE("Picard poles against the oracle") {
  PicardParams p{1.0, {0.0, 0.6}};
  BranchParams bp = picard_branch_params(p);
  auto tab = generate_coefficients<cplx>(cplx(0.5), bp.nu, 30);
  for (int k : {-1, -2}) {
    PicardPole pp = picard_pole(p, 0, k);
    double r = std::abs(pp.xi), a = std::arg(pp.xi);
    cplx ls(std::log(2.0 * r), a + 0.5), xs = std::exp(ls);
    BranchJet<cplx> jet = branch_jet(tab, bp.d, ls);
    PathSpec path{{xs, std::polar(r, a + 0.5), std::polar(r, a + 0.05)}, 0.05, 1e-12};
    IntegrationResult res = integrate_pvi(0.5, xs, 1.0 / jet.w, -jet.dw / (jet.w * jet.w), path);
    LocatedPole loc = locate_pole(0.5, res.samples.back(), pp.xi, 1e-12, res.max_abs_y);
    CHECK(loc.double_pole);
    CHECK(std::abs(loc.xi - pp.xi) <= 1e-9 * r);
  }
}

TEST_CASE("report JSON") {
  PoleReport r;
  r.j = 1;
  r.k = 0;
  r.predicted = {0.5, -0.25};
  r.located = {0.5, -0.25};
  CHECK(pole_report_json(r) ==
        R"({"j":1,"k":0,"predicted":[0.5,-0.25],"located":[0.5,-0.25],"distance":0.0,"residual":0.0})");
}
