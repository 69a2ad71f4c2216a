// One PASS/FAIL line per acceptance criterion, each timed against its budget.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <string>

#include "helpers.hpp"
#include "pvi/monodromy.hpp"
#include "pvi/oracle.hpp"
#include "pvi/picard.hpp"
#include "pvi/poles.hpp"
#include "pvi/series.hpp"
#include "pvi/special_cases.hpp"
#include "residual_mp.hpp"

using namespace pvi;
using pvi::test::qc_data;
using pvi::test::rel;

namespace {

struct Outcome {
  bool ok = true;
  std::ostringstream note;
  void require(bool c, const std::string& what) {
    if (!c) {
      ok = false;
      note << " [failed: " << what << "]";
    }
  }
};

int failures = 0;

void criterion(int id, const char* name, double budget_s, const std::function<void(Outcome&)>& body) {
  Outcome o;
  auto t0 = std::chrono::steady_clock::now();
  try {
    body(o);
  } catch (const std::exception& e) {
    o.ok = false;
    o.note << " [exception: " << e.what() << "]";
  }
  double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (dt > budget_s) {
    o.ok = false;
    o.note << " [over budget]";
  }
  if (!o.ok) ++failures;
  std::printf("%s %2d %-28s %9.3g s (budget %g s)%s\n", o.ok ? "PASS" : "FAIL", id, name, dt, budget_s,
              o.note.str().c_str());
  std::fflush(stdout);
}

}  // namespace

int main() {
  criterion(1, "QC nu", 1e-3, [](Outcome& o) {
    double nu = nu_from_p0x(-7.0);
    o.note << " nu=" << nu;
    o.require(std::abs(nu - 0.3063489625) <= 1e-9, "nu");
  });

  criterion(2, "QC d", 1e-2, [](Outcome& o) {
    BranchParams p = d_from_monodromy(qc_data());
    cplx r = p.d / p.nu;
    QCParameters q = qc_parameters();
    o.note << " d/nu=" << r.real() << "+" << r.imag() << "i closed-series=" << std::abs(q.d_closed - q.d_series);
    o.require(std::abs(r.real() - 3.535950422) <= 1e-8, "Re d/nu");
    o.require(std::abs(r.imag() - pi / 2.0) <= 1e-12, "Im d/nu");
    o.require(std::abs(q.d_closed - q.d_series) <= 1e-9, "closed form vs series");
  });

  criterion(3, "QC zeros", 1e-3, [](Outcome& o) {
    BranchParams p = d_from_monodromy(qc_data());
    cplx x1 = zeros(p, 1, 0), x2 = zeros(p, 2, 0);
    double ratio = std::abs(zeros(p, 1, 1)) / std::abs(x1);
    o.note << " |x0(1)|=" << std::abs(x1) << " |x0(2)|=" << std::abs(x2) << " ratio=" << ratio;
    o.require(std::abs(std::abs(x1) - 2.913e-2) < 5e-6, "|x0(1)|");
    o.require(std::abs(std::abs(x2) - 7.82e-3) < 5e-6, "|x0(2)|");
    o.require(std::abs(std::arg(x1) + pi / 2.0) < 1e-12 && std::abs(std::arg(x2) + pi / 2.0) < 1e-12, "ray angle");
    o.require(std::abs(ratio - 3.52e-5) < 5e-8, "ratio");
  });

  criterion(4, "Delta coefficients", 1.0, [](Outcome& o) {
    BranchParams p = d_from_monodromy(qc_data());
    PoleSolver S(p, coefficient_table(p.mu, p.nu, 20), 6);
    cplx d31 = S.delta(1)[3], d32 = S.delta(2)[3], d41 = S.delta(1)[4], d42 = S.delta(2)[4];
    o.note << " D3=" << d31.real() << "," << d32.real() << " D4=" << d41.real() << "," << d42.real();
    // "Exactly" read as: to rounding of the recursion.
    o.require(std::abs(S.delta(1)[2] + 0.5) <= 1e-14 && std::abs(S.delta(2)[2] + 0.5) <= 1e-14, "Delta2");
    o.require(std::abs(d31 - 0.1792) < 5e-5 && std::abs(d32 - 0.3555) < 5e-5, "Delta3");
    o.require(std::abs(d41 + 0.05422) < 5e-6 && std::abs(d42 + 0.2305) < 5e-5, "Delta4");
    pvi::test::Sampler s;
    double worst = 0.0;
    for (int i = 0; i < 10; ++i) {
      cplx mu(s.uniform(-2.0, 2.0), s.uniform(-0.5, 0.5));
      double nu = s.uniform(0.2, 1.0);
      PoleSolver R({mu, nu, {1.0, 0.1}, 0}, coefficient_table(mu, nu, 8), 4);
      for (int j = 1; j <= 2; ++j) {
        auto [c3, c4] = delta_closed_forms(mu, nu, j);
        worst = std::max({worst, rel(R.delta(j)[3], c3), rel(R.delta(j)[4], c4)});
      }
    }
    o.note << " closed-form worst=" << worst;
    o.require(worst <= 1e-10, "closed forms");
  });

  criterion(5, "closed-form coefficients", 5.0, [](Outcome& o) {
    pvi::test::Sampler s;
    double worst = 0.0;
    for (int i = 0; i < 5; ++i) {
      cplx mu = s.uniform(-2.0, 2.0);
      double nu = s.uniform(0.1, 1.0);
      auto g = generate_coefficients<cplx>(mu, nu, 4);
      auto b = builtin_coefficients(mu, nu);
      for (int n = 2; n <= 4; ++n)
        for (int m = -n; m <= n; ++m) worst = std::max(worst, rel(g.a(n, m), b.a(n, m)));
    }
    o.note << " worst rel=" << worst;
    o.require(worst <= 1e-10, "orders 2-4");
  });

  criterion(6, "Picard Lagrange series", 1.0, [](Outcome& o) {
    auto c = lagrange_pole_series(20);
    const long num[] = {-1, 11, -3, 359, -75, 919};
    const long den[] = {2, 64, 64, 32768, 32768, 2097152};
    double worst = 0.0;
    for (int n = 2; n <= 7; ++n) {
      double q = double(num[n - 2]) / double(den[n - 2]);
      worst = std::max(worst, std::abs(c[n] - q));
      // Exact as a dyadic rational: the scaled coefficient is an integer.
      double scaled = c[n].real() * double(den[n - 2]);
      o.require(std::abs(scaled - double(num[n - 2])) < 1e-9 && std::abs(c[n].imag()) < 1e-15,
                "rational c" + std::to_string(n));
    }
    o.note << " worst=" << worst;
    o.require(worst <= 1e-12, "coefficients");
  });

  criterion(7, "consistency threshold", 1e-3, [](Outcome& o) {
    BranchParams p = d_from_monodromy(qc_data());
    Threshold t = consistency_threshold(p);
    o.note << " min=" << t.min_bound << " K=" << t.K;
    o.require(std::abs(t.min_bound - 0.6824) < 5e-5, "min bound");
    o.require(t.K == 0, "K");
  });

  const auto& S = qc_solver();
  criterion(8, "oracle pole verification", 180.0, [&](Outcome& o) {
    for (auto [j, k] : {std::pair{1, 0}, std::pair{2, 0}, std::pair{1, 1}}) {
      auto t0 = std::chrono::steady_clock::now();
      VerifyOptions vo;
      vo.tol = 1e-12;
      PoleReport r = verify_pole(S.params(), S.table(), j, k, vo);
      double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
      double ax = std::abs(zeros(S.params(), j, k));
      std::string tag = "(" + std::to_string(j) + "," + std::to_string(k) + ")";
      o.note << " " << tag << ":" << r.distance << "/" << 10.0 * ax * ax * ax;
      o.require(r.distance <= 10.0 * ax * ax * ax, "distance " + tag);
      o.require(dt <= 60.0, "runtime " + tag);
    }
  });

  criterion(9, "Picard vs series", 30.0, [](Outcome& o) {
    PicardParams p{1.0, {0.0, 0.6}};
    BranchParams bp = picard_branch_params(p);
    auto tab = generate_coefficients<cplx>(bp.mu, bp.nu, 30);
    double worst = 0.0;
    for (int i = 0; i < 20; ++i) {
      double ax = std::pow(10.0, -4.0 + 2.0 * i / 19.0);
      cplx L(std::log(ax), -2.8 + 5.6 * i / 19.0);
      cplx ys = 1.0 / eval_branch_inverse_log(tab, bp.d, L).value;
      worst = std::max(worst, rel(ys, picard_solution_log(p, L)));
    }
    o.note << " worst rel=" << worst;
    o.require(worst <= 1e-6, "agreement");
  });

  criterion(10, "braid identity", 1.0, [&](Outcome& o) {
    const auto& p = S.params();
    double worst = 0.0;
    for (int i = 0; i < 10; ++i) {
      cplx L(std::log(2e-4 * (1.0 + i)), -2.7 + 0.6 * i);
      cplx a = 1.0 / eval_branch_inverse_log(S.table(), p.d, L + 2.0 * pi * I).value;
      cplx b = 1.0 / eval_branch_inverse_log(S.table(), p.d + 2.0 * pi * I * p.nu, L).value;
      worst = std::max(worst, rel(a, b));
    }
    o.note << " worst rel=" << worst;
    o.require(worst <= 1e-12, "identity");
  });

  criterion(11, "residual order", 10.0, [](Outcome& o) {
    for (int N : {2, 4, 6}) {
      double s = pvi::test::residual_slope_qc(N);
      o.note << " N=" << N << ":" << s;
      o.require(std::abs(s - (N - 1)) <= 0.3, "slope N=" + std::to_string(N));
    }
  });

  criterion(12, "Chazy curve", 5.0, [](Outcome& o) {
    const double nmax = 2.0 * std::log(golden) / pi;
    ChazyCurvePoint c0 = chazy_curve(0.0), c1 = chazy_curve(nmax);
    o.require(c0.c2 == 0.0, "c2(0) = 0");
    o.require(c0.theta_inf == -1.0 && c1.theta_inf == -2.0, "endpoints");
    double worst = 0.0;
    for (int i = 0; i < 100; ++i) {
      ChazyCurvePoint c = chazy_curve(nmax * i / 99.0);
      worst = std::max(worst, std::abs(std::abs(c.c1 - 0.5 * I * std::sqrt(cplx(c.c2))) - 1.0));
    }
    double mu2 = chazy_mu2_finite_difference();
    o.note << " max||unit|-1|=" << worst << " mu2=" << mu2;
    o.require(worst <= 1e-12, "unit modulus");
    o.require(std::abs(mu2 + pi * std::sqrt(3.0) / 2.0) <= 1e-5, "mu coefficient");
  });

  criterion(13, "exclusion region", 30.0, [&](Outcome& o) {
    ExclusionRegion e = exclusion_region(S.params(), S.table(), 0.05);
    double gmin = exclusion_grid_min(S.params(), S.table(), e.R_eps, 0.05);
    ExclusionRegion s = exclusion_region(S.params(), S.table(), 0.01);
    double ratio = s.C_eps_numeric / std::tan(0.01);
    o.note << " R_eps=" << e.R_eps << " min|1/y|=" << gmin << " C_eps/tan=" << ratio;
    o.require(gmin >= 1e-6, "grid scan");
    o.require(std::abs(ratio / 3.0 - 1.0) <= 0.05, "C_eps/tan eps");
  });

  criterion(14, "visibility enumeration", 1.0, [](Outcome& o) {
    PicardParams p{I / 3.0, I / 3.0};
    auto v = enumerate_visible(p, -pi, pi, 1.0);
    // k <= -1 down to the radius floor rmin.
    std::set<std::pair<int, int>> got, want;
    for (const auto& ix : v) got.insert({ix.N, ix.k});
    for (int k = -1; k >= -int(v.size()); --k) want.insert({0, k});
    bool exact = !v.empty() && got == want && got.size() == v.size();
    o.note << " points=" << v.size() << " (N=0, k=-1..-" << v.size() << ")";
    o.require(exact, "set");
  });

  std::printf("%d failure(s)\n", failures);
  return failures == 0 ? 0 : 1;
}
