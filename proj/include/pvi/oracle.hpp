// Independent check of predicted poles: PVI_mu integrated along complex paths with an
// embedded Runge-Kutta-Fehlberg 7(8) pair, switching to u = 1/y near poles.
#pragma once

#include <array>
#include <string>
#include <vector>

#include "pvi/monodromy.hpp"
#include "pvi/series.hpp"

namespace pvi {

/// Right-hand side y'' of PVI_mu.
cplx pvi_rhs(cplx mu, cplx x, cplx y, cplx yp);

/// Right-hand side u'' for u = 1/y, with the 1/u terms collected into one quotient.
cplx pvi_rhs_inverse(cplx mu, cplx x, cplx u, cplx up);

struct PathSpec {
  std::vector<cplx> waypoints;  // straight segments between consecutive points
  double max_step = 0.05;       // step cap relative to |x|
  double tol = 1e-12;
};

struct Sample {
  cplx x;
  cplx a, b;  // (y, y') or (u, u')
  bool inverted = false;

  cplx y() const { return inverted ? 1.0 / a : a; }
  cplx yp() const { return inverted ? -b / (a * a) : b; }
};

struct IntegrationResult {
  std::vector<Sample> samples;  // every accepted step, first entry is the start
  long steps = 0;
  double max_abs_y = 0.0;
};

/// |y| above switch_up moves to u = 1/y, |y| below switch_down moves back.
struct SwitchRule {
  double up = 10.0;
  double down = 5.0;
};

IntegrationResult integrate_pvi(cplx mu, cplx x0, cplx y0, cplx yp0, const PathSpec& path,
                                SwitchRule rule = {});

/// Continues from a sample.
IntegrationResult integrate_from(cplx mu, const Sample& start, const PathSpec& path, SwitchRule rule = {});

struct LocatedPole {
  cplx xi;
  double residual = 0.0;     // |u| after the final segment
  double model_error = 0.0;  // |u + u' h + u'' h^2/2| at the chosen root, relative to |u'||h|
  long steps = 0;
  bool double_pole = false;
};

/// Newton on the local quadratic model of u, re-integrating to each iterate.
/// Throws no_pole if |y| never exceeded the switch threshold.
LocatedPole locate_pole(cplx mu, const Sample& near, cplx seed, double tol = 1e-12,
                        double max_abs_y_seen = 0.0, SwitchRule rule = {});

struct PoleReport {
  int j = 1, k = 0;
  cplx predicted;
  cplx located;
  double distance = 0.0;
  double residual = 0.0;
  long steps = 0;
  cplx start;
  double bound = 0.0;  // 10 |x_k|^3
};

struct VerifyOptions {
  double tol = 1e-12;
  double detour = 0.35;  // angular detour off the zero ray (rad)
  double approach = 0.05;  // final distance from the predicted pole, relative to |xi|
  int N_max = 6;
};

/// Start on the series between x_k(j) and the next smaller zero on its ray, detour off the
/// ray, integrate to a point near the predicted pole and locate it.
PoleReport verify_pole(const BranchParams& params, const CoefficientTable<cplx>& table, int j, int k,
                       const VerifyOptions& opt = {});

/// {"j","k","predicted","located","distance","residual"}.
std::string pole_report_json(const PoleReport& r);

}  // namespace pvi
