#include "pvi/oracle.hpp"

#include <algorithm>
#include <cmath>

#include <boost/numeric/odeint.hpp>
#include <json.hpp>

#include "pvi/poles.hpp"

namespace pvi {

namespace odeint = boost::numeric::odeint;

namespace {

using State = std::array<cplx, 2>;

cplx alpha_of(cplx mu) { return 0.5 * (2.0 * mu - 1.0) * (2.0 * mu - 1.0); }

}  // namespace

cplx pvi_rhs(cplx mu, cplx x, cplx y, cplx yp) {
  const cplx a = alpha_of(mu);
  return 0.5 * (1.0 / y + 1.0 / (y - 1.0) + 1.0 / (y - x)) * yp * yp - (1.0 / x + 1.0 / (x - 1.0) + 1.0 / (y - x)) * yp +
         y * (y - 1.0) * (y - x) / (x * x * (x - 1.0) * (x - 1.0)) * (a + 0.5 * x * (x - 1.0) / ((y - x) * (y - x)));
}

cplx pvi_rhs_inverse(cplx mu, cplx x, cplx u, cplx up) {
  const cplx a = alpha_of(mu);
  const cplx q = x * (x - 1.0), q2 = q * q, xu = 1.0 - x * u;
  return (up * up - 2.0 * a / q2) / (2.0 * u) - 0.5 * up * up * (1.0 / (1.0 - u) + x / xu) -
         (1.0 / x + 1.0 / (x - 1.0) + u / xu) * up + a * (1.0 + x - x * u) / q2 - 0.5 * u * (1.0 - u) / (xu * q);
}

IntegrationResult integrate_from(cplx mu, const Sample& start, const PathSpec& path, SwitchRule rule) {
  if (path.waypoints.empty() || path.waypoints.front() != start.x)
    throw Error(ErrorKind::invalid_argument, "path must begin at the start sample");
  if (!(path.tol > 0.0) || !(path.max_step > 0.0)) throw Error(ErrorKind::invalid_argument, "tol and max_step must be > 0");
  IntegrationResult out;
  out.samples.push_back(start);
  Sample cur = start;
  out.max_abs_y = std::abs(cur.y());
  auto stepper = odeint::make_controlled(path.tol * 1e-3, path.tol, odeint::runge_kutta_fehlberg78<State>());

  for (std::size_t seg = 1; seg < path.waypoints.size(); ++seg) {
    const cplx a = path.waypoints[seg - 1], L = path.waypoints[seg] - a;
    if (std::abs(L) == 0.0) continue;
    // Reject segments through the fixed singularities.
    for (cplx sing : {cplx(0.0), cplx(1.0)}) {
      double t = std::clamp(std::real((sing - a) * std::conj(L)) / std::norm(L), 0.0, 1.0);
      if (std::abs(a + t * L - sing) < 1e-300 + 1e-12 * std::abs(L))
        throw Error(ErrorKind::domain, "path passes through x = 0 or x = 1");
    }
    bool inverted = cur.inverted;
    auto sys = [&](const State& Y, State& dY, double s) {
      cplx x = a + s * L;
      dY[0] = L * Y[1];
      dY[1] = L * (inverted ? pvi_rhs_inverse(mu, x, Y[0], Y[1]) : pvi_rhs(mu, x, Y[0], Y[1]));
    };
    State Y{cur.a, cur.b};
    double s = 0.0;
    double ds = std::min(1.0, path.max_step * std::abs(a) / std::abs(L));
    while (s < 1.0) {
      double cap = path.max_step * std::abs(a + s * L) / std::abs(L);
      ds = std::min({ds, cap, 1.0 - s});
      if (ds < 1e-15) throw Error(ErrorKind::step_collapse, "step size collapsed near x = " +
                                                              std::to_string(std::real(a + s * L)) + "," +
                                                              std::to_string(std::imag(a + s * L)));
      double s_try = s;
      if (stepper.try_step(sys, Y, s_try, ds) != odeint::success) continue;
      // The stepper may round s to just below the segment end.
      s = (1.0 - s_try < 1e-14) ? 1.0 : s_try;
      ++out.steps;
      if (!finite(Y[0]) || !finite(Y[1])) throw Error(ErrorKind::step_collapse, "non-finite state");
      double ay = inverted ? 1.0 / std::abs(Y[0]) : std::abs(Y[0]);
      out.max_abs_y = std::max(out.max_abs_y, ay);
      if (!inverted && ay > rule.up) {
        Y = {1.0 / Y[0], -Y[1] / (Y[0] * Y[0])};
        inverted = true;
      } else if (inverted && ay < rule.down) {
        Y = {1.0 / Y[0], -Y[1] / (Y[0] * Y[0])};
        inverted = false;
      }
      cur = Sample{a + s * L, Y[0], Y[1], inverted};
      out.samples.push_back(cur);
    }
    cur.x = path.waypoints[seg];
  }
  return out;
}

IntegrationResult integrate_pvi(cplx mu, cplx x0, cplx y0, cplx yp0, const PathSpec& path, SwitchRule rule) {
  return integrate_from(mu, Sample{x0, y0, yp0, false}, path, rule);
}

LocatedPole locate_pole(cplx mu, const Sample& near, cplx seed, double tol, double max_abs_y_seen, SwitchRule rule) {
  LocatedPole out;
  Sample cur = near;
  if (!cur.inverted) cur = Sample{cur.x, 1.0 / cur.a, -cur.b / (cur.a * cur.a), true};
  double seen = std::max(max_abs_y_seen, std::abs(cur.y()));
  // Keep the walk in u: the switch-back threshold is disabled here.
  SwitchRule inside{rule.up, 0.0};
  const double reach = 4.0 * std::abs(near.x - seed) + 1e-3 * std::abs(seed);
  for (int it = 0; it < 60; ++it) {
    cplx u = cur.a, up = cur.b, upp = pvi_rhs_inverse(mu, cur.x, u, up);
    cplx disc = up * up - 2.0 * u * upp;
    cplx h;
    if (std::abs(disc) < 0.5 * std::norm(up) || up == 0.0) {
      // u' vanishes with u: double pole, take the zero of u'.
      out.double_pole = true;
      h = -up / upp;
    } else {
      out.double_pole = false;
      cplx r = std::sqrt(disc);
      cplx den = std::abs(up + r) >= std::abs(up - r) ? up + r : up - r;
      h = -2.0 * u / den;
    }
    out.model_error = std::abs(u + up * h + 0.5 * upp * h * h) / (std::abs(up * h) + std::abs(u) + 1e-300);
    if (!finite(h)) throw Error(ErrorKind::no_pole, "local model degenerate");
    if (std::abs(cur.x + h - seed) > reach) throw Error(ErrorKind::no_pole, "Newton left the search disk");
    PathSpec seg{{cur.x, cur.x + h}, 0.05, tol};
    IntegrationResult r = integrate_from(mu, cur, seg, inside);
    out.steps += r.steps;
    seen = std::max(seen, r.max_abs_y);
    cur = r.samples.back();
    if (!cur.inverted) cur = Sample{cur.x, 1.0 / cur.a, -cur.b / (cur.a * cur.a), true};
    if (std::abs(h) <= 1e-14 * std::abs(cur.x)) {
      out.xi = cur.x;
      out.residual = std::abs(cur.a);
      if (!(seen > rule.up)) throw Error(ErrorKind::no_pole, "|y| never exceeded the switch threshold");
      return out;
    }
  }
  throw Error(ErrorKind::no_pole, "pole location did not converge");
}

namespace {

void arc(std::vector<cplx>& w, double r, double from, double to, int pieces) {
  for (int i = 1; i <= pieces; ++i) w.push_back(std::polar(r, from + (to - from) * i / pieces));
}

}  // namespace

PoleReport verify_pole(const BranchParams& params, const CoefficientTable<cplx>& table, int j, int k,
                       const VerifyOptions& opt) {
  PoleSolver solver(params, table, opt.N_max);
  PolePrediction pred = solver.predict_pole(j, k);
  ZeroInfo z = zero_info(params, j, k);
  if (z.braid_loops != 0) throw Error(ErrorKind::branch_cut, "verification runs on the principal sheet only");
  const double theta = z.log_x.imag(), rk = std::abs(z.x);

  // Largest zero modulus below |x_k(j)| on the same ray.
  double r_next = std::abs(zeros(params, j, k + 1));
  for (int jj = 1; jj <= 2; ++jj)
    for (int kk = 0; kk <= k + 2; ++kk) {
      ZeroInfo o = zero_info(params, jj, kk);
      double dphi = std::remainder(o.log_x.imag() - theta, 2.0 * pi);
      double r = std::abs(o.x);
      if (std::abs(dphi) < 1e-9 && r < rk * (1.0 - 1e-12)) r_next = std::max(r_next, r);
    }
  // On the ray y_1 takes the value 1 near the log-midpoint, where PVI is singular in y;
  // pick the log-weight keeping y farthest from 0, 1 and infinity.
  double rs = 0.0, best = -1.0;
  for (double wgt : {0.5, 0.4, 0.6, 0.3, 0.7}) {
    double r = std::exp(wgt * std::log(rk) + (1.0 - wgt) * std::log(r_next));
    cplx w = branch_jet(table, params.d, cplx(std::log(r), theta)).w;
    double score = std::min({std::abs(w), 1.0 / std::abs(w), std::abs(1.0 / w - 1.0)});
    if (score > best) {
      best = score;
      rs = r;
    }
  }
  if (!(rs < table.radius())) throw Error(ErrorKind::out_of_disk, "start point outside the series disk");

  const cplx log_s(std::log(rs), theta);
  const cplx xs = std::exp(log_s);
  BranchJet<cplx> jet = branch_jet(table, params.d, log_s);
  const cplx y0 = 1.0 / jet.w, yp0 = -jet.dw / (jet.w * jet.w);

  const double sgn = (theta + opt.detour < pi) ? 1.0 : -1.0;
  const double side = theta + sgn * opt.detour;
  const double rxi = std::abs(pred.xi), axi = std::arg(pred.xi);
  const double eta = 2.0 * std::asin(0.5 * opt.approach);
  PathSpec path;
  path.tol = opt.tol;
  path.waypoints.push_back(xs);
  arc(path.waypoints, rs, theta, side, 8);
  path.waypoints.push_back(std::polar(rxi, side));
  arc(path.waypoints, rxi, side, axi + sgn * eta, 8);

  IntegrationResult res = integrate_pvi(params.mu, xs, y0, yp0, path);
  LocatedPole loc = locate_pole(params.mu, res.samples.back(), pred.xi, opt.tol, res.max_abs_y);

  PoleReport rep;
  rep.j = j;
  rep.k = k;
  rep.predicted = pred.xi;
  rep.located = loc.xi;
  rep.distance = std::abs(pred.xi - loc.xi);
  rep.residual = loc.residual;
  rep.steps = res.steps + loc.steps;
  rep.start = xs;
  rep.bound = 10.0 * std::pow(rk, 3);
  return rep;
}

std::string pole_report_json(const PoleReport& r) {
  nlohmann::ordered_json j;
  j["j"] = r.j;
  j["k"] = r.k;
  j["predicted"] = {r.predicted.real(), r.predicted.imag()};
  j["located"] = {r.located.real(), r.located.imag()};
  j["distance"] = r.distance;
  j["residual"] = r.residual;
  return j.dump();
}

}  // namespace pvi
