#include "pvi/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>

#include "pvi/monodromy.hpp"
#include "pvi/oracle.hpp"
#include "pvi/picard.hpp"
#include "pvi/poles.hpp"
#include "pvi/series.hpp"
#include "pvi/special_cases.hpp"

namespace pvi::cli {

namespace {

using json = nlohmann::ordered_json;

Error usage(const std::string& msg) { return Error(ErrorKind::usage, msg); }

json cj(cplx z) { return json::array({z.real(), z.imag()}); }

std::string csv_num(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

cplx parse_complex(const std::string& flag, const std::string& s) {
  std::istringstream is(s);
  double re = 0.0, im = 0.0;
  char comma = 0;
  if (!(is >> re)) throw usage("--" + flag + " expects re or re,im, got '" + s + "'");
  if (is >> comma) {
    if (comma != ',' || !(is >> im)) throw usage("--" + flag + " expects re or re,im, got '" + s + "'");
  }
  std::string rest;
  if (is >> rest) throw usage("--" + flag + " has trailing text '" + rest + "'");
  return {re, im};
}

// "a" or "api" (a multiple of pi).
double parse_angle(const std::string& s) {
  std::string t = s;
  double scale = 1.0;
  if (t.size() >= 2 && t.compare(t.size() - 2, 2, "pi") == 0) {
    t.resize(t.size() - 2);
    scale = pi;
    if (t.empty() || t == "+") t = "1";
    if (t == "-") t = "-1";
  }
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(t, &used);
  } catch (const std::exception&) {
    throw usage("cannot read angle '" + s + "'");
  }
  if (used != t.size()) throw usage("cannot read angle '" + s + "'");
  return v * scale;
}

std::pair<std::string, std::string> split_colon(const std::string& flag, const std::string& s) {
  auto c = s.find(':');
  if (c == std::string::npos) throw usage("--" + flag + " expects lo:hi, got '" + s + "'");
  return {s.substr(0, c), s.substr(c + 1)};
}

int parse_int(const std::string& flag, const std::string& s) {
  std::size_t used = 0;
  int v = 0;
  try {
    v = std::stoi(s, &used);
  } catch (const std::exception&) {
    throw usage("--" + flag + " expects integers, got '" + s + "'");
  }
  if (used != s.size()) throw usage("--" + flag + " expects integers, got '" + s + "'");
  return v;
}

struct Options {
  std::string mu, d, p0x, p01, px1, nu1, nu2, nrange, window, format = "json", out, config;
  double nu = std::nan("");
  double eps = 0.05, rmax = 1.0, rmin = 1e-300, tol = 1e-12;
  int order = 20, kmax = 5, kmin = 0, j = 0, k = 0, nmax = 6, points = 11;
  bool with_poles = false, boundary = false;
};

double env_tol(double fallback) {
  const char* s = std::getenv("PVI_TOL");
  if (!s || !*s) return fallback;
  char* end = nullptr;
  double v = std::strtod(s, &end);
  if (end == s || *end != '\0' || !(v > 0.0)) throw usage(std::string("PVI_TOL must be a positive number, got '") + s + "'");
  return v;
}

struct Resolved {
  BranchParams params;
  bool from_monodromy = false;
  DClassification used;
};

Resolved resolve(const Options& o, const std::string& cmd) {
  Resolved r;
  bool mono = !o.p0x.empty() || !o.p01.empty() || !o.px1.empty();
  if (o.mu.empty())
    throw usage(cmd + " needs --mu with either --p0x --p01 --px1 (monodromy data) or --nu --d");
  cplx mu = parse_complex("mu", o.mu);
  if (mono) {
    if (o.p0x.empty() || o.p01.empty() || o.px1.empty())
      throw usage(cmd + ": monodromy input needs all of --p0x, --p01, --px1");
    MonodromyData m{2.0 * mu, parse_complex("p0x", o.p0x), parse_complex("p01", o.p01), parse_complex("px1", o.px1)};
    r.params = d_from_monodromy(m, r.used);
    r.from_monodromy = true;
    return r;
  }
  if (std::isnan(o.nu) || o.d.empty())
    throw usage(cmd + " needs --mu with either --p0x --p01 --px1 (monodromy data) or --nu --d");
  r.params.mu = mu;
  r.params.nu = o.nu;
  r.params.d = parse_complex("d", o.d);
  validate(r.params);
  return r;
}

json params_json(const BranchParams& p) {
  return json{{"mu", cj(p.mu)}, {"nu", p.nu}, {"d", cj(p.d)}, {"k_shift", p.k_shift}};
}

CoefficientTable<cplx> table_for(const Options& o, const BranchParams& p) {
  if (o.order < 1 || o.order > 40) throw usage("--order must be in [1, 40]");
  return coefficient_table(p.mu, p.nu, o.order);
}

std::vector<int> families(const Options& o) {
  if (o.j == 0) return {1, 2};
  if (o.j != 1 && o.j != 2) throw usage("--j must be 1 or 2");
  return {o.j};
}

std::string cmd_coeffs(const Options& o) {
  Resolved r = resolve(o, "coeffs");
  auto tab = table_for(o, r.params);
  if (o.format == "csv") {
    std::string s = "n,m,re,im\n";
    for (int n = 1; n <= tab.order(); ++n)
      for (int m = -n; m <= n; ++m)
        s += std::to_string(n) + "," + std::to_string(m) + "," + csv_num(tab.a(n, m).real()) + "," +
             csv_num(tab.a(n, m).imag()) + "\n";
    return s;
  }
  json A = json::array();
  for (int n = 1; n <= tab.order(); ++n)
    for (int m = -n; m <= n; ++m) A.push_back({n, m, tab.a(n, m).real(), tab.a(n, m).imag()});
  json j{{"mu", cj(tab.mu())}, {"nu", tab.nu()}, {"N", tab.order()}, {"A", A}, {"radius", tab.radius()}};
  return j.dump() + "\n";
}

std::string cmd_zeros(const Options& o) {
  Resolved r = resolve(o, "zeros");
  const auto& p = r.params;
  if (o.kmax < 0) throw usage("--kmax must be >= 0");
  if (o.format == "csv") {
    std::string s = "j,k,re(x),im(x),abs,arg,braid_loops\n";
    for (int j : families(o))
      for (int k = 0; k <= o.kmax; ++k) {
        ZeroInfo z = zero_info(p, j, k);
        s += std::to_string(j) + "," + std::to_string(k) + "," + csv_num(z.x.real()) + "," + csv_num(z.x.imag()) +
             "," + csv_num(std::abs(z.x)) + "," + csv_num(z.log_x.imag()) + "," + std::to_string(z.braid_loops) +
             "\n";
      }
    return s;
  }
  json zs = json::array();
  for (int j : families(o))
    for (int k = 0; k <= o.kmax; ++k) {
      ZeroInfo z = zero_info(p, j, k);
      zs.push_back({{"j", j}, {"k", k}, {"x", cj(z.x)}, {"abs", std::abs(z.x)}, {"arg", z.log_x.imag()},
                    {"braid_loops", z.braid_loops}, {"double_zero", z.double_zero}});
    }
  auto rays = zero_ray_angles(p);
  json j{{"params", params_json(p)},
         {"theta", std::arg(zero_ratio(p))},
         {"rays", {rays.first, rays.second}},
         {"zeros", zs}};
  return j.dump() + "\n";
}

std::string cmd_poles(const Options& o) {
  Resolved r = resolve(o, "poles");
  PoleSolver solver(r.params, table_for(o, r.params), std::min(o.nmax, o.order));
  std::vector<PoleSequence> seqs;
  for (int j : families(o)) seqs.push_back(pole_sequence(solver, j, o.kmax));
  if (o.format == "csv") return poles_csv(seqs);
  json js = json::array();
  for (const auto& s : seqs) {
    json delta = json::array(), poles = json::array();
    for (int N = 2; N < int(s.delta.size()); ++N) delta.push_back(cj(s.delta[N]));
    for (const auto& e : s.entries)
      poles.push_back({{"k", e.k}, {"x", cj(e.x)}, {"xi", cj(e.xi)}, {"seed_err", e.seed_err},
                       {"polish_err", e.polish_err}, {"disk_radius", std::norm(e.x)},
                       {"braid_loops", e.braid_loops}});
    js.push_back({{"j", s.j}, {"k0", s.k0}, {"delta", delta}, {"poles", poles}});
  }
  const Threshold& t = solver.threshold();
  json j{{"params", params_json(r.params)}, {"K", t.K}, {"min_bound", t.min_bound}, {"sequences", js}};
  return j.dump() + "\n";
}

std::string cmd_verify(const Options& o) {
  Resolved r = resolve(o, "verify");
  if (o.j != 1 && o.j != 2) throw usage("verify needs --j 1 or --j 2");
  VerifyOptions vo;
  vo.tol = env_tol(o.tol);
  vo.N_max = std::min(o.nmax, o.order);
  PoleReport rep = verify_pole(r.params, table_for(o, r.params), o.j, o.k, vo);
  if (o.format == "csv")
    return "j,k,re(predicted),im(predicted),re(located),im(located),distance,residual\n" + std::to_string(rep.j) +
           "," + std::to_string(rep.k) + "," + csv_num(rep.predicted.real()) + "," + csv_num(rep.predicted.imag()) +
           "," + csv_num(rep.located.real()) + "," + csv_num(rep.located.imag()) + "," + csv_num(rep.distance) +
           "," + csv_num(rep.residual) + "\n";
  return pole_report_json(rep) + "\n";
}

std::string cmd_picard(const Options& o, bool kmax_given) {
  if (o.nu1.empty() || o.nu2.empty()) throw usage("picard needs --nu1 and --nu2");
  PicardParams p{parse_complex("nu1", o.nu1), parse_complex("nu2", o.nu2)};
  std::vector<LatticeIndex> idx;
  if (o.boundary) {
    if (o.nrange.empty() || o.window.empty()) throw usage("picard --boundary needs --nrange and --window");
    auto [a, b] = split_colon("nrange", o.nrange);
    auto [lo, hi] = split_colon("window", o.window);
    int n0 = parse_int("nrange", a), n1 = parse_int("nrange", b);
    double alo = parse_angle(lo), ahi = parse_angle(hi);
    json rows = json::array();
    std::string s = "N,k_radius,k_arg_lo,k_arg_hi\n";
    for (int i = 0; i <= 20 * (n1 - n0); ++i) {
      double N = n0 + 0.05 * i;
      if (std::abs(p.nu2 + 2.0 * N) == 0.0) continue;
      VisibilityBounds v = visibility_bounds(p, N, alo, ahi, o.rmax);
      s += csv_num(N) + "," + csv_num(v.k_radius) + "," + csv_num(v.k_arg_lo) + "," + csv_num(v.k_arg_hi) + "\n";
      rows.push_back({v.N, v.k_radius, v.k_arg_lo, v.k_arg_hi});
    }
    if (o.format == "csv") return s;
    return json{{"nu1", cj(p.nu1)}, {"nu2", cj(p.nu2)}, {"columns", {"N", "k_radius", "k_arg_lo", "k_arg_hi"}},
                {"rows", rows}}
               .dump() +
           "\n";
  }
  if (!o.window.empty()) {
    auto [lo, hi] = split_colon("window", o.window);
    idx = enumerate_visible(p, parse_angle(lo), parse_angle(hi), o.rmax, o.rmin);
  } else if (!o.nrange.empty()) {
    auto [a, b] = split_colon("nrange", o.nrange);
    int n0 = parse_int("nrange", a), n1 = parse_int("nrange", b);
    int k1 = kmax_given ? o.kmax : o.kmin + 60;
    if (n1 < n0 || k1 < o.kmin) throw usage("empty --nrange or k range");
    for (int N = n0; N <= n1; ++N)
      for (int k = o.kmin; k <= k1; ++k) idx.push_back({N, k});
  } else {
    throw usage("picard needs --window lo:hi or --nrange a:b");
  }
  if (o.format == "csv") return picard_csv(p, idx, o.with_poles);
  json pts = json::array();
  for (const auto& ix : idx) {
    cplx L = spiral_log(p, ix.N, ix.k);
    json e{{"N", ix.N}, {"k", ix.k}, {"x", cj(std::exp(L))}, {"log_x", cj(L)}, {"sheet", sheet_of(L)}};
    if (o.with_poles) {
      try {
        PicardPole pp = picard_pole(p, ix.N, ix.k);
        e["xi"] = cj(pp.xi);
        e["inverse_abs"] = pp.inverse_abs;
      } catch (const Error&) {
        e["xi"] = nullptr;
      }
    }
    pts.push_back(e);
  }
  return json{{"nu1", cj(p.nu1)}, {"nu2", cj(p.nu2)}, {"points", pts}}.dump() + "\n";
}

std::string cmd_qc(const Options& o) {
  QCParameters q = qc_parameters();
  const double nu = q.params.nu;
  const PoleSolver& S = qc_solver(std::min(o.nmax, o.order), o.order);
  cplx ratio = (3.0 - 2.0 * I * nu) / (3.0 + 2.0 * I * nu);
  json j{{"mu", -1.0},
         {"nu", nu},
         {"d", cj(q.params.d)},
         {"d_closed", cj(q.d_closed)},
         {"d_series", cj(q.d_series)},
         {"d_plus_variant", cj(q.d_plus_variant)},
         {"minus_sign_matches", q.minus_sign_matches},
         {"d_over_nu", cj(q.params.d / nu)},
         {"arg_ratio", std::arg(ratio)},
         {"arg_factor", std::exp(std::arg(ratio) / nu)},
         {"exp_minus_pi_over_nu", std::exp(-pi / nu)},
         {"x0_1", cj(qc_zeros(1, 0))},
         {"x0_2", cj(qc_zeros(2, 0))},
         {"Delta3", {S.delta(1)[3].real(), S.delta(2)[3].real()}},
         {"Delta4", {S.delta(1)[4].real(), S.delta(2)[4].real()}},
         {"min_bound", S.threshold().min_bound},
         {"K", S.threshold().K}};
  if (o.format == "csv") {
    std::string s = "key,value\n";
    for (auto& [k, v] : j.items()) {
      if (v.is_array()) {
        s += k + "_0," + csv_num(v[0].get<double>()) + "\n" + k + "_1," + csv_num(v[1].get<double>()) + "\n";
      } else if (v.is_boolean()) {
        s += k + "," + (v.get<bool>() ? "1" : "0") + "\n";
      } else {
        s += k + "," + csv_num(v.get<double>()) + "\n";
      }
    }
    return s;
  }
  return j.dump() + "\n";
}

std::string cmd_chazy(const Options& o) {
  if (o.points < 2) throw usage("--points must be >= 2");
  const double nu_max = 2.0 * std::log(golden) / pi;
  json curve = json::array();
  std::string s = "nu,c1,c2,cos_pi_theta,cos_pi_theta_i,theta_inf,mu,abs_unit\n";
  for (int i = 0; i < o.points; ++i) {
    double nu = nu_max * i / (o.points - 1);
    ChazyCurvePoint c = chazy_curve(nu);
    curve.push_back({{"nu", c.nu}, {"c1", c.c1}, {"c2", c.c2}, {"cos_pi_theta", c.cos_pi_theta},
                     {"cos_pi_theta_i", c.cos_pi_theta_i}, {"theta_inf", c.theta_inf}, {"mu", c.mu},
                     {"abs_unit", std::abs(c.unit)}});
    s += csv_num(c.nu) + "," + csv_num(c.c1) + "," + csv_num(c.c2) + "," + csv_num(c.cos_pi_theta) + "," +
         csv_num(c.cos_pi_theta_i) + "," + csv_num(c.theta_inf) + "," + csv_num(c.mu) + "," +
         csv_num(std::abs(c.unit)) + "\n";
  }
  if (o.format == "csv") return s;
  ChazySeries cs = chazy_series(std::min(o.order, 8));
  json d = json::array(), dn = json::array();
  for (auto z : cs.d) d.push_back(cj(z));
  for (auto z : cs.d_numeric) dn.push_back(cj(z));
  json j{{"nu_max", nu_max},
         {"curve", curve},
         {"mu_series", cs.mu},
         {"d_series", d},
         {"d_series_numeric", dn},
         {"tabulated_order", cs.tabulated_order},
         {"d1", cj(chazy_d1())},
         {"mu2_finite_difference", chazy_mu2_finite_difference()},
         {"d_at_qc_point", cj(chazy_d_closed(nu_max, chazy_curve(nu_max).theta_inf))}};
  return j.dump() + "\n";
}

std::string cmd_exclusion(const Options& o) {
  Resolved r = resolve(o, "exclusion");
  auto tab = table_for(o, r.params);
  ExclusionRegion e = exclusion_region(r.params, tab, o.eps);
  double gmin = exclusion_grid_min(r.params, tab, e.R_eps, o.eps);
  json j{{"params", params_json(r.params)}, {"eps", o.eps},           {"R_eps", e.R_eps},
         {"C_f", e.C_f},                    {"C_eps", e.C_eps},       {"C_eps_numeric", e.C_eps_numeric},
         {"disk_radius", e.disk_radius},    {"grid_min_inverse", gmin}};
  if (o.format == "csv") {
    std::string s = "key,value\n";
    for (auto& [k, v] : j.items())
      if (v.is_number()) s += k + "," + csv_num(v.get<double>()) + "\n";
    return s;
  }
  return j.dump() + "\n";
}

const std::vector<std::string> commands = {"coeffs", "zeros", "poles", "verify", "picard", "qc", "chazy", "exclusion"};

// Config-file keys become flags placed before the command-line ones, so the command line wins.
std::vector<std::string> expand_config(const std::vector<std::string>& args) {
  std::string path;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--config" && i + 1 < args.size()) path = args[i + 1];
    if (args[i].rfind("--config=", 0) == 0) path = args[i].substr(9);
  }
  if (path.empty()) return args;
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::io, "cannot open config file '" + path + "'");
  json cfg;
  try {
    cfg = json::parse(in);
  } catch (const std::exception& e) {
    throw usage(std::string("config file is not valid JSON: ") + e.what());
  }
  if (!cfg.is_object()) throw usage("config file must hold a JSON object");
  std::vector<std::string> pre;
  bool has_cmd = false;
  for (const auto& a : args)
    for (const auto& c : commands) has_cmd = has_cmd || a == c;
  if (cfg.contains("command") && !has_cmd) pre.push_back(cfg["command"].get<std::string>());
  for (auto& [k, v] : cfg.items()) {
    if (k == "command") continue;
    std::string flag = "--" + k;
    if (v.is_boolean()) {
      if (v.get<bool>()) pre.push_back(flag);
    } else if (v.is_array() && v.size() == 2) {
      char buf[96];
      std::snprintf(buf, sizeof buf, "%.17g,%.17g", v[0].get<double>(), v[1].get<double>());
      pre.push_back(flag);
      pre.push_back(buf);
    } else if (v.is_number_integer()) {
      pre.push_back(flag);
      pre.push_back(std::to_string(v.get<long long>()));
    } else if (v.is_number()) {
      char buf[48];
      std::snprintf(buf, sizeof buf, "%.17g", v.get<double>());
      pre.push_back(flag);
      pre.push_back(buf);
    } else if (v.is_string()) {
      pre.push_back(flag);
      pre.push_back(v.get<std::string>());
    } else {
      throw usage("config key '" + k + "' has an unsupported value");
    }
  }
  // The command name has to come first for CLI11 to route the flags.
  std::vector<std::string> full;
  std::vector<std::string> rest = args;
  for (auto it = rest.begin(); it != rest.end(); ++it)
    if (std::find(commands.begin(), commands.end(), *it) != commands.end()) {
      full.push_back(*it);
      rest.erase(it);
      break;
    }
  if (!pre.empty() && std::find(commands.begin(), commands.end(), pre.front()) != commands.end()) {
    full.push_back(pre.front());
    pre.erase(pre.begin());
  }
  full.insert(full.end(), pre.begin(), pre.end());
  full.insert(full.end(), rest.begin(), rest.end());
  return full;
}

}  // namespace

int run(const std::vector<std::string>& raw, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Oscillating branches of PVI near x = 0: coefficients, zeros, poles and checks", "pvi"};
  app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--mu", o.mu, "mu as re or re,im");
  app.add_option("--nu", o.nu, "nu > 0 (with --d)");
  app.add_option("--d", o.d, "d as re,im (with --nu)");
  app.add_option("--p0x", o.p0x, "monodromy p0x (< -2)");
  app.add_option("--p01", o.p01, "monodromy p01");
  app.add_option("--px1", o.px1, "monodromy px1");
  app.add_option("--order", o.order, "series order N");
  auto* kmax_opt = app.add_option("--kmax", o.kmax, "largest k");
  app.add_option("--kmin", o.kmin, "smallest k (picard)");
  app.add_option("--j", o.j, "family 1 or 2 (default both)");
  app.add_option("--k", o.k, "index k (verify)");
  app.add_option("--nmax", o.nmax, "last Delta_N used for pole seeds");
  app.add_option("--eps", o.eps, "sector half-angle (exclusion)");
  app.add_option("--tol", o.tol, "integration tolerance (verify); PVI_TOL overrides the default");
  app.add_option("--nu1", o.nu1, "Picard nu1 as re,im");
  app.add_option("--nu2", o.nu2, "Picard nu2 as re,im");
  app.add_option("--nrange", o.nrange, "N range a:b (picard)");
  app.add_option("--window", o.window, "arg window lo:hi, values may end in pi (picard)");
  app.add_option("--rmax", o.rmax, "radius cap (picard)");
  app.add_option("--rmin", o.rmin, "radius floor (picard)");
  app.add_option("--points", o.points, "curve samples (chazy)");
  app.add_flag("--with-poles", o.with_poles, "also compute xi_kN (picard)");
  app.add_flag("--boundary", o.boundary, "emit the (N,k) boundary curves (picard)");
  app.add_option("--format", o.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--out", o.out, "write to this file instead of stdout");
  app.add_option("--config", o.config, "JSON file whose keys mirror the flags");
  const std::map<std::string, std::string> about = {
      {"coeffs", "coefficient table A_nm"},
      {"zeros", "zero rays and zeros x_k(j)"},
      {"poles", "pole predictions xi_k(j) and Delta coefficients"},
      {"verify", "locate one pole by integrating PVI and compare"},
      {"picard", "Picard pole lattice (spiral, window or boundary)"},
      {"qc", "the quantum-cohomology branch and its constants"},
      {"chazy", "Chazy curve in the (theta, nu) plane"},
      {"exclusion", "pole-free sectors near the zero rays"}};
  for (const auto& c : commands) app.add_subcommand(c, about.at(c));

  std::vector<std::string> args;
  try {
    args = expand_config(raw);
  } catch (const Error& e) {
    err << e.what() << "\n";
    return e.kind() == ErrorKind::usage ? 2 : 1;
  }
  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return 0;
    }
    err << e.what() << "\n" << "run 'pvi --help' for usage\n";
    return 2;
  }
  std::string cmd;
  for (auto* sc : app.get_subcommands()) cmd = sc->get_name();

  try {
    bool explicit_tol = false;
    for (const auto& a : args) explicit_tol = explicit_tol || a == "--tol" || a.rfind("--tol=", 0) == 0;
    if (!explicit_tol) o.tol = env_tol(o.tol);
    std::string text;
    if (cmd == "coeffs") text = cmd_coeffs(o);
    else if (cmd == "zeros") text = cmd_zeros(o);
    else if (cmd == "poles") text = cmd_poles(o);
    else if (cmd == "verify") text = cmd_verify(o);
    else if (cmd == "picard") text = cmd_picard(o, kmax_opt->count() > 0);
    else if (cmd == "qc") text = cmd_qc(o);
    else if (cmd == "chazy") text = cmd_chazy(o);
    else if (cmd == "exclusion") text = cmd_exclusion(o);
    if (o.out.empty()) {
      out << text;
    } else {
      std::ofstream f(o.out);
      if (!f || !(f << text)) throw Error(ErrorKind::io, "cannot write '" + o.out + "'");
    }
    return 0;
  } catch (const Error& e) {
    err << e.what() << "\n";
    return e.kind() == ErrorKind::usage ? 2 : 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace pvi::cli
