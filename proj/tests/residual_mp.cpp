// Residual order of the truncated branch in 50-digit arithmetic.
#include <boost/multiprecision/cpp_complex.hpp>
#include <boost/multiprecision/eigen.hpp>

#include <vector>

#include "pvi/series.hpp"
#include "residual_mp.hpp"

using C = boost::multiprecision::cpp_complex_50;
using R = pvi::real_t<C>;

namespace {

// Least-squares slope of log|res| against log|x| over |x| in [1e-5, 1e-3].
double fitted_slope(const pvi::CoefficientTable<C>& tab, const C& d, double theta, int N) {
  std::vector<double> lx, lr;
  for (int i = 0; i <= 16; ++i) {
    double l = std::log(1e-5) + i * (std::log(1e-3) - std::log(1e-5)) / 16.0;
    C logx{R(l), R(theta)};
    // Truncation order N keeps the x^N term of 1/y, i.e. orders 1..N+1.
    R r = abs(pvi::truncated_residual(tab, d, logx, N + 1));
    lx.push_back(l);
    lr.push_back(std::log(static_cast<double>(r)));
  }
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < lx.size(); ++i) mx += lx[i], my += lr[i];
  mx /= lx.size();
  my /= lx.size();
  double sxy = 0, sxx = 0;
  for (std::size_t i = 0; i < lx.size(); ++i) sxy += (lx[i] - mx) * (lr[i] - my), sxx += (lx[i] - mx) * (lx[i] - mx);
  return sxy / sxx;
}

}  // namespace

double pvi::test::residual_slope_qc(int N) {
  const R pi_r = boost::math::constants::pi<R>();
  const R nu = R(2) * log((R(1) + sqrt(R(5))) / R(2)) / pi_r;
  static const auto tab = pvi::generate_coefficients<C>(C(-1), nu, 8);
  const C d{R("1.0832347433521685"), pi_r * nu / R(2)};
  // Ray where |t| = 0.1: -2 Im d - 2 nu theta = ln 0.1.
  double theta = static_cast<double>((log(R(10)) - R(2) * d.imag()) / (R(2) * nu));
  return fitted_slope(tab, d, theta, N);
}

