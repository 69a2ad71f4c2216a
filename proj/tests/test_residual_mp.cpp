#include <doctest.h>

#include <boost/multiprecision/cpp_complex.hpp>
#include <boost/multiprecision/eigen.hpp>

#include <algorithm>
#include <cmath>
#include <initializer_list>

#include "pvi/series.hpp"
#include "residual_mp.hpp"

TEST_CASE("residual of the order-N truncation scales as x^(N-1)") {
  for (int N : {2, 4, 6}) {
    double s = pvi::test::residual_slope_qc(N);
    INFO("N=" << N << " slope=" << s);
    CHECK(std::abs(s - (N - 1)) < 0.3);
  }
}

TEST_CASE("extended-precision table against a 50-digit table") {
  using C50 = boost::multiprecision::cpp_complex_50;
  using R50 = pvi::real_t<C50>;
  const pvi::cplx mu(-0.7, 0.2);
  const double nu = 0.35;
  auto ref = pvi::generate_coefficients<C50>(C50(R50(mu.real()), R50(mu.imag())), R50(nu), 12);
  auto ext = pvi::coefficient_table(mu, nu, 12);
  auto dbl = pvi::generate_coefficients<pvi::cplx>(mu, nu, 12);
  double e_ext = 0.0, e_dbl = 0.0, e_low = 0.0;
  for (int n = 1; n <= 12; ++n)
    for (int m = -n; m <= n; ++m) {
      const C50& a = ref.a(n, m);
      pvi::cplx r(static_cast<double>(a.real()), static_cast<double>(a.imag()));
      e_ext = std::max(e_ext, std::abs(ext.a(n, m) - r) / std::abs(r));
      e_dbl = std::max(e_dbl, std::abs(dbl.a(n, m) - r) / std::abs(r));
      if (n <= 6) e_low = std::max(e_low, std::abs(ext.a(n, m) - r) / std::abs(r));
    }
  INFO("extended " << e_ext << " double " << e_dbl);
  // The recursion loses digits with the order, worst at m = +-n.
  CHECK(e_low < 1e-13);
  CHECK(e_ext < 1e-8);
  CHECK(e_ext < 1e-2 * e_dbl);
}
