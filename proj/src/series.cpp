#include "pvi/series.hpp"

#include <array>
#include <map>

namespace pvi {

template CoefficientTable<cplx> generate_coefficients<cplx>(const cplx&, const double&, int);

CoefficientTable<cplx> coefficient_table(cplx mu, double nu, int N) {
  using CL = std::complex<long double>;
  CoefficientTable<CL> t = generate_coefficients<CL>(CL(mu), static_cast<long double>(nu), N);
  std::vector<std::vector<cplx>> rows;
  rows.reserve(t.rows().size());
  for (const auto& r : t.rows()) {
    std::vector<cplx> out;
    out.reserve(r.size());
    for (const CL& z : r) out.push_back(checked(cplx(z), "coefficient_table"));
    rows.push_back(std::move(out));
  }
  return CoefficientTable<cplx>(mu, nu, std::move(rows), t.radius());
}

namespace {

cplx pw(cplx z, int k) {
  cplx r = 1.0;
  for (int j = 0; j < k; ++j) r *= z;
  return r;
}

// Closed forms for m >= 0 (and A_{1,-1}); `n` enters only through these
// polynomials so A_{n,-m}(nu) = A_{n,m}(-nu).
std::map<std::pair<int, int>, cplx> closed_form_table(cplx m, cplx n) {
  const cplx i = I;
  std::map<std::pair<int, int>, cplx> A;
  auto set = [&](int a, int b, cplx v) { A[{a, b}] = v; };
  set(1, 1, (pw((((2.0 * m) - 1.0) - ((2.0 * i) * n)), 2) / (16.0 * pw(n, 2))));
  set(1, -1, (pw((((2.0 * m) - 1.0) + ((2.0 * i) * n)), 2) / (16.0 * pw(n, 2))));
  set(1, 0, ((-(pw(((2.0 * m) - 1.0), 2) - (4.0 * pw(n, 2)))) / (8.0 * pw(n, 2))));
  set(2, 2, ((-pw(((((-2.0) * m) + ((2.0 * i) * n)) + 1.0), 4)) / (pw(2.0, 9) * pw(n, 4))));
  set(2, 1, (((pw(((2.0 * m) - 1.0), 2) + ((8.0 * i) * pw(n, 3))) * pw(((((-2.0) * m) + ((2.0 * i) * n)) + 1.0), 2)) / (pw(2.0, 7) * pw(n, 4))));
  set(2, 0, (((-(pw(((2.0 * m) - 1.0), 2) + (4.0 * pw(n, 2)))) * ((3.0 * pw(((2.0 * m) - 1.0), 2)) - (4.0 * pw(n, 2)))) / (pw(2.0, 8) * pw(n, 4))));
  set(3, 3, ((3.0 * pw((((2.0 * m) - 1.0) - ((2.0 * i) * n)), 6)) / (pw(2.0, 16) * pw(n, 6))));
  set(3, 2, ((((i / pw(2.0, 15)) * pw(((((-2.0) * m) + ((2.0 * i) * n)) + 1.0), 4)) / (pw(((-n) + i), 2) * pw(n, 6))) * ((((((-128.0) * pw(n, 5)) + ((288.0 * i) * pw(n, 4))) + (192.0 * pw(n, 3))) + ((((8.0 * i) * ((2.0 * m) + 1.0)) * ((2.0 * m) - 3.0)) * pw(n, 2))) - ((9.0 * (i - (2.0 * n))) * pw(((2.0 * m) - 1.0), 2)))));
  set(3, 1, ((pw(((((-2.0) * m) + ((2.0 * i) * n)) + 1.0), 2) / ((pw(2.0, 16) * pw(n, 6)) * (i - n))) * ((((((((((((((((((((((((2048.0 * pw(n, 7)) - ((560.0 * i) * pw(n, 4))) - (1616.0 * pw(n, 5))) - ((1440.0 * i) * pw(m, 3))) - (((1376.0 * i) * pw(n, 2)) * m)) - ((360.0 * i) * m)) - (840.0 * pw(n, 3))) - ((3360.0 * pw(n, 3)) * pw(m, 2))) + ((3360.0 * pw(n, 3)) * m)) + (((128.0 * i) * pw(n, 2)) * pw(m, 4))) + ((720.0 * i) * pw(m, 4))) - (((256.0 * i) * pw(n, 2)) * pw(m, 3))) - (((2048.0 * i) * pw(n, 4)) * pw(m, 2))) + (((1504.0 * i) * pw(n, 2)) * pw(m, 2))) - (45.0 * n)) - ((720.0 * n) * pw(m, 4))) + ((1440.0 * n) * pw(m, 3))) - ((1080.0 * n) * pw(m, 2))) + ((360.0 * n) * m)) + ((336.0 * i) * pw(n, 2))) + (((2048.0 * i) * pw(n, 4)) * m)) + (45.0 * i)) - ((3712.0 * i) * pw(n, 6))) + ((1080.0 * i) * pw(m, 2)))));
  set(3, 0, (((-(pw(((2.0 * m) - 1.0), 2) + (4.0 * pw(n, 2)))) / ((pw(2.0, 14) * pw((pw(n, 2) + 1.0), 2)) * pw(n, 6))) * ((((((((((((((((((((320.0 * pw(n, 4)) * pw(m, 4)) + ((528.0 * pw(n, 2)) * pw(m, 4))) + (240.0 * pw(m, 4))) - ((640.0 * pw(n, 4)) * pw(m, 3))) - ((1056.0 * pw(n, 2)) * pw(m, 3))) - (480.0 * pw(m, 3))) + ((448.0 * pw(n, 6)) * pw(m, 2))) + ((1328.0 * pw(n, 4)) * pw(m, 2))) + ((1224.0 * pw(n, 2)) * pw(m, 2))) + (360.0 * pw(m, 2))) - ((448.0 * pw(n, 6)) * m)) - ((1008.0 * pw(n, 4)) * m)) - ((696.0 * pw(n, 2)) * m)) - (120.0 * m)) - (128.0 * pw(n, 8))) - (144.0 * pw(n, 6))) + (104.0 * pw(n, 4))) + (141.0 * pw(n, 2))) + 15.0)));
  set(4, 4, ((-pw(((((-2.0) * m) + ((2.0 * i) * n)) + 1.0), 8)) / (pw(2.0, 20) * pw(n, 8))));
  set(4, 3, ((((-i) * pw(((((-2.0) * m) + ((2.0 * i) * n)) + 1.0), 6)) / ((pw(2.0, 19) * pw((n - i), 2)) * pw(n, 8))) * (((((((((((((-72.0) * pw(n, 5)) + ((168.0 * i) * pw(n, 4))) + (120.0 * pw(n, 3))) + (((12.0 * i) * pw(n, 2)) * pw(m, 2))) - (((12.0 * i) * pw(n, 2)) * m)) - ((21.0 * i) * pw(n, 2))) + (8.0 * n)) + ((32.0 * n) * pw(m, 2))) - ((32.0 * n) * m)) - (4.0 * i)) - ((16.0 * i) * pw(m, 2))) + ((16.0 * i) * m))));
  set(4, 2, ((pw(((((-2.0) * m) + ((2.0 * i) * n)) + 1.0), 4) / ((pw(2.0, 18) * pw((n - i), 2)) * pw(n, 8))) * ((((((((((((((((((((((((((((7.0 + ((1120.0 * i) * pw(n, 5))) - ((2976.0 * i) * pw(n, 7))) - (224.0 * pw(m, 3))) + ((306.0 * i) * pw(n, 3))) - (56.0 * m)) + (((336.0 * i) * n) * pw(m, 2))) - (((112.0 * i) * n) * m)) - (((448.0 * i) * pw(m, 3)) * n)) + (((1264.0 * i) * pw(n, 3)) * pw(m, 2))) + (((512.0 * i) * pw(n, 5)) * m)) + (((32.0 * i) * pw(m, 4)) * pw(n, 3))) - (((64.0 * i) * pw(n, 3)) * pw(m, 3))) - (((512.0 * i) * pw(m, 2)) * pw(n, 5))) + (((224.0 * i) * pw(m, 4)) * n)) - (((1232.0 * i) * pw(n, 3)) * m)) - ((288.0 * pw(n, 2)) * m)) - ((64.0 * pw(n, 2)) * pw(m, 4))) + ((128.0 * pw(n, 2)) * pw(m, 3))) - ((1440.0 * pw(n, 4)) * pw(m, 2))) + ((224.0 * pw(n, 2)) * pw(m, 2))) + ((1440.0 * pw(n, 4)) * m)) + ((14.0 * i) * n)) + (112.0 * pw(m, 4))) - (3040.0 * pw(n, 6))) + (1024.0 * pw(n, 8))) + (168.0 * pw(m, 2))) + (76.0 * pw(n, 2))) - (200.0 * pw(n, 4)))));
  set(4, 1, (((i * pw(((((-2.0) * m) + ((2.0 * i) * n)) + 1.0), 2)) / ((((3.0 * pw(2.0, 19)) * (i - n)) * pw((n + i), 2)) * pw(n, 8))) * (((((((((((((((((((((((((((((((((((((((((((((((((((((((((((-84.0) - ((36560.0 * i) * pw(n, 7))) - ((6504.0 * i) * pw(n, 5))) - ((53248.0 * i) * pw(n, 9))) + ((26880.0 * pw(n, 8)) * m)) + ((40704.0 * pw(n, 6)) * pw(m, 3))) - ((20352.0 * pw(m, 4)) * pw(n, 6))) - ((8256.0 * pw(n, 2)) * pw(m, 6))) - ((4608.0 * pw(n, 4)) * pw(m, 5))) - ((26880.0 * pw(m, 2)) * pw(n, 8))) + ((24768.0 * pw(n, 2)) * pw(m, 5))) + ((1536.0 * pw(m, 6)) * pw(n, 4))) + (13440.0 * pw(m, 3))) + (((5376.0 * i) * pw(m, 6)) * n)) + (((51264.0 * i) * pw(n, 7)) * m)) + (((3072.0 * i) * pw(n, 7)) * pw(m, 4))) + (((42768.0 * i) * pw(m, 4)) * pw(n, 3))) - (((48192.0 * i) * pw(n, 7)) * pw(m, 2))) + (1008.0 * m)) + ((59904.0 * pw(n, 6)) * m)) + (((16452.0 * i) * pw(m, 2)) * pw(n, 3))) - (((13440.0 * i) * pw(m, 3)) * n)) - (((34656.0 * i) * pw(m, 3)) * pw(n, 3))) + (((23616.0 * i) * pw(n, 5)) * m)) + (((24576.0 * i) * pw(n, 9)) * m)) + (((10176.0 * i) * pw(n, 3)) * pw(m, 6))) - (((19200.0 * i) * pw(n, 5)) * pw(m, 3))) - (((16128.0 * i) * pw(m, 5)) * n)) - ((80256.0 * pw(n, 6)) * pw(m, 2))) - ((37632.0 * pw(n, 4)) * pw(m, 4))) + ((82944.0 * pw(n, 4)) * pw(m, 3))) + ((12492.0 * pw(n, 2)) * m)) - ((52848.0 * pw(n, 2)) * pw(m, 4))) + ((64416.0 * pw(n, 2)) * pw(m, 3))) - ((86688.0 * pw(n, 4)) * pw(m, 2))) - ((40572.0 * pw(n, 2)) * pw(m, 2))) + ((44448.0 * pw(n, 4)) * m)) + ((447.0 * i) * pw(n, 3))) + ((84.0 * i) * n)) - ((23552.0 * i) * pw(n, 11))) - (20160.0 * pw(m, 4))) - (12552.0 * pw(n, 6))) + (((5040.0 * i) * pw(m, 2)) * n)) - (((24576.0 * i) * pw(n, 9)) * pw(m, 2))) - (((4212.0 * i) * m) * pw(n, 3))) + (((20160.0 * i) * pw(m, 4)) * n)) - (((1008.0 * i) * m) * n)) + (((9600.0 * i) * pw(n, 5)) * pw(m, 4))) - (((6144.0 * i) * pw(n, 7)) * pw(m, 3))) - (((30528.0 * i) * pw(n, 3)) * pw(m, 5))) + (11968.0 * pw(n, 8))) - (((14016.0 * i) * pw(n, 5)) * pw(m, 2))) + (16384.0 * pw(n, 12))) - (5376.0 * pw(m, 6))) + (16128.0 * pw(m, 5))) + (33920.0 * pw(n, 10))) - (5040.0 * pw(m, 2))) - (1497.0 * pw(n, 2))) - (8448.0 * pw(n, 4)))));
  set(4, 0, (((-(pw(((2.0 * m) - 1.0), 2) + (4.0 * pw(n, 2)))) / ((pw(2.0, 19) * pw((pw(n, 2) + 1.0), 2)) * pw(n, 8))) * (((((((((((((((((((((((((((((35.0 - ((10048.0 * pw(n, 8)) * m)) - ((25216.0 * pw(n, 6)) * pw(m, 3))) + ((12608.0 * pw(m, 4)) * pw(n, 6))) + ((5760.0 * pw(n, 2)) * pw(m, 6))) - ((12096.0 * pw(n, 4)) * pw(m, 5))) + ((10048.0 * pw(m, 2)) * pw(n, 8))) - ((17280.0 * pw(n, 2)) * pw(m, 5))) + ((4032.0 * pw(m, 6)) * pw(n, 4))) - (5600.0 * pw(m, 3))) - (420.0 * m)) - ((24864.0 * pw(n, 6)) * m)) + ((37472.0 * pw(n, 6)) * pw(m, 2))) + ((35472.0 * pw(n, 4)) * pw(m, 4))) - ((50784.0 * pw(n, 4)) * pw(m, 3))) - ((5720.0 * pw(n, 2)) * m)) + ((30880.0 * pw(n, 2)) * pw(m, 4))) - ((32960.0 * pw(n, 2)) * pw(m, 3))) + ((43844.0 * pw(n, 4)) * pw(m, 2))) + ((19320.0 * pw(n, 2)) * pw(m, 2))) - ((20468.0 * pw(n, 4)) * m)) + (8400.0 * pw(m, 4))) + (2804.0 * pw(n, 6))) - (2736.0 * pw(n, 8))) + (2240.0 * pw(m, 6))) - (6720.0 * pw(m, 5))) - (2624.0 * pw(n, 10))) + (2100.0 * pw(m, 2))) + (670.0 * pw(n, 2))) + (3719.0 * pw(n, 4)))));
  return A;
}

}  // namespace

CoefficientTable<cplx> builtin_coefficients(cplx mu, double nu) {
  check_branch_parameters(mu, nu);
  auto pos = closed_form_table(mu, nu);
  auto neg = closed_form_table(mu, -nu);
  std::vector<std::vector<cplx>> rows(4);
  for (int n = 1; n <= 4; ++n) {
    rows[n - 1].resize(2 * n + 1);
    for (int m = 0; m <= n; ++m) rows[n - 1][n + m] = pos.at({n, m});
    for (int m = 1; m <= n; ++m) rows[n - 1][n - m] = n == 1 ? pos.at({1, -1}) : neg.at({n, m});
    for (const cplx& c : rows[n - 1]) checked(c, "builtin_coefficients");
  }
  double r = radius_estimate(rows);
  return CoefficientTable<cplx>(mu, nu, std::move(rows), r);
}

GeneralLeading general_pvi_leading(cplx alpha, cplx /*beta*/, cplx gamma, cplx /*delta*/, double nu) {
  if (!(nu > 0.0)) throw Error(ErrorKind::domain, "nu must be > 0");
  // beta and delta do not enter the x^0 equations.
  const double n2 = nu * nu;
  GeneralLeading g;
  cplx root = std::sqrt(gamma * (gamma - 2.0 * alpha + 4.0 * n2));
  g.a_m1 = (alpha + 2.0 * n2 + I * root) / (8.0 * n2);
  g.a_p1 = (alpha + 2.0 * n2 - I * root) / (8.0 * n2);
  g.a_0 = -(alpha - 2.0 * n2 - gamma) / (4.0 * n2);
  // Coefficients of t^{-2..2} in the x^0 equations give these two invariants.
  g.derived_a0 = (-alpha + gamma + 2.0 * n2) / (4.0 * n2);
  g.derived_product = ((alpha - gamma) * (alpha - gamma) + 4.0 * n2 * (alpha + gamma) + 4.0 * n2 * n2) /
                      (64.0 * n2 * n2);
  g.discrepancy = std::max(std::abs(g.a_0 - g.derived_a0), std::abs(g.a_p1 * g.a_m1 - g.derived_product));
  return g;
}

std::vector<cplx> log_limit_polynomials(cplx mu, cplx d1, int n) {
  const cplx a = 2.0 * mu - 1.0;
  const cplx h = mu - 0.5;
  if (n == 1)
    return {-a * (a * d1 - 4.0) * d1 / 4.0, -a * (a * d1 - 2.0) / 2.0, -a * a / 4.0};
  if (n == 2) {
    auto c = log_limit_polynomials_literal(mu, d1);
    // Corrected against the nu -> 0 limit of y_2: the constant carries (2mu-1)/4, and 5/4
    // multiplies only (2mu-1) d1 in the ln x coefficient.
    c[0] = -a / 4.0 * (2.0 + h * h * d1 * d1 * d1 + 1.5 * (1.0 - 2.0 * mu) * d1 * d1 + 2.0 * d1) * (h * d1 - 1.0);
    c[1] = -a * (h * h * h * d1 * d1 * d1 - 3.0 * h * h * d1 * d1 + 1.25 * a * d1 + 0.5 * mu - 0.75);
    return c;
  }
  throw Error(ErrorKind::invalid_argument, "log_limit_polynomials supports n = 1, 2");
}

std::vector<cplx> log_limit_polynomials_literal(cplx mu, cplx d1) {
  const cplx a = 2.0 * mu - 1.0;
  const cplx h = mu - 0.5;
  std::vector<cplx> c(5);
  c[4] = -a * a * a * a / 32.0;
  c[3] = -a * a * a * (a * d1 - 2.0) / 8.0;
  c[2] = -3.0 * h * h * (5.0 / 6.0 + h * h * d1 * d1 + (1.0 - 2.0 * mu) * d1);
  c[1] = -a * (h * h * h * d1 * d1 * d1 - 3.0 * h * h * d1 * d1 + 1.25 * (a * d1 + 0.5 * mu - 0.75));
  c[0] = -a * (2.0 + h * h * d1 * d1 * d1 + 1.5 * (1.0 - 2.0 * mu) * d1 * d1 + 2.0 * d1) * (h * d1 - 1.0);
  return c;
}

cplx poly_eval(const std::vector<cplx>& c, cplx z) {
  cplx r = 0.0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) r = r * z + *it;
  return r;
}

}  // namespace pvi
