#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <qi/correlations.hpp>
#include <qi/fermion.hpp>

#include <Eigen/Dense>
#include <cmath>

using namespace qi;

namespace {

// infinite-chain reference built straight from the moment integrals: the
// string correlators are Toeplitz determinants over G_r = 2 f_r - delta_r0,
// evaluated numerically here instead of through the expanded polynomials
// the library uses
double g_inf(int r, double h, double T) {
  return 2.0 * fermi_fm(std::abs(r), h, T) - (r == 0 ? 1.0 : 0.0);
}

double string_det(int m, int shift, double h, double T) {
  Eigen::MatrixXd a(m, m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) a(i, j) = g_inf(j - i + shift, h, T);
  return a.determinant();
}

SpinCorrelators infinite_corr(int m, double h, double T) {
  SpinCorrelators c;
  c.m = m;
  c.sz = g_inf(0, h, T);
  c.xx = string_det(m, 1, h, T);
  c.yy = string_det(m, -1, h, T);
  c.zz = c.sz * c.sz - g_inf(m, h, T) * g_inf(m, h, T);
  return c;
}

// brute-force ring ground state over the full 2^n basis; site j lives on
// bit j, sigma_y sigma_y picks up +1 when the two bits differ
struct DenseCorr {
  double sz, xx, yy, zz, gap;
};

DenseCorr dense_ring(int n, double ax, double ay, double hz, int m) {
  const int dim = 1 << n;
  Eigen::MatrixXd ham = Eigen::MatrixXd::Zero(dim, dim);
  for (int s = 0; s < dim; ++s) {
    double diag = 0.0;
    for (int j = 0; j < n; ++j) diag += ((s >> j) & 1) ? -1.0 : 1.0;
    ham(s, s) = hz * diag;
    for (int j = 0; j < n; ++j) {
      const int k = (j + 1) % n;
      const int bj = (s >> j) & 1, bk = (s >> k) & 1;
      const int t = s ^ (1 << j) ^ (1 << k);
      ham(t, s) += ax + ay * (bj != bk ? 1.0 : -1.0);
    }
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(ham);
  const Eigen::VectorXd v = es.eigenvectors().col(0);
  DenseCorr out{0.0, 0.0, 0.0, 0.0,
                es.eigenvalues()(1) - es.eigenvalues()(0)};
  const int mask = 1 | (1 << m);
  for (int s = 0; s < dim; ++s) {
    const double w = v(s) * v(s);
    const double z0 = (s & 1) ? -1.0 : 1.0;
    const double zm = ((s >> m) & 1) ? -1.0 : 1.0;
    out.sz += w * z0;
    out.zz += w * z0 * zm;
    const int t = s ^ mask;
    out.xx += v(t) * v(s);
    out.yy += v(t) * v(s) * (((s & 1) != ((s >> m) & 1)) ? 1.0 : -1.0);
  }
  return out;
}

void couplings_for(const ChainParams& p, double* ax, double* ay, double* hz) {
  if (p.convention == FieldConvention::xx_chain) {
    *ax = 0.25 * (1.0 + p.gamma);
    *ay = 0.25 * (1.0 - p.gamma);
    *hz = -0.5 * p.field;
  } else {
    *ax = -0.5 * p.field * (1.0 + p.gamma);
    *ay = -0.5 * p.field * (1.0 - p.gamma);
    *hz = 1.0;
  }
}

}  // namespace

TEST_CASE("moment integrals hit the zero-temperature closed forms") {
  CHECK(fermi_fm(0, 0.0, 0.0) == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(fermi_fm(0, 1.0, 0.0) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(fermi_fm(0, 2.5, 0.0) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(fermi_fm(1, 0.0, 0.0) == doctest::Approx(-1.0 / M_PI).epsilon(1e-13));
  CHECK(fermi_fm(2, 0.0, 0.0) == doctest::Approx(0.0));
  CHECK(fermi_fm(3, 0.0, 0.0) ==
        doctest::Approx(1.0 / (3.0 * M_PI)).epsilon(1e-13));
  for (double h : {0.2, 0.6, 0.9})
    CHECK(fermi_fm(0, h, 0.0) ==
          doctest::Approx(1.0 - std::acos(h) / M_PI).epsilon(1e-14));
}

TEST_CASE("finite-temperature moments agree with a Simpson sweep") {
  const double T = 0.5;
  for (int m : {0, 1, 2, 3}) {
    for (double h : {0.0, 0.5, 1.2}) {
      const int n = 20000;
      double acc = 0.0;
      for (int i = 0; i <= n; ++i) {
        const double k = M_PI * i / n;
        const double g = 1.0 / (1.0 + std::exp((std::cos(k) - h) / T));
        const double w = (i == 0 || i == n) ? 1.0 : (i % 2 ? 4.0 : 2.0);
        acc += w * std::cos(m * k) * g;
      }
      acc *= (M_PI / n) / 3.0 / M_PI;
      CHECK(fermi_fm(m, h, T) == doctest::Approx(acc).epsilon(1e-9));
    }
  }
}

TEST_CASE("moment integral input validation") {
  CHECK_THROWS_AS(fermi_fm(-1, 0.5, 0.0), InvalidState);
  CHECK_THROWS_AS(fermi_fm(0, -0.1, 0.0), InvalidState);
  CHECK_THROWS_AS(fermi_fm(0, 0.5, -0.2), InvalidState);
}

TEST_CASE("two-site state matches the determinant reference") {
  // the library carries hand-expanded polynomials for m = 2, 3, 4; the
  // reference evaluates the same determinants numerically
  for (int m : {2, 3, 4}) {
    for (double h : {0.0, 0.3, 0.55, 0.8, 0.95}) {
      XState lib = xx_two_site_rho(m, h, 0.0);
      XState ref = XState::from(assemble_reduced(infinite_corr(m, h, 0.0)));
      CHECK(lib.xp() == doctest::Approx(ref.xp()).epsilon(1e-12));
      CHECK(lib.yp() == doctest::Approx(ref.yp()).epsilon(1e-12));
      CHECK(lib.ym() == doctest::Approx(ref.ym()).epsilon(1e-12));
      CHECK(lib.xm() == doctest::Approx(ref.xm()).epsilon(1e-12));
      CHECK(std::abs(lib.z() - ref.z()) < 1e-12);
      CHECK(std::abs(lib.w() - ref.w()) < 1e-12);
    }
    // same identity away from zero temperature
    for (double h : {0.2, 0.7}) {
      XState lib = xx_two_site_rho(m, h, 0.4);
      XState ref = XState::from(assemble_reduced(infinite_corr(m, h, 0.4)));
      CHECK(lib.xp() == doctest::Approx(ref.xp()).epsilon(1e-8));
      CHECK(std::abs(lib.z() - ref.z()) < 1e-8);
      CHECK(std::abs(lib.w() - ref.w()) < 1e-8);
    }
  }
  CHECK_THROWS_AS(xx_two_site_rho(1, 0.5, 0.0), InvalidState);
  CHECK_THROWS_AS(xx_two_site_rho(5, 0.5, 0.0), InvalidState);
}

TEST_CASE("band edge polarizes the pair") {
  for (double h : {1.0, 1.5, 3.0}) {
    XState xs = xx_two_site_rho(2, h, 0.0);
    CHECK(xs.xp() == doctest::Approx(1.0).epsilon(1e-13));
    CHECK(xs.yp() == doctest::Approx(0.0));
    CHECK(xs.ym() == doctest::Approx(0.0));
    CHECK(std::abs(xs.z()) < 1e-13);
    CHECK(concurrence(xs) == doctest::Approx(0.0));
  }
}

TEST_CASE("entanglement onset fields") {
  // frozen from a fine bisection of the concurrence sign change
  CHECK(onset_field(2) == doctest::Approx(0.50021157).epsilon(4e-6));
  CHECK(onset_field(3) == doctest::Approx(0.81913913).epsilon(4e-6));
  CHECK(onset_field(4) == doctest::Approx(0.90699986).epsilon(4e-6));
  CHECK_THROWS_AS(onset_field(1), InvalidState);
  CHECK_THROWS_AS(onset_field(5), InvalidState);

  const double hc = onset_field(3);
  CHECK(concurrence(xx_two_site_rho(3, hc - 1e-3, 0.0)) == doctest::Approx(0.0));
  CHECK(concurrence(xx_two_site_rho(3, hc + 1e-3, 0.0)) > 0.0);
}

TEST_CASE("ring correlators reproduce brute-force diagonalization") {
  struct Case {
    int n;
    ChainParams p;
    int m;
  };
  std::vector<Case> cases;
  for (double gamma : {0.0, 0.5}) {
    for (double h : {0.3, 0.75}) {
      ChainParams p;
      p.gamma = gamma;
      p.field = h;
      cases.push_back({8, p, 2});
      cases.push_back({10, p, 2});
    }
    ChainParams q;
    q.gamma = gamma;
    q.field = 0.5;
    q.convention = FieldConvention::xy_chain;
    cases.push_back({10, q, 2});
  }
  for (const Case& c : cases) {
    double ax, ay, hz;
    couplings_for(c.p, &ax, &ay, &hz);
    DenseCorr ref = dense_ring(c.n, ax, ay, hz, c.m);
    REQUIRE(ref.gap > 1e-9);  // parameters sit away from level crossings
    SpinCorrelators lib = xy_ring_correlators(c.n, c.p, c.m);
    CAPTURE(c.n);
    CAPTURE(c.p.gamma);
    CAPTURE(c.p.field);
    CHECK(lib.sz == doctest::Approx(ref.sz).epsilon(1e-10));
    CHECK(lib.xx == doctest::Approx(ref.xx).epsilon(1e-10));
    CHECK(lib.yy == doctest::Approx(ref.yy).epsilon(1e-10));
    CHECK(lib.zz == doctest::Approx(ref.zz).epsilon(1e-10));
  }
}

TEST_CASE("ring correlators, larger ring spot check at separation 3") {
  ChainParams p;
  p.gamma = 0.3;
  p.field = 0.6;
  double ax, ay, hz;
  couplings_for(p, &ax, &ay, &hz);
  DenseCorr ref = dense_ring(12, ax, ay, hz, 3);
  REQUIRE(ref.gap > 1e-9);
  SpinCorrelators lib = xy_ring_correlators(12, p, 3);
  CHECK(lib.sz == doctest::Approx(ref.sz).epsilon(1e-10));
  CHECK(lib.xx == doctest::Approx(ref.xx).epsilon(1e-10));
  CHECK(lib.yy == doctest::Approx(ref.yy).epsilon(1e-10));
  CHECK(lib.zz == doctest::Approx(ref.zz).epsilon(1e-10));
}

TEST_CASE("large isotropic rings drift to the infinite chain as 1/N") {
  // mode filling is quantized, so the deviation from the moment-integral
  // values is a sawtooth in N bounded by c/N rather than a smooth series;
  // check the bound at two sizes
  for (int m : {2, 4}) {
    SpinCorrelators ci = infinite_corr(m, 0.5, 0.0);
    ChainParams p;
    p.field = 0.5;
    for (int n : {2000, 4000}) {
      SpinCorrelators c = xy_ring_correlators(n, p, m);
      CHECK(c.xx == doctest::Approx(c.yy).epsilon(1e-12));
      CHECK(std::abs(c.sz - ci.sz) < 2.0 / n);
      CHECK(std::abs(c.xx - ci.xx) < 2.0 / n);
      CHECK(std::abs(c.yy - ci.yy) < 2.0 / n);
      CHECK(std::abs(c.zz - ci.zz) < 2.0 / n);
    }
  }
}

TEST_CASE("ring input validation") {
  ChainParams p;
  p.field = 0.5;
  CHECK_THROWS_AS(xy_ring_correlators(7, p, 1), InvalidState);
  CHECK_THROWS_AS(xy_ring_correlators(2, p, 1), InvalidState);
  CHECK_THROWS_AS(xy_ring_correlators(8, p, 0), InvalidState);
  CHECK_THROWS_AS(xy_ring_correlators(8, p, 3), InvalidState);  // N < 4m
  ChainParams warm = p;
  warm.temperature = 0.1;
  CHECK_THROWS_AS(xy_ring_correlators(8, warm, 2), InvalidState);
}

TEST_CASE("reduced-state assembly") {
  DensityMatrix one = assemble_reduced(0.4);
  CHECK(one.mat()(0, 0).real() == doctest::Approx(0.7));
  CHECK(one.mat()(1, 1).real() == doctest::Approx(0.3));

  SpinCorrelators c;
  c.m = 2;
  c.sz = 0.2;
  c.xx = 0.1;
  c.yy = -0.3;
  c.zz = 0.15;
  DensityMatrix two = assemble_reduced(c);
  XState xs = XState::from(two);
  CHECK(xs.xp() == doctest::Approx((1.0 + 2.0 * 0.2 + 0.15) / 4.0));
  CHECK(xs.xm() == doctest::Approx((1.0 - 2.0 * 0.2 + 0.15) / 4.0));
  CHECK(xs.yp() == doctest::Approx((1.0 - 0.15) / 4.0));
  CHECK(xs.z().real() == doctest::Approx((0.1 - 0.3) / 4.0));
  CHECK(xs.w().real() == doctest::Approx((0.1 + 0.3) / 4.0));
}

TEST_CASE("symmetric difference quotient") {
  auto cube = [](double x) { return x * x * x; };
  CHECK(central_derivative(cube, 2.0) == doctest::Approx(12.0).epsilon(1e-7));
  CHECK(central_derivative(cube, 2.0, 0.1) ==
        doctest::Approx(12.01).epsilon(1e-12));
  CHECK_THROWS_AS(central_derivative(cube, 2.0, 0.0), InvalidState);
}
