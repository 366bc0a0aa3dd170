#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <cmath>
#include <vector>

#include "alexander.hpp"
#include "asymptotics.hpp"
#include "braid.hpp"
#include "cyclotomic.hpp"
#include "doctest.h"
#include "engine.hpp"
#include "loops.hpp"

using namespace cj;

namespace {

struct F8 {
  BraidWord braid{3, {1, -2, 1, -2}, "4_1"};
  std::vector<LaurentPolynomial> jones;
  CyclotomicCoefficients C;
  LoopData loop;

  F8() {
    set_working_precision(128);
    for (int n = 1; n <= 17; ++n) jones.push_back(colored_jones(braid, n));
    C = cyclotomic_from_jones(
        std::vector<LaurentPolynomial>(jones.begin(), jones.begin() + 13), 12,
        "4_1");
    std::vector<ScaledJonesTaylor> tabs;
    for (int n = 1; n <= 17; ++n) {
      tabs.push_back(scaled_jones_taylor(jones[static_cast<size_t>(n - 1)], n, 14));
    }
    loop = extract_loop_series(tabs, 14, 3, alexander(braid), "4_1");
    loop.P[0] = reconstruct_loop_polynomial(loop, 0);
    loop.P[1] = reconstruct_loop_polynomial(loop, 1);
  }
};

F8& f8() {
  static F8 data;
  return data;
}

PrecisionComplex angle(double re, double im) {
  return PrecisionComplex(Real(re), Real(im), 0);
}

}  // namespace

TEST_CASE("three evaluation paths agree") {
  auto& d = f8();
  PrecisionComplex a = angle(0, 0.05);
  for (int n : {5, 9, 13}) {
    PrecisionComplex ex =
        eval_scaled_jones_exact(d.jones[static_cast<size_t>(n - 1)], n, a);
    PrecisionComplex cy = eval_scaled_jones_cyclotomic(d.C, n, a);
    PrecisionComplex nu = eval_scaled_jones_numeric(d.braid, n, a);
    CHECK(ex.distance(cy) < 1e-30);
    CHECK(ex.distance(nu) < 1e-30);
    CHECK(ex.certified_close(cy, 1e-25));
  }
}

TEST_CASE("cyclotomic tail certification") {
  auto& d = f8();
  PrecisionComplex a = angle(0, 0.05);
  // truncated sum (n - 1 > k_max) carries a certified tail bound
  PrecisionComplex far = eval_scaled_jones_cyclotomic(d.C, 200, a);
  CHECK(far.error_radius() > 0);
  CHECK(far.error_radius() < 1e-10);

  // monotone decay along the certified ray: terms shrink with k, so deeper
  // colors stay near 1/Delta(e^a)
  PrecisionComplex inv_delta = PrecisionComplex(Real(1), Real(0), 0) /
                               eval_complex(alexander(d.braid),
                                            PrecisionComplex::exp(a));
  double prev = 1;
  for (int n : {100, 400, 1600}) {
    double dist = eval_scaled_jones_cyclotomic(d.C, n, a).distance(inv_delta);
    CHECK(dist < prev);
    prev = dist;
  }
}

TEST_CASE("large real angle is rejected, not extrapolated") {
  auto& d = f8();
  CHECK_THROWS_AS(eval_scaled_jones_cyclotomic(d.C, 200, angle(2.5, 0)),
                  TailNotCertified);
}

TEST_CASE("order-0 and order-1 convergence at alpha = 0.05i") {
  auto& d = f8();
  AngleGrid g;
  g.points.push_back(angle(0, 0.05));
  std::vector<int> ns{200, 400, 800, 1600, 3200};
  Evaluator ev = [&](int n, const PrecisionComplex& a) {
    return eval_scaled_jones_cyclotomic(d.C, n, a);
  };

  ConvergenceScan s0 = convergence_scan(d.loop, ev, g, ns, 0);
  REQUIRE(s0.per_alpha.size() == 1);
  const auto& r0 = s0.per_alpha[0];
  CHECK(r0.conclusive);
  // P_1 = 0 for the figure-eight, so the residual decays at order 2
  CHECK(r0.fitted_order == doctest::Approx(2.0).epsilon(0.05));
  CHECK(r0.limit_discrepancy < 1e-3);
  CHECK(s0.table.entries.size() == 5);

  ConvergenceScan s1 = convergence_scan(d.loop, ev, g, ns, 1);
  const auto& r1 = s1.per_alpha[0];
  CHECK(r1.conclusive);
  CHECK(r1.fitted_order == doctest::Approx(1.0).epsilon(0.05));
  CHECK(r1.target.abs_approx() == 0);  // P_1 = 0

  // residual CSV has one row per (n, N) plus a header
  std::string csv = s0.table.to_csv("4_1");
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 6);
  CHECK(csv.rfind("knot,", 0) == 0);
}

TEST_CASE("unknot residuals agree exactly") {
  std::vector<LaurentPolynomial> ones(11, LaurentPolynomial::one());
  CyclotomicCoefficients C = cyclotomic_from_jones(ones, 10, "0_1");
  std::vector<ScaledJonesTaylor> tabs;
  for (int n = 1; n <= 11; ++n) {
    tabs.push_back(scaled_jones_taylor(LaurentPolynomial::one(), n, 8));
  }
  LoopData loop = extract_loop_series(tabs, 8, 2, LaurentPolynomial::one(), "0_1");
  loop.P[0] = reconstruct_loop_polynomial(loop, 0);
  AngleGrid g;
  g.points.push_back(angle(0, 0.05));
  Evaluator ev = [&](int n, const PrecisionComplex& a) {
    return eval_scaled_jones_cyclotomic(C, n, a);
  };
  ConvergenceScan s = convergence_scan(loop, ev, g, {10, 20, 40, 80, 160}, 0);
  const auto& r = s.per_alpha[0];
  CHECK(r.conclusive);
  CHECK(std::isinf(r.fitted_order));
  CHECK(r.note == "exact agreement");
}

TEST_CASE("derivative limits") {
  auto& d = f8();
  DerivativeLimitReport rep = derivative_limit_check(d.loop, 6);
  CHECK(rep.pass);
  REQUIRE(rep.limits.size() == 7);
  CHECK(rep.limits[0] == 1);
  CHECK(rep.limits[1] == 0);
  CHECK(rep.limits[2] == 2);  // figure-eight: m = 2 target is +2
  for (size_t m = 0; m < rep.limits.size(); ++m) {
    CHECK(rep.limits[m] == rep.targets[m]);
  }
}

TEST_CASE("growth fits") {
  auto& d = f8();
  // figure-eight: all coefficients 1, every fit degenerates honestly
  BoundFit nf = norm_growth_fit(d.C);
  CHECK(nf.degenerate);
  DegreeGrowthFit df = degree_growth_fit(d.C);
  CHECK(df.maxdeg.degenerate);

  // trefoil: the coefficients are monomials, so the norms are flat but the
  // degrees follow -k(k+3)/2
  BraidWord tref(2, {1, 1, 1}, "3_1");
  std::vector<LaurentPolynomial> tj;
  for (int n = 1; n <= 13; ++n) tj.push_back(colored_jones(tref, n));
  CyclotomicCoefficients tc = cyclotomic_from_jones(tj, 12, "3_1");
  CHECK(norm_growth_fit(tc).degenerate);
  DegreeGrowthFit tdf = degree_growth_fit(tc);
  CHECK(!tdf.mindeg.degenerate);
  CHECK(tdf.mindeg.constants[0] == doctest::Approx(-0.5).epsilon(0.2));

  // 5_2: genuinely growing norms
  BraidWord k52(3, {1, 1, 1, 2, -1, 2}, "5_2");
  std::vector<LaurentPolynomial> sj;
  for (int n = 1; n <= 13; ++n) sj.push_back(colored_jones(k52, n));
  BoundFit snf = norm_growth_fit(cyclotomic_from_jones(sj, 12, "5_2"));
  CHECK(!snf.degenerate);
  CHECK(snf.constants[0] > 0);
}

TEST_CASE("kernel magnitude estimate") {
  std::vector<PrecisionComplex> alphas{angle(0.1, 0), angle(0.05, 0.02)};
  KernelEstimateReport rep =
      kernel_estimate_check({20, 35, 50}, {1, 2, 3, 4, 5, 6, 7, 8, 9, 10}, alphas);
  CHECK(rep.decay_for_small_alpha);
  REQUIRE(rep.rays.size() == 2);
  for (const auto& ray : rep.rays) CHECK(ray.slope < 0);
  // the fitted C1 multiplies k log|alpha|: positive means decay for |alpha|<1
  CHECK(rep.fit.constants[0] > 0);
}

TEST_CASE("angle region from fitted constants") {
  auto& d = f8();
  BoundFit nf = norm_growth_fit(d.C);
  DegreeGrowthFit df = degree_growth_fit(d.C);
  KernelEstimateReport kf = kernel_estimate_check(
      {20, 35, 50}, {1, 2, 3, 4, 5, 6, 7, 8, 9, 10}, {angle(0.1, 0)});
  RegionEstimate reg = region_estimate(nf, df, kf);
  CHECK(!reg.empty);
  CHECK(reg.radius_at(0) > 0);
  CHECK(reg.radius_at(0) <= 1.0);
  CHECK(reg.radius_at(0.05) <= reg.radius_at(0));
  CHECK(!reg.boundary.empty());
  CHECK(reg.to_json().find("\"radius\"") != std::string::npos);

  // no kernel decay at all: the inequality cannot hold near 0
  KernelEstimateReport flat = kf;
  flat.fit.constants[0] = 0.0;
  RegionEstimate none = region_estimate(nf, df, flat);
  CHECK(none.empty);
  CHECK(none.radius_at(0) == 0);
}

TEST_CASE("default grid avoids zero") {
  AngleGrid g = AngleGrid::default_grid();
  CHECK(!g.points.empty());
  for (const auto& p : g.points) CHECK(p.abs_approx() > 0);
}
