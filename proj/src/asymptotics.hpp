#pragma once

#include <functional>
#include <string>
#include <vector>

#include "braid.hpp"
#include "cyclotomic.hpp"
#include "loops.hpp"
#include "precision.hpp"

namespace cj {

struct TailNotCertified : Error {
  explicit TailNotCertified(const std::string& w)
      : Error(ErrorCode::tail_not_certified, w) {}
};
struct DegenerateData : Error {
  explicit DegenerateData(const std::string& w)
      : Error(ErrorCode::degenerate_data, w) {}
};

/// Complex angles to scan; 0 is never included.
struct AngleGrid {
  std::vector<PrecisionComplex> points;
  std::string description;

  /// Imaginary-axis points it, t in {0.01, 0.02, 0.05}, plus a small disk
  /// sample of radius 0.05.
  static AngleGrid default_grid();
};

// ---------------------------------------------------------------------------
// Evaluation of J_{K,n}(e^{alpha/n}) along three independent paths.

PrecisionComplex eval_scaled_jones_exact(const LaurentPolynomial& J_n, int n,
                                         const PrecisionComplex& alpha);
PrecisionComplex eval_scaled_jones_numeric(const BraidWord& braid, int n,
                                           const PrecisionComplex& alpha);

/// Cyclotomic fast path: sum_k C_{n,k}(q0) C_{K,k}(q0) at q0 = e^{alpha/n},
/// cost O(k_max) per point. When the sum is truncated (n - 1 > k_max) the
/// tail is bounded by geometric extrapolation of the last three term
/// magnitudes; ratios above tail_ratio_cap raise TailNotCertified.
PrecisionComplex eval_scaled_jones_cyclotomic(const CyclotomicCoefficients& C,
                                              int n, const PrecisionComplex& alpha,
                                              double tail_ratio_cap = 0.9);

using Evaluator =
    std::function<PrecisionComplex(int n, const PrecisionComplex& alpha)>;

// ---------------------------------------------------------------------------
// Residual scans.

struct ResidualEntry {
  PrecisionComplex alpha;
  int n = 0;
  int N = 0;
  PrecisionComplex residual;  // (n/alpha)^N * (J - partial sum)
  bool usable = true;         // error radius below 1% of magnitude
};

struct ResidualTable {
  std::vector<ResidualEntry> entries;
  std::string to_csv(const std::string& knot) const;
};

struct AlphaScanResult {
  PrecisionComplex alpha;
  PrecisionComplex target;  // P_N(e^alpha) / delta(e^alpha)^{2N+1}
  double fitted_order = 0;  // decay order of |residual - target| in n
  double limit_discrepancy = 0;  // at the largest usable n
  bool conclusive = false;
  std::string note;
};

struct ConvergenceScan {
  ResidualTable table;
  std::vector<AlphaScanResult> per_alpha;
};

/// Residuals of order N against the loop-data targets over grid x n_list.
/// loop.P must be filled through index N.
ConvergenceScan convergence_scan(const LoopData& loop, const Evaluator& eval,
                                 const AngleGrid& grid,
                                 const std::vector<int>& n_list, int N);

struct UniformBoundReport {
  double m_hat = 0;
  PrecisionComplex arg_alpha;
  int arg_n = 0;
  bool at_n_boundary = false;
  std::vector<std::string> uncertified;  // grid points outside the safe region
};

UniformBoundReport uniform_bound_scan(const Evaluator& eval, const AngleGrid& grid,
                                      const std::vector<int>& n_list);

struct DerivativeLimitReport {
  std::vector<Rational> limits;   // m! * coeff(R_0, x^m)
  std::vector<Rational> targets;  // m! * coeff(1/delta(e^x), x^m)
  bool pass = true;
};

/// Exact check that the n -> infinity limit of the m-th alpha-derivative at 0
/// equals m! coeff(1/delta(e^alpha), alpha^m), for m = 0..m_max.
DerivativeLimitReport derivative_limit_check(const LoopData& loop, int m_max);

// ---------------------------------------------------------------------------
// Bound fits: constant fitting plus consistency reporting, never proof.

struct BoundFit {
  std::string model;
  std::vector<double> constants;
  double slack = 0;  // added so the model upper-bounds every data point
  double rms_log_residual = 0;
  bool degenerate = false;
};

/// log ||C_{K,k}||_1 against C k + C' log k + c. Flat norms are reported as
/// degenerate (trivially bounded), not an error.
BoundFit norm_growth_fit(const CyclotomicCoefficients& C);

struct DegreeGrowthFit {
  BoundFit maxdeg;  // a k^2 + b k + c
  BoundFit mindeg;
};

DegreeGrowthFit degree_growth_fit(const CyclotomicCoefficients& C);

struct KernelEstimateReport {
  BoundFit fit;  // log |C_{n,k}(e^{alpha/n})| <= C1 k log|alpha| + C2 log k + C3
  struct Ray {
    PrecisionComplex alpha;
    double slope = 0;  // fitted d log|C_{n,k}| / dk at fixed n
  };
  std::vector<Ray> rays;
  double max_n_variation = 1;  // max over (alpha,k) of spread across n
  bool decay_for_small_alpha = true;  // slope < 0 wherever |alpha| < 1
};

KernelEstimateReport kernel_estimate_check(const std::vector<int>& n_list,
                                           const std::vector<int>& k_list,
                                           const std::vector<PrecisionComplex>& alphas);

struct RegionEstimate {
  double C = 0;    // linear coefficient of the norm growth
  double Cpp = 0;  // degree-quadratic coefficient (couples to |Re alpha|)
  double C1 = 0;   // kernel decay coefficient on k log|alpha|
  bool empty = false;
  double radius_at(double re_alpha) const;  // |alpha| bound given |Re alpha|
  std::vector<std::pair<double, double>> boundary;  // (|Re alpha|, radius)
  std::string to_json() const;
};

/// Substitute the fitted constants into the region inequality
/// C + C''|Re(alpha)| + C1 log|alpha| < 0 and describe the resulting radius.
RegionEstimate region_estimate(const BoundFit& norm_fit,
                               const DegreeGrowthFit& degree_fit,
                               const KernelEstimateReport& kernel_fit);

}  // namespace cj
