#include "asymptotics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

#include "engine.hpp"
#include "json.hpp"

namespace cj {
namespace {

PrecisionComplex complex_of(double re, double im) {
  return PrecisionComplex(Real(re), Real(im), 0);
}

PrecisionComplex over_int(const PrecisionComplex& z, int n) {
  return z / PrecisionComplex(Real(n), Real(0), 0);
}

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

/// Least-squares fit of y ~ sum_j c_j * f_j via normal equations; p <= 3.
std::vector<double> least_squares(const std::vector<std::vector<double>>& rows,
                                  const std::vector<double>& y) {
  size_t p = rows.at(0).size();
  double A[3][3] = {};
  double b[3] = {};
  for (size_t i = 0; i < rows.size(); ++i) {
    for (size_t r = 0; r < p; ++r) {
      for (size_t c = 0; c < p; ++c) A[r][c] += rows[i][r] * rows[i][c];
      b[r] += rows[i][r] * y[i];
    }
  }
  // Gaussian elimination with partial pivoting
  size_t idx[3] = {0, 1, 2};
  for (size_t col = 0; col < p; ++col) {
    size_t piv = col;
    for (size_t r = col + 1; r < p; ++r) {
      if (std::fabs(A[idx[r]][col]) > std::fabs(A[idx[piv]][col])) piv = r;
    }
    std::swap(idx[col], idx[piv]);
    if (A[idx[col]][col] == 0) throw DegenerateData("singular least-squares system");
    for (size_t r = col + 1; r < p; ++r) {
      double f = A[idx[r]][col] / A[idx[col]][col];
      for (size_t c = col; c < p; ++c) A[idx[r]][c] -= f * A[idx[col]][c];
      b[idx[r]] -= f * b[idx[col]];
    }
  }
  std::vector<double> x(p);
  for (size_t col = p; col-- > 0;) {
    double s = b[idx[col]];
    for (size_t c = col + 1; c < p; ++c) s -= A[idx[col]][c] * x[c];
    x[col] = s / A[idx[col]][col];
  }
  return x;
}

double fit_slope(const std::vector<double>& xs, const std::vector<double>& ys) {
  double n = static_cast<double>(xs.size()), sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (size_t i = 0; i < xs.size(); ++i) {
    sx += xs[i];
    sy += ys[i];
    sxx += xs[i] * xs[i];
    sxy += xs[i] * ys[i];
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

}  // namespace

AngleGrid AngleGrid::default_grid() {
  AngleGrid g;
  g.description = "imaginary axis 0.01,0.02,0.05 plus disk sample of radius 0.05";
  for (double t : {0.01, 0.02, 0.05}) g.points.push_back(complex_of(0, t));
  g.points.push_back(complex_of(0.02, 0.02));
  g.points.push_back(complex_of(-0.02, 0.02));
  g.points.push_back(complex_of(0.035, 0.0));
  g.points.push_back(complex_of(0.01, -0.03));
  return g;
}

PrecisionComplex eval_scaled_jones_exact(const LaurentPolynomial& J_n, int n,
                                         const PrecisionComplex& alpha) {
  return eval_complex(J_n, PrecisionComplex::exp(over_int(alpha, n)));
}

PrecisionComplex eval_scaled_jones_numeric(const BraidWord& braid, int n,
                                           const PrecisionComplex& alpha) {
  return colored_jones_numeric(braid, n, PrecisionComplex::exp(over_int(alpha, n)));
}

PrecisionComplex eval_scaled_jones_cyclotomic(const CyclotomicCoefficients& C,
                                              int n, const PrecisionComplex& alpha,
                                              double tail_ratio_cap) {
  PrecisionComplex q0 = PrecisionComplex::exp(over_int(alpha, n));
  PrecisionComplex q0_inv = PrecisionComplex::exp(over_int(-alpha, n));
  PrecisionComplex qn = PrecisionComplex::exp(alpha);
  PrecisionComplex qn_inv = PrecisionComplex::exp(-alpha);
  int k_top = std::min(n - 1, C.k_max);
  bool truncated = n - 1 > C.k_max;
  PrecisionComplex sum = PrecisionComplex(Real(1), Real(0), 0);  // k = 0 term
  PrecisionComplex prod = sum;
  PrecisionComplex qk = sum, qk_inv = sum;
  std::vector<double> mags{1.0};
  for (int k = 1; k <= k_top; ++k) {
    qk *= q0;
    qk_inv *= q0_inv;
    prod *= qn + qn_inv - qk - qk_inv;
    PrecisionComplex term = prod * eval_complex(C.coeffs.at(static_cast<size_t>(k)), q0);
    sum += term;
    mags.push_back(term.abs_upper());
  }
  if (truncated) {
    if (mags.size() < 3) throw TailNotCertified("too few terms to extrapolate a tail");
    double m1 = mags[mags.size() - 3], m2 = mags[mags.size() - 2], m3 = mags.back();
    if (m3 == 0) return sum;
    if (m1 == 0 || m2 == 0) throw TailNotCertified("vanishing interior term");
    double r = std::max(m3 / m2, m2 / m1);
    if (!(r < tail_ratio_cap)) {
      throw TailNotCertified("term ratio " + fmt(r) + " exceeds " + fmt(tail_ratio_cap));
    }
    sum.add_error(m3 * r / (1 - r));
  }
  return sum;
}

std::string ResidualTable::to_csv(const std::string& knot) const {
  std::ostringstream out;
  out << "knot,alpha_re,alpha_im,n,N,residual_re,residual_im,error_radius\n";
  for (const auto& e : entries) {
    out << knot << ',' << fmt(e.alpha.re().convert_to<double>()) << ','
        << fmt(e.alpha.im().convert_to<double>()) << ',' << e.n << ',' << e.N << ','
        << fmt(e.residual.re().convert_to<double>()) << ','
        << fmt(e.residual.im().convert_to<double>()) << ','
        << fmt(e.residual.error_radius()) << '\n';
  }
  return out.str();
}

ConvergenceScan convergence_scan(const LoopData& loop, const Evaluator& eval,
                                 const AngleGrid& grid,
                                 const std::vector<int>& n_list, int N) {
  if (static_cast<int>(loop.P.size()) <= N) {
    throw InsufficientCoefficients("convergence scan at order " + std::to_string(N) +
                                   " needs reconstructed loop polynomials");
  }
  ConvergenceScan scan;
  for (const auto& alpha : grid.points) {
    PrecisionComplex qa = PrecisionComplex::exp(alpha);
    PrecisionComplex dv = eval_complex(loop.delta, qa);
    std::vector<PrecisionComplex> targets;
    for (int k = 0; k <= N; ++k) {
      targets.push_back(eval_complex(loop.P[static_cast<size_t>(k)], qa) /
                        dv.pow_int(2 * k + 1));
    }
    AlphaScanResult res;
    res.alpha = alpha;
    res.target = targets[static_cast<size_t>(N)];
    std::vector<double> log_n, log_d;
    int best_n = 0;
    for (int n : n_list) {
      ResidualEntry entry;
      entry.alpha = alpha;
      entry.n = n;
      entry.N = N;
      try {
        PrecisionComplex J = eval(n, alpha);
        PrecisionComplex an = over_int(alpha, n);
        PrecisionComplex partial{};
        for (int k = 0; k < N; ++k) partial += targets[static_cast<size_t>(k)] * an.pow_int(k);
        entry.residual = (J - partial) * an.pow_int(-N);
        double mag = entry.residual.abs_approx();
        entry.usable = entry.residual.error_radius() < 0.01 * mag || mag == 0;
      } catch (const Error& err) {
        entry.usable = false;
        if (res.note.empty()) res.note = err.what();
        scan.table.entries.push_back(entry);
        continue;
      }
      scan.table.entries.push_back(entry);
      if (!entry.usable) continue;
      PrecisionComplex d = entry.residual - res.target;
      double dm = d.abs_approx();
      if (n > best_n) {
        best_n = n;
        res.limit_discrepancy = dm;
      }
      if (dm > 0 && d.error_radius() < 0.01 * dm) {
        log_n.push_back(std::log(n));
        log_d.push_back(std::log(dm));
      }
    }
    if (log_n.size() >= 4 &&
        *std::max_element(log_n.begin(), log_n.end()) -
                *std::min_element(log_n.begin(), log_n.end()) >=
            std::log(8.0) - 1e-12) {
      res.fitted_order = -fit_slope(log_n, log_d);
      res.conclusive = true;
    } else if (best_n > 0 && log_n.empty()) {
      // residual exactly the target at every usable color
      res.conclusive = true;
      res.fitted_order = std::numeric_limits<double>::infinity();
      res.note = "exact agreement";
    } else if (res.note.empty()) {
      res.note = "too few usable colors for an order fit";
    }
    scan.per_alpha.push_back(std::move(res));
  }
  return scan;
}

UniformBoundReport uniform_bound_scan(const Evaluator& eval, const AngleGrid& grid,
                                      const std::vector<int>& n_list) {
  UniformBoundReport rep;
  int n_max = *std::max_element(n_list.begin(), n_list.end());
  for (const auto& alpha : grid.points) {
    for (int n : n_list) {
      try {
        double m = eval(n, alpha).abs_upper();
        if (m > rep.m_hat) {
          rep.m_hat = m;
          rep.arg_alpha = alpha;
          rep.arg_n = n;
        }
      } catch (const Error& err) {
        rep.uncertified.push_back("alpha = " + alpha.to_string() + ", n = " +
                                  std::to_string(n) + ": " + err.what());
      }
    }
  }
  rep.at_n_boundary = rep.arg_n == n_max;
  return rep;
}

DerivativeLimitReport derivative_limit_check(const LoopData& loop, int m_max) {
  if (m_max > loop.R.at(0).order()) {
    throw InsufficientCoefficients("R_0 too short for derivative limits");
  }
  TruncatedSeries target = loop.delta.series_at_exp(m_max).invert();
  DerivativeLimitReport rep;
  for (int m = 0; m <= m_max; ++m) {
    Rational f = factorial(m);
    rep.limits.push_back(f * loop.R[0].coeff(m));
    rep.targets.push_back(f * target.coeff(m));
    if (rep.limits.back() != rep.targets.back()) rep.pass = false;
  }
  return rep;
}

BoundFit norm_growth_fit(const CyclotomicCoefficients& C) {
  std::vector<double> ks, ys;
  for (int k = 1; k <= C.k_max; ++k) {
    Rational norm = C.coeffs[static_cast<size_t>(k)].l1_norm();
    if (norm == 0) continue;
    ks.push_back(k);
    ys.push_back(std::log(norm.get_d()));
  }
  BoundFit fit;
  bool flat = !ys.empty() &&
              std::all_of(ys.begin(), ys.end(), [&](double y) { return y == ys[0]; });
  if (ys.size() < 4 || flat) {
    fit.model = "constant (degenerate)";
    fit.degenerate = true;
    fit.constants = {ys.empty() ? 0.0 : *std::max_element(ys.begin(), ys.end())};
    return fit;
  }
  fit.model = "log||C_k||_1 <= C*k + C'*log(k) + c";
  std::vector<std::vector<double>> rows;
  for (double k : ks) rows.push_back({k, std::log(k), 1.0});
  fit.constants = least_squares(rows, ys);
  double sq = 0;
  for (size_t i = 0; i < ks.size(); ++i) {
    double pred = fit.constants[0] * rows[i][0] + fit.constants[1] * rows[i][1] +
                  fit.constants[2];
    double r = ys[i] - pred;
    fit.slack = std::max(fit.slack, r);
    sq += r * r;
  }
  fit.rms_log_residual = std::sqrt(sq / static_cast<double>(ks.size()));
  return fit;
}

DegreeGrowthFit degree_growth_fit(const CyclotomicCoefficients& C) {
  std::vector<double> ks, ymax, ymin;
  for (int k = 0; k <= C.k_max; ++k) {
    const auto& p = C.coeffs[static_cast<size_t>(k)];
    if (p.is_zero()) continue;
    auto [lo, hi] = p.degrees();
    ks.push_back(k);
    ymax.push_back(static_cast<double>(hi));
    ymin.push_back(static_cast<double>(lo));
  }
  auto quad_fit = [&](const std::vector<double>& ys) {
    BoundFit fit;
    bool flat = std::all_of(ys.begin(), ys.end(), [&](double y) { return y == ys[0]; });
    if (ys.size() < 4 || flat) {
      fit.model = "constant (degenerate)";
      fit.degenerate = true;
      fit.constants = {0.0, 0.0, ys.empty() ? 0.0 : ys[0]};
      return fit;
    }
    fit.model = "deg(C_k) ~ a*k^2 + b*k + c";
    std::vector<std::vector<double>> rows;
    for (double k : ks) rows.push_back({k * k, k, 1.0});
    fit.constants = least_squares(rows, ys);
    double sq = 0;
    for (size_t i = 0; i < ks.size(); ++i) {
      double pred = fit.constants[0] * rows[i][0] + fit.constants[1] * rows[i][1] +
                    fit.constants[2];
      double r = ys[i] - pred;
      fit.slack = std::max(fit.slack, std::fabs(r));
      sq += r * r;
    }
    fit.rms_log_residual = std::sqrt(sq / static_cast<double>(ks.size()));
    return fit;
  };
  return {quad_fit(ymax), quad_fit(ymin)};
}

KernelEstimateReport kernel_estimate_check(const std::vector<int>& n_list,
                                           const std::vector<int>& k_list,
                                           const std::vector<PrecisionComplex>& alphas) {
  KernelEstimateReport rep;
  // magnitude of the kernel as a bare factor product, never expanded
  auto magnitude = [](int n, int k, const PrecisionComplex& alpha) {
    PrecisionComplex q0 = PrecisionComplex::exp(over_int(alpha, n));
    PrecisionComplex q0_inv = PrecisionComplex::exp(over_int(-alpha, n));
    PrecisionComplex base = PrecisionComplex::exp(alpha) + PrecisionComplex::exp(-alpha);
    PrecisionComplex prod(Real(1), Real(0), 0);
    PrecisionComplex qj = prod, qj_inv = prod;
    for (int j = 1; j <= k; ++j) {
      qj *= q0;
      qj_inv *= q0_inv;
      prod *= base - qj - qj_inv;
    }
    return prod.abs_approx();
  };
  std::vector<std::vector<double>> rows;
  std::vector<double> ys;
  int n_ray = *std::max_element(n_list.begin(), n_list.end());
  for (const auto& alpha : alphas) {
    double abs_a = alpha.abs_approx();
    std::vector<double> ray_k, ray_y;
    for (int k : k_list) {
      if (k < 1) continue;
      double lo = 0, hi = 0;
      for (int n : n_list) {
        if (k >= n) continue;
        double m = magnitude(n, k, alpha);
        if (m <= 0) continue;
        if (lo == 0 || m < lo) lo = m;
        if (m > hi) hi = m;
        if (n == n_ray) {
          rows.push_back({k * std::log(abs_a), std::log(static_cast<double>(k)), 1.0});
          ys.push_back(std::log(m));
          ray_k.push_back(k);
          ray_y.push_back(std::log(m));
        }
      }
      if (lo > 0) rep.max_n_variation = std::max(rep.max_n_variation, hi / lo);
    }
    if (ray_k.size() >= 2) {
      double slope = fit_slope(ray_k, ray_y);
      rep.rays.push_back({alpha, slope});
      if (abs_a < 1 && slope >= 0) rep.decay_for_small_alpha = false;
    }
  }
  if (ys.size() < 4) throw DegenerateData("too few kernel samples to fit");
  rep.fit.model = "log|C_{n,k}| <= C1*k*log|alpha| + C2*log(k) + C3";
  rep.fit.constants = least_squares(rows, ys);
  double sq = 0;
  for (size_t i = 0; i < ys.size(); ++i) {
    double pred = rep.fit.constants[0] * rows[i][0] + rep.fit.constants[1] * rows[i][1] +
                  rep.fit.constants[2];
    double r = ys[i] - pred;
    rep.fit.slack = std::max(rep.fit.slack, r);
    sq += r * r;
  }
  rep.fit.rms_log_residual = std::sqrt(sq / static_cast<double>(ys.size()));
  return rep;
}

double RegionEstimate::radius_at(double re_alpha) const {
  if (empty) return 0;
  if (C1 <= 1e-9) return C + Cpp * re_alpha < 0 ? 1.0 : 0.0;
  return std::min(1.0, std::exp(-(C + Cpp * re_alpha) / C1));
}

std::string RegionEstimate::to_json() const {
  nlohmann::json j;
  j["C"] = C;
  j["Cpp"] = Cpp;
  j["C1"] = C1;
  j["empty"] = empty;
  auto& arr = j["boundary"] = nlohmann::json::array();
  for (auto [s, r] : boundary) arr.push_back({{"re_alpha", s}, {"radius", r}});
  return j.dump();
}

RegionEstimate region_estimate(const BoundFit& norm_fit,
                               const DegreeGrowthFit& degree_fit,
                               const KernelEstimateReport& kernel_fit) {
  RegionEstimate reg;
  reg.C = norm_fit.degenerate ? 0.0 : norm_fit.constants.at(0);
  double a_max = degree_fit.maxdeg.degenerate ? 0.0 : degree_fit.maxdeg.constants.at(0);
  double a_min = degree_fit.mindeg.degenerate ? 0.0 : degree_fit.mindeg.constants.at(0);
  reg.Cpp = std::max(std::fabs(a_max), std::fabs(a_min));
  reg.C1 = kernel_fit.fit.constants.at(0);
  // with no geometric kernel decay the inequality cannot hold near 0
  if (reg.C1 <= 1e-9 && reg.C >= 0) reg.empty = true;
  for (double s : {0.0, 0.01, 0.02, 0.03, 0.04, 0.05}) {
    reg.boundary.emplace_back(s, reg.radius_at(s));
  }
  return reg;
}

}  // namespace cj
