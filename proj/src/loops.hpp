#pragma once

#include <string>
#include <vector>

#include "cyclotomic.hpp"
#include "laurent.hpp"

namespace cj {

struct InconsistentFit : Error {
  explicit InconsistentFit(const std::string& w)
      : Error(ErrorCode::inconsistent_fit, w) {}
};
struct NoPolynomialInWindow : Error {
  explicit NoPolynomialInWindow(const std::string& w)
      : Error(ErrorCode::no_polynomial_in_window, w) {}
};

/// Taylor coefficients of J_{K,n}(e^{h/n}) in h, exact.
struct ScaledJonesTaylor {
  int n = 0;
  TruncatedSeries coeffs{0};
};

/// Loop expansion data of one knot: J_{K,n}(e^h) = sum_k R_k(nh) h^k, with
/// R_k recovered as an x-series of order m_series - k, and the reconstructed
/// polynomials P_k with R_k(x) = P_k(e^x) / delta(e^x)^{2k+1}.
struct LoopData {
  std::string knot;
  LaurentPolynomial delta;
  std::vector<TruncatedSeries> R;   // index k, series in x
  std::vector<LaurentPolynomial> P;  // index k, filled by reconstruction
  int k_loops = 0;
  int m_series = 0;

  std::string to_json() const;
};

ScaledJonesTaylor scaled_jones_taylor(const LaurentPolynomial& J, int n, int order);

/// Recover R_0..R_{k_loops} from scaled Taylor tables at distinct colors.
/// The h^m coefficient is a polynomial of degree m in 1/n; tables must cover
/// at least order+1 colors, and at least 2 extra colors are required and
/// checked against the interpolated polynomial (exactly).
LoopData extract_loop_series(const std::vector<ScaledJonesTaylor>& tables,
                             int order, int k_loops,
                             const LaurentPolynomial& delta,
                             const std::string& knot_name = "");

struct MmrReport {
  std::vector<Rational> residuals;  // index m
  bool pass = true;
};

/// Residuals of R_0 against the series of 1/delta(e^x), orders 0..order.
MmrReport mmr_check(const LoopData& loop, int order);

/// Unique Laurent polynomial p supported on [-D, D] with p(e^x) equal to
/// R_k * delta(e^x)^{2k+1} through all known orders; the window starts at
/// degree_window and doubles on failure up to the cap.
LaurentPolynomial reconstruct_loop_polynomial(const LoopData& loop, int k,
                                              int degree_window = -1,
                                              int window_cap = 64);

struct LemmaCompareReport {
  struct Identity {
    int k = 0;
    bool pass = true;
    int first_failing_order = -1;
  };
  std::vector<Identity> identities;  // k = 0..3
  bool pass = true;
};

/// The explicit identities expressing R_0..R_{k_top} (k_top <= 3) through
/// the cyclotomic Taylor data <C_l>_j and powers of z^2 = e^x - 2 + e^{-x}.
LemmaCompareReport lemma_compare_check(const std::vector<TruncatedSeries>& cyclo_taylor,
                                       const LoopData& loop, int z_order,
                                       int k_top = 3);

struct LemmaFullReport {
  int x_verified = -1;
  int h_verified = -1;
  bool pass = true;
};

/// Bivariate identity sum_k R_k(x) h^k = sum_k C_k(e^h) prod_j (z(x)^2 - z(jh)^2)
/// checked on the rectangle x^0..x^x_order by h^0..h^h_order.
LemmaFullReport lemma_compare_full(const CyclotomicCoefficients& cyclo,
                                   const LoopData& loop, int x_order, int h_order);

}  // namespace cj
