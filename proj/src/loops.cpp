#include "loops.hpp"

#include <algorithm>

#include "json.hpp"

namespace cj {
namespace {

/// Exact solve of a square linear system; returns false when singular.
bool solve_square(std::vector<std::vector<Rational>> A, std::vector<Rational> b,
                  std::vector<Rational>& x) {
  const size_t d = A.size();
  for (size_t col = 0; col < d; ++col) {
    size_t pivot = col;
    while (pivot < d && A[pivot][col] == 0) ++pivot;
    if (pivot == d) return false;
    std::swap(A[pivot], A[col]);
    std::swap(b[pivot], b[col]);
    for (size_t r = 0; r < d; ++r) {
      if (r == col || A[r][col] == 0) continue;
      Rational f = A[r][col] / A[col][col];
      for (size_t c = col; c < d; ++c) A[r][c] -= f * A[col][c];
      b[r] -= f * b[col];
    }
  }
  x.assign(d, 0);
  for (size_t i = 0; i < d; ++i) x[i] = b[i] / A[i][i];
  return true;
}

Rational eval_poly(const std::vector<Rational>& coeffs, const Rational& y) {
  Rational v = 0;
  for (size_t k = coeffs.size(); k-- > 0;) v = v * y + coeffs[k];
  return v;
}

/// Series of z^2 = e^x - 2 + e^{-x}.
TruncatedSeries z_squared_series(int order) {
  return exp_series(1, order) + exp_series(-1, order) -
         TruncatedSeries::constant(2, order);
}

}  // namespace

ScaledJonesTaylor scaled_jones_taylor(const LaurentPolynomial& J, int n, int order) {
  if (n < 1) throw Error(ErrorCode::usage, "color must be >= 1");
  ScaledJonesTaylor out;
  out.n = n;
  out.coeffs = J.series_at_exp(order);
  Rational scale = 1;
  for (int i = 1; i <= order; ++i) {
    scale /= n;
    out.coeffs.set_coeff(i, out.coeffs.coeff(i) * scale);
  }
  return out;
}

LoopData extract_loop_series(const std::vector<ScaledJonesTaylor>& tables,
                             int order, int k_loops,
                             const LaurentPolynomial& delta,
                             const std::string& knot_name) {
  if (k_loops > order) throw Error(ErrorCode::usage, "k_loops exceeds series order");
  if (static_cast<int>(tables.size()) < order + 3) {
    throw InsufficientCoefficients(
        "loop extraction to order " + std::to_string(order) + " needs " +
        std::to_string(order + 3) + " colors (2 held out)");
  }
  for (const auto& t : tables) {
    if (t.coeffs.order() < order) {
      throw InsufficientCoefficients("scaled Taylor table at n = " +
                                     std::to_string(t.n) + " is too short");
    }
  }
  LoopData loop;
  loop.knot = knot_name;
  loop.delta = delta;
  loop.k_loops = k_loops;
  loop.m_series = order;
  for (int k = 0; k <= k_loops; ++k) loop.R.emplace_back(order - k);
  loop.P.resize(static_cast<size_t>(k_loops) + 1);

  for (int m = 0; m <= order; ++m) {
    // interpolate the h^m coefficient as a degree-m polynomial in 1/n
    size_t pts = static_cast<size_t>(m) + 1;
    std::vector<std::vector<Rational>> A(pts, std::vector<Rational>(pts));
    std::vector<Rational> b(pts);
    for (size_t i = 0; i < pts; ++i) {
      Rational y = Rational(1) / tables[i].n;
      Rational pw = 1;
      for (size_t k = 0; k < pts; ++k) {
        A[i][k] = pw;
        pw *= y;
      }
      b[i] = tables[i].coeffs.coeff(m);
    }
    std::vector<Rational> a;
    if (!solve_square(std::move(A), std::move(b), a)) {
      throw Error(ErrorCode::degenerate_data, "repeated colors in loop extraction");
    }
    for (size_t i = pts; i < tables.size(); ++i) {
      Rational y = Rational(1) / tables[i].n;
      if (eval_poly(a, y) != tables[i].coeffs.coeff(m)) {
        throw InconsistentFit("held-out color n = " + std::to_string(tables[i].n) +
                              " breaks the 1/n polynomial at h^" + std::to_string(m));
      }
    }
    for (int k = 0; k <= std::min(m, k_loops); ++k) {
      loop.R[static_cast<size_t>(k)].set_coeff(m - k, a[static_cast<size_t>(k)]);
    }
  }
  return loop;
}

MmrReport mmr_check(const LoopData& loop, int order) {
  if (order > loop.R.at(0).order()) {
    throw InsufficientCoefficients("R_0 known only to order " +
                                   std::to_string(loop.R[0].order()));
  }
  TruncatedSeries target = loop.delta.series_at_exp(order).invert();
  MmrReport rep;
  for (int m = 0; m <= order; ++m) {
    rep.residuals.push_back(loop.R[0].coeff(m) - target.coeff(m));
    if (rep.residuals.back() != 0) rep.pass = false;
  }
  return rep;
}

LaurentPolynomial reconstruct_loop_polynomial(const LoopData& loop, int k,
                                              int degree_window, int window_cap) {
  const TruncatedSeries& Rk = loop.R.at(static_cast<size_t>(k));
  int span = loop.delta.is_zero()
                 ? 0
                 : static_cast<int>(loop.delta.maxdeg() - loop.delta.mindeg());
  const int order = Rk.order();
  const int slack = 4;
  int D = degree_window >= 0 ? degree_window : k * span + span;
  // never start beyond what the series depth can confirm; if the true window
  // is larger the consistency check fails and the doubling takes over
  if (degree_window < 0) D = std::min(D, std::max(0, (order - slack) / 2));
  TruncatedSeries rhs = Rk * loop.delta.series_at_exp(order).pow(2 * k + 1);
  for (;;) {
    if (2 * D + slack > order) {
      throw NoPolynomialInWindow("series order " + std::to_string(order) +
                                 " cannot support a degree window of " +
                                 std::to_string(D));
    }
    // p(e^x) = sum_e p_e e^{ex}; row j is the x^j coefficient e^j / j!
    size_t d = static_cast<size_t>(2 * D) + 1;
    std::vector<std::vector<Rational>> A(d, std::vector<Rational>(d));
    std::vector<Rational> b(d);
    for (size_t j = 0; j < d; ++j) {
      Rational fact_inv = Rational(1) / factorial(static_cast<int>(j));
      for (int e = -D; e <= D; ++e) {
        A[j][static_cast<size_t>(e + D)] =
            rational_pow(Rational(e), static_cast<int>(j)) * fact_inv;
      }
      b[j] = rhs.coeff(static_cast<int>(j));
    }
    std::vector<Rational> p;
    if (!solve_square(std::move(A), std::move(b), p)) {
      throw Error(ErrorCode::internal, "singular exponential interpolation matrix");
    }
    LaurentPolynomial poly;
    for (int e = -D; e <= D; ++e) poly.set_coeff(e, p[static_cast<size_t>(e + D)]);
    TruncatedSeries back = poly.series_at_exp(order);
    bool consistent = true;
    for (int j = 2 * D + 1; j <= order; ++j) {
      if (back.coeff(j) != rhs.coeff(j)) {
        consistent = false;
        break;
      }
    }
    if (consistent) return poly;
    D = std::max(1, 2 * D);
    if (D > window_cap) {
      throw NoPolynomialInWindow("no Laurent polynomial on [-" +
                                 std::to_string(window_cap) + ", " +
                                 std::to_string(window_cap) +
                                 "] matches the loop series at k = " +
                                 std::to_string(k));
    }
  }
}

LemmaCompareReport lemma_compare_check(
    const std::vector<TruncatedSeries>& cyclo_taylor, const LoopData& loop,
    int z_order, int k_top) {
  const int l_max = static_cast<int>(cyclo_taylor.size()) - 1;
  // the l-sums are complete through x-order 2*l_max + 1
  LemmaCompareReport rep;
  TruncatedSeries z2 = z_squared_series(z_order);
  std::vector<TruncatedSeries> z2pow{TruncatedSeries::constant(1, z_order)};
  for (int l = 1; l <= l_max; ++l) z2pow.push_back(z2pow.back() * z2);

  auto weighted_sum = [&](int j, int shift, bool cube_weight) {
    // sum_l <C_l>_j * w(l) * z2^{l - shift}
    TruncatedSeries s(z_order);
    for (int l = shift; l <= l_max; ++l) {
      Rational w = cube_weight ? Rational(l) * (l + 1) * (2 * l + 1) / 6 : Rational(1);
      if (j > cyclo_taylor[static_cast<size_t>(l)].order()) {
        throw InsufficientCoefficients("cyclotomic Taylor data is too shallow");
      }
      s = s + z2pow[static_cast<size_t>(l - shift)] *
                  (cyclo_taylor[static_cast<size_t>(l)].coeff(j) * w);
    }
    return s;
  };

  for (int k = 0; k <= std::min(k_top, 3); ++k) {
    TruncatedSeries rhs(z_order);
    switch (k) {
      case 0: rhs = weighted_sum(0, 0, false); break;
      case 1: rhs = weighted_sum(1, 0, false); break;
      case 2: rhs = weighted_sum(2, 0, false) - weighted_sum(0, 1, true); break;
      case 3: rhs = weighted_sum(3, 0, false) - weighted_sum(1, 1, true); break;
    }
    LemmaCompareReport::Identity id;
    id.k = k;
    if (k >= static_cast<int>(loop.R.size())) {
      throw InsufficientCoefficients("loop data lacks R_" + std::to_string(k));
    }
    // the shifted sums in the k = 2, 3 identities lose one z^2 power of reach
    int complete = k >= 2 ? 2 * l_max - 1 : 2 * l_max + 1;
    int check_to = std::min({z_order, loop.R[static_cast<size_t>(k)].order(), complete});
    for (int m = 0; m <= check_to; ++m) {
      if (loop.R[static_cast<size_t>(k)].coeff(m) != rhs.coeff(m)) {
        id.pass = false;
        id.first_failing_order = m;
        rep.pass = false;
        break;
      }
    }
    rep.identities.push_back(id);
  }
  return rep;
}

LemmaFullReport lemma_compare_full(const CyclotomicCoefficients& cyclo,
                                   const LoopData& loop, int x_order, int h_order) {
  const int k_need = (x_order + h_order) / 2;
  if (cyclo.k_max < k_need) {
    throw InsufficientCoefficients("bivariate check needs cyclotomic k_max >= " +
                                   std::to_string(k_need));
  }
  if (loop.k_loops < h_order || loop.m_series - h_order < x_order) {
    throw InsufficientCoefficients("loop data too shallow for the bivariate check");
  }
  BivariateSeries lhs(x_order, h_order);
  for (int k = 0; k <= h_order; ++k) {
    const TruncatedSeries& Rk = loop.R[static_cast<size_t>(k)];
    for (int i = 0; i <= x_order; ++i) lhs.set_coeff(i, k, Rk.coeff(i));
  }
  BivariateSeries z2x = BivariateSeries::from_x_series(z_squared_series(x_order),
                                                       x_order, h_order);
  BivariateSeries rhs(x_order, h_order);
  BivariateSeries factor_prod(x_order, h_order);
  factor_prod.set_coeff(0, 0, 1);
  for (int k = 0; k <= k_need; ++k) {
    if (k > 0) {
      TruncatedSeries zjh = exp_series(k, h_order) + exp_series(-k, h_order) -
                            TruncatedSeries::constant(2, h_order);
      factor_prod = factor_prod *
                    (z2x - BivariateSeries::from_h_series(zjh, x_order, h_order));
    }
    BivariateSeries ck = BivariateSeries::from_h_series(
        cyclo.coeffs.at(static_cast<size_t>(k)).series_at_exp(h_order), x_order,
        h_order);
    rhs = rhs + ck * factor_prod;
  }
  LemmaFullReport rep;
  BivariateSeries diff = lhs - rhs;
  rep.pass = diff.is_zero();
  rep.x_verified = x_order;
  rep.h_verified = h_order;
  if (!rep.pass) {
    rep.x_verified = -1;
    rep.h_verified = -1;
    for (int a = 0; a <= x_order; ++a) {
      bool ok = true;
      for (int j = 0; j <= h_order && ok; ++j)
        for (int i = 0; i <= a && ok; ++i) ok = diff.coeff(i, j) == 0;
      if (ok) rep.x_verified = a; else break;
    }
    for (int bnd = 0; bnd <= h_order; ++bnd) {
      bool ok = true;
      for (int j = 0; j <= bnd && ok; ++j)
        for (int i = 0; i <= x_order && ok; ++i) ok = diff.coeff(i, j) == 0;
      if (ok) rep.h_verified = bnd; else break;
    }
  }
  return rep;
}

std::string LoopData::to_json() const {
  nlohmann::json j;
  j["knot"] = knot;
  j["delta"] = nlohmann::json::parse(delta.to_json());
  j["k_loops"] = k_loops;
  j["m_series"] = m_series;
  auto& rr = j["R"] = nlohmann::json::array();
  for (const auto& s : R) rr.push_back(nlohmann::json::parse(s.to_json()));
  auto& pp = j["P"] = nlohmann::json::array();
  for (const auto& p : P) pp.push_back(nlohmann::json::parse(p.to_json()));
  return j.dump();
}

}  // namespace cj
