#include "rmatrix.hpp"

#include <cassert>

namespace cj {

LaurentPolynomial quantum_integer(int k) {
  // [k] = u^{2(k-1)} + u^{2(k-3)} + ... + u^{-2(k-1)}
  LaurentPolynomial p;
  for (int t = 0; t < k; ++t) p.set_coeff(2L * (k - 1) - 4L * t, 1);
  return p;
}

LaurentPolynomial quantum_factorial(int k) {
  LaurentPolynomial p = LaurentPolynomial::one();
  for (int t = 2; t <= k; ++t) p *= quantum_integer(t);
  return p;
}

LaurentPolynomial quantum_binomial(int a, int m) {
  LaurentPolynomial p = LaurentPolynomial::one();
  for (int t = 1; t <= m; ++t) {
    p *= quantum_integer(a - t + 1);
    p = p.exact_div(quantum_integer(t));
  }
  return p;
}

RMatrix::RMatrix(int dimension) : n_(dimension), N_(dimension - 1) {
  if (n_ < 1) throw Error(ErrorCode::usage, "module dimension must be >= 1");
  pos_.resize(static_cast<size_t>(n_) * n_);
  neg_.resize(static_cast<size_t>(n_) * n_);
  build_positive();
  build_negative();
  compute_theta();
}

void RMatrix::build_positive() {
  // R = q^{H (x) H / 4} sum_m  s^{m(m-1)/2} (s - s^-1)^m / [m]!  E^m (x) F^m,
  // composed with the flip. On v_i (x) v_j the E^m/F^m matrix elements give
  // [i choose m][N-j choose m][m]!, so each output term is
  //   [i,m][N-j,m][m]! (s-s^-1)^m u^{m(m-1)} u^{(N-2(i-m))(N-2(j+m))}
  // at (v_{j+m}, v_{i-m}).
  LaurentPolynomial smul;  // s - s^-1 = u^2 - u^-2
  smul.set_coeff(2, 1);
  smul.set_coeff(-2, -1);
  for (int i = 0; i <= N_; ++i) {
    for (int j = 0; j <= N_; ++j) {
      auto& out = pos_[idx(i, j)];
      LaurentPolynomial smul_pow = LaurentPolynomial::one();
      for (int m = 0; m <= std::min(i, N_ - j); ++m) {
        LaurentPolynomial c = quantum_binomial(i, m) * quantum_binomial(N_ - j, m) *
                              quantum_factorial(m) * smul_pow;
        long cartan = static_cast<long>(N_ - 2 * (i - m)) * (N_ - 2 * (j + m));
        c = c.shifted(cartan + static_cast<long>(m) * (m - 1));
        out.push_back({j + m, i - m, std::move(c)});
        smul_pow *= smul;
      }
    }
  }
}

void RMatrix::build_negative() {
  // Invert the braiding block by block: index pairs of fixed total i+j.
  // Ordering outputs by their first index, each block is triangular with
  // monomial diagonal (the m = 0 Cartan terms), so back-substitution stays in
  // the Laurent ring.
  for (int w2 = 0; w2 <= 2 * N_; ++w2) {
    int lo = std::max(0, w2 - N_);
    int hi = std::min(N_, w2);
    int dim = hi - lo + 1;
    // M[r][c]: coefficient from input pair (c, w2-c) to output pair (r, w2-r)
    auto entry = [&](int r, int c) -> LaurentPolynomial {
      for (const auto& e : pos_[idx(c, w2 - c)]) {
        if (e.out_i == r) return e.coeff;
      }
      return {};
    };
    // Solve M X = I; X[c][t] computed rows r ascending, unknown c = w2 - r.
    std::vector<std::vector<LaurentPolynomial>> X(
        dim, std::vector<LaurentPolynomial>(dim));
    for (int t = lo; t <= hi; ++t) {
      for (int r = lo; r <= hi; ++r) {
        int c_solve = w2 - r;
        LaurentPolynomial rhs = (r == t) ? LaurentPolynomial::one() : LaurentPolynomial();
        for (int c = c_solve + 1; c <= hi; ++c) {
          LaurentPolynomial m_rc = entry(r, c);
          if (m_rc.is_zero() || X[c - lo][t - lo].is_zero()) continue;
          rhs -= m_rc * X[c - lo][t - lo];
        }
        if (!rhs.is_zero()) {
          X[c_solve - lo][t - lo] = rhs.exact_div(entry(r, c_solve));
        }
      }
    }
    for (int t = lo; t <= hi; ++t) {
      auto& out = neg_[idx(t, w2 - t)];
      for (int c = lo; c <= hi; ++c) {
        if (!X[c - lo][t - lo].is_zero()) {
          out.push_back({c, w2 - c, X[c - lo][t - lo]});
        }
      }
    }
  }
}

void RMatrix::compute_theta() {
  // Partial trace over the second strand of (1 (x) mu) Rhat must be a scalar
  // monomial; that monomial is the framing factor of one positive curl.
  LaurentPolynomial theta;
  for (int i = 0; i <= N_; ++i) {
    LaurentPolynomial t;
    for (int x = 0; x <= i; ++x) {
      for (const auto& e : pos_[idx(i, x)]) {
        if (e.out_i == i && e.out_j == x) {
          t += e.coeff.shifted(mu_exponent(x));
        }
      }
    }
    if (i == 0) {
      theta = t;
    } else if (t != theta) {
      throw Error(ErrorCode::internal, "curl trace is not scalar; braiding conventions broken");
    }
  }
  if (theta.terms().size() != 1) {
    throw Error(ErrorCode::internal, "curl factor is not a monomial");
  }
  const auto& [e, c] = *theta.terms().begin();
  if (c != 1 && c != -1) {
    throw Error(ErrorCode::internal, "curl factor is not a unit monomial");
  }
  theta_exp_ = e;
  theta_sign_ = (c == 1) ? 1 : -1;
}

LaurentPolynomial RMatrix::quantum_dimension() const {
  LaurentPolynomial d;
  for (int j = 0; j <= N_; ++j) {
    d += LaurentPolynomial::monomial(mu_exponent(j), 1);
  }
  return d;
}

}  // namespace cj
