#include "alexander.hpp"

#include <vector>

namespace cj {
namespace {

using Matrix = std::vector<std::vector<LaurentPolynomial>>;

Matrix identity(int d) {
  Matrix m(d, std::vector<LaurentPolynomial>(d));
  for (int i = 0; i < d; ++i) m[i][i] = LaurentPolynomial::one();
  return m;
}

Matrix multiply(const Matrix& a, const Matrix& b) {
  int d = static_cast<int>(a.size());
  Matrix r(d, std::vector<LaurentPolynomial>(d));
  for (int i = 0; i < d; ++i) {
    for (int k = 0; k < d; ++k) {
      if (a[i][k].is_zero()) continue;
      for (int j = 0; j < d; ++j) {
        if (!b[k][j].is_zero()) r[i][j] += a[i][k] * b[k][j];
      }
    }
  }
  return r;
}

/// Reduced Burau matrix of sigma_i^{+-1} on S strands ((S-1) x (S-1)).
Matrix burau_generator(int S, int letter) {
  int d = S - 1;
  int i = std::abs(letter);  // generator index, 1-based
  bool inv = letter < 0;
  Matrix m = identity(d);
  LaurentPolynomial t = LaurentPolynomial::variable();
  LaurentPolynomial tinv = LaurentPolynomial::monomial(-1, 1);
  auto set = [&](int r, int c, const LaurentPolynomial& v) { m[r - 1][c - 1] = v; };
  if (!inv) {
    if (i > 1) set(i - 1, i, t);
    set(i, i, -t);
    if (i < d) set(i + 1, i, LaurentPolynomial::one());
  } else {
    if (i > 1) set(i - 1, i, LaurentPolynomial::one());
    set(i, i, -tinv);
    if (i < d) set(i + 1, i, tinv);
  }
  return m;
}

LaurentPolynomial determinant(Matrix m) {
  // cofactor expansion; matrices here are at most 6x6
  int d = static_cast<int>(m.size());
  if (d == 1) return m[0][0];
  LaurentPolynomial det;
  for (int r = 0; r < d; ++r) {
    if (m[r][0].is_zero()) continue;
    Matrix minor(d - 1, std::vector<LaurentPolynomial>(d - 1));
    for (int i = 0, ii = 0; i < d; ++i) {
      if (i == r) continue;
      for (int j = 1; j < d; ++j) minor[ii][j - 1] = m[i][j];
      ++ii;
    }
    LaurentPolynomial term = m[r][0] * determinant(std::move(minor));
    if (r % 2 == 0) det += term; else det -= term;
  }
  return det;
}

}  // namespace

LaurentPolynomial alexander(const BraidWord& braid) {
  int S = braid.strands();
  if (S > 7) throw Error(ErrorCode::usage, "alexander path limited to 7 strands");
  Matrix m = identity(S - 1);
  for (int letter : braid.letters()) m = multiply(burau_generator(S, letter), m);
  for (int i = 0; i < S - 1; ++i) m[i][i] -= LaurentPolynomial::one();
  LaurentPolynomial det = determinant(std::move(m));
  // det(Burau - I) = +- t^j Delta(t) (1 - t^S) / (1 - t)
  LaurentPolynomial cyc;  // 1 + t + ... + t^{S-1}
  for (int k = 0; k < S; ++k) cyc += LaurentPolynomial::monomial(k, 1);
  LaurentPolynomial delta = det.exact_div(cyc);
  if (delta.is_zero()) {
    throw Error(ErrorCode::internal, "vanishing Alexander determinant");
  }
  auto [lo, hi] = delta.degrees();
  if ((lo + hi) % 2 != 0) {
    throw Error(ErrorCode::internal, "Alexander polynomial does not symmetrize");
  }
  delta = delta.shifted(-(lo + hi) / 2);
  Rational at_one = delta.eval_one();
  if (at_one == -1) {
    delta = -delta;
  } else if (at_one != 1) {
    throw Error(ErrorCode::internal, "Alexander normalization failed");
  }
  if (delta != delta.mirror()) {
    throw Error(ErrorCode::internal, "Alexander polynomial is not symmetric");
  }
  return delta;
}

}  // namespace cj
