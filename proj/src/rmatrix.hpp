#pragma once

#include <vector>

#include "laurent.hpp"

namespace cj {

/// One output term of the braiding operator on a pair of strand indices.
/// Coefficients are exact Laurent polynomials in u = q^{1/4}; quarter powers
/// of q are the natural unit for the Cartan part of the braiding.
struct BraidingEntry {
  int out_i;
  int out_j;
  LaurentPolynomial coeff;  // in u
};

/// Braiding data for the n-dimensional irreducible sl2 module: the positive
/// and negative crossing operators on basis pairs, the trace weights used to
/// close strands, and the framing factor of a single positive curl.
///
/// Basis v_0..v_{N} (N = n-1) with weights N-2j. The positive braiding sends
/// v_i (x) v_j to a sum over v_{j+m} (x) v_{i-m}; total index i+j is
/// conserved, which the contraction engine relies on.
class RMatrix {
 public:
  explicit RMatrix(int dimension);

  int dimension() const { return n_; }

  const std::vector<BraidingEntry>& entries(int i, int j, bool positive) const {
    return positive ? pos_[idx(i, j)] : neg_[idx(i, j)];
  }

  /// u-exponent of the closure weight on v_j.
  long mu_exponent(int j) const { return 2L * (n_ - 1 - 2L * j); }

  /// Framing factor of one positive curl: theta = theta_sign * u^theta_exp.
  int theta_sign() const { return theta_sign_; }
  long theta_exponent() const { return theta_exp_; }

  /// Quantum dimension as a Laurent polynomial in u.
  LaurentPolynomial quantum_dimension() const;

 private:
  size_t idx(int i, int j) const { return static_cast<size_t>(i) * n_ + j; }
  void build_positive();
  void build_negative();
  void compute_theta();

  int n_;
  int N_;  // highest weight = n-1
  std::vector<std::vector<BraidingEntry>> pos_, neg_;
  int theta_sign_ = 1;
  long theta_exp_ = 0;
};

/// Balanced quantum integer [k] = (s^k - s^-k)/(s - s^-1) in u = s^{1/2}.
LaurentPolynomial quantum_integer(int k);
LaurentPolynomial quantum_factorial(int k);
LaurentPolynomial quantum_binomial(int a, int m);

}  // namespace cj
