#pragma once

#include <string>
#include <vector>

#include "laurent.hpp"

namespace cj {

struct InsufficientCoefficients : Error {
  explicit InsufficientCoefficients(const std::string& w)
      : Error(ErrorCode::insufficient_coefficients, w) {}
};

/// Cyclotomic expansion coefficients C_{K,k}, k = 0..k_max, of a knot: the
/// unique Laurent polynomials with J_{K,n} = sum_k kernel(n,k) C_{K,k}.
struct CyclotomicCoefficients {
  std::string knot;
  int k_max = 0;
  std::vector<LaurentPolynomial> coeffs;  // index k

  std::string to_json() const;
  static CyclotomicCoefficients from_json(const std::string& text);
};

/// Kernel of the cyclotomic expansion:
/// prod_{j=1}^{k} (q^n + q^-n - q^j - q^-j). Zero when k >= n >= 1.
/// Memoized; single-threaded access assumed.
const LaurentPolynomial& cyclotomic_kernel(int n, int k);

/// Forward sum: J_{K,n} from coefficients. Requires n <= k_max + 1 so the sum
/// is not truncated.
LaurentPolynomial jones_from_cyclotomic(const CyclotomicCoefficients& C, int n);

/// Triangular inversion. jones_table[i] is J_{K,n} for n = i + 1 and must
/// cover n = 1..k_max+1. Exactness of every division is Habiro's theorem; an
/// InexactDivision here means the input is not a colored Jones table.
CyclotomicCoefficients cyclotomic_from_jones(
    const std::vector<LaurentPolynomial>& jones_table, int k_max,
    const std::string& knot_name = "");

struct IntegralityReport {
  std::vector<bool> per_k;
  bool pass = true;
  int first_failure = -1;
};

IntegralityReport integrality_check(const CyclotomicCoefficients& C);

/// Taylor data <C_{K,l}>_j for l = 0..k_max, j = 0..order:
/// result[l].coeff(j) is the h^j coefficient of C_{K,l}(e^h).
std::vector<TruncatedSeries> cyclotomic_taylor(const CyclotomicCoefficients& C,
                                               int order);

}  // namespace cj
