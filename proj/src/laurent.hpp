#pragma once

#include <gmpxx.h>

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace cj {

using Rational = mpq_class;

/// Error hierarchy shared across the library. Each error carries a stable
/// code so the C API can translate exceptions into error codes.
enum class ErrorCode {
  internal,
  inexact_division,
  zero_polynomial,
  zero_constant_term,
  not_a_knot,
  precision_exhausted,
  tail_not_certified,
  inconsistent_fit,
  insufficient_coefficients,
  no_polynomial_in_window,
  degenerate_data,
  cache_mismatch,
  missing_artifacts,
  usage,
  io,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

struct InexactDivision : Error {
  explicit InexactDivision(const std::string& w)
      : Error(ErrorCode::inexact_division, w) {}
};
struct ZeroPolynomial : Error {
  explicit ZeroPolynomial(const std::string& w)
      : Error(ErrorCode::zero_polynomial, w) {}
};
struct ZeroConstantTerm : Error {
  explicit ZeroConstantTerm(const std::string& w)
      : Error(ErrorCode::zero_constant_term, w) {}
};

class TruncatedSeries;

/// Exact Laurent polynomial over Q: a finite map exponent -> coefficient.
/// Canonical form never stores a zero coefficient, so coefficient-wise
/// equality of the term maps is structural equality.
class LaurentPolynomial {
 public:
  using TermMap = std::map<long, Rational>;

  LaurentPolynomial() = default;

  static LaurentPolynomial constant(const Rational& c);
  static LaurentPolynomial monomial(long exponent, const Rational& c);
  static LaurentPolynomial one() { return constant(1); }
  static LaurentPolynomial variable() { return monomial(1, 1); }

  bool is_zero() const { return terms_.empty(); }
  const TermMap& terms() const { return terms_; }
  Rational coeff(long exponent) const;
  void set_coeff(long exponent, const Rational& c);

  bool operator==(const LaurentPolynomial& o) const { return terms_ == o.terms_; }
  bool operator!=(const LaurentPolynomial& o) const { return !(*this == o); }

  LaurentPolynomial operator+(const LaurentPolynomial& o) const;
  LaurentPolynomial operator-(const LaurentPolynomial& o) const;
  LaurentPolynomial operator-() const;
  LaurentPolynomial operator*(const LaurentPolynomial& o) const;
  LaurentPolynomial operator*(const Rational& c) const;
  LaurentPolynomial& operator+=(const LaurentPolynomial& o);
  LaurentPolynomial& operator-=(const LaurentPolynomial& o);
  LaurentPolynomial& operator*=(const LaurentPolynomial& o);

  /// Exact quotient: returns c with o * c == *this. Throws InexactDivision
  /// when no exact Laurent quotient exists.
  LaurentPolynomial exact_div(const LaurentPolynomial& o) const;

  Rational l1_norm() const;

  /// (mindeg, maxdeg); throws ZeroPolynomial on the zero polynomial.
  std::pair<long, long> degrees() const;
  long mindeg() const { return degrees().first; }
  long maxdeg() const { return degrees().second; }

  Rational eval_rational(const Rational& q0) const;
  Rational eval_one() const;  // q = 1

  /// q -> q^-1
  LaurentPolynomial mirror() const;
  /// q -> q^k, k != 0
  LaurentPolynomial substitute_power(long k) const;
  /// multiply by q^shift
  LaurentPolynomial shifted(long shift) const;

  bool has_integer_coefficients() const;

  /// Taylor coefficients of p(e^h) through h^order, exact rationals.
  TruncatedSeries series_at_exp(int order) const;

  std::string to_json() const;
  static LaurentPolynomial from_json(const std::string& text);

  std::string to_string(const std::string& var = "q") const;

 private:
  void prune(long exponent);
  TermMap terms_;
};

/// Exact rational power series truncated at a stated order. Arithmetic
/// between two series truncates to the smaller order.
class TruncatedSeries {
 public:
  explicit TruncatedSeries(int order) : c_(order + 1) {}
  static TruncatedSeries constant(const Rational& c, int order);

  int order() const { return static_cast<int>(c_.size()) - 1; }
  const Rational& coeff(int k) const { return c_.at(k); }
  void set_coeff(int k, const Rational& v) { c_.at(k) = v; }

  bool operator==(const TruncatedSeries& o) const { return c_ == o.c_; }

  TruncatedSeries operator+(const TruncatedSeries& o) const;
  TruncatedSeries operator-(const TruncatedSeries& o) const;
  TruncatedSeries operator-() const;
  TruncatedSeries operator*(const TruncatedSeries& o) const;
  TruncatedSeries operator*(const Rational& c) const;

  TruncatedSeries truncated(int order) const;

  /// Multiplicative inverse to the truncation order; requires a nonzero
  /// constant term.
  TruncatedSeries invert() const;
  TruncatedSeries pow(int k) const;

  bool is_zero() const;

  std::string to_json() const;
  static TruncatedSeries from_json(const std::string& text);

 private:
  std::vector<Rational> c_;
};

/// Dense bivariate series in (x, h), truncated to the rectangle
/// x^0..x^xorder by h^0..h^horder.
class BivariateSeries {
 public:
  BivariateSeries(int x_order, int h_order)
      : xo_(x_order), ho_(h_order),
        c_(static_cast<size_t>(x_order + 1) * (h_order + 1)) {}

  int x_order() const { return xo_; }
  int h_order() const { return ho_; }
  const Rational& coeff(int i, int j) const { return c_[idx(i, j)]; }
  void set_coeff(int i, int j, const Rational& v) { c_[idx(i, j)] = v; }

  bool operator==(const BivariateSeries& o) const {
    return xo_ == o.xo_ && ho_ == o.ho_ && c_ == o.c_;
  }

  BivariateSeries operator+(const BivariateSeries& o) const;
  BivariateSeries operator-(const BivariateSeries& o) const;
  BivariateSeries operator*(const BivariateSeries& o) const;

  /// Embed a series in x (resp. h) into the rectangle.
  static BivariateSeries from_x_series(const TruncatedSeries& s, int x_order,
                                       int h_order);
  static BivariateSeries from_h_series(const TruncatedSeries& s, int x_order,
                                       int h_order);

  bool is_zero() const;

 private:
  size_t idx(int i, int j) const {
    return static_cast<size_t>(i) * (ho_ + 1) + j;
  }
  int xo_, ho_;
  std::vector<Rational> c_;
};

Rational rational_from_string(const std::string& s);
std::string rational_to_string(const Rational& r);

/// n^k for integer n (k >= 0), exact.
Rational rational_pow(const Rational& base, int k);
Rational factorial(int k);

/// Series of e^{a h} through h^order.
TruncatedSeries exp_series(long a, int order);

}  // namespace cj
