#pragma once

#include <boost/multiprecision/mpfr.hpp>

#include <string>

#include "laurent.hpp"

namespace cj {

using Real = boost::multiprecision::mpfr_float;

struct PrecisionExhausted : Error {
  explicit PrecisionExhausted(const std::string& w)
      : Error(ErrorCode::precision_exhausted, w) {}
};

/// Working precision for subsequently constructed PrecisionComplex values.
void set_working_precision(int bits);
int working_precision_bits();

/// Complex number at the configured binary working precision together with a
/// tracked absolute error radius. Every operation grows the radius by the
/// propagated input radii plus one rounding ulp of the result.
class PrecisionComplex {
 public:
  PrecisionComplex() : re_(0), im_(0), err_(0) {}
  PrecisionComplex(Real re, Real im, double err = 0)
      : re_(std::move(re)), im_(std::move(im)), err_(err) {}
  explicit PrecisionComplex(double re, double im = 0, double err = 0)
      : re_(re), im_(im), err_(err) {}
  explicit PrecisionComplex(const Rational& r);

  const Real& re() const { return re_; }
  const Real& im() const { return im_; }
  double error_radius() const { return err_; }
  void add_error(double e) { err_ += e; }

  double abs_approx() const;   // |value|, ignoring the radius
  double abs_upper() const { return abs_approx() + err_; }

  PrecisionComplex operator+(const PrecisionComplex& o) const;
  PrecisionComplex operator-(const PrecisionComplex& o) const;
  PrecisionComplex operator-() const;
  PrecisionComplex operator*(const PrecisionComplex& o) const;
  PrecisionComplex operator/(const PrecisionComplex& o) const;
  PrecisionComplex& operator+=(const PrecisionComplex& o);
  PrecisionComplex& operator*=(const PrecisionComplex& o);

  PrecisionComplex pow_int(long k) const;
  PrecisionComplex conj() const { return {re_, -im_, err_}; }

  /// e^z with first-order error propagation.
  static PrecisionComplex exp(const PrecisionComplex& z);

  /// Distance |*this - target| ignoring radii.
  double distance(const PrecisionComplex& target) const;

  /// True iff |*this - target| + combined radii < tau; throws
  /// PrecisionExhausted when the combined radius alone exceeds tau/2.
  bool certified_close(const PrecisionComplex& target, double tau) const;

  std::string to_string() const;

 private:
  double ulp() const;
  Real re_, im_;
  double err_;
};

/// Sum of coeff * q0^k over the terms of p, with tracked error radius.
PrecisionComplex eval_complex(const LaurentPolynomial& p,
                              const PrecisionComplex& q0);

}  // namespace cj
