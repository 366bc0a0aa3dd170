#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "precision.hpp"

using namespace cj;

TEST_CASE("basic arithmetic with error tracking") {
  set_working_precision(128);
  PrecisionComplex a(Real(3), Real(4), 1e-30);
  PrecisionComplex b(Real(1), Real(-2), 2e-30);

  PrecisionComplex s = a + b;
  CHECK(s.re() == 4);
  CHECK(s.im() == 2);
  CHECK(s.error_radius() >= 3e-30);

  PrecisionComplex p = a * b;  // (3+4i)(1-2i) = 11 - 2i
  CHECK(p.re() == 11);
  CHECK(p.im() == -2);
  // |a| err_b + |b| err_a plus rounding
  CHECK(p.error_radius() >= 5 * 2e-30 + std::sqrt(5.0) * 1e-30);
  CHECK(p.error_radius() < 1e-28);

  PrecisionComplex q = p / b;  // back to a
  CHECK(q.distance(a) < 1e-35);
}

TEST_CASE("powers, conjugate, abs") {
  PrecisionComplex i(Real(0), Real(1), 0);
  PrecisionComplex m = i.pow_int(2);
  CHECK(m.re() == -1);
  CHECK(m.im() == 0);
  PrecisionComplex inv = i.pow_int(-1);
  CHECK(inv.distance(i.conj()) == 0);
  CHECK(PrecisionComplex(Real(3), Real(4), 0).abs_approx() == doctest::Approx(5));
  CHECK(PrecisionComplex(Real(3), Real(4), 0.5).abs_upper() == doctest::Approx(5.5));
}

TEST_CASE("complex exponential") {
  // e^{i pi} = -1, via a high-precision pi
  Real pi = atan(Real(1)) * 4;
  PrecisionComplex z(Real(0), pi, 0);
  PrecisionComplex e = PrecisionComplex::exp(z);
  CHECK(e.distance(PrecisionComplex(Real(-1), Real(0), 0)) < 1e-35);

  // e^{1+0i} matches the real exponential
  PrecisionComplex one(Real(1), Real(0), 0);
  CHECK(PrecisionComplex::exp(one).re() == boost::multiprecision::exp(Real(1)));
}

TEST_CASE("certified comparison") {
  PrecisionComplex a(Real(1), Real(0), 1e-20);
  PrecisionComplex target(Real(1), Real(1e-12), 0);
  CHECK(a.certified_close(target, 1e-10));
  CHECK(!a.certified_close(PrecisionComplex(Real(2), Real(0), 0), 1e-10));

  // radius dominates the tolerance: no verdict is honest
  PrecisionComplex fuzzy(Real(1), Real(0), 1.0);
  CHECK_THROWS_AS(fuzzy.certified_close(target, 1e-10), PrecisionExhausted);
}

TEST_CASE("division by an uncertain zero") {
  PrecisionComplex tiny(Real("1e-40"), Real(0), 1e-20);
  PrecisionComplex one(Real(1), Real(0), 0);
  CHECK_THROWS_AS(one / tiny, PrecisionExhausted);
}

TEST_CASE("polynomial evaluation") {
  // (q + q^-1) at q = i vanishes
  LaurentPolynomial p = LaurentPolynomial::monomial(1, 1) +
                        LaurentPolynomial::monomial(-1, 1);
  PrecisionComplex i(Real(0), Real(1), 0);
  PrecisionComplex v = eval_complex(p, i);
  CHECK(v.abs_approx() < 1e-35);

  // constant term only
  PrecisionComplex c = eval_complex(LaurentPolynomial::constant(Rational(7, 2)), i);
  CHECK(c.re() == Real(7) / 2);
}

TEST_CASE("precision setting round trip") {
  set_working_precision(256);
  CHECK(working_precision_bits() == 256);
  set_working_precision(128);
  CHECK(working_precision_bits() == 128);
}
