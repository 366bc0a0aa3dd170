#include "precision.hpp"

#include <cmath>
#include <sstream>

namespace cj {

namespace {
int g_bits = 128;
}

void set_working_precision(int bits) {
  if (bits < 64) throw Error(ErrorCode::usage, "working precision below 64 bits");
  g_bits = bits;
  // boost's mpfr_float counts decimal digits
  Real::default_precision(static_cast<unsigned>(bits * 0.30103) + 2);
}

int working_precision_bits() { return g_bits; }

namespace {
struct PrecisionInit {
  PrecisionInit() { set_working_precision(128); }
} g_precision_init;

double to_double(const Real& r) { return r.convert_to<double>(); }
}  // namespace

PrecisionComplex::PrecisionComplex(const Rational& r)
    : re_(Real(r.get_num().get_str()) / Real(r.get_den().get_str())),
      im_(0),
      err_(0) {
  err_ = ulp();
}

double PrecisionComplex::abs_approx() const {
  double x = to_double(re_);
  double y = to_double(im_);
  return std::hypot(x, y);
}

double PrecisionComplex::ulp() const {
  return abs_approx() * std::ldexp(1.0, 2 - g_bits);
}

PrecisionComplex PrecisionComplex::operator+(const PrecisionComplex& o) const {
  PrecisionComplex r(re_ + o.re_, im_ + o.im_, err_ + o.err_);
  r.err_ += r.ulp();
  return r;
}

PrecisionComplex PrecisionComplex::operator-(const PrecisionComplex& o) const {
  PrecisionComplex r(re_ - o.re_, im_ - o.im_, err_ + o.err_);
  r.err_ += r.ulp();
  return r;
}

PrecisionComplex PrecisionComplex::operator-() const {
  return {-re_, -im_, err_};
}

PrecisionComplex PrecisionComplex::operator*(const PrecisionComplex& o) const {
  PrecisionComplex r(re_ * o.re_ - im_ * o.im_, re_ * o.im_ + im_ * o.re_, 0);
  r.err_ = err_ * o.abs_approx() + o.err_ * abs_approx() + err_ * o.err_ + r.ulp();
  return r;
}

PrecisionComplex PrecisionComplex::operator/(const PrecisionComplex& o) const {
  double ob = o.abs_approx();
  if (ob == 0 || o.err_ >= ob) {
    throw PrecisionExhausted("division by a value indistinguishable from zero");
  }
  Real d = o.re_ * o.re_ + o.im_ * o.im_;
  PrecisionComplex r((re_ * o.re_ + im_ * o.im_) / d,
                     (im_ * o.re_ - re_ * o.im_) / d, 0);
  // first-order: |a/b| error <= err_a/|b| + |a| err_b/|b|^2, inflated for the
  // radius of b itself
  double inflate = 1.0 / (1.0 - o.err_ / ob);
  r.err_ = (err_ / ob + abs_approx() * o.err_ / (ob * ob)) * inflate + r.ulp();
  return r;
}

PrecisionComplex& PrecisionComplex::operator+=(const PrecisionComplex& o) {
  *this = *this + o;
  return *this;
}

PrecisionComplex& PrecisionComplex::operator*=(const PrecisionComplex& o) {
  *this = *this * o;
  return *this;
}

PrecisionComplex PrecisionComplex::pow_int(long k) const {
  if (k == 0) return PrecisionComplex(Real(1), Real(0), 0);
  PrecisionComplex base = *this;
  bool invert = k < 0;
  unsigned long e = invert ? static_cast<unsigned long>(-k) : static_cast<unsigned long>(k);
  PrecisionComplex acc(Real(1), Real(0), 0);
  while (e) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  if (invert) return PrecisionComplex(Real(1), Real(0), 0) / acc;
  return acc;
}

PrecisionComplex PrecisionComplex::exp(const PrecisionComplex& z) {
  Real m = boost::multiprecision::exp(z.re_);
  PrecisionComplex r(m * boost::multiprecision::cos(z.im_),
                     m * boost::multiprecision::sin(z.im_), 0);
  // d(e^z) = e^z dz
  r.err_ = r.abs_approx() * z.err_ + r.ulp();
  return r;
}

double PrecisionComplex::distance(const PrecisionComplex& target) const {
  return std::hypot(to_double(re_ - target.re_), to_double(im_ - target.im_));
}

bool PrecisionComplex::certified_close(const PrecisionComplex& target,
                                       double tau) const {
  double radius = err_ + target.err_;
  if (radius >= tau / 2) {
    throw PrecisionExhausted("error radius exceeds half the comparison tolerance");
  }
  return distance(target) + radius < tau;
}

std::string PrecisionComplex::to_string() const {
  std::ostringstream out;
  out.precision(20);
  out << to_double(re_);
  double y = to_double(im_);
  out << (y < 0 ? " - " : " + ") << std::abs(y) << "i (err " << err_ << ")";
  return out.str();
}

PrecisionComplex eval_complex(const LaurentPolynomial& p,
                              const PrecisionComplex& q0) {
  if (q0.abs_approx() == 0) throw Error(ErrorCode::usage, "evaluation at q=0");
  PrecisionComplex acc;
  if (p.is_zero()) return acc;
  // walk exponents in order, reusing incremental powers
  long prev = p.terms().begin()->first;
  PrecisionComplex power = q0.pow_int(prev);
  for (const auto& [e, c] : p.terms()) {
    while (prev < e) {
      power = power * q0;
      ++prev;
    }
    acc += PrecisionComplex(c) * power;
  }
  return acc;
}

}  // namespace cj
