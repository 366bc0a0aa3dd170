#include "laurent.hpp"

#include <algorithm>
#include <sstream>

#include "json.hpp"

namespace cj {

namespace {
using nlohmann::json;
}

Rational rational_from_string(const std::string& s) {
  Rational r;
  if (r.set_str(s, 10) != 0) {
    throw Error(ErrorCode::io, "bad rational literal: " + s);
  }
  r.canonicalize();
  return r;
}

std::string rational_to_string(const Rational& r) { return r.get_str(); }

Rational rational_pow(const Rational& base, int k) {
  Rational acc = 1;
  for (int i = 0; i < k; ++i) acc *= base;
  return acc;
}

Rational factorial(int k) {
  Rational acc = 1;
  for (int i = 2; i <= k; ++i) acc *= i;
  return acc;
}

TruncatedSeries exp_series(long a, int order) {
  TruncatedSeries s(order);
  Rational term = 1;
  s.set_coeff(0, term);
  for (int i = 1; i <= order; ++i) {
    term *= a;
    term /= i;
    s.set_coeff(i, term);
  }
  return s;
}

// ---------------------------------------------------------------------------
// LaurentPolynomial

LaurentPolynomial LaurentPolynomial::constant(const Rational& c) {
  return monomial(0, c);
}

LaurentPolynomial LaurentPolynomial::monomial(long exponent, const Rational& c) {
  LaurentPolynomial p;
  if (c != 0) p.terms_[exponent] = c;
  return p;
}

Rational LaurentPolynomial::coeff(long exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? Rational(0) : it->second;
}

void LaurentPolynomial::set_coeff(long exponent, const Rational& c) {
  if (c == 0)
    terms_.erase(exponent);
  else
    terms_[exponent] = c;
}

void LaurentPolynomial::prune(long exponent) {
  auto it = terms_.find(exponent);
  if (it != terms_.end() && it->second == 0) terms_.erase(it);
}

LaurentPolynomial& LaurentPolynomial::operator+=(const LaurentPolynomial& o) {
  for (const auto& [e, c] : o.terms_) {
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }
  return *this;
}

LaurentPolynomial& LaurentPolynomial::operator-=(const LaurentPolynomial& o) {
  for (const auto& [e, c] : o.terms_) {
    auto [it, inserted] = terms_.try_emplace(e, -c);
    if (!inserted) {
      it->second -= c;
      if (it->second == 0) terms_.erase(it);
    }
  }
  return *this;
}

LaurentPolynomial LaurentPolynomial::operator+(const LaurentPolynomial& o) const {
  LaurentPolynomial r = *this;
  r += o;
  return r;
}

LaurentPolynomial LaurentPolynomial::operator-(const LaurentPolynomial& o) const {
  LaurentPolynomial r = *this;
  r -= o;
  return r;
}

LaurentPolynomial LaurentPolynomial::operator-() const {
  LaurentPolynomial r;
  for (const auto& [e, c] : terms_) r.terms_[e] = -c;
  return r;
}

LaurentPolynomial LaurentPolynomial::operator*(const LaurentPolynomial& o) const {
  LaurentPolynomial r;
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : o.terms_) {
      long e = ea + eb;
      auto [it, inserted] = r.terms_.try_emplace(e, ca * cb);
      if (!inserted) {
        it->second += ca * cb;
        if (it->second == 0) r.terms_.erase(it);
      }
    }
  }
  return r;
}

LaurentPolynomial& LaurentPolynomial::operator*=(const LaurentPolynomial& o) {
  *this = *this * o;
  return *this;
}

LaurentPolynomial LaurentPolynomial::operator*(const Rational& c) const {
  LaurentPolynomial r;
  if (c == 0) return r;
  for (const auto& [e, v] : terms_) r.terms_[e] = v * c;
  return r;
}

LaurentPolynomial LaurentPolynomial::exact_div(const LaurentPolynomial& o) const {
  if (o.is_zero()) throw InexactDivision("division by zero polynomial");
  if (is_zero()) return {};
  // Shift both operands into ordinary polynomials; an exact Laurent quotient
  // exists iff the shifted polynomial division leaves no remainder.
  long amin = terms_.begin()->first;
  long bmin = o.terms_.begin()->first;
  LaurentPolynomial rem = shifted(-amin);
  LaurentPolynomial den = o.shifted(-bmin);
  long bmax = den.terms_.rbegin()->first;
  const Rational& blead = den.terms_.rbegin()->second;
  LaurentPolynomial quot;
  while (!rem.is_zero()) {
    long rmax = rem.terms_.rbegin()->first;
    if (rmax < bmax) throw InexactDivision("no exact Laurent quotient");
    long e = rmax - bmax;
    Rational c = rem.terms_.rbegin()->second / blead;
    quot.terms_[e] = c;
    rem -= den.shifted(e) * c;
  }
  return quot.shifted(amin - bmin);
}

Rational LaurentPolynomial::l1_norm() const {
  Rational acc = 0;
  for (const auto& [e, c] : terms_) acc += abs(c);
  return acc;
}

std::pair<long, long> LaurentPolynomial::degrees() const {
  if (is_zero()) throw ZeroPolynomial("degrees of the zero polynomial");
  return {terms_.begin()->first, terms_.rbegin()->first};
}

Rational LaurentPolynomial::eval_rational(const Rational& q0) const {
  if (q0 == 0) throw Error(ErrorCode::usage, "evaluation at q=0");
  Rational acc = 0;
  for (const auto& [e, c] : terms_) {
    if (e >= 0) {
      acc += c * rational_pow(q0, static_cast<int>(e));
    } else {
      acc += c / rational_pow(q0, static_cast<int>(-e));
    }
  }
  return acc;
}

Rational LaurentPolynomial::eval_one() const {
  Rational acc = 0;
  for (const auto& [e, c] : terms_) acc += c;
  return acc;
}

LaurentPolynomial LaurentPolynomial::mirror() const {
  LaurentPolynomial r;
  for (const auto& [e, c] : terms_) r.terms_[-e] = c;
  return r;
}

LaurentPolynomial LaurentPolynomial::substitute_power(long k) const {
  if (k == 0) throw Error(ErrorCode::usage, "substitute_power(0)");
  LaurentPolynomial r;
  for (const auto& [e, c] : terms_) r.terms_[e * k] = c;
  return r;
}

LaurentPolynomial LaurentPolynomial::shifted(long shift) const {
  LaurentPolynomial r;
  for (const auto& [e, c] : terms_) r.terms_[e + shift] = c;
  return r;
}

bool LaurentPolynomial::has_integer_coefficients() const {
  for (const auto& [e, c] : terms_) {
    if (c.get_den() != 1) return false;
  }
  return true;
}

TruncatedSeries LaurentPolynomial::series_at_exp(int order) const {
  // q^a contributes sum_i (a h)^i / i!.
  TruncatedSeries s(order);
  for (const auto& [e, c] : terms_) {
    Rational term = c;
    s.set_coeff(0, s.coeff(0) + term);
    for (int i = 1; i <= order; ++i) {
      term *= e;
      term /= i;
      s.set_coeff(i, s.coeff(i) + term);
    }
  }
  return s;
}

std::string LaurentPolynomial::to_json() const {
  json terms = json::array();
  for (const auto& [e, c] : terms_) {
    terms.push_back(json::array({e, rational_to_string(c)}));
  }
  return json{{"terms", terms}}.dump();
}

LaurentPolynomial LaurentPolynomial::from_json(const std::string& text) {
  json j = json::parse(text);
  LaurentPolynomial p;
  for (const auto& t : j.at("terms")) {
    long e = t.at(0).get<long>();
    Rational c = rational_from_string(t.at(1).get<std::string>());
    if (c != 0) p.terms_[e] = c;
  }
  return p;
}

std::string LaurentPolynomial::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  // print from the highest exponent down
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    Rational c = it->second;
    if (!first) out << (c < 0 ? " - " : " + ");
    if (first && c < 0) out << "-";
    first = false;
    Rational a = abs(c);
    long e = it->first;
    if (a != 1 || e == 0) out << a.get_str();
    if (e != 0) {
      if (a != 1) out << "*";
      out << var;
      if (e != 1) out << "^" << e;
    }
  }
  return out.str();
}

// ---------------------------------------------------------------------------
// TruncatedSeries

TruncatedSeries TruncatedSeries::constant(const Rational& c, int order) {
  TruncatedSeries s(order);
  s.set_coeff(0, c);
  return s;
}

TruncatedSeries TruncatedSeries::operator+(const TruncatedSeries& o) const {
  int m = std::min(order(), o.order());
  TruncatedSeries r(m);
  for (int i = 0; i <= m; ++i) r.c_[i] = c_[i] + o.c_[i];
  return r;
}

TruncatedSeries TruncatedSeries::operator-(const TruncatedSeries& o) const {
  int m = std::min(order(), o.order());
  TruncatedSeries r(m);
  for (int i = 0; i <= m; ++i) r.c_[i] = c_[i] - o.c_[i];
  return r;
}

TruncatedSeries TruncatedSeries::operator-() const {
  TruncatedSeries r(order());
  for (int i = 0; i <= order(); ++i) r.c_[i] = -c_[i];
  return r;
}

TruncatedSeries TruncatedSeries::operator*(const TruncatedSeries& o) const {
  int m = std::min(order(), o.order());
  TruncatedSeries r(m);
  for (int i = 0; i <= m; ++i) {
    if (c_[i] == 0) continue;
    for (int j = 0; i + j <= m; ++j) {
      if (o.c_[j] == 0) continue;
      r.c_[i + j] += c_[i] * o.c_[j];
    }
  }
  return r;
}

TruncatedSeries TruncatedSeries::operator*(const Rational& c) const {
  TruncatedSeries r(order());
  for (int i = 0; i <= order(); ++i) r.c_[i] = c_[i] * c;
  return r;
}

TruncatedSeries TruncatedSeries::truncated(int order) const {
  TruncatedSeries r(order);
  for (int i = 0; i <= std::min(order, this->order()); ++i) r.c_[i] = c_[i];
  return r;
}

TruncatedSeries TruncatedSeries::invert() const {
  if (c_[0] == 0) throw ZeroConstantTerm("series inversion needs a nonzero constant term");
  int m = order();
  TruncatedSeries r(m);
  r.c_[0] = 1 / c_[0];
  for (int k = 1; k <= m; ++k) {
    Rational acc = 0;
    for (int j = 1; j <= k; ++j) acc += c_[j] * r.c_[k - j];
    r.c_[k] = -acc / c_[0];
  }
  return r;
}

TruncatedSeries TruncatedSeries::pow(int k) const {
  TruncatedSeries r = TruncatedSeries::constant(1, order());
  for (int i = 0; i < k; ++i) r = r * *this;
  return r;
}

bool TruncatedSeries::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](const Rational& v) { return v == 0; });
}

std::string TruncatedSeries::to_json() const {
  json coeffs = json::array();
  for (const auto& c : c_) coeffs.push_back(rational_to_string(c));
  return json{{"order", order()}, {"coeffs", coeffs}}.dump();
}

TruncatedSeries TruncatedSeries::from_json(const std::string& text) {
  json j = json::parse(text);
  int order = j.at("order").get<int>();
  TruncatedSeries s(order);
  const auto& coeffs = j.at("coeffs");
  for (int i = 0; i <= order && i < static_cast<int>(coeffs.size()); ++i) {
    s.set_coeff(i, rational_from_string(coeffs[i].get<std::string>()));
  }
  return s;
}

// ---------------------------------------------------------------------------
// BivariateSeries

BivariateSeries BivariateSeries::operator+(const BivariateSeries& o) const {
  BivariateSeries r(std::min(xo_, o.xo_), std::min(ho_, o.ho_));
  for (int i = 0; i <= r.xo_; ++i)
    for (int j = 0; j <= r.ho_; ++j) r.set_coeff(i, j, coeff(i, j) + o.coeff(i, j));
  return r;
}

BivariateSeries BivariateSeries::operator-(const BivariateSeries& o) const {
  BivariateSeries r(std::min(xo_, o.xo_), std::min(ho_, o.ho_));
  for (int i = 0; i <= r.xo_; ++i)
    for (int j = 0; j <= r.ho_; ++j) r.set_coeff(i, j, coeff(i, j) - o.coeff(i, j));
  return r;
}

BivariateSeries BivariateSeries::operator*(const BivariateSeries& o) const {
  BivariateSeries r(std::min(xo_, o.xo_), std::min(ho_, o.ho_));
  for (int i = 0; i <= xo_ && i <= r.xo_; ++i) {
    for (int j = 0; j <= ho_ && j <= r.ho_; ++j) {
      const Rational& a = coeff(i, j);
      if (a == 0) continue;
      for (int k = 0; i + k <= r.xo_ && k <= o.xo_; ++k) {
        for (int l = 0; j + l <= r.ho_ && l <= o.ho_; ++l) {
          const Rational& b = o.coeff(k, l);
          if (b == 0) continue;
          r.set_coeff(i + k, j + l, r.coeff(i + k, j + l) + a * b);
        }
      }
    }
  }
  return r;
}

BivariateSeries BivariateSeries::from_x_series(const TruncatedSeries& s,
                                               int x_order, int h_order) {
  BivariateSeries r(x_order, h_order);
  for (int i = 0; i <= std::min(x_order, s.order()); ++i) r.set_coeff(i, 0, s.coeff(i));
  return r;
}

BivariateSeries BivariateSeries::from_h_series(const TruncatedSeries& s,
                                               int x_order, int h_order) {
  BivariateSeries r(x_order, h_order);
  for (int j = 0; j <= std::min(h_order, s.order()); ++j) r.set_coeff(0, j, s.coeff(j));
  return r;
}

bool BivariateSeries::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](const Rational& v) { return v == 0; });
}

}  // namespace cj
