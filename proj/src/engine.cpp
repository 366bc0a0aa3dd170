#include "engine.hpp"

#include <cstdint>
#include <numeric>
#include <unordered_map>
#include <vector>

#include "rmatrix.hpp"

namespace cj {
namespace {

// Signals an int64 overflow in the fast contraction; the caller retries with
// bignum coefficients.
struct Overflow {};

template <class C>
struct CoeffOps;

template <>
struct CoeffOps<long long> {
  static long long from(const Rational& r) {
    if (r.get_den() != 1) throw Error(ErrorCode::internal, "non-integer braiding entry");
    if (!r.get_num().fits_slong_p()) throw Overflow{};
    return r.get_num().get_si();
  }
  static void add_mul(long long& acc, long long a, long long b) {
    long long p;
    if (__builtin_mul_overflow(a, b, &p) || __builtin_add_overflow(acc, p, &acc)) {
      throw Overflow{};
    }
  }
  static bool is_zero(long long x) { return x == 0; }
};

template <>
struct CoeffOps<mpz_class> {
  static mpz_class from(const Rational& r) {
    if (r.get_den() != 1) throw Error(ErrorCode::internal, "non-integer braiding entry");
    return r.get_num();
  }
  static void add_mul(mpz_class& acc, const mpz_class& a, const mpz_class& b) {
    mpz_addmul(acc.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  }
  static bool is_zero(const mpz_class& x) { return sgn(x) == 0; }
};

/// Dense integer Laurent polynomial in u on an arithmetic exponent grid
/// lo, lo+stride, lo+2*stride, ... All braiding data for a fixed color lives
/// on a coarse common grid (the Cartan exponents force it), so tracking the
/// stride cuts multiplication cost by the stride squared.
template <class C>
struct Dense {
  long lo = 0;
  long stride = 1;
  std::vector<C> a;

  bool zero() const { return a.empty(); }

  static Dense monomial(long exponent, C c) {
    Dense d;
    d.lo = exponent;
    d.a.push_back(std::move(c));
    return d;
  }

  void normalize() {
    size_t first = 0, last = a.size();
    while (first < last && CoeffOps<C>::is_zero(a[first])) ++first;
    if (first == last) {
      a.clear();
      lo = 0;
      stride = 1;
      return;
    }
    while (CoeffOps<C>::is_zero(a[last - 1])) --last;
    long g = 0;
    for (size_t k = first + 1; k < last; ++k) {
      if (!CoeffOps<C>::is_zero(a[k])) g = std::gcd(g, static_cast<long>(k - first));
    }
    if (g == 0) g = 1;
    lo += static_cast<long>(first) * stride;
    size_t count = (last - 1 - first) / g + 1;
    if (first != 0 || g != 1) {
      for (size_t k = 0; k < count; ++k) a[k] = std::move(a[first + k * g]);
    }
    a.resize(count);
    stride *= g;
  }

  /// Reindex onto the grid (new_lo, new_stride) covering at least new_size
  /// slots; both must be compatible with the current support.
  void rebase(long new_lo, long new_stride, size_t new_size) {
    std::vector<C> b(new_size);
    for (size_t k = 0; k < a.size(); ++k) {
      if (CoeffOps<C>::is_zero(a[k])) continue;
      long e = lo + static_cast<long>(k) * stride;
      b[static_cast<size_t>((e - new_lo) / new_stride)] = std::move(a[k]);
    }
    a = std::move(b);
    lo = new_lo;
    stride = new_stride;
  }
};

/// acc += p * q (schoolbook, grid-aware).
template <class C>
void acc_add_mul(Dense<C>& acc, const Dense<C>& p, const Dense<C>& q) {
  if (p.zero() || q.zero()) return;
  long g = std::gcd(p.stride, q.stride);
  long lo = p.lo + q.lo;
  long hi = p.lo + static_cast<long>(p.a.size() - 1) * p.stride + q.lo +
            static_cast<long>(q.a.size() - 1) * q.stride;
  if (!acc.zero()) {
    g = std::gcd(g, acc.stride);
    long d = acc.lo - lo;
    g = std::gcd(g, d < 0 ? -d : d);
    if (g == 0) g = 1;
    lo = std::min(lo, acc.lo);
    hi = std::max(hi, acc.lo + static_cast<long>(acc.a.size() - 1) * acc.stride);
  }
  size_t size = static_cast<size_t>((hi - lo) / g) + 1;
  if (acc.zero()) {
    acc.lo = lo;
    acc.stride = g;
    acc.a.assign(size, C{});
  } else if (acc.lo != lo || acc.stride != g || acc.a.size() < size) {
    acc.rebase(lo, g, size);
  }
  long pstep = p.stride / g, qstep = q.stride / g;
  long base0 = (p.lo + q.lo - lo) / g;
  for (size_t i = 0; i < p.a.size(); ++i) {
    if (CoeffOps<C>::is_zero(p.a[i])) continue;
    long base = base0 + static_cast<long>(i) * pstep;
    for (size_t j = 0; j < q.a.size(); ++j) {
      if (CoeffOps<C>::is_zero(q.a[j])) continue;
      CoeffOps<C>::add_mul(acc.a[static_cast<size_t>(base + static_cast<long>(j) * qstep)],
                           p.a[i], q.a[j]);
    }
  }
}

template <class C>
Dense<C> dense_from_poly(const LaurentPolynomial& p) {
  Dense<C> d;
  if (p.is_zero()) return d;
  auto [lo, hi] = p.degrees();
  d.lo = lo;
  d.a.assign(static_cast<size_t>(hi - lo) + 1, C{});
  for (const auto& [e, c] : p.terms()) d.a[static_cast<size_t>(e - lo)] = CoeffOps<C>::from(c);
  d.normalize();
  return d;
}

inline Rational to_rational(long long x) { return Rational(static_cast<long>(x)); }
inline Rational to_rational(const mpz_class& x) { return Rational(x); }

template <class C>
LaurentPolynomial poly_from_dense(const Dense<C>& d) {
  LaurentPolynomial p;
  for (size_t k = 0; k < d.a.size(); ++k) {
    if (!CoeffOps<C>::is_zero(d.a[k])) {
      p.set_coeff(d.lo + static_cast<long>(k) * d.stride, to_rational(d.a[k]));
    }
  }
  return p;
}

// ---------------------------------------------------------------------------
// Generic column contraction. The braid closure scalar is computed as a
// (1,1)-tangle: strand 0 is cut (its index pinned to 0 on both ends) and each
// remaining strand s is closed with the weight u^{mu(b_s)}, summed over all
// boundary index tuples b. Total basis index is conserved by every crossing,
// and a strand no longer touched by the remaining word must already sit at
// its boundary value, which prunes the per-column state hard.

// Values and their ring ops, shared by the exact and numeric paths.
template <class C>
struct ExactRing {
  using Value = Dense<C>;
  static bool is_zero(const Value& v) { return v.zero(); }
  static void add_mul(Value& acc, const Value& a, const Value& b) { acc_add_mul(acc, a, b); }
  static void tidy(Value& v) { v.normalize(); }
};

struct NumericRing {
  using Value = PrecisionComplex;
  static bool is_zero(const Value& v) { return v.abs_approx() == 0 && v.error_radius() == 0; }
  static void add_mul(Value& acc, const Value& a, const Value& b) { acc += a * b; }
  static void tidy(Value&) {}
};

template <class Ring>
struct Site {
  int out_i, out_j;
  typename Ring::Value coeff;
};

template <class Ring>
struct Tables {
  int n = 0;
  // pos/neg crossing terms for input pair (i, j), indexed i*n + j
  std::vector<std::vector<Site<Ring>>> pos, neg;
  std::vector<typename Ring::Value> mu;  // closure weight per basis index
};

template <class Ring>
typename Ring::Value ring_one();

template <>
Dense<long long> ring_one<ExactRing<long long>>() {
  return Dense<long long>::monomial(0, 1);
}
template <>
Dense<mpz_class> ring_one<ExactRing<mpz_class>>() {
  return Dense<mpz_class>::monomial(0, 1);
}
template <>
PrecisionComplex ring_one<NumericRing>() {
  return PrecisionComplex(Real(1), Real(0), 0);
}

template <class C>
Dense<C> weighted(const Dense<C>& a, const Dense<C>& b) {
  Dense<C> r;
  acc_add_mul(r, a, b);
  return r;
}
PrecisionComplex weighted(const PrecisionComplex& a, const PrecisionComplex& b) {
  return a * b;
}

using Key = uint64_t;  // one byte per strand, strand 0 in the low byte

inline int key_at(Key k, int s) { return static_cast<int>((k >> (8 * s)) & 0xff); }
inline Key key_with(Key k, int s, int v) {
  Key mask = Key{0xff} << (8 * s);
  return (k & ~mask) | (Key{static_cast<uint64_t>(v)} << (8 * s));
}

template <class Ring>
typename Ring::Value contract(const BraidWord& braid, const Tables<Ring>& T) {
  using Value = typename Ring::Value;
  const int S = braid.strands();
  const int n = T.n;
  const auto& letters = braid.letters();
  std::vector<int> last_touch(S, -1);
  for (size_t t = 0; t < letters.size(); ++t) {
    int p = std::abs(letters[t]) - 1;
    last_touch[p] = last_touch[p + 1] = static_cast<int>(t);
  }

  Value total{};
  std::vector<int> b(S - 1, 0);  // boundary indices of strands 1..S-1
  std::unordered_map<Key, Value> cur, next;
  for (;;) {
    Key diag = 0;
    for (int s = 1; s < S; ++s) diag = key_with(diag, s, b[s - 1]);
    cur.clear();
    cur.emplace(diag, ring_one<Ring>());
    for (size_t t = 0; t < letters.size(); ++t) {
      int p = std::abs(letters[t]) - 1;
      const auto& table = letters[t] > 0 ? T.pos : T.neg;
      bool fi = last_touch[p] == static_cast<int>(t);
      bool fj = last_touch[p + 1] == static_cast<int>(t);
      int ti = p == 0 ? 0 : b[p - 1];
      int tj = b[p];
      next.clear();
      for (const auto& [key, amp] : cur) {
        int i = key_at(key, p), j = key_at(key, p + 1);
        for (const auto& site : table[static_cast<size_t>(i) * n + j]) {
          if (fi && site.out_i != ti) continue;
          if (fj && site.out_j != tj) continue;
          Key nk = key_with(key_with(key, p, site.out_i), p + 1, site.out_j);
          Ring::add_mul(next[nk], amp, site.coeff);
        }
      }
      for (auto it = next.begin(); it != next.end();) {
        Ring::tidy(it->second);
        it = Ring::is_zero(it->second) ? next.erase(it) : std::next(it);
      }
      std::swap(cur, next);
    }
    auto hit = cur.find(diag);
    if (hit != cur.end() && !Ring::is_zero(hit->second)) {
      Value weight = T.mu[static_cast<size_t>(b[0])];
      for (int s = 2; s < S; ++s) weight = weighted(weight, T.mu[static_cast<size_t>(b[s - 1])]);
      Ring::add_mul(total, hit->second, weight);
    }
    int s = 0;
    while (s < S - 1 && ++b[s] == n) b[s++] = 0;
    if (s == S - 1) break;
  }
  return total;
}

template <class C>
Tables<ExactRing<C>> exact_tables(const RMatrix& R) {
  Tables<ExactRing<C>> T;
  int n = R.dimension();
  T.n = n;
  T.pos.resize(static_cast<size_t>(n) * n);
  T.neg.resize(static_cast<size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      for (bool positive : {true, false}) {
        auto& out = positive ? T.pos : T.neg;
        for (const auto& e : R.entries(i, j, positive)) {
          out[static_cast<size_t>(i) * n + j].push_back(
              {e.out_i, e.out_j, dense_from_poly<C>(e.coeff)});
        }
      }
    }
  }
  for (int j = 0; j < n; ++j) T.mu.push_back(Dense<C>::monomial(R.mu_exponent(j), 1));
  return T;
}

template <class C>
LaurentPolynomial colored_jones_exact(const BraidWord& braid, int n) {
  RMatrix R(n);
  auto T = exact_tables<C>(R);
  Dense<C> scalar = contract<ExactRing<C>>(braid, T);
  long w = braid.writhe();
  scalar.lo -= w * R.theta_exponent();
  bool negate = R.theta_sign() < 0 && (w % 2 != 0);
  LaurentPolynomial in_u = poly_from_dense(scalar);
  LaurentPolynomial result;
  for (const auto& [e, c] : in_u.terms()) {
    if (((e % 4) + 4) % 4 != 0) {
      throw Error(ErrorCode::internal,
                  "framing-corrected state sum has a fractional q power");
    }
    result.set_coeff(e / 4, negate ? -c : c);
  }
  return result;
}

PrecisionComplex principal_root4(const PrecisionComplex& q0) {
  using boost::multiprecision::atan2;
  using boost::multiprecision::cos;
  using boost::multiprecision::pow;
  using boost::multiprecision::sin;
  using boost::multiprecision::sqrt;
  Real m2 = q0.re() * q0.re() + q0.im() * q0.im();
  if (m2 == 0) throw Error(ErrorCode::usage, "fourth root of zero");
  Real r = pow(m2, Real(1) / 8);  // |q0|^{1/4}
  Real phi = atan2(q0.im(), q0.re()) / 4;
  PrecisionComplex u0(r * cos(phi), r * sin(phi), 0);
  double mag = u0.abs_approx();
  // d(u0) = u0/(4 q0) d(q0)
  u0.add_error(q0.error_radius() * mag / (4 * std::sqrt(m2.convert_to<double>())) +
               mag * std::ldexp(1.0, 3 - working_precision_bits()));
  return u0;
}

}  // namespace

LaurentPolynomial colored_jones(const BraidWord& braid, int n) {
  if (n < 1) throw Error(ErrorCode::usage, "color must be >= 1");
  if (n > 200) throw Error(ErrorCode::usage, "exact path limited to n <= 200");
  try {
    return colored_jones_exact<long long>(braid, n);
  } catch (const Overflow&) {
    return colored_jones_exact<mpz_class>(braid, n);
  }
}

PrecisionComplex colored_jones_numeric(const BraidWord& braid, int n,
                                       const PrecisionComplex& q0) {
  if (n < 1) throw Error(ErrorCode::usage, "color must be >= 1");
  if (n > 255) throw Error(ErrorCode::usage, "state-sum path limited to n <= 255");
  RMatrix R(n);
  PrecisionComplex u0 = principal_root4(q0);
  // powers of u0 reused across all table entries
  std::unordered_map<long, PrecisionComplex> pw;
  auto upow = [&](long e) {
    auto it = pw.find(e);
    if (it != pw.end()) return it->second;
    PrecisionComplex v = u0.pow_int(e);
    pw.emplace(e, v);
    return v;
  };
  Tables<NumericRing> T;
  T.n = n;
  T.pos.resize(static_cast<size_t>(n) * n);
  T.neg.resize(static_cast<size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      for (bool positive : {true, false}) {
        auto& out = positive ? T.pos : T.neg;
        for (const auto& e : R.entries(i, j, positive)) {
          PrecisionComplex v{};
          for (const auto& [exp, c] : e.coeff.terms()) {
            v += PrecisionComplex(c) * upow(exp);
          }
          out[static_cast<size_t>(i) * n + j].push_back({e.out_i, e.out_j, v});
        }
      }
    }
  }
  for (int j = 0; j < n; ++j) T.mu.push_back(upow(R.mu_exponent(j)));
  PrecisionComplex scalar = contract<NumericRing>(braid, T);
  long w = braid.writhe();
  PrecisionComplex frame = upow(R.theta_exponent()).pow_int(w);
  if (R.theta_sign() < 0 && (w % 2 != 0)) frame = -frame;
  return scalar / frame;
}

}  // namespace cj
