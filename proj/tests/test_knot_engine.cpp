#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <array>
#include <map>
#include <numeric>
#include <vector>

#include "alexander.hpp"
#include "braid.hpp"
#include "doctest.h"
#include "engine.hpp"
#include "precision.hpp"
#include "rmatrix.hpp"

using namespace cj;

namespace {

// ---------------------------------------------------------------------------
// Kauffman bracket oracle: Jones polynomial of a braid closure by the state
// sum over smoothings, with loops counted by union-find. Completely
// independent of the R-matrix machinery; only the final variable convention
// (q versus q^-1, a global mirror choice) is pinned so that the closure of
// the positive trefoil braid carries negative exponents.

struct Dsu {
  std::vector<int> parent;
  int make() {
    parent.push_back(static_cast<int>(parent.size()));
    return parent.back();
  }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  // Returns true when a and b were already joined: a loop closes.
  bool join(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return true;
    parent[a] = b;
    return false;
  }
};

LaurentPolynomial jones_bracket_oracle(const BraidWord& braid) {
  const int S = braid.strands();
  const auto& word = braid.letters();
  const int c = static_cast<int>(word.size());
  // Bracket in A, exponents collected as a Laurent polynomial.
  LaurentPolynomial bracket;
  LaurentPolynomial d = LaurentPolynomial::monomial(2, -1) +
                        LaurentPolynomial::monomial(-2, -1);
  for (int state = 0; state < (1 << c); ++state) {
    Dsu dsu;
    std::vector<int> wire(S);
    for (int p = 0; p < S; ++p) wire[p] = dsu.make();
    std::vector<int> bottom = wire;
    int loops = 0;
    long a_exp = 0;
    for (int t = 0; t < c; ++t) {
      int pos = std::abs(word[t]) - 1;
      int sign = word[t] > 0 ? 1 : -1;
      bool a_smoothing = (state >> t) & 1;
      // positive crossing: A * (identity) + A^-1 * (cup-cap); negative
      // crossing mirrors the smoothings
      a_exp += a_smoothing ? 1 : -1;
      bool identity = a_smoothing == (sign > 0);
      if (!identity) {
        if (dsu.join(wire[pos], wire[pos + 1])) ++loops;
        int fresh = dsu.make();
        wire[pos] = fresh;
        wire[pos + 1] = fresh;
      }
    }
    for (int p = 0; p < S; ++p) {
      if (dsu.join(wire[p], bottom[p])) ++loops;
    }
    LaurentPolynomial term = LaurentPolynomial::monomial(a_exp, 1);
    for (int l = 1; l < loops; ++l) term *= d;
    bracket += term;
  }
  // writhe normalization: (-A^3)^{-w}
  int w = braid.writhe();
  LaurentPolynomial f = bracket.shifted(-3L * w);
  if (w % 2 != 0) f = -f;
  // A-exponents of a knot invariant are multiples of 4; read off q^{a/4}
  LaurentPolynomial jones;
  for (const auto& [e, coeff] : f.terms()) {
    REQUIRE(e % 4 == 0);
    jones.set_coeff(e / 4, coeff);
  }
  return jones;
}

// ---------------------------------------------------------------------------
// Seifert matrix oracle for the Alexander polynomial: det(V - t V^T) for a
// genus-one matrix, symmetrized and normalized to 1 at t = 1.

LaurentPolynomial alexander_seifert_oracle(long v11, long v12, long v21, long v22) {
  LaurentPolynomial t = LaurentPolynomial::variable();
  auto entry = [&](long vij, long vji) {
    return LaurentPolynomial::constant(vij) - t * Rational(vji);
  };
  LaurentPolynomial det = entry(v11, v11) * entry(v22, v22) -
                          entry(v12, v21) * entry(v21, v12);
  auto [lo, hi] = det.degrees();
  REQUIRE((lo + hi) % 2 == 0);
  LaurentPolynomial sym = det.shifted(-(lo + hi) / 2);
  if (sym.eval_one() == -1) sym = -sym;
  REQUIRE(sym.eval_one() == 1);
  return sym;
}

std::vector<BraidWord> catalog_braids() {
  std::vector<BraidWord> out;
  for (const auto& e : parse_catalog(builtin_catalog_jsonl())) {
    out.emplace_back(e.strands, e.word, e.name);
  }
  return out;
}

}  // namespace

TEST_CASE("braid validation and permutations") {
  BraidWord tref(2, {1, 1, 1}, "3_1");
  CHECK(tref.writhe() == 3);
  CHECK(tref.permutation() == std::vector<int>{1, 0});
  CHECK(tref.mirrored().writhe() == -3);

  // closure of sigma_1^2 on two strands is a two-component link
  CHECK_THROWS_AS(BraidWord(2, {1, 1}), NotAKnot);
  CHECK_THROWS_AS(BraidWord(3, {1}), NotAKnot);
  CHECK_THROWS_AS(BraidWord(2, {2}), Error);  // letter out of range
  CHECK_THROWS_AS(BraidWord(1, {}), Error);   // too few strands
  CHECK_NOTHROW(BraidWord(3, {1, 2}));        // unknot presentation
}

TEST_CASE("braiding operators satisfy the Yang-Baxter relation") {
  for (int n = 2; n <= 3; ++n) {
    RMatrix rm(n);
    using Key = std::array<int, 3>;
    using State = std::map<Key, LaurentPolynomial>;
    auto apply = [&](const State& in, int slot, bool positive) {
      State out;
      for (const auto& [k, v] : in) {
        int i = k[slot], j = k[slot + 1];
        for (const auto& e : rm.entries(i, j, positive)) {
          Key nk = k;
          nk[slot] = e.out_i;
          nk[slot + 1] = e.out_j;
          out[nk] += v * e.coeff;
        }
      }
      for (auto it = out.begin(); it != out.end();) {
        it = it->second.is_zero() ? out.erase(it) : std::next(it);
      }
      return out;
    };
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        for (int k = 0; k < n; ++k) {
          State s{{Key{i, j, k}, LaurentPolynomial::one()}};
          State lhs = apply(apply(apply(s, 0, true), 1, true), 0, true);
          State rhs = apply(apply(apply(s, 1, true), 0, true), 1, true);
          CHECK(lhs == rhs);

          // inverse braiding really inverts
          State id = apply(apply(s, 0, true), 0, false);
          CHECK(id == s);
        }
      }
    }
  }
}

TEST_CASE("quantum integers") {
  // [3] at s = u^2: u^4 + 1 + u^-4
  LaurentPolynomial three = quantum_integer(3);
  CHECK(three == LaurentPolynomial::monomial(4, 1) + LaurentPolynomial::one() +
                     LaurentPolynomial::monomial(-4, 1));
  CHECK(quantum_factorial(3) == quantum_integer(1) * quantum_integer(2) * three);
  CHECK(quantum_binomial(4, 2) ==
        quantum_factorial(4).exact_div(quantum_factorial(2) * quantum_factorial(2)));
}

TEST_CASE("Jones polynomials match the Kauffman bracket oracle") {
  for (const auto& braid : catalog_braids()) {
    CAPTURE(braid.name());
    CHECK(colored_jones(braid, 2) == jones_bracket_oracle(braid));
    // mirror image too
    CHECK(colored_jones(braid.mirrored(), 2) ==
          jones_bracket_oracle(braid.mirrored()));
  }
}

TEST_CASE("colored Jones basics") {
  for (const auto& braid : catalog_braids()) {
    CAPTURE(braid.name());
    CHECK(colored_jones(braid, 1) == LaurentPolynomial::one());
    for (int n = 2; n <= 5; ++n) {
      LaurentPolynomial j = colored_jones(braid, n);
      CHECK(j.eval_one() == 1);
      CHECK(j.has_integer_coefficients());
      // mirror knot gives the mirrored polynomial
      CHECK(colored_jones(braid.mirrored(), n) == j.mirror());
    }
  }
  // unknot: trivial at every color
  BraidWord unknot(2, {1}, "0_1");
  for (int n = 2; n <= 8; ++n) {
    CHECK(colored_jones(unknot, n) == LaurentPolynomial::one());
  }
  // figure-eight is amphichiral
  BraidWord f8(3, {1, -2, 1, -2}, "4_1");
  for (int n = 2; n <= 6; ++n) {
    LaurentPolynomial j = colored_jones(f8, n);
    CHECK(j == j.mirror());
  }
}

TEST_CASE("Markov moves leave the invariant unchanged") {
  BraidWord tref2(2, {1, 1, 1});
  BraidWord tref3_pos(3, {1, 1, 1, 2});    // positive stabilization
  BraidWord tref3_neg(3, {1, 1, 1, -2});   // negative stabilization
  BraidWord tref_conj(2, {1, 1, 1});       // conjugation is trivial on 2 strands
  BraidWord f8(3, {1, -2, 1, -2});
  BraidWord f8_conj(3, {-2, 1, -2, 1});    // cyclic rotation = conjugation
  BraidWord f8_stab(4, {1, -2, 1, -2, 3});
  for (int n = 2; n <= 4; ++n) {
    LaurentPolynomial base = colored_jones(tref2, n);
    CHECK(colored_jones(tref3_pos, n) == base);
    CHECK(colored_jones(tref3_neg, n) == base);
    CHECK(colored_jones(tref_conj, n) == base);
    LaurentPolynomial f8_base = colored_jones(f8, n);
    CHECK(colored_jones(f8_conj, n) == f8_base);
    CHECK(colored_jones(f8_stab, n) == f8_base);
  }
}

TEST_CASE("trefoil at color 2 pinned") {
  // positive trefoil: q^-1 + q^-3 - q^-4
  LaurentPolynomial expected = LaurentPolynomial::monomial(-1, 1) +
                               LaurentPolynomial::monomial(-3, 1) +
                               LaurentPolynomial::monomial(-4, -1);
  CHECK(colored_jones(BraidWord(2, {1, 1, 1}), 2) == expected);
}

TEST_CASE("Alexander polynomials match the Seifert matrix oracle") {
  // genus-one Seifert matrices for the trefoil and the figure-eight
  CHECK(alexander(BraidWord(2, {1, 1, 1})) ==
        alexander_seifert_oracle(-1, 1, 0, -1));
  CHECK(alexander(BraidWord(3, {1, -2, 1, -2})) ==
        alexander_seifert_oracle(1, 1, 0, -1));
}

TEST_CASE("Alexander values for the catalog") {
  std::map<std::string, std::vector<std::pair<long, long>>> expected{
      {"0_1", {{0, 1}}},
      {"3_1", {{1, 1}, {0, -1}, {-1, 1}}},
      {"4_1", {{1, -1}, {0, 3}, {-1, -1}}},
      {"5_2", {{1, 2}, {0, -3}, {-1, 2}}},
      {"6_1", {{1, -2}, {0, 5}, {-1, -2}}}};
  for (const auto& braid : catalog_braids()) {
    CAPTURE(braid.name());
    LaurentPolynomial delta = alexander(braid);
    LaurentPolynomial want;
    for (auto [e, c] : expected.at(braid.name())) want.set_coeff(e, c);
    CHECK(delta == want);
    CHECK(delta == delta.mirror());
    CHECK(delta.eval_one() == 1);
    // mirror knot has the same Alexander polynomial
    CHECK(alexander(braid.mirrored()) == delta);
  }
}

TEST_CASE("numeric evaluation agrees with the exact polynomial") {
  set_working_precision(128);
  BraidWord f8(3, {1, -2, 1, -2}, "4_1");
  // q0 on the unit circle, away from roots of unity
  PrecisionComplex theta(Real(0), Real(1) / 7, 0);
  PrecisionComplex q0 = PrecisionComplex::exp(theta);
  for (int n = 2; n <= 5; ++n) {
    LaurentPolynomial j = colored_jones(f8, n);
    PrecisionComplex exact = eval_complex(j, q0);
    PrecisionComplex numeric = colored_jones_numeric(f8, n, q0);
    CHECK(exact.distance(numeric) < 1e-20);
    CHECK(numeric.error_radius() < 1e-25);
  }
  BraidWord s52(3, {1, 1, 1, 2, -1, 2}, "5_2");
  PrecisionComplex exact = eval_complex(colored_jones(s52, 4), q0);
  CHECK(exact.distance(colored_jones_numeric(s52, 4, q0)) < 1e-20);
}
