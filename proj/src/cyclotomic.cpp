#include "cyclotomic.hpp"

#include <map>

#include "json.hpp"

namespace cj {

const LaurentPolynomial& cyclotomic_kernel(int n, int k) {
  if (n < 1 || k < 0) throw Error(ErrorCode::usage, "kernel needs n >= 1, k >= 0");
  static std::map<std::pair<int, int>, LaurentPolynomial> memo;
  auto key = std::make_pair(n, k);
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;
  LaurentPolynomial p = LaurentPolynomial::one();
  for (int j = 1; j <= k; ++j) {
    LaurentPolynomial factor;
    factor += LaurentPolynomial::monomial(n, 1);
    factor += LaurentPolynomial::monomial(-n, 1);
    factor -= LaurentPolynomial::monomial(j, 1);
    factor -= LaurentPolynomial::monomial(-j, 1);
    p *= factor;
    if (p.is_zero()) break;  // the j = n factor kills everything past k >= n
  }
  return memo.emplace(key, std::move(p)).first->second;
}

LaurentPolynomial jones_from_cyclotomic(const CyclotomicCoefficients& C, int n) {
  if (n < 1) throw Error(ErrorCode::usage, "color must be >= 1");
  if (n > C.k_max + 1) {
    throw InsufficientCoefficients("forward sum at color " + std::to_string(n) +
                                   " needs coefficients through k = " +
                                   std::to_string(n - 1));
  }
  if (!cyclotomic_kernel(n, n).is_zero()) {
    throw Error(ErrorCode::internal, "kernel fails to vanish at k = n");
  }
  LaurentPolynomial J;
  for (int k = 0; k < n; ++k) J += cyclotomic_kernel(n, k) * C.coeffs.at(k);
  return J;
}

CyclotomicCoefficients cyclotomic_from_jones(
    const std::vector<LaurentPolynomial>& jones_table, int k_max,
    const std::string& knot_name) {
  if (static_cast<int>(jones_table.size()) < k_max + 1) {
    throw InsufficientCoefficients("inversion to k_max = " + std::to_string(k_max) +
                                   " needs colors 1.." + std::to_string(k_max + 1));
  }
  CyclotomicCoefficients C;
  C.knot = knot_name;
  C.k_max = k_max;
  for (int k = 0; k <= k_max; ++k) {
    LaurentPolynomial rhs = jones_table[static_cast<size_t>(k)];  // J at color k+1
    for (int l = 0; l < k; ++l) rhs -= cyclotomic_kernel(k + 1, l) * C.coeffs[l];
    C.coeffs.push_back(k == 0 ? rhs : rhs.exact_div(cyclotomic_kernel(k + 1, k)));
  }
  return C;
}

IntegralityReport integrality_check(const CyclotomicCoefficients& C) {
  IntegralityReport r;
  for (int k = 0; k <= C.k_max; ++k) {
    bool ok = C.coeffs[static_cast<size_t>(k)].has_integer_coefficients();
    r.per_k.push_back(ok);
    if (!ok && r.pass) {
      r.pass = false;
      r.first_failure = k;
    }
  }
  return r;
}

std::vector<TruncatedSeries> cyclotomic_taylor(const CyclotomicCoefficients& C,
                                               int order) {
  std::vector<TruncatedSeries> out;
  out.reserve(C.coeffs.size());
  for (const auto& c : C.coeffs) out.push_back(c.series_at_exp(order));
  return out;
}

std::string CyclotomicCoefficients::to_json() const {
  nlohmann::json j;
  j["knot"] = knot;
  j["k_max"] = k_max;
  auto& arr = j["coeffs"] = nlohmann::json::array();
  for (const auto& c : coeffs) arr.push_back(nlohmann::json::parse(c.to_json()));
  return j.dump();
}

CyclotomicCoefficients CyclotomicCoefficients::from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  CyclotomicCoefficients C;
  C.knot = j.at("knot").get<std::string>();
  C.k_max = j.at("k_max").get<int>();
  for (const auto& c : j.at("coeffs")) {
    C.coeffs.push_back(LaurentPolynomial::from_json(c.dump()));
  }
  if (static_cast<int>(C.coeffs.size()) != C.k_max + 1) {
    throw Error(ErrorCode::io, "cyclotomic coefficient count mismatch");
  }
  return C;
}

}  // namespace cj
