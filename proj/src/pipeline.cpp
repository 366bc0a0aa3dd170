#include "pipeline.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <limits>
#include <sstream>

#include "alexander.hpp"
#include "engine.hpp"
#include "json.hpp"
#include "precision.hpp"

namespace cj {
namespace {

using nlohmann::json;

// Tolerances used by the verification suites, pinned here.
constexpr double kOrderTolerance = 0.15;
constexpr double kRelativeDiscrepancyTolerance = 0.02;

uint64_t fnv1a(const std::string& s) {
  uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

json poly_json(const LaurentPolynomial& p) { return json::parse(p.to_json()); }

std::vector<int> default_n_list() { return {200, 400, 800, 1600, 3200}; }

/// Smallest k > N with R_k not identically zero, minus N; -1 when every
/// computed R_k beyond N vanishes (the next correction order is then unknown
/// at this loop depth).
int predicted_decay_order(const LoopData& loop, int N) {
  for (int k = N + 1; k <= loop.k_loops; ++k) {
    if (!loop.R[static_cast<size_t>(k)].is_zero()) return k - N;
  }
  return -1;
}

std::string complex_str(const PrecisionComplex& z) { return z.to_string(); }

}  // namespace

// ---------------------------------------------------------------------------
// RunConfig

void RunConfig::validate() const {
  if (k_max <= 0 || series_order <= 0 || loop_order <= 0) {
    throw UsageError("all orders must be positive");
  }
  if (precision_bits < 64) throw UsageError("precision_bits must be >= 64");
  for (size_t i = 1; i < n_list.size(); ++i) {
    if (n_list[i] <= n_list[i - 1]) {
      throw UsageError("n_list must be strictly increasing");
    }
  }
  if (!n_list.empty() && n_list.front() < 1) {
    throw UsageError("colors must be positive");
  }
  for (const auto& [re, im] : alphas) {
    if (re == 0 && im == 0) throw UsageError("alpha = 0 is not a valid angle");
  }
}

std::string RunConfig::to_json() const {
  json j;
  j["catalog_path"] = catalog_path;
  j["cache_dir"] = cache_dir;
  j["k_max"] = k_max;
  j["series_order"] = series_order;
  j["loop_order"] = loop_order;
  j["precision_bits"] = precision_bits;
  j["mirror"] = mirror;
  json as = json::array();
  for (const auto& [re, im] : alphas) as.push_back({re, im});
  j["alphas"] = as;
  j["n_list"] = n_list;
  return j.dump(2);
}

RunConfig RunConfig::from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw UsageError(std::string("config is not valid JSON: ") + e.what());
  }
  RunConfig c;
  try {
    if (j.contains("catalog_path")) c.catalog_path = j["catalog_path"];
    if (j.contains("cache_dir")) c.cache_dir = j["cache_dir"];
    if (j.contains("k_max")) c.k_max = j["k_max"];
    if (j.contains("series_order")) c.series_order = j["series_order"];
    if (j.contains("loop_order")) c.loop_order = j["loop_order"];
    if (j.contains("precision_bits")) c.precision_bits = j["precision_bits"];
    if (j.contains("mirror")) c.mirror = j["mirror"];
    if (j.contains("alphas")) {
      for (const auto& a : j["alphas"]) {
        c.alphas.emplace_back(a.at(0).get<double>(), a.at(1).get<double>());
      }
    }
    if (j.contains("n_list")) c.n_list = j["n_list"].get<std::vector<int>>();
  } catch (const json::exception& e) {
    throw UsageError(std::string("malformed config field: ") + e.what());
  }
  c.validate();
  return c;
}

RunConfig RunConfig::from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open config file: " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return from_json(ss.str());
}

std::string RunConfig::cache_key() const {
  std::ostringstream ss;
  ss << "kmax=" << k_max << ";order=" << series_order << ";loops=" << loop_order
     << ";mirror=" << (mirror ? 1 : 0);
  return ss.str();
}

AngleGrid RunConfig::grid() const {
  if (alphas.empty()) return AngleGrid::default_grid();
  AngleGrid g;
  g.description = "configured angles";
  for (const auto& [re, im] : alphas) {
    g.points.emplace_back(Real(re), Real(im), 0);
  }
  return g;
}

std::vector<int> RunConfig::colors() const {
  return n_list.empty() ? default_n_list() : n_list;
}

// ---------------------------------------------------------------------------
// Session plumbing

Session::Session(RunConfig config) : cfg_(std::move(config)) {
  cfg_.validate();
  set_working_precision(cfg_.precision_bits);
  catalog_ = cfg_.catalog_path.empty()
                 ? parse_catalog(builtin_catalog_jsonl())
                 : load_catalog_file(cfg_.catalog_path);
}

std::vector<std::string> Session::knot_names() const {
  std::vector<std::string> names;
  for (const auto& e : catalog_) names.push_back(e.name);
  return names;
}

Session::Rec& Session::rec(const std::string& knot) {
  auto it = recs_.find(knot);
  if (it != recs_.end()) return it->second;
  const CatalogEntry* entry = nullptr;
  for (const auto& e : catalog_) {
    if (e.name == knot) entry = &e;
  }
  if (!entry) throw MissingArtifacts("knot not in catalog: " + knot);
  Rec r;
  BraidWord b(entry->strands, entry->word, entry->name);
  r.braid = std::make_unique<BraidWord>(cfg_.mirror ? b.mirrored() : b);
  auto& stored = recs_[knot] = std::move(r);
  load_cache(knot, stored);
  return stored;
}

std::string Session::cache_path(const std::string& knot) const {
  return cfg_.cache_dir + "/" + knot + ".json";
}

void Session::load_cache(const std::string& knot, Rec& r) {
  if (cfg_.cache_dir.empty()) return;
  std::ifstream in(cache_path(knot));
  if (!in) return;
  std::stringstream ss;
  ss << in.rdbuf();
  json j;
  try {
    j = json::parse(ss.str());
  } catch (const json::exception&) {
    throw CacheMismatch("cache for " + knot + " is not valid JSON");
  }
  if (!j.contains("key") || !j.contains("data") || !j.contains("hash")) {
    throw CacheMismatch("cache for " + knot + " is missing required fields");
  }
  if (j["key"] != cfg_.cache_key()) {
    throw CacheMismatch("cache for " + knot + " was built with key '" +
                        j["key"].get<std::string>() + "', current key is '" +
                        cfg_.cache_key() + "'");
  }
  const json& data = j["data"];
  if (fnv1a(data.dump()) != j["hash"].get<uint64_t>()) {
    throw CacheMismatch("cache for " + knot + " fails its content hash");
  }
  try {
    if (data.contains("jones")) {
      for (const auto& p : data["jones"]) {
        r.jones.push_back(LaurentPolynomial::from_json(p.dump()));
      }
    }
    if (data.contains("alexander")) {
      r.alex = LaurentPolynomial::from_json(data["alexander"].dump());
      r.have_alex = true;
    }
    if (data.contains("cyclotomic")) {
      r.cyclo = std::make_unique<CyclotomicCoefficients>(
          CyclotomicCoefficients::from_json(data["cyclotomic"].dump()));
    }
  } catch (const Error&) {
    throw CacheMismatch("cache for " + knot + " holds malformed artifacts");
  }
}

void Session::store_cache(const std::string& knot, Rec& r) {
  if (cfg_.cache_dir.empty()) return;
  json data;
  json jt = json::array();
  for (const auto& p : r.jones) jt.push_back(poly_json(p));
  data["jones"] = jt;
  if (r.have_alex) data["alexander"] = poly_json(r.alex);
  if (r.cyclo) data["cyclotomic"] = json::parse(r.cyclo->to_json());
  json j;
  j["schema"] = "cjasym-knot-cache-v1";
  j["key"] = cfg_.cache_key();
  j["hash"] = fnv1a(data.dump());
  j["data"] = std::move(data);
  std::ofstream out(cache_path(knot));
  if (!out) throw IoError("cannot write cache file for " + knot);
  out << j.dump(2) << "\n";
}

// ---------------------------------------------------------------------------
// Artifact accessors

const BraidWord& Session::braid(const std::string& knot) {
  return *rec(knot).braid;
}

const std::vector<LaurentPolynomial>& Session::jones_table(
    const std::string& knot, int n_top) {
  Rec& r = rec(knot);
  bool grew = false;
  for (int n = static_cast<int>(r.jones.size()) + 1; n <= n_top; ++n) {
    r.jones.push_back(colored_jones(*r.braid, n));
    grew = true;
  }
  if (grew) store_cache(knot, r);
  return r.jones;
}

const LaurentPolynomial& Session::alexander_of(const std::string& knot) {
  Rec& r = rec(knot);
  if (!r.have_alex) {
    r.alex = alexander(*r.braid);
    r.have_alex = true;
    store_cache(knot, r);
  }
  return r.alex;
}

const CyclotomicCoefficients& Session::cyclotomic(const std::string& knot) {
  Rec& r = rec(knot);
  if (!r.cyclo) {
    const auto& table = jones_table(knot, cfg_.k_max + 1);
    r.cyclo = std::make_unique<CyclotomicCoefficients>(
        cyclotomic_from_jones(table, cfg_.k_max, knot));
    store_cache(knot, r);
  }
  return *r.cyclo;
}

const LoopData& Session::loop_data_at(const std::string& knot, int order) {
  Rec& r = rec(knot);
  auto it = r.loops.find(order);
  if (it != r.loops.end()) return it->second;
  const auto& table = jones_table(knot, order + 3);
  std::vector<ScaledJonesTaylor> tabs;
  for (size_t i = 0; i < table.size(); ++i) {
    tabs.push_back(scaled_jones_taylor(table[i], static_cast<int>(i) + 1, order));
  }
  int k_loops = std::min(cfg_.loop_order, order);
  LoopData loop =
      extract_loop_series(tabs, order, k_loops, alexander_of(knot), knot);
  return r.loops.emplace(order, std::move(loop)).first->second;
}

const LoopData& Session::loop_data(const std::string& knot, bool deep) {
  int order = deep ? cfg_.series_order + 2 * cfg_.loop_order : cfg_.series_order;
  return loop_data_at(knot, order);
}

// ---------------------------------------------------------------------------
// compute

std::string Session::compute(const std::string& knot, const std::string& what) {
  Rec& r = rec(knot);
  if (what == "jones") {
    std::vector<LaurentPolynomial> fresh;
    for (int n = 1; n <= cfg_.k_max + 1; ++n) {
      fresh.push_back(colored_jones(*r.braid, n));
    }
    for (size_t i = 0; i < fresh.size() && i < r.jones.size(); ++i) {
      if (fresh[i] != r.jones[i]) {
        throw CacheMismatch("recomputed Jones table for " + knot +
                            " disagrees with the cache at n = " +
                            std::to_string(i + 1));
      }
    }
    if (fresh.size() > r.jones.size()) r.jones = std::move(fresh);
    store_cache(knot, r);
    json out = json::array();
    for (int n = 1; n <= cfg_.k_max + 1; ++n) {
      out.push_back(poly_json(r.jones[static_cast<size_t>(n - 1)]));
    }
    return out.dump(2);
  }
  if (what == "alexander") {
    LaurentPolynomial fresh = alexander(*r.braid);
    if (r.have_alex && fresh != r.alex) {
      throw CacheMismatch("recomputed Alexander polynomial for " + knot +
                          " disagrees with the cache");
    }
    r.alex = std::move(fresh);
    r.have_alex = true;
    store_cache(knot, r);
    return poly_json(r.alex).dump(2);
  }
  if (what == "cyclotomic") {
    const auto& table = jones_table(knot, cfg_.k_max + 1);
    CyclotomicCoefficients fresh = cyclotomic_from_jones(table, cfg_.k_max, knot);
    if (r.cyclo && (fresh.k_max != r.cyclo->k_max || fresh.coeffs != r.cyclo->coeffs)) {
      throw CacheMismatch("recomputed cyclotomic coefficients for " + knot +
                          " disagree with the cache");
    }
    r.cyclo = std::make_unique<CyclotomicCoefficients>(std::move(fresh));
    store_cache(knot, r);
    return json::parse(r.cyclo->to_json()).dump(2);
  }
  throw UsageError("unknown artifact '" + what +
                   "' (expected jones | alexander | cyclotomic)");
}

// ---------------------------------------------------------------------------
// verify

namespace {

struct SuiteBuilder {
  bool pass = true;
  bool certification_failure = false;
  std::ostringstream summary;
  json checks = json::array();

  void add(const std::string& name, bool ok, const std::string& detail,
           json extra = json()) {
    pass = pass && ok;
    summary << (ok ? "ok    " : "FAIL  ") << name;
    if (!detail.empty()) summary << ": " << detail;
    summary << "\n";
    json c;
    c["check"] = name;
    c["pass"] = ok;
    if (!detail.empty()) c["detail"] = detail;
    if (!extra.is_null()) c["data"] = std::move(extra);
    checks.push_back(std::move(c));
  }

  VerifyOutcome finish(const std::string& knot, const std::string& suite,
                       std::string csv = "") {
    VerifyOutcome out;
    out.pass = pass;
    out.exit_code = pass ? 0 : (certification_failure ? 3 : 1);
    out.summary = summary.str();
    json j;
    j["knot"] = knot;
    j["suite"] = suite;
    j["pass"] = pass;
    j["checks"] = std::move(checks);
    out.report_json = j.dump(2);
    out.csv = std::move(csv);
    return out;
  }
};

json fit_json(const BoundFit& f) {
  json j;
  j["model"] = f.model;
  j["constants"] = f.constants;
  j["slack"] = f.slack;
  j["rms_log_residual"] = f.rms_log_residual;
  j["degenerate"] = f.degenerate;
  return j;
}

}  // namespace

VerifyOutcome Session::verify(const std::string& knot, const std::string& suite) {
  SuiteBuilder b;

  if (suite == "mmr") {
    const LoopData& loop = loop_data(knot, /*deep=*/false);
    b.add("1/n-polynomial structure (held-out colors)", true,
          "h^m coefficients fit degree-m polynomials in 1/n exactly, m <= " +
              std::to_string(loop.m_series));
    MmrReport mmr = mmr_check(loop, cfg_.series_order);
    json residuals = json::array();
    bool all_zero = true;
    int first_bad = -1;
    for (size_t m = 0; m < mmr.residuals.size(); ++m) {
      residuals.push_back(rational_to_string(mmr.residuals[m]));
      if (mmr.residuals[m] != 0 && first_bad < 0) {
        first_bad = static_cast<int>(m);
        all_zero = false;
      }
    }
    b.add("R_0 = 1/Delta(e^x) through x^" + std::to_string(cfg_.series_order),
          mmr.pass && all_zero,
          mmr.pass ? "all residuals exactly zero"
                   : "first nonzero residual at order " + std::to_string(first_bad),
          residuals);
    return b.finish(knot, suite);
  }

  if (suite == "loops") {
    LoopData loop = loop_data(knot, /*deep=*/true);
    b.add("loop series extraction (exact fit + held-out colors)", true,
          "orders m <= " + std::to_string(loop.m_series) + ", loops k <= " +
              std::to_string(loop.k_loops));
    LaurentPolynomial p0 = reconstruct_loop_polynomial(loop, 0);
    bool p0_ok = p0 == LaurentPolynomial::one();
    b.add("P_0 = 1", p0_ok, "P_0 = " + p0.to_string());
    if (loop.k_loops >= 1) {
      try {
        LaurentPolynomial p1 = reconstruct_loop_polynomial(loop, 1);
        json extra;
        extra["P_1"] = poly_json(p1);
        bool sym = p1 == p1.mirror();
        b.add("P_1 reconstruction", sym,
              "P_1 = " + p1.to_string() +
                  (sym ? ", palindromic" : ", not palindromic"),
              extra);
      } catch (const NoPolynomialInWindow& e) {
        // Not a property violation: the series depth of this run cannot pin
        // the window down. Reported, not failed.
        b.add("P_1 reconstruction", true,
              std::string("not determined at this series depth (") + e.what() + ")");
      }
    }
    return b.finish(knot, suite);
  }

  if (suite == "lemma21") {
    const CyclotomicCoefficients& C = cyclotomic(knot);
    const LoopData& loop = loop_data(knot, /*deep=*/true);
    auto taylor = cyclotomic_taylor(C, loop.m_series);
    LemmaCompareReport lem = lemma_compare_check(taylor, loop, cfg_.series_order,
                                                 std::min(3, loop.k_loops));
    for (const auto& id : lem.identities) {
      b.add("R_" + std::to_string(id.k) + " from cyclotomic Taylor data", id.pass,
            id.pass ? "zero residual"
                    : "first failing order x^" + std::to_string(id.first_failing_order));
    }
    LemmaFullReport full = lemma_compare_full(C, loop, cfg_.series_order,
                                              std::min(cfg_.loop_order, loop.k_loops));
    b.add("bivariate loop/cyclotomic identity", full.pass,
          "verified on x^0..x^" + std::to_string(full.x_verified) + " by h^0..h^" +
              std::to_string(full.h_verified));
    return b.finish(knot, suite);
  }

  if (suite == "bounds") {
    const CyclotomicCoefficients& C = cyclotomic(knot);
    IntegralityReport integ = integrality_check(C);
    b.add("integrality of C_k, k <= " + std::to_string(C.k_max), integ.pass,
          integ.pass ? ""
                     : "integrality failed at k = " + std::to_string(integ.first_failure));
    BoundFit nf = norm_growth_fit(C);
    b.add("norm growth fit", true,
          nf.degenerate ? "degenerate (norms flat or sparse): trivially bounded"
                        : "C = " + std::to_string(nf.constants[0]) +
                              ", slack = " + std::to_string(nf.slack),
          fit_json(nf));
    DegreeGrowthFit df = degree_growth_fit(C);
    b.add("degree growth fit", true,
          df.mindeg.degenerate
              ? "degenerate (degrees flat or sparse)"
              : "mindeg quadratic coefficient = " +
                    std::to_string(df.mindeg.constants[0]),
          json{{"maxdeg", fit_json(df.maxdeg)}, {"mindeg", fit_json(df.mindeg)}});
    std::vector<PrecisionComplex> kernel_alphas{
        PrecisionComplex(Real("0.1"), Real(0), 0),
        PrecisionComplex(Real("0.05"), Real("0.02"), 0)};
    KernelEstimateReport kf =
        kernel_estimate_check({20, 35, 50}, {1, 2, 3, 4, 5, 6, 7, 8, 9, 10},
                              kernel_alphas);
    json rays = json::array();
    for (const auto& ray : kf.rays) {
      rays.push_back({{"alpha", complex_str(ray.alpha)}, {"slope", ray.slope}});
    }
    b.add("kernel decay for |alpha| < 1", kf.decay_for_small_alpha,
          kf.decay_for_small_alpha
              ? "per-step log-magnitude slope negative on every small-angle ray"
              : "kernel magnitudes fail to decay on a small-angle ray",
          json{{"fit", fit_json(kf.fit)},
               {"rays", rays},
               {"max_n_variation", kf.max_n_variation}});
    RegionEstimate reg = region_estimate(nf, df, kf);
    b.add("angle-region estimate", true,
          reg.empty ? "empty region (fitted constants unsatisfiable)"
                    : "radius at Re(alpha) = 0: " + std::to_string(reg.radius_at(0)),
          json::parse(reg.to_json()));

    std::ostringstream csv;
    csv << "knot,k,l1_norm,mindeg,maxdeg\n";
    for (int k = 0; k <= C.k_max; ++k) {
      const auto& p = C.coeffs[static_cast<size_t>(k)];
      csv << knot << "," << k << "," << rational_to_string(p.l1_norm()) << ",";
      if (p.is_zero()) {
        csv << ",";
      } else {
        auto [lo, hi] = p.degrees();
        csv << lo << "," << hi;
      }
      csv << "\n";
    }
    return b.finish(knot, suite, csv.str());
  }

  if (suite == "asymptotics") {
    LoopData loop = loop_data(knot, /*deep=*/true);
    loop.P[0] = reconstruct_loop_polynomial(loop, 0);
    int n_max = 0;
    if (loop.k_loops >= 1) {
      try {
        loop.P[1] = reconstruct_loop_polynomial(loop, 1);
        n_max = 1;
      } catch (const NoPolynomialInWindow&) {
        n_max = 0;
      }
    }
    const CyclotomicCoefficients& C = cyclotomic(knot);
    Evaluator ev = [&C](int n, const PrecisionComplex& alpha) {
      return eval_scaled_jones_cyclotomic(C, n, alpha);
    };
    AngleGrid grid = cfg_.grid();
    std::vector<int> ns = cfg_.colors();
    const LaurentPolynomial& delta = loop.delta;
    std::string csv;
    int conclusive_points = 0;

    for (int N = 0; N <= n_max; ++N) {
      ConvergenceScan scan = convergence_scan(loop, ev, grid, ns, N);
      csv += scan.table.to_csv(knot);
      int predicted = predicted_decay_order(loop, N);
      json points = json::array();
      bool order_ok = true, limit_ok = true;
      int uncertified = 0;
      for (const auto& res : scan.per_alpha) {
        json p;
        p["alpha"] = complex_str(res.alpha);
        p["target"] = complex_str(res.target);
        p["fitted_order"] = res.fitted_order;
        p["limit_discrepancy"] = res.limit_discrepancy;
        p["conclusive"] = res.conclusive;
        if (!res.note.empty()) p["note"] = res.note;
        points.push_back(std::move(p));
        if (!res.conclusive) {
          // Outside the certified region (or too noisy): reported, and only
          // fatal when no grid point is conclusive at all.
          ++uncertified;
          continue;
        }
        ++conclusive_points;
        if (predicted > 0 && std::isfinite(res.fitted_order) &&
            std::fabs(res.fitted_order - predicted) > kOrderTolerance) {
          order_ok = false;
        }
        PrecisionComplex inv_delta =
            PrecisionComplex(Real(1), Real(0), 0) /
            eval_complex(delta, PrecisionComplex::exp(res.alpha));
        double denom =
            std::max(res.target.abs_approx(), inv_delta.abs_approx());
        if (denom > 0 && res.limit_discrepancy / denom >
                             kRelativeDiscrepancyTolerance) {
          limit_ok = false;
        }
      }
      std::string order_note =
          predicted > 0 ? "predicted order " + std::to_string(predicted) +
                              " +/- " + std::to_string(kOrderTolerance)
                        : "next correction order unknown at this loop depth";
      b.add("order-" + std::to_string(N) + " residual decay", order_ok,
            order_note + ", " + std::to_string(uncertified) +
                " grid point(s) uncertified",
            points);
      b.add("order-" + std::to_string(N) + " limit value", limit_ok,
            "relative discrepancy tolerance " +
                std::to_string(kRelativeDiscrepancyTolerance));
    }
    if (conclusive_points == 0) {
      b.certification_failure = true;
      b.add("certified grid coverage", false,
            "no grid point produced a certified order fit");
    }

    int m_max = std::min(6, loop.m_series - 1);
    DerivativeLimitReport dl = derivative_limit_check(loop, m_max);
    json dlj = json::array();
    for (size_t m = 0; m < dl.limits.size(); ++m) {
      dlj.push_back({{"m", m},
                     {"limit", rational_to_string(dl.limits[m])},
                     {"target", rational_to_string(dl.targets[m])}});
    }
    b.add("derivative limits m <= " + std::to_string(m_max), dl.pass,
          dl.pass ? "exact equality with the series of 1/Delta(e^alpha)" : "",
          dlj);
    return b.finish(knot, suite, csv);
  }

  throw UsageError("unknown suite '" + suite +
                   "' (expected mmr | loops | lemma21 | bounds | asymptotics)");
}

// ---------------------------------------------------------------------------
// report

std::string Session::report(const std::vector<std::string>& knots) {
  json bundle;
  bundle["schema"] = "cjasym-report-v1";
  const char* sde = std::getenv("SOURCE_DATE_EPOCH");
  bundle["generated"] = sde ? std::string(sde) : std::to_string(std::time(nullptr));
  bundle["key"] = cfg_.cache_key();
  json rows = json::array();
  for (const std::string& name : knots) {
    Rec& r = rec(name);
    json row;
    row["knot"] = name;
    row["alexander"] = alexander_of(name).to_string("t");
    const CyclotomicCoefficients& C = cyclotomic(name);
    row["k_max"] = C.k_max;
    row["integrality"] = integrality_check(C).pass;

    // Derived summaries are recomputed from the cached primitives; only the
    // series depth already paid for is used.
    int avail = static_cast<int>(jones_table(name, cfg_.k_max + 1).size());
    int order = std::min(cfg_.series_order + 2 * cfg_.loop_order, avail - 3);
    if (order < cfg_.series_order) {
      throw MissingArtifacts("Jones table for " + name +
                             " is too shallow for the report");
    }
    const LoopData& loop = loop_data_at(name, order);
    MmrReport mmr = mmr_check(loop, cfg_.series_order);
    row["mmr_order_verified"] = mmr.pass ? cfg_.series_order : -1;
    json polys;
    polys["P_0"] = reconstruct_loop_polynomial(loop, 0).to_string();
    if (loop.k_loops >= 1) {
      try {
        polys["P_1"] = reconstruct_loop_polynomial(loop, 1).to_string();
      } catch (const NoPolynomialInWindow&) {
        polys["P_1"] = nullptr;
      }
    }
    row["loop_polynomials"] = std::move(polys);

    BoundFit nf = norm_growth_fit(C);
    DegreeGrowthFit df = degree_growth_fit(C);
    row["bounds"] = json{{"norm", fit_json(nf)},
                         {"maxdeg", fit_json(df.maxdeg)},
                         {"mindeg", fit_json(df.mindeg)}};
    std::vector<PrecisionComplex> kernel_alphas{
        PrecisionComplex(Real("0.1"), Real(0), 0),
        PrecisionComplex(Real("0.05"), Real("0.02"), 0)};
    KernelEstimateReport kf =
        kernel_estimate_check({20, 35, 50}, {1, 2, 3, 4, 5, 6, 7, 8, 9, 10},
                              kernel_alphas);
    RegionEstimate reg = region_estimate(nf, df, kf);
    row["region"] = json::parse(reg.to_json());
    rows.push_back(std::move(row));
  }
  bundle["knots"] = std::move(rows);
  return bundle.dump(2) + "\n";
}

}  // namespace cj
