#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "asymptotics.hpp"
#include "braid.hpp"
#include "cyclotomic.hpp"
#include "loops.hpp"

namespace cj {

struct CacheMismatch : Error {
  explicit CacheMismatch(const std::string& w)
      : Error(ErrorCode::cache_mismatch, w) {}
};
struct MissingArtifacts : Error {
  explicit MissingArtifacts(const std::string& w)
      : Error(ErrorCode::missing_artifacts, w) {}
};
struct UsageError : Error {
  explicit UsageError(const std::string& w) : Error(ErrorCode::usage, w) {}
};
struct IoError : Error {
  explicit IoError(const std::string& w) : Error(ErrorCode::io, w) {}
};

/// Run-wide configuration. A flat JSON document on disk; every field also has
/// a CLI flag override.
struct RunConfig {
  std::string catalog_path;  // empty: built-in catalog
  std::string cache_dir;     // empty: in-memory only
  int k_max = 12;
  int series_order = 8;
  int loop_order = 3;
  int precision_bits = 128;
  bool mirror = false;
  std::vector<std::pair<double, double>> alphas;  // empty: default grid
  std::vector<int> n_list;                        // empty: 200..3200 doubling

  void validate() const;  // throws UsageError
  std::string to_json() const;
  static RunConfig from_json(const std::string& text);
  static RunConfig from_file(const std::string& path);

  /// The convention-relevant parameters, used as the cache key.
  std::string cache_key() const;
  AngleGrid grid() const;
  std::vector<int> colors() const;
};

struct VerifyOutcome {
  bool pass = false;
  int exit_code = 1;        // 0 pass, 1 check failure, 3 certification failure
  std::string summary;      // human-readable, one line per check
  std::string report_json;  // machine-readable
  std::string csv;          // scan tables; empty for non-scan suites
};

/// Orchestrates cached computation and the verification suites. All heavy
/// artifacts (Jones tables, cyclotomic coefficients, loop data) are computed
/// lazily, shared across commands, and optionally persisted as JSON under
/// cache_dir keyed by the convention parameters.
class Session {
 public:
  explicit Session(RunConfig config);

  const RunConfig& config() const { return cfg_; }
  std::vector<std::string> knot_names() const;

  const BraidWord& braid(const std::string& knot);
  /// Jones table entries n = 1..n_top (grown on demand, index n-1).
  const std::vector<LaurentPolynomial>& jones_table(const std::string& knot,
                                                    int n_top);
  const LaurentPolynomial& alexander_of(const std::string& knot);
  const CyclotomicCoefficients& cyclotomic(const std::string& knot);
  /// Loop data at series order M (colors 1..M+3 required); deep = true uses
  /// series_order + 2 * loop_order so one-loop polynomials can be pinned down.
  const LoopData& loop_data(const std::string& knot, bool deep);

  /// Recomputes the named artifact, errors on disagreement with an existing
  /// cache, writes the cache, and returns the artifact as JSON.
  std::string compute(const std::string& knot, const std::string& what);

  /// suite is one of mmr | loops | lemma21 | bounds | asymptotics.
  VerifyOutcome verify(const std::string& knot, const std::string& suite);

  /// Consolidated JSON bundle for the listed knots (empty list allowed).
  std::string report(const std::vector<std::string>& knots);

 private:
  struct Rec {
    std::unique_ptr<BraidWord> braid;
    std::vector<LaurentPolynomial> jones;
    LaurentPolynomial alex;
    bool have_alex = false;
    std::unique_ptr<CyclotomicCoefficients> cyclo;
    std::map<int, LoopData> loops;  // keyed by series order
  };

  Rec& rec(const std::string& knot);
  std::string cache_path(const std::string& knot) const;
  void load_cache(const std::string& knot, Rec& r);
  void store_cache(const std::string& knot, Rec& r);
  const LoopData& loop_data_at(const std::string& knot, int order);

  RunConfig cfg_;
  std::vector<CatalogEntry> catalog_;
  std::map<std::string, Rec> recs_;
};

}  // namespace cj
