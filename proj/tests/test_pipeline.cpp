#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include "doctest.h"
#include "pipeline.hpp"

using namespace cj;
namespace fs = std::filesystem;

namespace {

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() /
           ("cjasym_test_" + std::to_string(std::rand()));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
};

// small, fast configuration for pipeline mechanics
RunConfig small_config() {
  RunConfig cfg;
  cfg.k_max = 8;
  cfg.series_order = 4;
  cfg.loop_order = 1;
  return cfg;
}

}  // namespace

TEST_CASE("config validation") {
  RunConfig cfg;
  CHECK_NOTHROW(cfg.validate());

  RunConfig bad = cfg;
  bad.k_max = 0;
  CHECK_THROWS_AS(bad.validate(), UsageError);
  bad = cfg;
  bad.precision_bits = 32;
  CHECK_THROWS_AS(bad.validate(), UsageError);
  bad = cfg;
  bad.n_list = {100, 100};
  CHECK_THROWS_AS(bad.validate(), UsageError);
  bad = cfg;
  bad.n_list = {200, 100};
  CHECK_THROWS_AS(bad.validate(), UsageError);
  bad = cfg;
  bad.alphas = {{0.0, 0.0}};
  CHECK_THROWS_AS(bad.validate(), UsageError);
}

TEST_CASE("config json round trip and defaults") {
  RunConfig cfg = small_config();
  cfg.mirror = true;
  cfg.alphas = {{0.0, 0.05}, {0.01, -0.03}};
  cfg.n_list = {100, 200, 400};
  RunConfig back = RunConfig::from_json(cfg.to_json());
  CHECK(back.k_max == cfg.k_max);
  CHECK(back.series_order == cfg.series_order);
  CHECK(back.mirror == cfg.mirror);
  CHECK(back.alphas == cfg.alphas);
  CHECK(back.n_list == cfg.n_list);

  RunConfig defaults = RunConfig::from_json("{}");
  CHECK(defaults.k_max == 12);
  CHECK(defaults.series_order == 8);
  CHECK(defaults.precision_bits == 128);
  CHECK(defaults.colors() == std::vector<int>{200, 400, 800, 1600, 3200});
  CHECK(defaults.grid().points.size() == AngleGrid::default_grid().points.size());

  CHECK_THROWS_AS(RunConfig::from_json("not json"), UsageError);
  CHECK_THROWS_AS(RunConfig::from_json(R"({"k_max": -1})"), UsageError);
}

TEST_CASE("session artifacts and catalog") {
  Session s(small_config());
  auto names = s.knot_names();
  REQUIRE(names.size() == 5);
  CHECK(names[0] == "0_1");
  CHECK(s.braid("3_1").strands() == 2);
  CHECK_THROWS_AS(s.braid("9_42"), MissingArtifacts);

  const auto& table = s.jones_table("3_1", 5);
  CHECK(table.size() >= 5);
  CHECK(table[0] == LaurentPolynomial::one());
  CHECK(s.alexander_of("4_1").coeff(0) == 3);
  CHECK(s.cyclotomic("4_1").coeffs[2] == LaurentPolynomial::one());
}

TEST_CASE("disk cache: idempotence, key mismatch, corruption") {
  TempDir tmp;
  RunConfig cfg = small_config();
  cfg.cache_dir = tmp.path.string();

  {
    Session s(cfg);
    std::string out = s.compute("3_1", "jones");
    CHECK(!out.empty());
    s.compute("3_1", "alexander");
    s.compute("3_1", "cyclotomic");
    CHECK(fs::exists(tmp.path / "3_1.json"));
    // idempotent: recomputation verifies against the cache and succeeds
    CHECK(s.compute("3_1", "jones") == out);
  }
  {
    // a second session reads the same cache and recomputes identically
    Session s(cfg);
    CHECK_NOTHROW(s.compute("3_1", "cyclotomic"));
  }
  {
    // flipped mirror convention: the cache key no longer matches
    RunConfig flipped = cfg;
    flipped.mirror = true;
    Session s(flipped);
    CHECK_THROWS_AS(s.compute("3_1", "jones"), CacheMismatch);
  }
  {
    // corrupt the stored data: the content hash must catch it
    auto file = tmp.path / "3_1.json";
    std::ifstream in(file);
    std::string text((std::istreambuf_iterator<char>(in)),
                     std::istreambuf_iterator<char>());
    in.close();
    auto pos = text.find("\"jones\"");
    REQUIRE(pos != std::string::npos);
    auto digit = text.find_first_of("0123456789", pos + 20);
    REQUIRE(digit != std::string::npos);
    text[digit] = text[digit] == '9' ? '8' : '9';
    std::ofstream(file) << text;
    Session s(cfg);
    CHECK_THROWS_AS(s.compute("3_1", "jones"), CacheMismatch);
  }
}

TEST_CASE("compute validates the artifact name") {
  Session s(small_config());
  CHECK_THROWS_AS(s.compute("3_1", "homfly"), UsageError);
  CHECK_THROWS_AS(s.verify("3_1", "everything"), UsageError);
}

TEST_CASE("verify: fast suites on the unknot") {
  Session s(small_config());
  VerifyOutcome mmr = s.verify("0_1", "mmr");
  CHECK(mmr.pass);
  CHECK(mmr.exit_code == 0);
  CHECK(mmr.summary.find("FAIL") == std::string::npos);
  CHECK(mmr.report_json.find("\"pass\": true") != std::string::npos);

  VerifyOutcome loops = s.verify("0_1", "loops");
  CHECK(loops.pass);
  CHECK(loops.summary.find("P_0 = 1") != std::string::npos);

  VerifyOutcome bounds = s.verify("0_1", "bounds");
  CHECK(bounds.pass);
  CHECK(bounds.csv.rfind("knot,", 0) == 0);
}

TEST_CASE("verify: trefoil mmr at reduced order") {
  Session s(small_config());
  VerifyOutcome out = s.verify("3_1", "mmr");
  CHECK(out.pass);
  CHECK(out.exit_code == 0);
  CHECK(out.summary.find("exactly zero") != std::string::npos);
}

TEST_CASE("report bundle: determinism and empty list") {
  setenv("SOURCE_DATE_EPOCH", "1700000000", 1);
  RunConfig cfg = small_config();
  Session s(cfg);
  std::string empty = s.report({});
  CHECK(empty.find("\"knots\": []") != std::string::npos);

  std::string a = s.report({"0_1", "3_1"});
  std::string b = s.report({"0_1", "3_1"});
  CHECK(a == b);
  CHECK(a.find("\"3_1\"") != std::string::npos);
  CHECK(a.find("\"integrality\": true") != std::string::npos);

  // a fresh session over the same config produces the same bytes
  Session s2(cfg);
  CHECK(s2.report({"0_1", "3_1"}) == a);
  unsetenv("SOURCE_DATE_EPOCH");
}

TEST_CASE("mirror convention changes the artifacts coherently") {
  RunConfig cfg = small_config();
  Session plain(cfg);
  cfg.mirror = true;
  Session mirrored(cfg);
  const auto& j = plain.jones_table("3_1", 3);
  const auto& jm = mirrored.jones_table("3_1", 3);
  CHECK(jm[2] == j[2].mirror());
  CHECK(mirrored.alexander_of("3_1") == plain.alexander_of("3_1"));
  // mirror suite runs still pass
  CHECK(mirrored.verify("3_1", "mmr").pass);
}
