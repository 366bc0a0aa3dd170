#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <string>

#include "cjasym.h"
#include "doctest.h"

namespace {

struct Ctx {
  cj_ctx* p;
  explicit Ctx(const char* cfg = nullptr) : p(cj_ctx_new(cfg)) {}
  ~Ctx() { cj_ctx_free(p); }
};

struct Str {
  char* s = nullptr;
  ~Str() { cj_string_free(s); }
  std::string view() const { return s ? s : ""; }
};

}  // namespace

TEST_CASE("version and context lifecycle") {
  CHECK(std::string(cj_version()).find('.') != std::string::npos);
  Ctx ctx;
  REQUIRE(ctx.p);
  CHECK(std::string(cj_last_error(ctx.p)).empty());
  CHECK(!cj_ctx_new("{\"k_max\": -5}"));
  CHECK(!cj_ctx_new("not json"));
}

TEST_CASE("catalog and exact artifacts") {
  Ctx ctx("{\"k_max\": 6, \"series_order\": 4, \"loop_order\": 1}");
  REQUIRE(ctx.p);
  Str names;
  CHECK(cj_knot_names(ctx.p, &names.s) == CJ_OK);
  CHECK(names.view().find("4_1") != std::string::npos);

  Str jones;
  CHECK(cj_colored_jones(ctx.p, "3_1", 2, &jones.s) == CJ_OK);
  // q^-1 + q^-3 - q^-4 in some JSON encoding: nonempty and parseable later
  CHECK(jones.view().find("-4") != std::string::npos);

  Str alex;
  CHECK(cj_alexander(ctx.p, "4_1", &alex.s) == CJ_OK);
  CHECK(alex.view().find("3") != std::string::npos);

  Str cyc;
  CHECK(cj_cyclotomic(ctx.p, "4_1", &cyc.s) == CJ_OK);
  CHECK(cyc.view().find("4_1") != std::string::npos);

  Str artifact;
  CHECK(cj_compute(ctx.p, "3_1", "alexander", &artifact.s) == CJ_OK);
  CHECK(!artifact.view().empty());
}

TEST_CASE("error paths set messages and codes") {
  Ctx ctx("{\"k_max\": 6, \"series_order\": 4, \"loop_order\": 1}");
  REQUIRE(ctx.p);
  Str out;
  CHECK(cj_colored_jones(ctx.p, "no_such_knot", 2, &out.s) == CJ_USAGE_ERROR);
  CHECK(std::string(cj_last_error(ctx.p)).find("no_such_knot") !=
        std::string::npos);
  CHECK(out.s == nullptr);
  CHECK(cj_colored_jones(ctx.p, "3_1", 0, &out.s) == CJ_USAGE_ERROR);
  CHECK(cj_compute(ctx.p, "3_1", "homfly", &out.s) == CJ_USAGE_ERROR);
  CHECK(cj_verify(ctx.p, "3_1", "nope", nullptr, nullptr, nullptr) ==
        CJ_USAGE_ERROR);
  // a successful call clears the error
  Str names;
  CHECK(cj_knot_names(ctx.p, &names.s) == CJ_OK);
  CHECK(std::string(cj_last_error(ctx.p)).empty());
}

TEST_CASE("verify through the C boundary") {
  Ctx ctx("{\"k_max\": 6, \"series_order\": 4, \"loop_order\": 1}");
  REQUIRE(ctx.p);
  Str report, summary, csv;
  int rc = cj_verify(ctx.p, "0_1", "mmr", &report.s, &summary.s, &csv.s);
  CHECK(rc == CJ_OK);
  CHECK(report.view().find("\"pass\": true") != std::string::npos);
  CHECK(summary.view().find("ok") != std::string::npos);
  CHECK(csv.view().empty());
}

TEST_CASE("report through the C boundary") {
  Ctx ctx("{\"k_max\": 8, \"series_order\": 4, \"loop_order\": 1}");
  REQUIRE(ctx.p);
  Str empty;
  CHECK(cj_report(ctx.p, "", &empty.s) == CJ_OK);
  CHECK(empty.view().find("\"knots\": []") != std::string::npos);
  Str one;
  CHECK(cj_report(ctx.p, "0_1", &one.s) == CJ_OK);
  CHECK(one.view().find("\"0_1\"") != std::string::npos);
}
