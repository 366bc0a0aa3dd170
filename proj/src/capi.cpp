#include "cjasym.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "json.hpp"
#include "pipeline.hpp"

struct cj_ctx {
  explicit cj_ctx(cj::RunConfig cfg) : session(std::move(cfg)) {}
  cj::Session session;
  std::string last_error;
};

namespace {

int status_of(const cj::Error& e) {
  switch (e.code()) {
    case cj::ErrorCode::usage:
    case cj::ErrorCode::io:
    case cj::ErrorCode::not_a_knot:
    case cj::ErrorCode::cache_mismatch:
    case cj::ErrorCode::missing_artifacts:
      return CJ_USAGE_ERROR;
    case cj::ErrorCode::tail_not_certified:
    case cj::ErrorCode::precision_exhausted:
      return CJ_CERTIFICATION_FAILED;
    default:
      return CJ_CHECK_FAILED;
  }
}

char* dup_string(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

template <typename Fn>
int guarded(cj_ctx* ctx, Fn&& fn) {
  if (!ctx) return CJ_USAGE_ERROR;
  ctx->last_error.clear();
  try {
    return fn();
  } catch (const cj::Error& e) {
    ctx->last_error = e.what();
    return status_of(e);
  } catch (const std::exception& e) {
    ctx->last_error = e.what();
    return CJ_CHECK_FAILED;
  }
}

}  // namespace

extern "C" {

const char* cj_version(void) { return "1.0.0"; }

cj_ctx* cj_ctx_new(const char* config_json) {
  try {
    cj::RunConfig cfg;
    if (config_json && *config_json) cfg = cj::RunConfig::from_json(config_json);
    return new cj_ctx(std::move(cfg));
  } catch (...) {
    return nullptr;
  }
}

void cj_ctx_free(cj_ctx* ctx) { delete ctx; }

const char* cj_last_error(const cj_ctx* ctx) {
  return ctx ? ctx->last_error.c_str() : "null context";
}

void cj_string_free(char* s) { std::free(s); }

int cj_knot_names(cj_ctx* ctx, char** out_json) {
  return guarded(ctx, [&] {
    nlohmann::json names = ctx->session.knot_names();
    if (out_json) *out_json = dup_string(names.dump());
    return CJ_OK;
  });
}

int cj_colored_jones(cj_ctx* ctx, const char* knot, int n, char** out_json) {
  return guarded(ctx, [&] {
    if (!knot || n < 1) throw cj::UsageError("knot name and color n >= 1 required");
    const auto& table = ctx->session.jones_table(knot, n);
    if (out_json) *out_json = dup_string(table[static_cast<size_t>(n - 1)].to_json());
    return CJ_OK;
  });
}

int cj_alexander(cj_ctx* ctx, const char* knot, char** out_json) {
  return guarded(ctx, [&] {
    if (!knot) throw cj::UsageError("knot name required");
    if (out_json) *out_json = dup_string(ctx->session.alexander_of(knot).to_json());
    return CJ_OK;
  });
}

int cj_cyclotomic(cj_ctx* ctx, const char* knot, char** out_json) {
  return guarded(ctx, [&] {
    if (!knot) throw cj::UsageError("knot name required");
    if (out_json) *out_json = dup_string(ctx->session.cyclotomic(knot).to_json());
    return CJ_OK;
  });
}

int cj_compute(cj_ctx* ctx, const char* knot, const char* what, char** out_json) {
  return guarded(ctx, [&] {
    if (!knot || !what) throw cj::UsageError("knot name and artifact required");
    std::string artifact = ctx->session.compute(knot, what);
    if (out_json) *out_json = dup_string(artifact);
    return CJ_OK;
  });
}

int cj_verify(cj_ctx* ctx, const char* knot, const char* suite,
              char** out_report_json, char** out_summary, char** out_csv) {
  return guarded(ctx, [&] {
    if (!knot || !suite) throw cj::UsageError("knot name and suite required");
    cj::VerifyOutcome out = ctx->session.verify(knot, suite);
    if (out_report_json) *out_report_json = dup_string(out.report_json);
    if (out_summary) *out_summary = dup_string(out.summary);
    if (out_csv) *out_csv = dup_string(out.csv);
    if (!out.pass) ctx->last_error = "suite '" + std::string(suite) + "' failed";
    return out.exit_code;
  });
}

int cj_report(cj_ctx* ctx, const char* knots_csv, char** out_json) {
  return guarded(ctx, [&] {
    std::vector<std::string> knots;
    if (knots_csv) {
      std::string s(knots_csv);
      size_t pos = 0;
      while (pos < s.size()) {
        size_t comma = s.find(',', pos);
        if (comma == std::string::npos) comma = s.size();
        if (comma > pos) knots.push_back(s.substr(pos, comma - pos));
        pos = comma + 1;
      }
    }
    std::string bundle = ctx->session.report(knots);
    if (out_json) *out_json = dup_string(bundle);
    return CJ_OK;
  });
}

}  // extern "C"
