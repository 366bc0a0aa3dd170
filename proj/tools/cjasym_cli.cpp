// Command-line front end; talks to the library through the C API only.
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cjasym.h"
#include "json.hpp"

namespace {

using nlohmann::json;

struct Flags {
  std::string config_file;
  std::string catalog;
  std::string cache;
  int kmax = -1;
  int order = -1;
  int loops = -1;
  int precision = -1;
  bool mirror = false;
  std::vector<std::string> alphas;
  std::vector<std::string> ns;
  std::string out;
};

// Expands one --n argument: either a single color or "a..b..step".
bool expand_colors(const std::string& s, std::vector<int>& out) {
  size_t d1 = s.find("..");
  if (d1 == std::string::npos) {
    try {
      out.push_back(std::stoi(s));
    } catch (...) {
      return false;
    }
    return true;
  }
  size_t d2 = s.find("..", d1 + 2);
  if (d2 == std::string::npos) return false;
  try {
    int a = std::stoi(s.substr(0, d1));
    int b = std::stoi(s.substr(d1 + 2, d2 - d1 - 2));
    int step = std::stoi(s.substr(d2 + 2));
    if (step <= 0 || b < a) return false;
    for (int n = a; n <= b; n += step) out.push_back(n);
  } catch (...) {
    return false;
  }
  return true;
}

// Precedence: CLI flags > config file > defaults. Returns the merged flat
// JSON document handed to the library, or nullopt on a bad flag value.
bool build_config(const Flags& f, std::string& out_json, std::string& err) {
  json cfg = json::object();
  if (!f.config_file.empty()) {
    std::ifstream in(f.config_file);
    if (!in) {
      err = "cannot open config file: " + f.config_file;
      return false;
    }
    try {
      in >> cfg;
    } catch (const json::exception& e) {
      err = std::string("config file is not valid JSON: ") + e.what();
      return false;
    }
  }
  if (!f.catalog.empty()) cfg["catalog_path"] = f.catalog;
  if (!f.cache.empty()) cfg["cache_dir"] = f.cache;
  if (f.kmax >= 0) cfg["k_max"] = f.kmax;
  if (f.order >= 0) cfg["series_order"] = f.order;
  if (f.loops >= 0) cfg["loop_order"] = f.loops;
  if (f.precision >= 0) cfg["precision_bits"] = f.precision;
  if (f.mirror) cfg["mirror"] = true;
  if (!f.alphas.empty()) {
    json as = json::array();
    for (const std::string& a : f.alphas) {
      size_t comma = a.find(',');
      if (comma == std::string::npos) {
        err = "--alpha expects \"re,im\", got: " + a;
        return false;
      }
      try {
        as.push_back({std::stod(a.substr(0, comma)), std::stod(a.substr(comma + 1))});
      } catch (...) {
        err = "--alpha expects \"re,im\", got: " + a;
        return false;
      }
    }
    cfg["alphas"] = as;
  }
  if (!f.ns.empty()) {
    std::vector<int> colors;
    for (const std::string& s : f.ns) {
      if (!expand_colors(s, colors)) {
        err = "--n expects an integer or \"a..b..step\", got: " + s;
        return false;
      }
    }
    cfg["n_list"] = colors;
  }
  out_json = cfg.dump();
  return true;
}

bool write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  if (!out) return false;
  out << content;
  return true;
}

struct CtxGuard {
  cj_ctx* ctx = nullptr;
  ~CtxGuard() { cj_ctx_free(ctx); }
};

struct StrGuard {
  char* s = nullptr;
  ~StrGuard() { cj_string_free(s); }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact colored Jones / cyclotomic computation and asymptotic verification"};
  app.require_subcommand(1);
  Flags f;
  app.add_option("--config", f.config_file, "JSON config file");
  app.add_option("--catalog", f.catalog, "knot catalog (JSON lines)");
  app.add_option("--cache", f.cache, "cache directory for exact artifacts");
  app.add_option("--kmax", f.kmax, "cyclotomic depth k_max");
  app.add_option("--order", f.order, "series order for the loop expansion");
  app.add_option("--loops", f.loops, "number of loop degrees to extract");
  app.add_option("--precision", f.precision, "working precision in bits");
  app.add_flag("--mirror", f.mirror, "use the mirror of every catalog braid");
  app.add_option("--alpha", f.alphas, "scan angle \"re,im\" (repeatable)");
  app.add_option("--n", f.ns, "scan color: integer or \"a..b..step\" (repeatable)");
  app.add_option("--out", f.out, "output file (report) or directory (verify)");

  app.fallthrough();
  std::string knot, what, suite;
  std::vector<std::string> report_knots;
  auto* compute = app.add_subcommand("compute", "compute and cache one exact artifact");
  compute->fallthrough();
  compute->add_option("knot", knot, "knot name")->required();
  compute->add_option("what", what, "jones | alexander | cyclotomic")->required();
  auto* verify = app.add_subcommand("verify", "run one verification suite");
  verify->fallthrough();
  verify->add_option("knot", knot, "knot name")->required();
  verify->add_option("suite", suite, "mmr | loops | lemma21 | bounds | asymptotics")
      ->required();
  auto* report = app.add_subcommand("report", "consolidated report for listed knots");
  report->fallthrough();
  report->add_option("knots", report_knots, "knot names (may be empty)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : CJ_USAGE_ERROR;
  }

  std::string config_json, err;
  if (!build_config(f, config_json, err)) {
    std::cerr << "error: " << err << "\n";
    return CJ_USAGE_ERROR;
  }
  CtxGuard g;
  g.ctx = cj_ctx_new(config_json.c_str());
  if (!g.ctx) {
    std::cerr << "error: invalid configuration\n";
    return CJ_USAGE_ERROR;
  }

  if (compute->parsed()) {
    StrGuard out;
    int rc = cj_compute(g.ctx, knot.c_str(), what.c_str(), &out.s);
    if (rc != CJ_OK) {
      std::cerr << "error: " << cj_last_error(g.ctx) << "\n";
      return rc;
    }
    if (f.out.empty()) {
      std::cout << out.s << "\n";
    } else if (!write_file(f.out, std::string(out.s) + "\n")) {
      std::cerr << "error: cannot write " << f.out << "\n";
      return CJ_USAGE_ERROR;
    }
    return CJ_OK;
  }

  if (verify->parsed()) {
    StrGuard rep, sum, csv;
    int rc = cj_verify(g.ctx, knot.c_str(), suite.c_str(), &rep.s, &sum.s, &csv.s);
    if (!sum.s) {
      std::cerr << "error: " << cj_last_error(g.ctx) << "\n";
      return rc;
    }
    std::cout << knot << " / " << suite << "\n" << sum.s;
    std::cout << (rc == CJ_OK ? "PASS" : "FAIL") << "\n";
    if (!f.out.empty()) {
      std::string base = f.out + "/" + knot + "_" + suite;
      bool ok = write_file(base + ".json", std::string(rep.s) + "\n");
      if (ok && csv.s && *csv.s) ok = write_file(base + ".csv", csv.s);
      if (!ok) {
        std::cerr << "error: cannot write under " << f.out << "\n";
        return CJ_USAGE_ERROR;
      }
    }
    return rc;
  }

  // report
  std::string knots_csv;
  for (size_t i = 0; i < report_knots.size(); ++i) {
    if (i) knots_csv += ",";
    knots_csv += report_knots[i];
  }
  StrGuard out;
  int rc = cj_report(g.ctx, knots_csv.c_str(), &out.s);
  if (rc != CJ_OK) {
    std::cerr << "error: " << cj_last_error(g.ctx) << "\n";
    return rc;
  }
  if (f.out.empty()) {
    std::cout << out.s;
  } else if (!write_file(f.out, out.s)) {
    std::cerr << "error: cannot write " << f.out << "\n";
    return CJ_USAGE_ERROR;
  }
  return CJ_OK;
}
