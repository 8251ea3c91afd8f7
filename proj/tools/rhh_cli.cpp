#include <cstdio>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "rhh/error.hpp"
#include "rhh/io.hpp"

namespace {

using rhh::io::Json;

enum Exit { kOk = 0, kFailures = 1, kParse = 2, kResource = 3, kValidation = 4 };

rhh::io::InputDocument load(const std::string& spec) {
  const std::string prefix = "catalog:";
  if (spec.rfind(prefix, 0) == 0) {
    rhh::FDCategory c = rhh::catalog(spec.substr(prefix.size()));
    Json doc = {{"format_version", rhh::io::kFormatVersion},
                {"p", c.field().p()},
                {"kind", "catalog"},
                {"payload", {{"expr", spec.substr(prefix.size())}}}};
    return rhh::io::parse_document(doc);
  }
  return rhh::io::load_document(spec);
}

void emit(const std::string& out, const Json& doc) {
  if (out.empty() || out == "-") {
    std::cout << doc.dump(2) << "\n";
  } else {
    rhh::io::write_atomic(out, doc);
  }
}

int exit_code(const rhh::Error& e) {
  switch (e.code()) {
    case rhh::ErrorCode::ParseError: return kParse;
    case rhh::ErrorCode::ResourceBound: return kResource;
    default: return kValidation;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hochschild cohomology of finite-dimensional algebras over F_p, with restricted structure"};
  app.require_subcommand(1);

  auto* compute = app.add_subcommand("compute", "HH^n dimensions, restricted HH^1 and its fingerprint");
  std::string input, catalog_expr, out;
  int degree_max = 3;
  bool full = false;
  std::uint64_t cap = 0;
  auto* in_opt = compute->add_option("--input", input, "input document (JSON)");
  auto* cat_opt = compute->add_option("--catalog", catalog_expr, "catalog expression, e.g. truncated_poly(2,2)");
  in_opt->excludes(cat_opt);
  compute->add_option("--degree-max", degree_max, "highest degree n for dim HH^n");
  auto* norm_flag = compute->add_flag("--normalized", "use the normalized complex (default)");
  auto* full_flag = compute->add_flag("--full", full, "use the full complex");
  norm_flag->excludes(full_flag);
  compute->add_option("--cap", cap, "byte cap on any single cochain or matrix");
  compute->add_option("--out", out, "report path (stdout if omitted)");

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  std::string suite = "all";
  std::uint64_t seed = 42;
  std::size_t trials = 50;
  verify->add_option("--suite", suite, "appendix | welldefined | morita | zeta | all");
  verify->add_option("--seed", seed, "random seed");
  verify->add_option("--trials", trials, "trials per algebra");
  verify->add_option("--out", out, "report path (stdout if omitted)");

  auto* compare = app.add_subcommand("compare", "compare restricted HH^1 invariants of two inputs");
  std::string a, b;
  std::size_t budget = 1'000'000;
  compare->add_option("--a", a, "first input document, or catalog:EXPR")->required();
  compare->add_option("--b", b, "second input document, or catalog:EXPR")->required();
  compare->add_option("--budget", budget, "candidate budget for the isomorphism search");
  compare->add_option("--out", out, "report path (stdout if omitted)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kOk : kParse;
  }

  try {
    if (*compute) {
      if (input.empty() && catalog_expr.empty()) {
        std::cerr << "compute: one of --input or --catalog is required\n";
        return kParse;
      }
      rhh::io::InputDocument doc = input.empty() ? load("catalog:" + catalog_expr) : load(input);
      rhh::io::ComputeOptions opt;
      opt.degree_max = degree_max;
      opt.normalized = !full;
      opt.cap_bytes = cap;
      emit(out, rhh::io::compute_report(doc, opt));
      return kOk;
    }
    if (*verify) {
      if (suite != "appendix" && suite != "welldefined" && suite != "morita" && suite != "zeta" && suite != "all") {
        std::cerr << "verify: unknown suite '" << suite << "'\n";
        return kParse;
      }
      rhh::io::SuiteResult r = rhh::io::run_suite(suite, seed, trials);
      emit(out, r.report);
      if (r.failures > 0) {
        std::cerr << "verify: " << r.failures << " failure(s)\n";
        return kFailures;
      }
      return kOk;
    }
    if (*compare) {
      emit(out, rhh::io::compare_report(load(a), load(b), budget));
      return kOk;
    }
  } catch (const rhh::Error& e) {
    std::cerr << e.what() << "\n";
    return exit_code(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kValidation;
  }
  return kOk;
}
