#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "cdf/eval.hpp"
#include "cdf/verify.hpp"

using namespace cdf;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void spit(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw UsageError("cannot write '" + path + "'");
  out << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"symbolic checker for combinatorial differential forms"};
  app.require_subcommand(1);

  std::string config_path, report_path, expr_path, file_path;
  std::vector<std::string> suites;
  uint64_t seed = 0;
  int jobs = 0;

  CLI::App* verify = app.add_subcommand("verify", "run verification suites and report");
  verify->add_option("--config", config_path, "suite configuration file (defaults when omitted)");
  verify->add_option("--suite", suites, "restrict to the named suites")->allow_extra_args(false);
  CLI::Option* seed_opt = verify->add_option("--seed", seed, "override the random seed");
  CLI::Option* jobs_opt = verify->add_option("--jobs", jobs, "run suites on this many threads");
  verify->add_option("--report", report_path, "also write the machine report to this file");

  CLI::App* eval = app.add_subcommand("eval", "evaluate an expression file");
  eval->add_option("--expr", expr_path, "expression file")->required();

  CLI::App* exp = app.add_subcommand("export", "write the default configuration");
  exp->add_option("--file", file_path, "destination")->required();

  CLI::App* imp = app.add_subcommand("import", "validate a configuration and print its canonical form");
  imp->add_option("--file", file_path, "definitions file")->required();

  try {
    app.parse(argc, argv);

    if (*verify) {
      SuiteConfig cfg = config_path.empty() ? SuiteConfig{} : parse_config(slurp(config_path));
      if (!suites.empty()) cfg.suites = suites;
      if (*seed_opt) cfg.seed = seed;
      if (*jobs_opt) cfg.jobs = jobs;
      Report rep = run_suites(cfg);
      std::string text = rep.machine_text();
      std::cout << text;
      if (!report_path.empty()) spit(report_path, text);
      return rep.all_pass() ? 0 : 1;
    }
    if (*eval) {
      std::cout << run_eval(slurp(expr_path));
      return 0;
    }
    if (*exp) {
      spit(file_path, serialize_config(SuiteConfig{}));
      return 0;
    }
    if (*imp) {
      SuiteConfig cfg = parse_config(slurp(file_path));
      config_base(cfg);  // surfaces bad base relations
      for (const GroupDef& g : cfg.groups) build_group(g, cfg.ring, cfg.cap);
      resolve_group(cfg, cfg.group);
      for (const ActionDef& a : cfg.actions)
        build_action(a, resolve_group(cfg, a.actor), resolve_group(cfg, a.acted));
      std::cout << serialize_config(cfg);
      return 0;
    }
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  } catch (const FormatError& e) {
    std::cerr << "format error: " << e.what() << "\n";
    return 2;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const LookupError& e) {
    std::cerr << "lookup error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
