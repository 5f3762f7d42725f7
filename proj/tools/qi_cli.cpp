// Command line front end for the sweep driver. Two verbs:
//
//   qi run      --config cfg.json [--out dir] [--format csv|jsonl] [--threads n]
//   qi validate --config cfg.json
//
// run writes the data file plus manifest.json into the output directory;
// validate parses the config and prints diagnostics including a cost
// estimate. Exit codes: 0 success, 2 config error, 3 numerical failure.

#include <cstdio>
#include <exception>
#include <string>

#include <CLI11.hpp>

#include "qi/core.hpp"
#include "qi/sweep.hpp"

int main(int argc, char** argv) {
  CLI::App app{"quantum correlation and phase-space sweep tool"};
  app.set_version_flag("--version", qi::version_string());
  app.require_subcommand(1);

  std::string config_path;
  std::string out_dir = ".";
  std::string format;
  int threads = 0;

  CLI::App* run = app.add_subcommand("run", "run a sweep config and write data files");
  run->add_option("--config", config_path, "JSON sweep config")->required();
  run->add_option("--out", out_dir, "output directory (default .)");
  run->add_option("--format", format, "csv or jsonl (overrides the config)");
  run->add_option("--threads", threads, "worker threads (overrides config and env)");

  CLI::App* validate = app.add_subcommand("validate", "check a config and estimate cost");
  validate->add_option("--config", config_path, "JSON sweep config")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (validate->parsed()) {
      std::string report = qi::validate_config(config_path);
      std::fputs(report.c_str(), stdout);
      return 0;
    }
    qi::SweepOutcome oc = qi::run_sweep(config_path, out_dir, format, threads);
    std::printf("task: %s\n", oc.task.c_str());
    std::printf("config_hash: fnv1a64:%s\n", oc.config_hash.c_str());
    for (const auto& f : oc.files) std::printf("wrote: %s\n", f.c_str());
    std::printf("wall_seconds: %.3f\n", oc.wall_seconds);
    return 0;
  } catch (const qi::ConfigError& e) {
    std::fprintf(stderr, "config error: %s\n", e.what());
    return 2;
  } catch (const qi::NumericalError& e) {
    std::fprintf(stderr, "numerical failure: %s\n", e.what());
    return 3;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "numerical failure: %s\n", e.what());
    return 3;
  }
}
