#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "dunkl/cli.hpp"
#include "dunkl/probes.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Dunkl harmonic analysis probes"};
  app.require_subcommand(1);

  std::string validate_path;
  auto* validate = app.add_subcommand("validate", "check a config's root system and grid");
  validate->add_option("config", validate_path, "config file")->required();

  dunkl::ProbeArgs probe_args;
  probe_args.out_dir.clear();  // empty defers to output.directory, then "out"
  std::string probe_list;
  for (const auto& n : dunkl::probe_names()) probe_list += (probe_list.empty() ? "" : ", ") + n;
  auto* probe = app.add_subcommand("probe", "run one probe and write its report files");
  probe->add_option("config", probe_args.config_path, "config file")->required();
  probe->add_option("--name", probe_args.name, "probe to run: " + probe_list);
  probe->add_option("--out", probe_args.out_dir, "output root directory (default out)");
  probe->add_option("--seed", probe_args.seed, "seed for sampled points (default 0)");
  probe->add_flag("--svg", probe_args.svg, "also write SVG plots");

  std::string report_dir;
  auto* report = app.add_subcommand("report", "merge the runs under a directory");
  report->add_option("dir", report_dir, "run directory")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return dunkl::exit_config;
  }

  if (*validate) return dunkl::cmd_validate(validate_path, std::cout, std::cerr);
  if (*probe) return dunkl::cmd_probe(probe_args, std::cout, std::cerr);
  return dunkl::cmd_report(report_dir, std::cout, std::cerr);
}
