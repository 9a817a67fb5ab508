#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "dunkl/config.hpp"
#include "dunkl/error.hpp"
#include "dunkl/report.hpp"

namespace dunkl {

// Everything one probe run produces. File maps are keyed by file name so the
// writer emits them in a fixed order.
struct ProbeOutput {
  std::string name;
  Json report;
  bool pass = false;
  std::vector<std::string> lines;  // one PASS/FAIL line per assertion
  std::map<std::string, std::string> tables;
  std::map<std::string, std::string> plots;
};

const std::vector<std::string>& probe_names();

// Config error when the probe is unknown or the config carries keys the
// probe does not read.
void check_probe_keys(const ExperimentConfig& cfg, const std::string& name);

// Runs the named probe. Every probe.* key is checked against it before any
// computation starts.
ProbeOutput run_probe(const ExperimentConfig& cfg, const std::string& name, std::uint64_t seed,
                      bool svg);

// 2 for configuration and argument errors, 3 for unsupported combinations.
int exit_code(ErrorKind kind);

// The six Schwartz functions of the Riesz route comparison.
std::vector<GridFunction> route_family(const GridSpec& grid);

}  // namespace dunkl
