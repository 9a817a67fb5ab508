#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

namespace dunkl {

inline constexpr const char* artifact_version = "0.1.0";

// Exit codes shared by every command.
inline constexpr int exit_ok = 0;
inline constexpr int exit_assertion = 1;
inline constexpr int exit_config = 2;
inline constexpr int exit_unsupported = 3;

// Parses the config and checks the root system and grid it describes.
int cmd_validate(const std::string& config_path, std::ostream& out, std::ostream& err);

struct ProbeArgs {
  std::string config_path;
  std::string name;
  std::string out_dir = "out";
  std::uint64_t seed = 0;
  bool svg = false;
};

// Writes <out>/<probe>-<hash>/ holding the report, the probe's CSV tables
// and a manifest. Wall-clock times go to a timestamps.txt sidecar, so every
// JSON and CSV file is reproducible from the inputs alone.
int cmd_probe(const ProbeArgs& args, std::ostream& out, std::ostream& err);

// Hash naming a run. It covers the canonical config and every other input.
std::string run_hash(const std::string& canonical_config, const std::string& probe,
                     std::uint64_t seed);

// Merges every manifest under `dir` into summary.csv and summary.txt.
int cmd_report(const std::string& dir, std::ostream& out, std::ostream& err);

}  // namespace dunkl
