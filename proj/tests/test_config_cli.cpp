#include <doctest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "dunkl/cli.hpp"
#include "dunkl/config.hpp"
#include "dunkl/error.hpp"
#include "dunkl/probes.hpp"
#include "dunkl/svg.hpp"

using namespace dunkl;
namespace fs = std::filesystem;

namespace {

ExperimentConfig parse(const std::string& text) {
  std::istringstream in(text);
  return ExperimentConfig::parse(in, "test");
}

std::string config_error(const std::string& text) {
  try {
    parse(text);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::config);
    return e.what();
  }
  return "";
}

std::string config_path(const std::string& name) {
  return std::string(DUNKL_CONFIG_DIR) + "/" + name;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Fresh directory under the build tree, removed on scope exit.
struct ScratchDir {
  fs::path path;
  explicit ScratchDir(const std::string& name) : path(fs::current_path() / ("scratch_" + name)) {
    fs::remove_all(path);
    fs::create_directories(path);
  }
  ~ScratchDir() { fs::remove_all(path); }
};

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("config values and typed getters") {
  const ExperimentConfig cfg = parse(
      "# header\n"
      "root_system.preset = \"rank1\"  # trailing\n"
      "root_system.k = [0.5]\n"
      "grid.n = 512\n"
      "grid.L = 12.5\n"
      "probe.refine = false\n"
      "probe.tag = \"a # b\"\n");
  CHECK(cfg.text("root_system.preset", "") == "rank1");
  CHECK(cfg.numbers("root_system.k", {}) == std::vector<double>{0.5});
  CHECK(cfg.integer("grid.n", 0) == 512);
  CHECK(cfg.number("grid.L") == 12.5);
  CHECK_FALSE(cfg.flag("probe.refine", true));
  CHECK(cfg.text("probe.tag", "") == "a # b");
  CHECK(cfg.number("probe.missing", 3.0) == 3.0);
  CHECK_THROWS_AS(cfg.number("probe.missing"), Error);
  CHECK_THROWS_AS(cfg.integer("grid.L", 0), Error);
  CHECK_THROWS_AS(cfg.flag("grid.n", false), Error);

  const GridSpec g = cfg.grid(1);
  CHECK(g.nodes_per_axis == 512);
  CHECK(g.half_width == 12.5);
  CHECK(cfg.root_system().multiplicity == std::vector<double>{0.5, 0.5});
}

TEST_CASE("parse errors name the line") {
  CHECK(config_error("grid.n = 4\ngrid.n 8\n").find("test:2:") == 0);
  CHECK(config_error("grid.n = 4\ngrid.n = 8\n").find("duplicate") != std::string::npos);
  CHECK(config_error("grid.n = [1, x]\n").find("test:1:") == 0);
  CHECK(config_error("nodot = 1\n").find("test:1:") == 0);
  CHECK(config_error("grid.L = \"open\n").find("test:1:") == 0);
}

TEST_CASE("unknown keys are rejected per section") {
  const ExperimentConfig cfg = parse("root_system.preset = \"rank1\"\nroot_system.kk = [1]\n");
  CHECK_THROWS_AS(cfg.root_system(), Error);
  const ExperimentConfig probe =
      parse("root_system.preset = \"rank1\"\nroot_system.k = [1]\nprobe.name = \"thm31\"\nprobe.zz = 1\n");
  CHECK_THROWS_AS(check_probe_keys(probe, "thm31"), Error);
  CHECK_THROWS_AS(check_probe_keys(probe, "nonexistent"), Error);
  CHECK_THROWS_AS(check_probe_keys(probe, "bmo"), Error);
}

TEST_CASE("custom root systems") {
  const ExperimentConfig cfg = parse(
      "root_system.preset = \"custom\"\nroot_system.dimension = 2\n"
      "root_system.roots = [1, 0, -1, 0, 0, 1, 0, -1]\nroot_system.k = [1, 1, 2, 2]\n");
  const RootSystemSpec spec = cfg.root_system();
  CHECK(spec.roots.size() == 4);
  CHECK(validate_root_system(spec).empty());
  CHECK(spec.multiplicity[2] == 2.0);
  CHECK_THROWS_AS(parse("root_system.preset = \"custom\"\nroot_system.dimension = 2\n"
                        "root_system.roots = [1, 0, 1]\nroot_system.k = [1]\n")
                      .root_system(),
                  Error);
}

TEST_CASE("canonical text and hash ignore ordering and comments") {
  const ExperimentConfig a = parse("grid.n = 64\n# note\nroot_system.k = [1.0]\n");
  const ExperimentConfig b = parse("root_system.k = [1]\ngrid.n = 64.0\n");
  CHECK(a.canonical() == b.canonical());
  CHECK(a.canonical() == "grid.n = 64\nroot_system.k = [1]\n");
  CHECK(fnv1a("") == 0xcbf29ce484222325ULL);
  CHECK(hex64(fnv1a("a")) == "af63dc4c8601ec8c");
  CHECK(run_hash(a.canonical(), "thm31", 0) != run_hash(a.canonical(), "thm31", 1));
}

TEST_CASE("validate exit codes") {
  std::ostringstream out, err;
  CHECK(cmd_validate(config_path("thm31_rank1_k1.cfg"), out, err) == exit_ok);
  CHECK(out.str().find("PASS probe thm31") != std::string::npos);
  CHECK(cmd_validate(config_path("malformed.cfg"), out, err) == exit_config);
  std::ostringstream closure;
  CHECK(cmd_validate(config_path("custom_missing_negative.cfg"), closure, err) == exit_assertion);
  CHECK(closure.str().find("FAIL root_system closure") != std::string::npos);
  CHECK(cmd_validate(config_path("no_such_file.cfg"), out, err) == exit_config);
}

TEST_CASE("probe exit codes") {
  ScratchDir dir("exit_codes");
  std::ostringstream out, err;
  ProbeArgs args;
  args.out_dir = dir.path.string();
  args.config_path = config_path("hormander_a2.cfg");
  CHECK(cmd_probe(args, out, err) == exit_unsupported);
  args.config_path = config_path("malformed.cfg");
  CHECK(cmd_probe(args, out, err) == exit_config);
  args.config_path = config_path("thm31_rank1_k1.cfg");
  args.name = "bmo";
  CHECK(cmd_probe(args, out, err) == exit_config);
}

TEST_CASE("probe output is byte-identical across reruns") {
  ScratchDir a("rerun_a"), b("rerun_b");
  ProbeArgs args;
  args.config_path = config_path("hormander_rank1_k1.cfg");
  args.seed = 5;
  args.svg = true;
  std::ostringstream out, err;
  args.out_dir = a.path.string();
  REQUIRE(cmd_probe(args, out, err) == exit_ok);
  args.out_dir = b.path.string();
  REQUIRE(cmd_probe(args, out, err) == exit_ok);

  std::size_t compared = 0;
  for (const auto& entry : fs::recursive_directory_iterator(a.path)) {
    if (!entry.is_regular_file() || entry.path().filename() == "timestamps.txt") continue;
    const fs::path rel = fs::relative(entry.path(), a.path);
    CHECK(slurp(entry.path()) == slurp(b.path / rel));
    ++compared;
  }
  CHECK(compared == 4);  // report, pairs table, config text, manifest

  std::ostringstream summary;
  CHECK(cmd_report(a.path.string(), summary, err) == exit_ok);
  CHECK(summary.str().find("[rank1]") != std::string::npos);
  const std::string csv = slurp(a.path / "summary.csv");
  CHECK(csv.rfind("group,k,probe,config_hash,status", 0) == 0);
  CHECK(csv.find(",hormander,") != std::string::npos);
}

TEST_CASE("report dedupes by config hash and refuses empty trees") {
  ScratchDir dir("report");
  std::ostringstream out, err;
  CHECK(cmd_report(dir.path.string(), out, err) == exit_assertion);
  ProbeArgs args;
  args.config_path = config_path("separation_b2.cfg");
  args.out_dir = (dir.path / "one").string();
  REQUIRE(cmd_probe(args, out, err) == exit_ok);
  args.out_dir = (dir.path / "two").string();
  REQUIRE(cmd_probe(args, out, err) == exit_ok);
  std::ostringstream summary;
  CHECK(cmd_report(dir.path.string(), summary, err) == exit_ok);
  CHECK(summary.str().find("1 runs, 0 failing, 1 duplicates skipped") != std::string::npos);
}

TEST_CASE("svg writers emit well-formed documents") {
  const std::string plot = svg_line_plot("a < b", {0, 1, 2}, {{"s", {1, 4, 9}}});
  CHECK(plot.rfind("<?xml", 0) == 0);
  CHECK(plot.find("a &lt; b") != std::string::npos);
  CHECK(plot.find("</svg>") != std::string::npos);
  const std::string heat = svg_heat_table("t", "x", "r", {{0, 1, 0.5}, {1, 1, 1.0}});
  CHECK(heat.find("<rect") != std::string::npos);
}

TEST_CASE("every probe name is registered") {
  const auto& names = probe_names();
  for (const char* n : {"thm31", "thm32", "cor31", "cor32", "hormander", "uniform_bound", "bmo",
                        "bmo43", "lemma41", "plancherel", "separation", "kernel_system",
                        "riesz_routes", "proof_split", "translation"})
    CHECK(std::find(names.begin(), names.end(), n) != names.end());
}

}  // TEST_SUITE
