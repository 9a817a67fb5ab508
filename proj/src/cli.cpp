#include "dunkl/cli.hpp"

#include <algorithm>
#include <chrono>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>
#include <tuple>

#include "dunkl/config.hpp"
#include "dunkl/format.hpp"
#include "dunkl/probes.hpp"

namespace dunkl {

namespace fs = std::filesystem;

namespace {

// Writes through a temporary name so a reader never sees a partial file.
void write_atomic(const fs::path& path, const std::string& content) {
  const fs::path tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) fail(ErrorKind::config, "cannot write '" + tmp.string() + "'");
    out << content;
    if (!out) fail(ErrorKind::config, "write failed for '" + tmp.string() + "'");
  }
  fs::rename(tmp, path);
}

std::string utc_now() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string join_k(const Json& k) {
  std::string out;
  for (const Json& v : k) {
    if (!out.empty()) out += ";";
    out += v.is_number() ? format_number(v.get<double>()) : v.dump();
  }
  return out;
}

std::string csv_field(std::string s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
  return out + "\"";
}

}  // namespace

int cmd_validate(const std::string& config_path, std::ostream& out, std::ostream& err) {
  try {
    const ExperimentConfig cfg = ExperimentConfig::load(config_path);
    const RootSystemSpec spec = cfg.root_system();
    const auto issues = validate_root_system(spec);
    for (const auto& issue : issues) out << "FAIL root_system " << issue.kind << ": " << issue.message << '\n';
    if (!issues.empty()) return exit_assertion;
    out << "PASS root_system " << spec.preset << " (" << spec.roots.size() << " roots, dimension "
        << spec.dimension << ")\n";

    const WeightContext ctx(spec);
    out << "PASS group order " << ctx.group().order() << '\n';
    GridSpec grid = cfg.grid(spec.dimension);
    try {
      grid.validate();
    } catch (const Error& e) {
      out << "FAIL grid: " << e.what() << '\n';
      return exit_assertion;
    }
    out << "PASS grid n = " << grid.nodes_per_axis << ", L = " << format_number(grid.half_width)
        << ", h = " << format_number(grid.spacing()) << '\n';
    if (cfg.has("probe.name")) {
      const std::string name = cfg.text("probe.name", "");
      check_probe_keys(cfg, name);
      out << "PASS probe " << name << " parameters\n";
    }
    return exit_ok;
  } catch (const Error& e) {
    err << "error [" << to_string(e.kind()) << "]: " << e.what() << '\n';
    return e.kind() == ErrorKind::invalid_input ? exit_assertion : exit_code(e.kind());
  }
}

std::string run_hash(const std::string& canonical_config, const std::string& probe,
                     std::uint64_t seed) {
  return hex64(fnv1a(canonical_config + "probe = " + probe + "\nseed = " + std::to_string(seed) +
                     "\nartifact_version = " + artifact_version + "\n"));
}

int cmd_probe(const ProbeArgs& args, std::ostream& out, std::ostream& err) {
  try {
    const std::string started = utc_now();
    const ExperimentConfig cfg = ExperimentConfig::load(args.config_path);
    std::string name = args.name.empty() ? cfg.text("probe.name", "") : args.name;
    if (name.empty()) fail(ErrorKind::config, "no probe named (use --name or probe.name)");
    const bool svg = args.svg || cfg.flag("output.svg", false);

    const ProbeOutput result = run_probe(cfg, name, args.seed, svg);
    const std::string canonical = cfg.canonical();
    const std::string hash = run_hash(canonical, name, args.seed);
    const std::string out_root =
        args.out_dir.empty() ? cfg.text("output.directory", "out") : args.out_dir;
    const fs::path dir = fs::path(out_root) / (name + "-" + hash.substr(0, 8));
    fs::create_directories(dir);

    Json report = result.report;
    report["run"] = {{"config_hash", hash}, {"seed", args.seed}, {"artifact_version", artifact_version}};
    std::vector<std::string> files;
    write_atomic(dir / "report.json", report.dump(2) + "\n");
    files.push_back("report.json");
    for (const auto& [file, content] : result.tables) {
      write_atomic(dir / file, content);
      files.push_back(file);
    }
    for (const auto& [file, content] : result.plots) {
      write_atomic(dir / file, content);
      files.push_back(file);
    }
    write_atomic(dir / "config.txt", canonical);
    files.push_back("config.txt");
    files.push_back("timestamps.txt");

    Json manifest;
    manifest["config_hash"] = hash;
    manifest["artifact_version"] = artifact_version;
    manifest["probe"] = name;
    manifest["seed"] = args.seed;
    manifest["status"] = result.pass ? "pass" : "fail";
    manifest["files"] = files;
    // Wall-clock times live in the text sidecar so the JSON stays
    // byte-identical across reruns.
    manifest["timestamps"] = "timestamps.txt";
    write_atomic(dir / "manifest.json", manifest.dump(2) + "\n");
    write_atomic(dir / "timestamps.txt", "started " + started + "\nfinished " + utc_now() + "\n");

    for (const std::string& line : result.lines) out << line << '\n';
    out << (result.pass ? "PASS " : "FAIL ") << name << " -> " << dir.string() << '\n';
    return result.pass ? exit_ok : exit_assertion;
  } catch (const Error& e) {
    err << "error [" << to_string(e.kind()) << "]: " << e.what() << '\n';
    return exit_code(e.kind());
  } catch (const fs::filesystem_error& e) {
    err << "error [io]: " << e.what() << '\n';
    return exit_config;
  }
}

int cmd_report(const std::string& dir, std::ostream& out, std::ostream& err) {
  if (!fs::is_directory(dir)) {
    err << "error: '" << dir << "' is not a directory\n";
    return exit_assertion;
  }
  std::vector<fs::path> manifests;
  for (const auto& entry : fs::recursive_directory_iterator(dir))
    if (entry.is_regular_file() && entry.path().filename() == "manifest.json")
      manifests.push_back(entry.path());
  std::sort(manifests.begin(), manifests.end());
  if (manifests.empty()) {
    err << "error: no manifest.json under '" << dir << "'\n";
    return exit_assertion;
  }

  struct Row {
    std::string group, k, probe, hash, status, constants;
    std::size_t passed = 0, total = 0;
  };
  std::map<std::string, Row> by_hash;
  std::size_t duplicates = 0;
  for (const fs::path& path : manifests) {
    Json manifest, report;
    try {
      manifest = Json::parse(read_file(path));
      report = Json::parse(read_file(path.parent_path() / "report.json"));
    } catch (const std::exception& e) {
      err << "warning: skipping " << path.parent_path().string() << ": " << e.what() << '\n';
      continue;
    }
    const std::string hash = manifest.value("config_hash", "");
    if (by_hash.count(hash)) {
      ++duplicates;
      continue;
    }
    Row row;
    row.group = report.value("group", "?");
    row.k = join_k(report.value("k", Json::array()));
    row.probe = manifest.value("probe", "?");
    row.hash = hash;
    row.status = manifest.value("status", "?");
    for (const Json& a : report.value("assertions", Json::array())) {
      ++row.total;
      if (a.value("pass", false)) ++row.passed;
      if (!row.constants.empty()) row.constants += ";";
      row.constants += a.value("name", "?") + "=" +
                       (a["value"].is_string() ? a["value"].get<std::string>() : a["value"].dump());
    }
    by_hash[hash] = row;
  }
  if (by_hash.empty()) {
    err << "error: no readable runs under '" << dir << "'\n";
    return exit_assertion;
  }

  // One section per root system, rows ordered within it.
  std::vector<Row> rows;
  for (const auto& [hash, row] : by_hash) rows.push_back(row);
  std::sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) {
    return std::tie(a.group, a.k, a.probe, a.hash) < std::tie(b.group, b.k, b.probe, b.hash);
  });

  std::ostringstream csv, text;
  csv << "group,k,probe,config_hash,status,assertions_passed,assertions_total,constants\n";
  std::string current;
  std::size_t failed = 0;
  for (const Row& r : rows) {
    csv << csv_field(r.group) << ',' << csv_field(r.k) << ',' << r.probe << ',' << r.hash << ','
        << r.status << ',' << r.passed << ',' << r.total << ',' << csv_field(r.constants) << '\n';
    if (r.group != current) {
      text << (current.empty() ? "" : "\n") << "[" << r.group << "]\n";
      current = r.group;
    }
    text << "  " << (r.status == "pass" ? "PASS" : "FAIL") << "  " << r.probe << "  k=" << r.k
         << "  " << r.passed << "/" << r.total << "  " << r.hash << '\n';
    if (r.status != "pass") ++failed;
  }
  text << "\n" << rows.size() << " runs, " << failed << " failing, " << duplicates
       << " duplicates skipped\n";
  write_atomic(fs::path(dir) / "summary.csv", csv.str());
  write_atomic(fs::path(dir) / "summary.txt", text.str());
  out << text.str();
  return exit_ok;
}

}  // namespace dunkl
