#include "dunkl/config.hpp"

#include <cctype>
#include <cmath>
#include <fstream>
#include <istream>
#include <sstream>

#include "dunkl/error.hpp"
#include "dunkl/format.hpp"

namespace dunkl {

namespace {

std::string trim(const std::string& s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

bool parse_double(const std::string& text, double& out) {
  const std::string t = trim(text);
  if (t.empty()) return false;
  std::size_t used = 0;
  try {
    out = std::stod(t, &used);
  } catch (const std::exception&) {
    return false;
  }
  return used == t.size() && std::isfinite(out);
}

// Strips a trailing comment, ignoring '#' inside a quoted string.
std::string strip_comment(const std::string& line) {
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    if (line[i] == '"') quoted = !quoted;
    if (line[i] == '#' && !quoted) return line.substr(0, i);
  }
  return line;
}

std::string render(const ExperimentConfig::Value& v) {
  struct Visitor {
    std::string operator()(bool b) const { return b ? "true" : "false"; }
    std::string operator()(double d) const { return format_number(d); }
    std::string operator()(const std::string& s) const { return '"' + s + '"'; }
    std::string operator()(const std::vector<double>& list) const {
      std::string out = "[";
      for (std::size_t i = 0; i < list.size(); ++i) {
        if (i) out += ", ";
        out += format_number(list[i]);
      }
      return out + "]";
    }
  };
  return std::visit(Visitor{}, v);
}

}  // namespace

ExperimentConfig ExperimentConfig::parse(std::istream& in, const std::string& source) {
  ExperimentConfig cfg;
  cfg.source_ = source;
  std::string raw;
  int line_no = 0;
  auto bad = [&](const std::string& why) {
    fail(ErrorKind::config, source + ":" + std::to_string(line_no) + ": " + why);
  };
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string line = trim(strip_comment(raw));
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) bad("expected 'key = value'");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty() || key.find('.') == std::string::npos || key.front() == '.' ||
        key.back() == '.')
      bad("key '" + key + "' must have the form section.name");
    for (char c : key)
      if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.'))
        bad("key '" + key + "' contains '" + std::string(1, c) + "'");
    if (cfg.values_.count(key)) bad("duplicate key '" + key + "'");
    if (value.empty()) bad("missing value for '" + key + "'");

    if (value.front() == '"') {
      if (value.size() < 2 || value.back() != '"') bad("unterminated string for '" + key + "'");
      const std::string body = value.substr(1, value.size() - 2);
      if (body.find('"') != std::string::npos) bad("stray quote in '" + key + "'");
      cfg.values_[key] = body;
    } else if (value.front() == '[') {
      if (value.back() != ']') bad("unterminated list for '" + key + "'");
      std::vector<double> list;
      const std::string body = trim(value.substr(1, value.size() - 2));
      if (!body.empty()) {
        std::stringstream ss(body);
        std::string item;
        while (std::getline(ss, item, ',')) {
          double d;
          if (!parse_double(item, d)) bad("list entry '" + trim(item) + "' is not a number");
          list.push_back(d);
        }
      }
      cfg.values_[key] = list;
    } else if (value == "true" || value == "false") {
      cfg.values_[key] = value == "true";
    } else {
      double d;
      if (!parse_double(value, d)) bad("value '" + value + "' for '" + key + "' is not understood");
      cfg.values_[key] = d;
    }
  }
  return cfg;
}

ExperimentConfig ExperimentConfig::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::config, "cannot read config '" + path + "'");
  return parse(in, path);
}

double ExperimentConfig::number(const std::string& key) const {
  const auto it = values_.find(key);
  if (it == values_.end()) fail(ErrorKind::config, "missing required key '" + key + "'");
  if (const double* d = std::get_if<double>(&it->second)) return *d;
  fail(ErrorKind::config, "key '" + key + "' must be a number");
}

double ExperimentConfig::number(const std::string& key, double fallback) const {
  return has(key) ? number(key) : fallback;
}

int ExperimentConfig::integer(const std::string& key, int fallback) const {
  if (!has(key)) return fallback;
  const double d = number(key);
  if (d != std::floor(d) || std::abs(d) > 1e9)
    fail(ErrorKind::config, "key '" + key + "' must be an integer");
  return static_cast<int>(d);
}

bool ExperimentConfig::flag(const std::string& key, bool fallback) const {
  const auto it = values_.find(key);
  if (it == values_.end()) return fallback;
  if (const bool* b = std::get_if<bool>(&it->second)) return *b;
  fail(ErrorKind::config, "key '" + key + "' must be true or false");
}

std::string ExperimentConfig::text(const std::string& key, const std::string& fallback) const {
  const auto it = values_.find(key);
  if (it == values_.end()) return fallback;
  if (const std::string* s = std::get_if<std::string>(&it->second)) return *s;
  fail(ErrorKind::config, "key '" + key + "' must be a quoted string");
}

std::vector<double> ExperimentConfig::numbers(const std::string& key,
                                              std::vector<double> fallback) const {
  const auto it = values_.find(key);
  if (it == values_.end()) return fallback;
  if (const auto* list = std::get_if<std::vector<double>>(&it->second)) return *list;
  if (const double* d = std::get_if<double>(&it->second)) return {*d};
  fail(ErrorKind::config, "key '" + key + "' must be a number list");
}

Vec ExperimentConfig::vector(const std::string& key, const Vec& fallback) const {
  if (!has(key)) return fallback;
  const std::vector<double> list = numbers(key, {});
  if (fallback.size() > 0 && static_cast<Eigen::Index>(list.size()) != fallback.size())
    fail(ErrorKind::config, "key '" + key + "' needs " + std::to_string(fallback.size()) +
                                " components, got " + std::to_string(list.size()));
  Vec v(list.size());
  for (std::size_t i = 0; i < list.size(); ++i) v[i] = list[i];
  return v;
}

void ExperimentConfig::require_known(const std::string& prefix,
                                     const std::set<std::string>& allowed) const {
  const std::string head = prefix + ".";
  for (const auto& [key, value] : values_) {
    if (key.rfind(head, 0) != 0) continue;
    const std::string name = key.substr(head.size());
    if (!allowed.count(name)) {
      std::string list;
      for (const auto& a : allowed) list += (list.empty() ? "" : ", ") + a;
      fail(ErrorKind::config, "unknown key '" + key + "' (accepted: " + list + ")");
    }
  }
}

RootSystemSpec ExperimentConfig::root_system() const {
  require_known("root_system", {"preset", "k", "dimension", "roots"});
  const std::string preset = text("root_system.preset", "");
  if (preset.empty()) fail(ErrorKind::config, "missing required key 'root_system.preset'");
  const std::vector<double> k = numbers("root_system.k", {});
  if (k.empty()) fail(ErrorKind::config, "missing required key 'root_system.k'");
  const int dimension = integer("root_system.dimension", 0);
  if (preset != "custom") {
    if (has("root_system.roots"))
      fail(ErrorKind::config, "root_system.roots is only read for preset \"custom\"");
    return RootSystemSpec::from_preset(preset, k, dimension);
  }
  if (dimension < 1) fail(ErrorKind::config, "custom root systems need root_system.dimension");
  const std::vector<double> flat = numbers("root_system.roots", {});
  if (flat.empty() || flat.size() % dimension != 0)
    fail(ErrorKind::config, "root_system.roots must hold a multiple of dimension entries");
  RootSystemSpec spec;
  spec.dimension = dimension;
  spec.preset = "custom";
  const std::size_t count = flat.size() / dimension;
  if (k.size() != count && k.size() != 1)
    fail(ErrorKind::config, "root_system.k needs one value per root (or a single value)");
  for (std::size_t r = 0; r < count; ++r) {
    Vec a(dimension);
    for (int c = 0; c < dimension; ++c) a[c] = flat[r * dimension + c];
    spec.roots.push_back(a);
    spec.multiplicity.push_back(k.size() == 1 ? k[0] : k[r]);
  }
  return spec;
}

GridSpec ExperimentConfig::grid(int dimension) const {
  require_known("grid", {"n", "L"});
  GridSpec g;
  g.dimension = dimension;
  g.nodes_per_axis = integer("grid.n", 2048);
  g.half_width = number("grid.L", 20.0);
  return g;
}

std::string ExperimentConfig::canonical() const {
  std::string out;
  for (const auto& [key, value] : values_) out += key + " = " + render(value) + "\n";
  return out;
}

std::uint64_t fnv1a(const std::string& text) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string hex64(std::uint64_t v) {
  static const char* digits = "0123456789abcdef";
  std::string s(16, '0');
  for (int i = 15; i >= 0; --i, v >>= 4) s[i] = digits[v & 0xf];
  return s;
}

}  // namespace dunkl
