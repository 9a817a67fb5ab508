#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "dunkl/grid.hpp"
#include "dunkl/reflection.hpp"

namespace dunkl {

// Flat experiment configuration: one `section.key = value` per line, `#`
// starts a comment. Values are quoted strings, numbers, true/false, or
// bracketed number lists.
//
//   root_system.preset = "rank1"
//   root_system.k = [1.0]
//   grid.n = 2048
//   grid.L = 20.0
//   probe.name = "thm31"
//   probe.x = [2.0]
class ExperimentConfig {
 public:
  using Value = std::variant<bool, double, std::string, std::vector<double>>;

  static ExperimentConfig parse(std::istream& in, const std::string& source = "<config>");
  static ExperimentConfig load(const std::string& path);

  bool has(const std::string& key) const { return values_.count(key) != 0; }
  void set(const std::string& key, Value v) { values_[key] = std::move(v); }
  const std::map<std::string, Value>& values() const { return values_; }

  double number(const std::string& key, double fallback) const;
  double number(const std::string& key) const;
  int integer(const std::string& key, int fallback) const;
  bool flag(const std::string& key, bool fallback) const;
  std::string text(const std::string& key, const std::string& fallback) const;
  std::vector<double> numbers(const std::string& key, std::vector<double> fallback) const;
  Vec vector(const std::string& key, const Vec& fallback) const;

  // Keys of the form `prefix.*` that are not in `allowed` raise a config error.
  void require_known(const std::string& prefix, const std::set<std::string>& allowed) const;

  RootSystemSpec root_system() const;
  GridSpec grid(int dimension) const;

  // Sorted key = value lines with numbers in shortest round-trip form; the
  // hash below is taken over this text.
  std::string canonical() const;

 private:
  std::map<std::string, Value> values_;
  std::string source_;
};

// 64-bit FNV-1a.
std::uint64_t fnv1a(const std::string& text);
std::string hex64(std::uint64_t v);

}  // namespace dunkl
