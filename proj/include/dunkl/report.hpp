#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "dunkl/grid.hpp"

namespace dunkl {

using Json = nlohmann::ordered_json;

enum class Relation { below, at_most, at_least };

struct Assertion {
  std::string name;
  double value = 0.0;
  double threshold = 0.0;
  Relation relation = Relation::below;
  bool pass = false;
};

// Common result of every diagnostic probe. Values are kept as doubles and
// rendered through format_number so reruns serialize identically.
struct ProbeReport {
  std::string probe;
  std::string group;
  std::vector<double> k;
  GridSpec grid;
  double tail_mass = 0.0;
  Json params = Json::object();
  Json extras = Json::object();
  std::vector<Assertion> assertions;

  const Assertion& check(const std::string& name, double value, double threshold,
                         Relation relation = Relation::below);
  bool passed() const;
  Json to_json() const;
};

// Starts a report with the group data and grid filled from the context.
ProbeReport make_report(const std::string& probe, const WeightContext& ctx, const GridSpec& grid);

// Numbers go through the shortest round-trip form; non-finite values become
// strings so the document stays valid JSON.
Json json_number(double v);
Json json_vector(const Vec& v);
Json json_vector(const std::vector<double>& v);

std::string to_string(Relation r);

}  // namespace dunkl
