#include "dunkl/report.hpp"

#include <cmath>

namespace dunkl {

std::string to_string(Relation r) {
  switch (r) {
    case Relation::below: return "<";
    case Relation::at_most: return "<=";
    case Relation::at_least: return ">=";
  }
  return "?";
}

const Assertion& ProbeReport::check(const std::string& name, double value, double threshold,
                                    Relation relation) {
  Assertion a{name, value, threshold, relation, false};
  if (std::isfinite(value)) {
    switch (relation) {
      case Relation::below: a.pass = value < threshold; break;
      case Relation::at_most: a.pass = value <= threshold; break;
      case Relation::at_least: a.pass = value >= threshold; break;
    }
  }
  assertions.push_back(a);
  return assertions.back();
}

bool ProbeReport::passed() const {
  for (const auto& a : assertions)
    if (!a.pass) return false;
  return true;
}

Json json_number(double v) {
  if (std::isfinite(v)) return v;
  if (std::isnan(v)) return "nan";
  return v > 0 ? "inf" : "-inf";
}

Json json_vector(const Vec& v) {
  Json out = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(json_number(v[i]));
  return out;
}

Json json_vector(const std::vector<double>& v) {
  Json out = Json::array();
  for (double x : v) out.push_back(json_number(x));
  return out;
}

Json ProbeReport::to_json() const {
  Json j;
  j["probe"] = probe;
  j["group"] = group;
  j["k"] = json_vector(k);
  j["params"] = params;
  Json list = Json::array();
  for (const auto& a : assertions) {
    list.push_back({{"name", a.name},
                    {"value", json_number(a.value)},
                    {"threshold", json_number(a.threshold)},
                    {"relation", to_string(a.relation)},
                    {"pass", a.pass}});
  }
  j["assertions"] = list;
  j["tail_mass"] = json_number(tail_mass);
  j["grid"] = {{"N", grid.dimension}, {"n", grid.nodes_per_axis}, {"L", grid.half_width}};
  if (!extras.empty()) j["extras"] = extras;
  j["pass"] = passed();
  return j;
}

ProbeReport make_report(const std::string& probe, const WeightContext& ctx, const GridSpec& grid) {
  ProbeReport r;
  r.probe = probe;
  r.group = ctx.group_label();
  r.k = ctx.axis_multiplicities().value_or(ctx.root_system().multiplicity);
  r.grid = grid;
  return r;
}

}  // namespace dunkl
