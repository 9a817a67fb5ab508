#include "dunkl/reflection.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "dunkl/error.hpp"
#include "dunkl/random.hpp"

namespace dunkl {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::invalid_argument: return "invalid-argument";
    case ErrorKind::domain_tag: return "domain-tag";
    case ErrorKind::unsupported_group: return "unsupported-group";
    case ErrorKind::not_finite_group: return "not-a-finite-group";
    case ErrorKind::resolution: return "resolution";
    case ErrorKind::domain_too_small: return "domain-too-small";
    case ErrorKind::geometry: return "geometry";
    case ErrorKind::series_order: return "series-order";
    case ErrorKind::inadmissible_test_function: return "inadmissible-test-function";
    case ErrorKind::invalid_input: return "invalid-input";
    case ErrorKind::config: return "config";
  }
  return "unknown";
}

namespace {

bool close(const Vec& a, const Vec& b, double tol) {
  return a.size() == b.size() && (a - b).cwiseAbs().maxCoeff() <= tol;
}

bool close(const Mat& a, const Mat& b, double tol) {
  return (a - b).cwiseAbs().maxCoeff() <= tol;
}

std::string format_vector(const Vec& v) {
  std::ostringstream out;
  out << '(';
  for (Eigen::Index i = 0; i < v.size(); ++i) out << (i ? "," : "") << v[i];
  out << ')';
  return out.str();
}

std::optional<std::size_t> find_root(const std::vector<Vec>& roots, const Vec& v) {
  for (std::size_t i = 0; i < roots.size(); ++i)
    if (close(roots[i], v, tol_root * std::max(1.0, v.norm()))) return i;
  return std::nullopt;
}

bool lexicographically_positive(const Vec& v) {
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (v[i] > tol_root) return true;
    if (v[i] < -tol_root) return false;
  }
  return false;
}

}  // namespace

Vec reflect(const Vec& alpha, const Vec& x) {
  const double n2 = alpha.squaredNorm();
  require(n2 > 0.0, ErrorKind::invalid_argument, "reflect: zero root");
  require(alpha.size() == x.size(), ErrorKind::invalid_argument,
          "reflect: dimension mismatch");
  return x - (2.0 * x.dot(alpha) / n2) * alpha;
}

Mat reflection_matrix(const Vec& alpha) {
  const double n2 = alpha.squaredNorm();
  require(n2 > 0.0, ErrorKind::invalid_argument, "reflection_matrix: zero root");
  return Mat::Identity(alpha.size(), alpha.size()) - (2.0 / n2) * alpha * alpha.transpose();
}

std::vector<std::size_t> RootSystemSpec::positive_indices() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < roots.size(); ++i)
    if (lexicographically_positive(roots[i])) out.push_back(i);
  return out;
}

std::vector<Vec> RootSystemSpec::positive_roots() const {
  std::vector<Vec> out;
  for (auto i : positive_indices()) out.push_back(roots[i]);
  return out;
}

std::optional<double> RootSystemSpec::multiplicity_of(const Vec& alpha) const {
  auto i = find_root(roots, alpha);
  if (!i || *i >= multiplicity.size()) return std::nullopt;
  return multiplicity[*i];
}

RootSystemSpec RootSystemSpec::rank1(double k) {
  RootSystemSpec s;
  s.dimension = 1;
  s.preset = "rank1";
  s.roots = {Vec::Constant(1, 1.0), Vec::Constant(1, -1.0)};
  s.multiplicity = {k, k};
  return s;
}

RootSystemSpec RootSystemSpec::z2_product(std::span<const double> k) {
  RootSystemSpec s;
  s.dimension = static_cast<int>(k.size());
  s.preset = "z2_product";
  for (int i = 0; i < s.dimension; ++i) {
    Vec e = Vec::Unit(s.dimension, i);
    s.roots.push_back(e);
    s.roots.push_back(-e);
    s.multiplicity.push_back(k[i]);
    s.multiplicity.push_back(k[i]);
  }
  return s;
}

RootSystemSpec RootSystemSpec::b2(double k_short, double k_long) {
  RootSystemSpec s;
  s.dimension = 2;
  s.preset = "b2";
  const double shorts[4][2] = {{1, 0}, {-1, 0}, {0, 1}, {0, -1}};
  const double longs[4][2] = {{1, 1}, {-1, -1}, {1, -1}, {-1, 1}};
  for (auto& r : shorts) {
    s.roots.push_back(Vec{{r[0], r[1]}});
    s.multiplicity.push_back(k_short);
  }
  for (auto& r : longs) {
    s.roots.push_back(Vec{{r[0], r[1]}});
    s.multiplicity.push_back(k_long);
  }
  return s;
}

RootSystemSpec RootSystemSpec::a2(double k) {
  RootSystemSpec s;
  s.dimension = 2;
  s.preset = "a2";
  for (int m = 0; m < 6; ++m) {
    const double angle = m * M_PI / 3.0;
    s.roots.push_back(Vec{{std::cos(angle), std::sin(angle)}});
    s.multiplicity.push_back(k);
  }
  return s;
}

RootSystemSpec RootSystemSpec::from_preset(const std::string& name,
                                           std::span<const double> k,
                                           int dimension) {
  auto need = [&](std::size_t lo, std::size_t hi) {
    require(k.size() >= lo && k.size() <= hi, ErrorKind::config,
            "preset '" + name + "' expects between " + std::to_string(lo) +
                " and " + std::to_string(hi) + " multiplicity values");
  };
  if (name == "rank1") {
    need(1, 1);
    return rank1(k[0]);
  }
  if (name == "z2_product") {
    if (k.size() == 1 && dimension > 1) {
      std::vector<double> broadcast(dimension, k[0]);
      return z2_product(broadcast);
    }
    need(1, 16);
    require(dimension == 0 || dimension == static_cast<int>(k.size()),
            ErrorKind::config, "z2_product: multiplicity count differs from dimension");
    return z2_product(k);
  }
  if (name == "b2") {
    need(1, 2);
    return b2(k[0], k.size() > 1 ? k[1] : k[0]);
  }
  if (name == "a2") {
    need(1, 1);
    return a2(k[0]);
  }
  fail(ErrorKind::config, "unknown root-system preset '" + name + "'");
}

std::vector<ValidationIssue> validate_root_system(const RootSystemSpec& spec) {
  std::vector<ValidationIssue> issues;
  if (spec.dimension < 1) {
    issues.push_back({"dimension", "dimension must be a positive integer"});
    return issues;
  }
  if (spec.multiplicity.size() != spec.roots.size()) {
    issues.push_back({"multiplicity_count",
                      "multiplicity array length differs from the root count"});
    return issues;
  }
  bool shapes_ok = true;
  for (std::size_t i = 0; i < spec.roots.size(); ++i) {
    const Vec& a = spec.roots[i];
    if (a.size() != spec.dimension) {
      issues.push_back({"dimension", "root " + std::to_string(i) + " has " +
                                         std::to_string(a.size()) + " coordinates"});
      shapes_ok = false;
      continue;
    }
    if (a.norm() <= tol_root) {
      issues.push_back({"zero_root", "root " + std::to_string(i) + " is the zero vector"});
      shapes_ok = false;
    }
    const double k = spec.multiplicity[i];
    if (!std::isfinite(k) || k < 0.0)
      issues.push_back({"multiplicity_negative",
                        "multiplicity of root " + format_vector(a) + " is not a nonnegative real"});
  }
  if (!shapes_ok) return issues;

  for (std::size_t i = 0; i < spec.roots.size(); ++i) {
    for (std::size_t j = 0; j < spec.roots.size(); ++j) {
      const Vec image = reflect(spec.roots[i], spec.roots[j]);
      auto hit = find_root(spec.roots, image);
      if (!hit) {
        issues.push_back({"closure", "sigma_" + format_vector(spec.roots[i]) + "(" +
                                         format_vector(spec.roots[j]) + ") = " +
                                         format_vector(image) + " is not a root"});
        continue;
      }
      // Invariance under the generators implies invariance under the group.
      if (std::abs(spec.multiplicity[*hit] - spec.multiplicity[j]) > tol_root)
        issues.push_back({"multiplicity_invariance",
                          "k(" + format_vector(image) + ") differs from k(" +
                              format_vector(spec.roots[j]) + ")"});
    }
  }
  return issues;
}

std::size_t ReflectionGroup::identity_index() const {
  const Mat id = Mat::Identity(dimension, dimension);
  for (std::size_t i = 0; i < elements.size(); ++i)
    if (close(elements[i], id, tol_group)) return i;
  return elements.size();
}

ReflectionGroup generate_group(const RootSystemSpec& spec, std::size_t max_order) {
  const int n = spec.dimension;
  require(n >= 1, ErrorKind::invalid_argument, "generate_group: dimension must be positive");
  std::vector<Mat> generators;
  for (const Vec& a : spec.roots) {
    Mat s = reflection_matrix(a);
    bool seen = false;
    for (const Mat& g : generators) seen = seen || close(g, s, tol_group);
    if (!seen) generators.push_back(std::move(s));
  }

  std::vector<Mat> elements{Mat::Identity(n, n)};
  std::vector<std::size_t> frontier{0};
  auto contains = [&](const Mat& m) {
    return std::any_of(elements.begin(), elements.end(),
                       [&](const Mat& e) { return close(e, m, tol_group); });
  };
  while (!frontier.empty()) {
    std::vector<std::size_t> next;
    for (std::size_t idx : frontier) {
      for (const Mat& s : generators) {
        Mat product = s * elements[idx];
        if (contains(product)) continue;
        if (elements.size() >= max_order)
          fail(ErrorKind::not_finite_group,
               "group closure exceeded max_group_order = " + std::to_string(max_order));
        elements.push_back(std::move(product));
        next.push_back(elements.size() - 1);
      }
    }
    frontier = std::move(next);
  }

  // Deterministic order: sort by entries rounded well below tol_group.
  auto key = [](const Mat& m) {
    std::vector<long long> k(m.size());
    for (Eigen::Index i = 0; i < m.size(); ++i)
      k[i] = std::llround(m.data()[i] * 1e8);
    return k;
  };
  std::sort(elements.begin(), elements.end(),
            [&](const Mat& a, const Mat& b) { return key(a) < key(b); });

  ReflectionGroup group;
  group.dimension = n;
  group.elements = std::move(elements);
  for (const Vec& a : spec.roots) {
    const Mat s = reflection_matrix(a);
    for (std::size_t i = 0; i < group.elements.size(); ++i)
      if (close(group.elements[i], s, tol_group)) {
        group.generator_index.push_back(i);
        break;
      }
  }
  return group;
}

std::vector<Vec> orbit(const ReflectionGroup& group, const Vec& x) {
  std::vector<Vec> out;
  for (const Mat& g : group.elements) {
    Vec gx = g * x;
    bool dup = std::any_of(out.begin(), out.end(),
                           [&](const Vec& v) { return close(v, gx, tol_group); });
    if (!dup) out.push_back(std::move(gx));
  }
  return out;
}

double orbit_distance(const ReflectionGroup& group, const Vec& x, const Vec& y) {
  double best = std::numeric_limits<double>::infinity();
  for (const Mat& g : group.elements) best = std::min(best, (g * y - x).norm());
  return best;
}

double orbit_max_distance(const ReflectionGroup& group, const Vec& x, const Vec& y) {
  double worst = 0.0;
  for (const Mat& g : group.elements) worst = std::max(worst, (g * x - y).norm());
  return worst;
}

WeightContext::WeightContext(RootSystemSpec spec, std::size_t max_order)
    : spec_(std::move(spec)) {
  auto issues = validate_root_system(spec_);
  if (!issues.empty()) {
    std::string msg = "invalid root system:";
    for (const auto& i : issues) msg += " [" + i.kind + "] " + i.message + ";";
    fail(ErrorKind::invalid_input, msg);
  }
  group_ = generate_group(spec_, max_order);
  for (auto i : spec_.positive_indices()) {
    positive_.push_back(spec_.roots[i]);
    positive_k_.push_back(spec_.multiplicity[i]);
    gamma_ += spec_.multiplicity[i];
  }

  // Product structure: every root is a unit coordinate vector, at most one
  // positive root per axis.
  std::vector<double> axis_k(spec_.dimension, 0.0);
  std::vector<int> count(spec_.dimension, 0);
  bool product = true;
  for (std::size_t r = 0; r < positive_.size() && product; ++r) {
    const Vec& a = positive_[r];
    Eigen::Index axis = -1;
    for (Eigen::Index i = 0; i < a.size(); ++i)
      if (std::abs(a[i]) > tol_root) {
        if (axis >= 0) product = false;
        axis = i;
      }
    if (!product || axis < 0 || std::abs(a[axis] - 1.0) > tol_root) {
      product = false;
      break;
    }
    axis_k[axis] = positive_k_[r];
    ++count[axis];
  }
  for (int c : count) product = product && c <= 1;
  if (product) axis_k_ = std::move(axis_k);
}

double WeightContext::weight(const Vec& x) const {
  double h = 1.0;
  for (std::size_t r = 0; r < positive_.size(); ++r) {
    if (positive_k_[r] == 0.0) continue;
    h *= std::pow(std::abs(positive_[r].dot(x)), positive_k_[r]);
  }
  return h;
}

double WeightContext::weight_squared(const Vec& x) const {
  double h = 1.0;
  for (std::size_t r = 0; r < positive_.size(); ++r) {
    if (positive_k_[r] == 0.0) continue;
    h *= std::pow(std::abs(positive_[r].dot(x)), 2.0 * positive_k_[r]);
  }
  return h;
}

std::string WeightContext::group_label() const {
  return spec_.preset;
}

double ball_measure(const WeightContext& ctx, const Vec& center, double r, int resolution) {
  require(r > 0.0, ErrorKind::invalid_argument, "ball_measure: radius must be positive");
  require(center.size() == ctx.dimension(), ErrorKind::invalid_argument,
          "ball_measure: center dimension mismatch");
  require(resolution >= 8, ErrorKind::resolution,
          "ball_measure: fewer than 8 nodes across the ball");
  const int n = ctx.dimension();
  const double h = 2.0 * r / resolution;
  double cell = std::pow(h, n);
  std::vector<int> idx(n, 0);
  double total = 0.0;
  Vec y(n);
  for (;;) {
    for (int a = 0; a < n; ++a) y[a] = center[a] - r + (idx[a] + 0.5) * h;
    if ((y - center).norm() <= r) total += ctx.weight_squared(y);
    int a = 0;
    while (a < n && ++idx[a] == resolution) idx[a++] = 0;
    if (a == n) break;
  }
  return total * cell;
}

bool region_membership(const OrbitRegion& region, const ReflectionGroup& group, const Vec& y) {
  switch (region.kind) {
    case RegionKind::ball:
      return (y - region.center).norm() <= region.radius;
    case RegionKind::doubled_ball:
      return (y - region.center).norm() <= 2.0 * region.radius;
    case RegionKind::orbit_union:
      return orbit_distance(group, region.center, y) <= 2.0 * region.radius;
    case RegionKind::orbit_intersection:
      return orbit_max_distance(group, region.center, y) <= region.radius;
  }
  return false;
}

SeparationReport separation_check(const ReflectionGroup& group, const Vec& x, double r,
                                  std::size_t samples, std::uint64_t seed) {
  require(r > 0.0, ErrorKind::invalid_argument, "separation_check: radius must be positive");
  const int n = group.dimension;
  Rng rng(seed);
  const double box = x.norm() + 4.0 * r + 1.0;
  const OrbitRegion qstar{x, r, RegionKind::orbit_union};
  SeparationReport report;
  report.min_slack = std::numeric_limits<double>::infinity();
  report.min_orbit_distance = std::numeric_limits<double>::infinity();
  Vec y(n), z(n);
  while (report.pairs < samples) {
    do {
      for (int a = 0; a < n; ++a) y[a] = x[a] + rng.uniform(-r, r);
    } while ((y - x).norm() > r);
    do {
      for (int a = 0; a < n; ++a) z[a] = rng.uniform(-box, box);
    } while (region_membership(qstar, group, z));
    const double dz = orbit_distance(group, x, z);
    const double slack = dz - 2.0 * (y - x).norm();
    report.min_slack = std::min(report.min_slack, slack);
    report.min_orbit_distance = std::min(report.min_orbit_distance, dz);
    if (!(slack > 0.0)) ++report.violations;
    ++report.pairs;
  }
  return report;
}

}  // namespace dunkl
