#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace dunkl {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;

inline constexpr double tol_root = 1e-10;
inline constexpr double tol_group = 1e-10;
inline constexpr std::size_t default_max_group_order = 1024;

// sigma_alpha(x) = x - 2 <x, alpha> / |alpha|^2 alpha. Throws on a zero root.
Vec reflect(const Vec& alpha, const Vec& x);
Mat reflection_matrix(const Vec& alpha);

// A root system with a multiplicity attached to every root. Roots and
// multiplicities are parallel arrays in the order they were supplied.
struct RootSystemSpec {
  int dimension = 0;
  std::vector<Vec> roots;
  std::vector<double> multiplicity;
  std::string preset = "custom";

  // Indices of R+, chosen by lexicographic positivity of the root vector.
  std::vector<std::size_t> positive_indices() const;
  std::vector<Vec> positive_roots() const;

  // Multiplicity of the root parallel to alpha (same direction), if present.
  std::optional<double> multiplicity_of(const Vec& alpha) const;

  static RootSystemSpec rank1(double k);
  static RootSystemSpec z2_product(std::span<const double> k);
  static RootSystemSpec b2(double k_short, double k_long);
  static RootSystemSpec a2(double k);
  // Builds a catalog preset. rank1 needs one value, z2_product needs N values
  // (or one value broadcast over `dimension` axes), b2 needs one or two, a2 one.
  static RootSystemSpec from_preset(const std::string& name,
                                    std::span<const double> k,
                                    int dimension = 0);
};

struct ValidationIssue {
  std::string kind;  // zero_root, closure, multiplicity_invariance, ...
  std::string message;
};

std::vector<ValidationIssue> validate_root_system(const RootSystemSpec& spec);

struct ReflectionGroup {
  int dimension = 0;
  std::vector<Mat> elements;
  // generator_index[i] is the position of sigma_{roots[i]} in `elements`.
  std::vector<std::size_t> generator_index;

  std::size_t order() const { return elements.size(); }
  std::size_t identity_index() const;
};

ReflectionGroup generate_group(const RootSystemSpec& spec,
                               std::size_t max_order = default_max_group_order);

std::vector<Vec> orbit(const ReflectionGroup& group, const Vec& x);
double orbit_distance(const ReflectionGroup& group, const Vec& x, const Vec& y);
// max over g of |g x - y|, the far side of the orbit as seen from y.
double orbit_max_distance(const ReflectionGroup& group, const Vec& x, const Vec& y);

// Immutable bundle of everything derived from a validated root system.
class WeightContext {
 public:
  explicit WeightContext(RootSystemSpec spec,
                         std::size_t max_order = default_max_group_order);

  const RootSystemSpec& root_system() const { return spec_; }
  const ReflectionGroup& group() const { return group_; }
  int dimension() const { return spec_.dimension; }
  double gamma_k() const { return gamma_; }
  double homogeneous_dimension() const { return spec_.dimension + 2.0 * gamma_; }

  double weight(const Vec& x) const;          // h_k(x)
  double weight_squared(const Vec& x) const;  // h_k(x)^2, the density of m_k

  // Per-axis multiplicities when every root is a coordinate axis (so the
  // weight factors over coordinates). Empty optional otherwise.
  const std::optional<std::vector<double>>& axis_multiplicities() const {
    return axis_k_;
  }
  std::string group_label() const;

 private:
  RootSystemSpec spec_;
  ReflectionGroup group_;
  std::vector<Vec> positive_;
  std::vector<double> positive_k_;
  double gamma_ = 0.0;
  std::optional<std::vector<double>> axis_k_;
};

// Tensor midpoint quadrature of h_k^2 over the closed ball B(center, r) using
// `resolution` cells across the diameter on each axis.
double ball_measure(const WeightContext& ctx, const Vec& center, double r,
                    int resolution = 512);

enum class RegionKind { ball, doubled_ball, orbit_union, orbit_intersection };

struct OrbitRegion {
  Vec center;
  double radius = 0.0;
  RegionKind kind = RegionKind::ball;
};

bool region_membership(const OrbitRegion& region, const ReflectionGroup& group,
                       const Vec& y);

struct SeparationReport {
  std::size_t pairs = 0;
  std::size_t violations = 0;
  double min_slack = 0.0;  // min over pairs of d_G(x,z) - 2|y-x|
  double min_orbit_distance = 0.0;
};

SeparationReport separation_check(const ReflectionGroup& group, const Vec& x,
                                  double r, std::size_t samples,
                                  std::uint64_t seed = 0);

}  // namespace dunkl
