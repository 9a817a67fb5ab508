#pragma once

#include <complex>
#include <cstddef>
#include <functional>
#include <iosfwd>
#include <limits>
#include <string>
#include <vector>

#include "dunkl/reflection.hpp"

namespace dunkl {

using cplx = std::complex<double>;

enum class Domain { space, frequency };
std::string to_string(Domain d);

// Tensor grid of cell-centered nodes x_i = -L + (i + 1/2) h, h = 2L/n, on
// every axis. An even n keeps the node set symmetric, so x -> -x maps nodes
// to nodes and no node sits on a coordinate hyperplane.
struct GridSpec {
  int dimension = 1;
  double half_width = 1.0;
  int nodes_per_axis = 2;

  double spacing() const { return 2.0 * half_width / nodes_per_axis; }
  double coordinate(int i) const { return -half_width + (i + 0.5) * spacing(); }
  std::size_t size() const;
  Vec point(std::size_t flat) const;
  std::vector<int> multi_index(std::size_t flat) const;
  std::size_t flat_index(const std::vector<int>& idx) const;
  std::size_t mirror(std::size_t flat) const;  // node of -x
  // Same node count with half-width pi n / (2L); the pairing for which the
  // k = 0 transform is an exact discrete Fourier transform.
  GridSpec reciprocal() const;
  GridSpec refined(int factor = 2) const;
  void validate() const;

  bool operator==(const GridSpec&) const = default;
};

class GridFunction {
 public:
  GridFunction() = default;
  GridFunction(GridSpec grid, Domain domain);
  GridFunction(GridSpec grid, Domain domain, std::vector<cplx> values);

  static GridFunction sample(const GridSpec& grid,
                             const std::function<cplx(const Vec&)>& fn,
                             Domain domain = Domain::space);

  const GridSpec& grid() const { return grid_; }
  Domain domain() const { return domain_; }
  std::size_t size() const { return values_.size(); }
  const std::vector<cplx>& values() const { return values_; }
  std::vector<cplx>& values() { return values_; }
  cplx operator[](std::size_t i) const { return values_[i]; }
  cplx& operator[](std::size_t i) { return values_[i]; }

  GridFunction reflected() const;  // y -> f(-y)
  GridFunction map(const std::function<cplx(cplx)>& fn) const;
  double max_abs() const;
  double max_imag() const;
  void check_finite() const;

  GridFunction& operator+=(const GridFunction& o);
  GridFunction& operator-=(const GridFunction& o);
  GridFunction& operator*=(cplx s);

 private:
  void check_compatible(const GridFunction& o) const;

  GridSpec grid_;
  Domain domain_ = Domain::space;
  std::vector<cplx> values_;
};

GridFunction operator+(GridFunction a, const GridFunction& b);
GridFunction operator-(GridFunction a, const GridFunction& b);
GridFunction operator*(GridFunction a, cplx s);
GridFunction operator*(cplx s, GridFunction a);
GridFunction pointwise_product(const GridFunction& a, const GridFunction& b);

// Half-line weights for the density x^s on nodes (p + 1/2) h, p = 0..n/2-1.
// The first few nodes carry end corrections that cancel the h^{s+1+2i}
// Euler-Maclaurin terms of the power singularity at the origin, so smooth
// integrands keep spectral accuracy for non-integer s.
std::vector<double> half_line_weights(double exponent, int half_count, double h);

// Quadrature weights realizing integration against m_k on a grid, including
// the cell volume. Product groups get corrected tensor weights; other groups
// fall back to the plain midpoint rule h^N h_k^2(x).
class Quadrature {
 public:
  Quadrature(const WeightContext& ctx, const GridSpec& grid);

  const GridSpec& grid() const { return grid_; }
  const std::vector<double>& weights() const { return weights_; }
  double weight(std::size_t flat) const { return weights_[flat]; }
  bool is_product() const { return !axis_.empty(); }
  // Weights of the nonnegative half of axis a (index p <-> node n/2 + p).
  const std::vector<double>& half_axis(int a) const { return axis_[a]; }

  cplx integrate(const GridFunction& f) const;
  double integrate_abs_pow(const GridFunction& f, double p) const;

 private:
  GridSpec grid_;
  std::vector<double> weights_;
  std::vector<std::vector<double>> axis_;
};

cplx integrate_weighted(const GridFunction& f, const WeightContext& ctx);
cplx integrate_weighted(const GridFunction& f, const Quadrature& q);

inline constexpr double p_infinity = std::numeric_limits<double>::infinity();
double lp_norm(const GridFunction& f, const WeightContext& ctx, double p);
double lp_norm(const GridFunction& f, const Quadrature& q, double p);

GridFunction window(const GridFunction& f, const OrbitRegion& region,
                    const ReflectionGroup& group, bool inside);
GridFunction window_ball(const GridFunction& f, const Vec& center, double radius);

// |f chi_{outside 0.9 box}|_1 / |f|_1, zero for the zero function.
double tail_mass(const GridFunction& f, const Quadrature& q);

// Uniformly sampled radial profile. Nodes r_i = offset + i * spacing; values
// below the first node take the first value, beyond max_radius the profile
// is zero.
struct RadialProfile {
  double offset = 0.0;
  double spacing = 1.0;
  double max_radius = 0.0;
  std::vector<double> values;

  double operator()(double r) const;
  static RadialProfile from_function(const std::function<double(double)>& fn,
                                     double max_radius, std::size_t samples);
};

GridFunction radialize(const RadialProfile& profile, const GridSpec& grid);
RadialProfile profile_of(const GridFunction& f);

// CSV with header x_1..x_N,re,im in row-major node order.
void write_csv(std::ostream& out, const GridFunction& f);

}  // namespace dunkl
