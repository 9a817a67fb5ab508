#include "dunkl/grid.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>

#include <boost/math/special_functions/zeta.hpp>

#include "dunkl/error.hpp"
#include "dunkl/format.hpp"

namespace dunkl {

std::string to_string(Domain d) { return d == Domain::space ? "space" : "frequency"; }

std::size_t GridSpec::size() const {
  std::size_t total = 1;
  for (int a = 0; a < dimension; ++a) total *= static_cast<std::size_t>(nodes_per_axis);
  return total;
}

std::vector<int> GridSpec::multi_index(std::size_t flat) const {
  std::vector<int> idx(dimension);
  for (int a = dimension - 1; a >= 0; --a) {
    idx[a] = static_cast<int>(flat % nodes_per_axis);
    flat /= nodes_per_axis;
  }
  return idx;
}

std::size_t GridSpec::flat_index(const std::vector<int>& idx) const {
  std::size_t flat = 0;
  for (int a = 0; a < dimension; ++a) flat = flat * nodes_per_axis + idx[a];
  return flat;
}

Vec GridSpec::point(std::size_t flat) const {
  Vec x(dimension);
  for (int a = dimension - 1; a >= 0; --a) {
    x[a] = coordinate(static_cast<int>(flat % nodes_per_axis));
    flat /= nodes_per_axis;
  }
  return x;
}

std::size_t GridSpec::mirror(std::size_t flat) const {
  // Reversing every digit of the row-major index maps x to -x.
  std::size_t out = 0, scale = 1;
  for (int a = 0; a < dimension; ++a) {
    const std::size_t digit = flat % nodes_per_axis;
    out += (nodes_per_axis - 1 - digit) * scale;
    scale *= nodes_per_axis;
    flat /= nodes_per_axis;
  }
  return out;
}

GridSpec GridSpec::reciprocal() const {
  return GridSpec{dimension, M_PI * nodes_per_axis / (2.0 * half_width), nodes_per_axis};
}

GridSpec GridSpec::refined(int factor) const {
  return GridSpec{dimension, half_width, nodes_per_axis * factor};
}

void GridSpec::validate() const {
  require(dimension >= 1, ErrorKind::invalid_argument, "grid: dimension must be positive");
  require(std::isfinite(half_width) && half_width > 0.0, ErrorKind::invalid_argument,
          "grid: half-width must be a positive real");
  require(nodes_per_axis >= 2 && nodes_per_axis % 2 == 0, ErrorKind::invalid_argument,
          "grid: nodes per axis must be a positive even integer");
}

GridFunction::GridFunction(GridSpec grid, Domain domain)
    : grid_(grid), domain_(domain), values_(grid.size(), cplx(0.0)) {
  grid_.validate();
}

GridFunction::GridFunction(GridSpec grid, Domain domain, std::vector<cplx> values)
    : grid_(grid), domain_(domain), values_(std::move(values)) {
  grid_.validate();
  require(values_.size() == grid_.size(), ErrorKind::invalid_argument,
          "GridFunction: sample count differs from node count");
  check_finite();
}

GridFunction GridFunction::sample(const GridSpec& grid,
                                  const std::function<cplx(const Vec&)>& fn, Domain domain) {
  GridFunction f(grid, domain);
  for (std::size_t i = 0; i < f.size(); ++i) f.values_[i] = fn(grid.point(i));
  f.check_finite();
  return f;
}

GridFunction GridFunction::reflected() const {
  GridFunction out(grid_, domain_);
  for (std::size_t i = 0; i < size(); ++i) out.values_[i] = values_[grid_.mirror(i)];
  return out;
}

GridFunction GridFunction::map(const std::function<cplx(cplx)>& fn) const {
  GridFunction out(grid_, domain_);
  for (std::size_t i = 0; i < size(); ++i) out.values_[i] = fn(values_[i]);
  return out;
}

double GridFunction::max_abs() const {
  double m = 0.0;
  for (auto v : values_) m = std::max(m, std::abs(v));
  return m;
}

double GridFunction::max_imag() const {
  double m = 0.0;
  for (auto v : values_) m = std::max(m, std::abs(v.imag()));
  return m;
}

void GridFunction::check_finite() const {
  for (auto v : values_)
    require(std::isfinite(v.real()) && std::isfinite(v.imag()), ErrorKind::invalid_input,
            "GridFunction: non-finite sample");
}

void GridFunction::check_compatible(const GridFunction& o) const {
  require(grid_ == o.grid_, ErrorKind::invalid_argument, "GridFunction: grid mismatch");
  require(domain_ == o.domain_, ErrorKind::domain_tag, "GridFunction: domain-tag mismatch");
}

GridFunction& GridFunction::operator+=(const GridFunction& o) {
  check_compatible(o);
  for (std::size_t i = 0; i < size(); ++i) values_[i] += o.values_[i];
  return *this;
}

GridFunction& GridFunction::operator-=(const GridFunction& o) {
  check_compatible(o);
  for (std::size_t i = 0; i < size(); ++i) values_[i] -= o.values_[i];
  return *this;
}

GridFunction& GridFunction::operator*=(cplx s) {
  for (auto& v : values_) v *= s;
  return *this;
}

GridFunction operator+(GridFunction a, const GridFunction& b) { return a += b; }
GridFunction operator-(GridFunction a, const GridFunction& b) { return a -= b; }
GridFunction operator*(GridFunction a, cplx s) { return a *= s; }
GridFunction operator*(cplx s, GridFunction a) { return a *= s; }

GridFunction pointwise_product(const GridFunction& a, const GridFunction& b) {
  require(a.grid() == b.grid(), ErrorKind::invalid_argument, "product: grid mismatch");
  require(a.domain() == b.domain(), ErrorKind::domain_tag, "product: domain-tag mismatch");
  GridFunction out(a.grid(), a.domain());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] * b[i];
  return out;
}

std::vector<double> half_line_weights(double exponent, int half_count, double h) {
  require(exponent >= 0.0, ErrorKind::invalid_argument, "weights: negative exponent");
  std::vector<double> w(half_count);
  for (int p = 0; p < half_count; ++p) w[p] = h * std::pow((p + 0.5) * h, exponent);

  // Even exponents integrate like polynomials times smooth functions; the
  // midpoint rule is already spectrally accurate there.
  const double frac = exponent / 2.0 - std::floor(exponent / 2.0);
  constexpr int corrections = 4;
  if (frac < 1e-14 || half_count < 4 * corrections) return w;

  // Solve sum_p d_p (p + 1/2)^{2i} = zeta(-s - 2i, 1/2) for i < corrections.
  Eigen::Matrix<double, corrections, corrections> vander;
  Eigen::Matrix<double, corrections, 1> rhs;
  for (int i = 0; i < corrections; ++i) {
    const double a = exponent + 2.0 * i;
    rhs[i] = (std::pow(2.0, -a) - 1.0) * boost::math::zeta(-a);
    for (int p = 0; p < corrections; ++p) vander(i, p) = std::pow(p + 0.5, 2.0 * i);
  }
  const Eigen::Matrix<double, corrections, 1> d = vander.fullPivLu().solve(rhs);
  const double scale = std::pow(h, exponent + 1.0);
  for (int p = 0; p < corrections; ++p) w[p] -= scale * d[p];
  return w;
}

Quadrature::Quadrature(const WeightContext& ctx, const GridSpec& grid) : grid_(grid) {
  grid_.validate();
  require(grid.dimension == ctx.dimension(), ErrorKind::invalid_argument,
          "Quadrature: grid and root-system dimensions differ");
  const int n = grid.nodes_per_axis;
  const double h = grid.spacing();
  weights_.assign(grid.size(), 0.0);
  if (const auto& axis_k = ctx.axis_multiplicities()) {
    for (int a = 0; a < grid.dimension; ++a)
      axis_.push_back(half_line_weights(2.0 * (*axis_k)[a], n / 2, h));
    for (std::size_t i = 0; i < grid.size(); ++i) {
      const auto idx = grid.multi_index(i);
      double w = 1.0;
      for (int a = 0; a < grid.dimension; ++a) {
        const int p = idx[a] >= n / 2 ? idx[a] - n / 2 : n / 2 - 1 - idx[a];
        w *= axis_[a][p];
      }
      weights_[i] = w;
    }
  } else {
    const double cell = std::pow(h, grid.dimension);
    for (std::size_t i = 0; i < grid.size(); ++i)
      weights_[i] = cell * ctx.weight_squared(grid.point(i));
  }
}

cplx Quadrature::integrate(const GridFunction& f) const {
  require(f.grid() == grid_, ErrorKind::invalid_argument, "integrate: grid mismatch");
  cplx total = 0.0;
  for (std::size_t i = 0; i < f.size(); ++i) total += weights_[i] * f[i];
  return total;
}

double Quadrature::integrate_abs_pow(const GridFunction& f, double p) const {
  require(f.grid() == grid_, ErrorKind::invalid_argument, "integrate: grid mismatch");
  double total = 0.0;
  if (p == 1.0) {
    for (std::size_t i = 0; i < f.size(); ++i) total += weights_[i] * std::abs(f[i]);
  } else if (p == 2.0) {
    for (std::size_t i = 0; i < f.size(); ++i) total += weights_[i] * std::norm(f[i]);
  } else {
    for (std::size_t i = 0; i < f.size(); ++i)
      total += weights_[i] * std::pow(std::abs(f[i]), p);
  }
  return total;
}

cplx integrate_weighted(const GridFunction& f, const Quadrature& q) {
  require(f.domain() == Domain::space, ErrorKind::domain_tag,
          "integrate_weighted: input is not tagged space-domain");
  return q.integrate(f);
}

cplx integrate_weighted(const GridFunction& f, const WeightContext& ctx) {
  return integrate_weighted(f, Quadrature(ctx, f.grid()));
}

double lp_norm(const GridFunction& f, const Quadrature& q, double p) {
  require(p >= 1.0, ErrorKind::invalid_argument, "lp_norm: p must be at least 1");
  if (std::isinf(p)) return f.max_abs();
  return std::pow(std::max(0.0, q.integrate_abs_pow(f, p)), 1.0 / p);
}

double lp_norm(const GridFunction& f, const WeightContext& ctx, double p) {
  require(p >= 1.0, ErrorKind::invalid_argument, "lp_norm: p must be at least 1");
  if (std::isinf(p)) return f.max_abs();
  return lp_norm(f, Quadrature(ctx, f.grid()), p);
}

GridFunction window(const GridFunction& f, const OrbitRegion& region,
                    const ReflectionGroup& group, bool inside) {
  GridFunction out(f.grid(), f.domain());
  for (std::size_t i = 0; i < f.size(); ++i)
    if (region_membership(region, group, f.grid().point(i)) == inside) out[i] = f[i];
  return out;
}

GridFunction window_ball(const GridFunction& f, const Vec& center, double radius) {
  GridFunction out(f.grid(), f.domain());
  for (std::size_t i = 0; i < f.size(); ++i)
    if ((f.grid().point(i) - center).norm() <= radius) out[i] = f[i];
  return out;
}

double tail_mass(const GridFunction& f, const Quadrature& q) {
  const double edge = 0.9 * f.grid().half_width;
  double outside = 0.0, total = 0.0;
  for (std::size_t i = 0; i < f.size(); ++i) {
    const double v = q.weight(i) * std::abs(f[i]);
    total += v;
    if (f.grid().point(i).cwiseAbs().maxCoeff() > edge) outside += v;
  }
  return total > 0.0 ? outside / total : 0.0;
}

double RadialProfile::operator()(double r) const {
  if (values.empty() || r > max_radius) return 0.0;
  const double t = (r - offset) / spacing;
  if (t <= 0.0) return values.front();
  const auto i = static_cast<std::size_t>(t);
  if (i + 1 >= values.size()) return values.back();
  const double frac = t - static_cast<double>(i);
  return (1.0 - frac) * values[i] + frac * values[i + 1];
}

RadialProfile RadialProfile::from_function(const std::function<double(double)>& fn,
                                           double max_radius, std::size_t samples) {
  require(samples >= 2 && max_radius > 0.0, ErrorKind::invalid_argument,
          "RadialProfile: need at least two samples on a positive radius");
  RadialProfile p;
  p.offset = 0.0;
  p.spacing = max_radius / static_cast<double>(samples - 1);
  p.max_radius = max_radius;
  p.values.resize(samples);
  for (std::size_t i = 0; i < samples; ++i) p.values[i] = fn(i * p.spacing);
  return p;
}

GridFunction radialize(const RadialProfile& profile, const GridSpec& grid) {
  return GridFunction::sample(grid, [&](const Vec& x) { return cplx(profile(x.norm())); });
}

RadialProfile profile_of(const GridFunction& f) {
  // Radial bins of one cell width; in rank 1 the bin centers are exactly the
  // node radii, so radialize(profile_of(f)) reproduces radial samples.
  const GridSpec& g = f.grid();
  const double h = g.spacing();
  const int bins = g.nodes_per_axis / 2;
  std::vector<double> sum(bins, 0.0);
  std::vector<int> count(bins, 0);
  for (std::size_t i = 0; i < f.size(); ++i) {
    const double r = g.point(i).norm();
    const auto b = static_cast<int>(r / h);
    if (b >= bins) continue;
    sum[b] += f[i].real();
    ++count[b];
  }
  RadialProfile p;
  p.offset = 0.5 * h;
  p.spacing = h;
  p.max_radius = (bins - 0.5) * h;
  p.values.resize(bins);
  for (int b = 0; b < bins; ++b) p.values[b] = count[b] ? sum[b] / count[b] : 0.0;
  return p;
}

void write_csv(std::ostream& out, const GridFunction& f) {
  const GridSpec& g = f.grid();
  for (int a = 0; a < g.dimension; ++a) out << "x_" << (a + 1) << ',';
  out << "re,im\n";
  for (std::size_t i = 0; i < f.size(); ++i) {
    const Vec x = g.point(i);
    for (int a = 0; a < g.dimension; ++a) out << format_number(x[a]) << ',';
    out << format_number(f[i].real()) << ',' << format_number(f[i].imag()) << '\n';
  }
}

}  // namespace dunkl
