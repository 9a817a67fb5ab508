#include "dunkl/riesz.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>

#include <boost/math/quadrature/gauss.hpp>

#include "dunkl/error.hpp"
#include "dunkl/format.hpp"
#include "dunkl/random.hpp"
#include "dunkl/translation.hpp"

namespace dunkl {

namespace {

constexpr int gl_points = 20;
using Gauss = boost::math::quadrature::gauss<double, gl_points>;

// Gauss-Legendre nodes and weights mapped onto [a, b], appended to the lists.
void append_panel(double a, double b, std::vector<double>& nodes, std::vector<double>& weights) {
  const auto& x = Gauss::abscissa();
  const auto& w = Gauss::weights();
  const double c = 0.5 * (a + b), h = 0.5 * (b - a);
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0.0) {
      nodes.push_back(c);
      weights.push_back(h * w[i]);
      continue;
    }
    nodes.push_back(c - h * x[i]);
    weights.push_back(h * w[i]);
    nodes.push_back(c + h * x[i]);
    weights.push_back(h * w[i]);
  }
}

double panel_sum(double a, double b, const std::function<double(double)>& f) {
  std::vector<double> nodes, weights;
  append_panel(a, b, nodes, weights);
  double s = 0.0;
  for (std::size_t i = 0; i < nodes.size(); ++i) s += weights[i] * f(nodes[i]);
  return s;
}

bool all_zero_multiplicity(const WeightContext& ctx) {
  for (double k : ctx.root_system().multiplicity)
    if (k != 0.0) return false;
  return true;
}

double kernel_normalization(const WeightContext& ctx) {
  if (all_zero_multiplicity(ctx)) return std::pow(2.0 * M_PI, 0.5 * ctx.dimension());
  return c_k_analytic(ctx);
}

// Throws before any parallel loop, where an exception could not propagate.
void check_kernel_route(const WeightContext& ctx, const char* where) {
  if (ctx.axis_multiplicities().has_value() || all_zero_multiplicity(ctx)) return;
  fail(ErrorKind::unsupported_group,
       std::string(where) + ": translation measures exist only for rank1 and z2_product; got '" +
           ctx.group_label() + "'");
}

void check_component(int j, int dimension) {
  require(j >= 0 && j < dimension, ErrorKind::invalid_argument,
          "riesz: component index out of range");
}

Spectrum apply_symbol(const Spectrum& s, const GridFunction& symbol) {
  return Spectrum{pointwise_product(s.values, symbol), s.c_k};
}

double relative_l2(const GridFunction& ref, const GridFunction& other, const Quadrature& q) {
  const double base = lp_norm(ref, q, 2.0);
  const double diff = lp_norm(ref - other, q, 2.0);
  return base > 0.0 ? diff / base : diff;
}

}  // namespace

double riesz_constant(const WeightContext& ctx) {
  const double g = ctx.gamma_k(), n = ctx.dimension();
  return std::exp((g + 0.5 * n) * std::log(2.0) + std::lgamma(g + 0.5 * (n + 1.0))) /
         std::sqrt(M_PI);
}

double riesz_exponent(const WeightContext& ctx) {
  return 2.0 * ctx.gamma_k() + ctx.dimension() + 1.0;
}

GridFunction riesz_multiplier_symbol(int j, const DunklTransform& t) {
  const GridSpec& fg = t.frequency_grid();
  check_component(j, fg.dimension);
  return GridFunction::sample(
      fg,
      [j](const Vec& xi) {
        const double r = xi.norm();
        return r > 0.0 ? cplx(0.0, -xi[j] / r) : cplx(0.0);  // odd symbol, 0 at the origin
      },
      Domain::frequency);
}

namespace {

// In rank one the multiplied spectrum is sgn(xi) times a smooth function,
// which the plain inverse end correction would misfit at the origin.
GridFunction invert_multiplied(const Spectrum& s, int j, const DunklTransform& t) {
  return t.frequency_grid().dimension == 1 ? t.inverse_sign_jump(s, j) : t.inverse(s);
}

}  // namespace

Spectrum riesz_multiplier(const Spectrum& s, int j, const DunklTransform& t) {
  t.check(s);
  return apply_symbol(s, riesz_multiplier_symbol(j, t));
}

GridFunction riesz_multiplier(const GridFunction& f, int j, const DunklTransform& t) {
  return invert_multiplied(riesz_multiplier(t.forward(f), j, t), j, t);
}

GridFunction truncated_symbol(int j, double eps, double M, const DunklTransform& t) {
  require(eps > 0.0 && eps < M, ErrorKind::invalid_argument,
          "riesz_truncated: need 0 < eps < M");
  const GridSpec& fg = t.frequency_grid();
  check_component(j, fg.dimension);
  require(fg.dimension == 1, ErrorKind::unsupported_group,
          "riesz_truncated: the y-quadrature route is implemented in one dimension");
  const KernelEvaluator& ev = t.kernel();
  const WeightContext& ctx = t.context();
  const double scale = riesz_constant(ctx) / kernel_normalization(ctx);

  // In rank one kappa(y) dm_k(y) = sgn(y) dy / |y|, and the even part of
  // E(iy, xi) cancels, leaving 2i int_eps^M jo(y xi) dy / y. With u = |xi| y
  // every frequency needs J(M|xi|) - J(eps|xi|), J(u) = int_0^u jo(s) ds / s,
  // so one cumulative quadrature over the sorted endpoints serves them all.
  const int n = fg.nodes_per_axis, half = n / 2;
  std::vector<double> ends;
  for (int q = 0; q < half; ++q) {
    const double xi = fg.coordinate(half + q);
    ends.push_back(eps * xi);
    ends.push_back(M * xi);
  }
  require(M * fg.half_width <= 1e6, ErrorKind::resolution,
          "riesz_truncated: M times the frequency half-width exceeds 1e6 quadrature panels");
  std::vector<double> sorted = ends;
  sorted.push_back(0.0);
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  auto integrand = [&](double u) { return ev.axis_imaginary(0, u).odd / u; };
  std::vector<double> cumulative(sorted.size(), 0.0);
  for (std::size_t i = 1; i < sorted.size(); ++i) {
    const double a = sorted[i - 1], b = sorted[i];
    const int pieces = std::max(1, static_cast<int>(std::ceil(b - a)));  // panels of length <= 1
    double s = 0.0;
    for (int p = 0; p < pieces; ++p)
      s += panel_sum(a + (b - a) * p / pieces, a + (b - a) * (p + 1) / pieces, integrand);
    cumulative[i] = cumulative[i - 1] + s;
  }
  auto J = [&](double u) {
    const auto it = std::lower_bound(sorted.begin(), sorted.end(), u);
    return cumulative[static_cast<std::size_t>(it - sorted.begin())];
  };

  GridFunction sym(fg, Domain::frequency);
  for (int q = 0; q < half; ++q) {
    const double xi = fg.coordinate(half + q);
    const double v = 2.0 * scale * (J(M * xi) - J(eps * xi));
    sym[half + q] = cplx(0.0, -v);
    sym[half - 1 - q] = cplx(0.0, v);
  }
  return sym;
}

GridFunction riesz_truncated(const GridFunction& f, int j, double eps, double M,
                           const DunklTransform& t) {
  return t.inverse(apply_symbol(t.forward(f), truncated_symbol(j, eps, M, t)));
}

GridFunction heat_symbol(int j, double eps_t, double M_t, const DunklTransform& t) {
  require(eps_t > 0.0 && eps_t < M_t && std::isfinite(M_t), ErrorKind::invalid_argument,
          "riesz_heat: need 0 < eps_t < M_t < inf");
  const GridSpec& fg = t.frequency_grid();
  check_component(j, fg.dimension);
  // dt / sqrt(t) = 2 du with u = sqrt(t); geometric panels in u.
  std::vector<double> nodes, weights;
  double u = std::sqrt(eps_t);
  const double top = std::sqrt(M_t);
  while (u < top) {
    const double next = std::min(2.0 * u, top);
    append_panel(u, next, nodes, weights);
    u = next;
  }
  return GridFunction::sample(
      fg,
      [&](const Vec& xi) {
        const double r2 = xi.squaredNorm();
        double s = 0.0;
        for (std::size_t i = 0; i < nodes.size(); ++i)
          s += 2.0 * weights[i] * std::exp(-r2 * nodes[i] * nodes[i]);
        return cplx(0.0, -xi[j] * s / std::sqrt(M_PI));
      },
      Domain::frequency);
}

GridFunction riesz_heat(const GridFunction& f, int j, double eps_t, double M_t,
                        const DunklTransform& t) {
  return t.inverse(apply_symbol(t.forward(f), heat_symbol(j, eps_t, M_t, t)));
}

double riesz_kernel(const Vec& x, const Vec& y, int j, double eps, const WeightContext& ctx) {
  const int n = ctx.dimension();
  check_component(j, n);
  check_kernel_route(ctx, "riesz_kernel");
  require(x.size() == n && y.size() == n, ErrorKind::invalid_argument,
          "riesz_kernel: dimension mismatch");
  require(eps > 0.0, ErrorKind::invalid_argument, "riesz_kernel: eps must be positive");
  const double expo = riesz_exponent(ctx);
  const double scale = -riesz_constant(ctx) / kernel_normalization(ctx);
  auto kappa = [&](const Vec& u) {
    const double r = u.norm();
    return r >= eps ? u[j] / std::pow(r, expo) : 0.0;
  };
  if (all_zero_multiplicity(ctx)) return scale * kappa(y - x);
  const std::vector<double>& k = *ctx.axis_multiplicities();
  if (n == 1) {
    const double br[] = {eps};
    return scale * translate_rank1(
                       [&](double z) {
                         const double r = std::abs(z);
                         return r >= eps ? z / std::pow(r, expo) : 0.0;
                       },
                       -x[0], y[0], k[0], br);
  }
  return scale * translate_product(kappa, -x, y, k, eps);
}

std::vector<cplx> riesz_apply_kernel(const GridFunction& g, const std::vector<Vec>& points, int j,
                                     double eps, const WeightContext& ctx, const Quadrature& q) {
  require(g.grid() == q.grid() && g.domain() == Domain::space, ErrorKind::invalid_argument,
          "riesz_apply_kernel: g must live on the quadrature grid");
  check_kernel_route(ctx, "riesz_apply_kernel");
  const GridSpec& grid = g.grid();
  std::vector<std::size_t> support;
  for (std::size_t i = 0; i < g.size(); ++i)
    if (g[i] != 0.0) support.push_back(i);
  std::vector<cplx> out(points.size());
#pragma omp parallel for schedule(dynamic)
  for (std::size_t p = 0; p < points.size(); ++p) {
    cplx s = 0.0;
    for (std::size_t i : support)
      s += q.weight(i) * riesz_kernel(points[p], grid.point(i), j, eps, ctx) * g[i];
    out[p] = s;
  }
  return out;
}

std::vector<PointPair> sample_pairs(int dimension, double half_width, double eps,
                                    std::size_t count, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<PointPair> pairs;
  const double span = 0.25 * half_width;
  for (std::size_t s = 0; s < count; ++s) {
    Vec x(dimension), dir(dimension);
    for (int a = 0; a < dimension; ++a) x[a] = rng.uniform(-span, span);
    do {
      for (int a = 0; a < dimension; ++a) dir[a] = rng.uniform(-1.0, 1.0);
    } while (dir.norm() < 1e-3 || dir.norm() > 1.0);
    const double len = rng.uniform(4.0 * eps, 1.0);
    pairs.emplace_back(x, x + len * dir.normalized());
  }
  return pairs;
}

double hormander_integral(const PointPair& pair, int j, double eps, const WeightContext& ctx,
                          const GridSpec& grid) {
  check_kernel_route(ctx, "hormander_integral");
  const auto& [x, y] = pair;
  const double sep = 2.0 * (y - x).norm();
  if (sep == 0.0) return 0.0;
  const Quadrature q(ctx, grid);
  // In one dimension the excluded set is a union of intervals around the
  // orbit of x, and cells cut by its boundary get their covered fraction. The
  // integrand peaks right at that boundary, so an all-or-nothing node test
  // would leave an O(h / |y - x|) error that swamps the refinement study.
  std::vector<std::pair<double, double>> excluded;
  if (grid.dimension == 1)
    for (const Vec& gx : orbit(ctx.group(), x)) excluded.emplace_back(gx[0] - sep, gx[0] + sep);
  const double h = grid.spacing();
  auto coverage = [&](const Vec& z) {
    if (grid.dimension != 1) return orbit_distance(ctx.group(), x, z) < sep ? 0.0 : 1.0;
    const double lo = z[0] - 0.5 * h, hi = z[0] + 0.5 * h;
    std::vector<std::pair<double, double>> cut;
    for (const auto& [a, b] : excluded)
      if (std::min(b, hi) > std::max(a, lo)) cut.emplace_back(std::max(a, lo), std::min(b, hi));
    std::sort(cut.begin(), cut.end());
    double covered = 0.0, reach = lo;
    for (const auto& [a, b] : cut) {
      covered += std::max(0.0, b - std::max(a, reach));
      reach = std::max(reach, b);
    }
    return 1.0 - covered / h;
  };
  std::vector<double> terms(grid.size(), 0.0);
#pragma omp parallel for schedule(dynamic, 64)
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const Vec z = grid.point(i);
    const double c = coverage(z);
    if (c <= 0.0) continue;
    terms[i] = c * q.weight(i) *
               std::abs(riesz_kernel(z, x, j, eps, ctx) - riesz_kernel(z, y, j, eps, ctx));
  }
  double total = 0.0;
  for (double v : terms) total += v;
  return total;
}

ProbeReport hormander_probe(int j, double eps, const std::vector<PointPair>& pairs,
                            const WeightContext& ctx, const GridSpec& grid, bool refine) {
  ProbeReport rep = make_report("hormander", ctx, grid);
  rep.params = {{"j", j}, {"eps", json_number(eps)}, {"pairs", pairs.size()}};
  auto sweep = [&](const GridSpec& g, Json& rows) {
    double sup = 0.0;
    for (const auto& p : pairs) {
      const double v = hormander_integral(p, j, eps, ctx, g);
      rows.push_back({{"x", json_vector(p.first)}, {"y", json_vector(p.second)},
                      {"integral", json_number(v)}});
      sup = std::max(sup, v);
    }
    return sup;
  };
  Json rows = Json::array();
  const double sup = sweep(grid, rows);
  rep.extras["pairs"] = rows;
  rep.extras["sup"] = json_number(sup);
  rep.check("sup_finite", sup, std::numeric_limits<double>::max());
  if (refine) {
    Json fine_rows = Json::array();
    const double sup_fine = sweep(grid.refined(2), fine_rows);
    const double change = sup_fine > 0.0 ? std::abs(sup_fine - sup) / sup_fine : 0.0;
    rep.extras["sup_refined"] = json_number(sup_fine);
    rep.extras["pairs_refined"] = fine_rows;
    rep.check("grid_doubling_change", change, 0.2);
  }
  return rep;
}

TestFunction test_class_certificate(const GridFunction& phi, const DunklTransform& t, int n_max) {
  require(n_max >= 0, ErrorKind::invalid_argument, "certificate: n_max must be >= 0");
  TestFunction out;
  out.phi = phi;
  const Spectrum s = t.forward(phi);
  const Quadrature& fq = t.frequency_quadrature();
  const GridSpec& fg = t.frequency_grid();
  double ceiling = 0.0;
  for (std::size_t i = 0; i < fg.size(); ++i) ceiling = std::max(ceiling, fg.point(i).norm());
  out.growth_ceiling = 0.25 * (1.0 + ceiling);
  // Spectral samples below the transform's roundoff floor carry no decay
  // information; left in, (1 + |xi|)^n would amplify them into a false failure.
  const double floor = certificate_floor * s.values.max_abs();
  bool finite = true;
  for (int n = 0; n <= n_max; ++n) {
    double acc = 0.0;
    for (std::size_t i = 0; i < fg.size(); ++i) {
      const double a = std::abs(s.values[i]);
      if (a <= floor) continue;
      const double m = a * std::pow(1.0 + fg.point(i).norm(), n);
      acc += fq.weight(i) * m * m;
    }
    const double v = std::sqrt(acc);
    finite = finite && std::isfinite(v);
    out.certificate.push_back(v);
  }
  for (int n = 0; n < n_max; ++n) {
    if (out.certificate[n] > 0.0)
      out.max_growth = std::max(out.max_growth, out.certificate[n + 1] / out.certificate[n]);
  }
  out.admissible = finite && out.max_growth <= out.growth_ceiling;
  return out;
}

cplx weak_pairing(const GridFunction& f, const TestFunction& phi, int j, const DunklTransform& t) {
  if (!phi.admissible)
    fail(ErrorKind::inadmissible_test_function,
         "weak pairing: test function failed the spectral decay certificate");
  const GridFunction rphi = riesz_multiplier(phi.phi, j, t);
  return -t.space_quadrature().integrate(pointwise_product(f, rphi));
}

ProbeReport lemma41_check(const GridFunction& f, const TestFunction& phi, int j, double eps,
                          const DunklTransform& t) {
  const GridSpec& grid = t.space_grid();
  ProbeReport rep = make_report("lemma41", t.context(), grid);
  rep.params = {{"j", j}, {"eps", json_number(eps)}};
  const Quadrature& q = t.space_quadrature();
  const cplx weak = weak_pairing(f, phi, j, t);

  // Drop test-function samples below roundoff; they cannot move the sum.
  GridFunction trimmed = phi.phi;
  const double cut = 1e-16 * phi.phi.max_abs();
  for (auto& v : trimmed.values())
    if (std::abs(v) <= cut) v = 0.0;
  std::vector<Vec> xs;
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < f.size(); ++i)
    if (f[i] != 0.0) {
      xs.push_back(grid.point(i));
      idx.push_back(i);
    }
  std::vector<std::size_t> phi_support;
  for (std::size_t i = 0; i < trimmed.size(); ++i)
    if (trimmed[i] != 0.0) phi_support.push_back(i);

  // K_eps(x, y) only sees kappa on |u| >= d_G(x, y), so the eps/2 kernel is
  // recomputed only for pairs closer than eps.
  const WeightContext& ctx = t.context();
  std::vector<cplx> part(idx.size()), part_half(idx.size());
#pragma omp parallel for schedule(dynamic)
  for (std::size_t p = 0; p < idx.size(); ++p) {
    cplx a = 0.0, b = 0.0;
    for (std::size_t i : phi_support) {
      const Vec y = grid.point(i);
      const cplx w = q.weight(i) * trimmed[i];
      const double k_eps = riesz_kernel(xs[p], y, j, eps, ctx);
      const double k_half = orbit_distance(ctx.group(), xs[p], y) < eps
                                ? riesz_kernel(xs[p], y, j, 0.5 * eps, ctx)
                                : k_eps;
      a += w * k_eps;
      b += w * k_half;
    }
    part[p] = a;
    part_half[p] = b;
  }
  // Serial accumulation keeps the result independent of the thread count.
  cplx kern = 0.0, kern_half = 0.0;
  for (std::size_t p = 0; p < idx.size(); ++p) {
    kern -= q.weight(idx[p]) * f[idx[p]] * part[p];
    kern_half -= q.weight(idx[p]) * f[idx[p]] * part_half[p];
  }
  const double scale = std::max({std::abs(weak), std::abs(kern), 1e-300});
  rep.tail_mass = tail_mass(f, q);
  rep.extras = {{"weak_pairing", {json_number(weak.real()), json_number(weak.imag())}},
                {"kernel_pairing", {json_number(kern.real()), json_number(kern.imag())}},
                {"eps_sensitivity", json_number(std::abs(kern - kern_half) / scale)},
                {"certificate", json_vector(phi.certificate)},
                {"max_growth", json_number(phi.max_growth)}};
  rep.check("certificate_growth", phi.max_growth, phi.growth_ceiling, Relation::at_most);
  rep.check("relative_difference", std::abs(weak - kern) / scale, 1e-3);
  return rep;
}

ProbeReport lp_operator_norm_estimate(int j, double p, const std::vector<GridFunction>& family,
                                      const DunklTransform& t) {
  require(p > 1.0 && std::isfinite(p), ErrorKind::invalid_argument,
          "lp_operator_norm_estimate: need 1 < p < inf");
  ProbeReport rep = make_report("lp_norm", t.context(), t.space_grid());
  const Quadrature& q = t.space_quadrature();
  double ratio = 0.0;
  Json per = Json::array();
  for (const GridFunction& f : family) {
    const double fp = lp_norm(f, q, p);
    if (fp == 0.0) {
      per.push_back("skipped");
      continue;
    }
    const double r = lp_norm(riesz_multiplier(f, j, t), q, p) / fp;
    per.push_back(json_number(r));
    ratio = std::max(ratio, r);
    rep.tail_mass = std::max(rep.tail_mass, tail_mass(f, q));
  }
  rep.params = {{"j", j}, {"p", json_number(p)}};
  rep.extras = {{"per_function", per}, {"max_ratio", json_number(ratio)}};
  rep.check("ratio_finite", ratio, std::numeric_limits<double>::max());
  if (p == 2.0) rep.check("l2_ratio", ratio, 1.0 + 1e-6, Relation::at_most);
  return rep;
}

double square_sum_residual(const GridFunction& f, const DunklTransform& t) {
  const Spectrum s = t.forward(f);
  GridFunction acc(t.frequency_grid(), Domain::frequency);
  for (int j = 0; j < t.frequency_grid().dimension; ++j) {
    const GridFunction m = riesz_multiplier_symbol(j, t);
    acc += pointwise_product(pointwise_product(s.values, m), m);
  }
  const GridFunction back = t.inverse(Spectrum{acc, s.c_k});
  const Quadrature& q = t.space_quadrature();
  const double base = lp_norm(f, q, 2.0);
  return base > 0.0 ? lp_norm(back + f, q, 2.0) / base : 0.0;
}

double adjoint_residual(const GridFunction& f, const GridFunction& g, int j,
                        const DunklTransform& t) {
  const Quadrature& q = t.space_quadrature();
  const cplx a = q.integrate(pointwise_product(riesz_multiplier(f, j, t), g));
  const cplx b = q.integrate(pointwise_product(f, riesz_multiplier(g, j, t)));
  const double scale = lp_norm(f, q, 2.0) * lp_norm(g, q, 2.0);
  return scale > 0.0 ? std::abs(a + b) / scale : 0.0;
}

std::vector<RouteRow> route_comparison(const std::vector<GridFunction>& family, int j,
                                       const RieszConfig& cfg, int levels,
                                       const DunklTransform& t) {
  require(levels >= 1, ErrorKind::invalid_argument, "route_comparison: need a level");
  const double M = cfg.M > 0.0 ? cfg.M : 0.75 * t.space_grid().half_width;
  const Quadrature& q = t.space_quadrature();
  std::vector<Spectrum> spectra;
  std::vector<GridFunction> mult;
  for (const GridFunction& f : family) {
    spectra.push_back(t.forward(f));
    mult.push_back(invert_multiplied(riesz_multiplier(spectra.back(), j, t), j, t));
  }
  std::vector<RouteRow> rows;
  for (int level = 0; level < levels; ++level) {
    RouteRow row;
    row.eps = cfg.eps / std::pow(2.0, level);
    row.eps_t = cfg.eps_t / std::pow(2.0, level);
    row.M = M;
    row.M_t = cfg.M_t;
    const GridFunction ts = truncated_symbol(j, row.eps, M, t);
    const GridFunction hs = heat_symbol(j, row.eps_t, row.M_t, t);
    for (std::size_t i = 0; i < family.size(); ++i) {
      const GridFunction tr = t.inverse(apply_symbol(spectra[i], ts));
      const GridFunction he = t.inverse(apply_symbol(spectra[i], hs));
      row.multiplier_truncated = std::max(row.multiplier_truncated, relative_l2(mult[i], tr, q));
      row.multiplier_heat = std::max(row.multiplier_heat, relative_l2(mult[i], he, q));
      row.truncated_heat = std::max(row.truncated_heat, relative_l2(tr, he, q));
    }
    rows.push_back(row);
  }
  return rows;
}

void write_route_csv(std::ostream& out, const std::vector<RouteRow>& rows) {
  out << "eps,M,l2_rel_dist_multiplier_truncated,l2_rel_dist_multiplier_heat,"
         "eps_t,M_t,l2_rel_dist_truncated_heat\n";
  for (const auto& r : rows) {
    out << format_number(r.eps) << ',' << format_number(r.M) << ','
        << format_number(r.multiplier_truncated) << ',' << format_number(r.multiplier_heat)
        << ',' << format_number(r.eps_t) << ',' << format_number(r.M_t) << ','
        << format_number(r.truncated_heat) << '\n';
  }
}

}  // namespace dunkl
