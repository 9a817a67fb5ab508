#include "dunkl/translation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <boost/math/quadrature/tanh_sinh.hpp>

#include "dunkl/error.hpp"
#include "dunkl/random.hpp"

namespace dunkl {

std::string to_string(TranslationRoute r) {
  return r == TranslationRoute::spectral ? "spectral" : "roesler";
}

namespace {

constexpr double quad_tol = 1e-11;

boost::math::quadrature::tanh_sinh<double>& integrator() {
  thread_local boost::math::quadrature::tanh_sinh<double> q(12);
  return q;
}

double roesler_constant(double k) {
  return std::exp(std::lgamma(k + 0.5) - std::lgamma(k)) / std::sqrt(M_PI);
}

// int_0^1 [s(1-s)]^{k-1} G(s, 1-s) ds, split at the given interior points.
// Both s and 1-s are passed so the endpoint factors keep full precision.
template <class G>
double integrate_jacobi(double k, std::vector<double> breaks, const G& g) {
  breaks.erase(std::remove_if(breaks.begin(), breaks.end(),
                              [](double b) { return !(b > 0.0 && b < 1.0); }),
               breaks.end());
  std::sort(breaks.begin(), breaks.end());
  breaks.insert(breaks.begin(), 0.0);
  breaks.push_back(1.0);
  double total = 0.0;
  for (std::size_t p = 0; p + 1 < breaks.size(); ++p) {
    const double lo = breaks[p], hi = breaks[p + 1];
    if (hi <= lo) continue;
    auto integrand = [&](double s, double sc) {
      double om = 1.0 - s;
      if (hi == 1.0 && sc > 0.0) om = sc;
      const double jac = k == 1.0 ? 1.0 : std::pow(s * om, k - 1.0);
      return jac * g(s, om);
    };
    total += integrator().integrate(integrand, lo, hi, quad_tol);
  }
  return total;
}

// One axis of a product measure. Atomic axes are a single point of unit
// weight; the others contribute up to two weighted points per parameter s.
struct AxisRule {
  double k = 0.0;
  bool atomic = true;
  double atom = 0.0;
  std::function<int(double s, double om, double* pts, double* wts)> nodes;
  std::function<double(double value)> to_s;
};

AxisRule roesler_rule(double x, double k) {
  AxisRule r;
  r.k = k;
  if (k == 0.0 || x == 0.0) {
    r.atom = k == 0.0 ? x : 0.0;
    return r;
  }
  r.atomic = false;
  const double ax = std::abs(x);
  const double pre = roesler_constant(k) * 2.0 * std::pow(4.0, k - 1.0);
  r.nodes = [=](double s, double om, double* pts, double* wts) {
    pts[0] = s < om ? ax * (2.0 * s - 1.0) : ax * (1.0 - 2.0 * om);
    wts[0] = pre * 2.0 * (x > 0.0 ? s : om);
    return 1;
  };
  r.to_s = [=](double eta) { return 0.5 * (eta / ax + 1.0); };
  return r;
}

// Signed measure nu with tau_x g(y) = int g d nu for rank one. In the
// variable s, |z|^2 = a^2 + 4|xy| s and the two points +-z carry weights
// pre (w1 +- S) with w1 = 1 - sigma.
AxisRule translation_rule(double x, double y, double k) {
  AxisRule r;
  r.k = k;
  if (k == 0.0 || x == 0.0 || y == 0.0) {
    r.atom = x + y;
    return r;
  }
  r.atomic = false;
  const double a = std::abs(std::abs(x) - std::abs(y));
  const double q = 4.0 * std::abs(x * y);
  const bool same = x * y > 0.0;
  const double pre = roesler_constant(k) * std::pow(2.0, 2.0 * k - 2.0);
  r.nodes = [=](double s, double om, double* pts, double* wts) {
    const double z = std::sqrt(a * a + q * s);
    const double w1 = 2.0 * (same ? s : om);
    const double sg = z > 0.0 ? (x + y) * w1 / z : 0.0;
    pts[0] = z;
    wts[0] = pre * (w1 + sg);
    pts[1] = -z;
    wts[1] = pre * (w1 - sg);
    return 2;
  };
  r.to_s = [=](double absz) { return (absz * absz - a * a) / q; };
  return r;
}

// Integrates leaf(z) against the product of the axis rules. The innermost
// integrated axis is split at the coordinate value returned by `split`.
double integrate_rules(const std::vector<AxisRule>& rules,
                       const std::function<double(const Vec&)>& leaf,
                       const std::function<double(const Vec&, int)>& split) {
  const int n = static_cast<int>(rules.size());
  Vec z(n);
  std::vector<int> active;
  for (int a = 0; a < n; ++a) {
    if (rules[a].atomic) z[a] = rules[a].atom; else active.push_back(a);
  }
  if (active.empty()) return leaf(z);

  std::function<double(std::size_t)> level = [&](std::size_t depth) -> double {
    const int a = active[depth];
    const AxisRule& rule = rules[a];
    std::vector<double> breaks;
    if (depth + 1 == active.size() && split) {
      const double v = split(z, a);
      if (std::isfinite(v)) breaks.push_back(rule.to_s(v));
    }
    return integrate_jacobi(rule.k, breaks, [&](double s, double om) {
      double pts[2], wts[2];
      const int m = rule.nodes(s, om, pts, wts);
      double acc = 0.0;
      for (int i = 0; i < m; ++i) {
        if (wts[i] == 0.0) continue;
        z[a] = pts[i];
        acc += wts[i] * (depth + 1 == active.size() ? leaf(z) : level(depth + 1));
      }
      return acc;
    });
  };
  return level(0);
}

std::vector<double> product_multiplicities(const WeightContext& ctx) {
  const auto& axis_k = ctx.axis_multiplicities();
  bool all_zero = true;
  for (double k : ctx.root_system().multiplicity) all_zero = all_zero && k == 0.0;
  if (all_zero) return std::vector<double>(ctx.dimension(), 0.0);
  require(axis_k.has_value(), ErrorKind::unsupported_group,
          "explicit translation measures exist only for rank1 and z2_product groups; got '" +
              ctx.group_label() + "'");
  return *axis_k;
}

}  // namespace

TranslationResult translate_spectrum(const Spectrum& ff, const Vec& x, const DunklTransform& t) {
  t.check(ff);
  Spectrum moved{pointwise_product(ff.values, t.kernel_on_frequency_grid(x)), ff.c_k};
  TranslationResult out;
  out.base_point = x;
  out.values = t.inverse(moved);
  out.reflected = out.values.reflected();
  out.route = TranslationRoute::spectral;
  return out;
}

TranslationResult translate_spectral(const GridFunction& f, const Vec& x, const DunklTransform& t) {
  return translate_spectrum(t.forward(f), x, t);
}

cplx translate_spectral_at(const Spectrum& ff, const Vec& x, const Vec& y,
                           const DunklTransform& t) {
  t.check(ff);
  Spectrum moved{pointwise_product(ff.values, t.kernel_on_frequency_grid(x)), ff.c_k};
  return t.inverse_at(moved, y);
}

RepresentingMeasure::RepresentingMeasure(double x, double k) : x_(x), k_(k) {
  require(std::isfinite(x), ErrorKind::invalid_argument, "representing measure: x not finite");
  require(k > 0.0, ErrorKind::unsupported_group,
          "representing measure: k = 0 gives the point mass at x, which has no density");
  c_ = roesler_constant(k);
}

double RepresentingMeasure::density(double eta) const {
  if (point_mass()) return eta == 0.0 ? std::numeric_limits<double>::infinity() : 0.0;
  const double ax = std::abs(x_);
  if (std::abs(eta) >= ax) return 0.0;
  const double t = eta / x_;
  return c_ * (1.0 + t) * std::pow(1.0 - t * t, k_ - 1.0) / ax;
}

double RepresentingMeasure::integrate(const std::function<double(double)>& g,
                                      std::span<const double> breaks) const {
  if (point_mass()) return g(0.0);
  const AxisRule rule = roesler_rule(x_, k_);
  std::vector<double> s_breaks;
  for (double b : breaks) s_breaks.push_back(rule.to_s(b));
  return integrate_jacobi(k_, s_breaks, [&](double s, double om) {
    double pt, w;
    rule.nodes(s, om, &pt, &w);
    return w * g(pt);
  });
}

double RepresentingMeasure::mass() const {
  return integrate([](double) { return 1.0; });
}

double RepresentingMeasure::moment(int m) const {
  return integrate([m](double eta) { return std::pow(eta, m); });
}

RepresentingMeasure roesler_density(double x, double k) { return RepresentingMeasure(x, k); }

double intertwine(const std::function<double(double)>& g, double x, double k) {
  if (k == 0.0) return g(x);
  return RepresentingMeasure(x, k).integrate(g);
}

double roesler_argument(const Vec& x, const Vec& y, const Vec& eta) {
  const double a2 = x.squaredNorm() + y.squaredNorm() - 2.0 * y.dot(eta);
  return std::sqrt(std::max(a2, 0.0));
}

RadialTranslation translate_radial(const std::function<double(double)>& profile,
                                   double support_radius, const Vec& x, const Vec& y,
                                   const std::vector<double>& k) {
  const int n = static_cast<int>(k.size());
  require(x.size() == n && y.size() == n, ErrorKind::invalid_argument,
          "translate_radial: dimension mismatch");
  std::vector<AxisRule> rules;
  for (int a = 0; a < n; ++a) rules.push_back(roesler_rule(x[a], k[a]));
  const double base = x.squaredNorm() + y.squaredNorm();

  RadialTranslation out;
  out.max_argument = x.norm() + y.norm();
  auto leaf = [&](const Vec& eta) {
    return profile(std::sqrt(std::max(base - 2.0 * y.dot(eta), 0.0)));
  };
  // Split where A crosses the support radius; the profile is typically
  // only continuous there.
  auto split = [&](const Vec& eta, int a) {
    if (y[a] == 0.0 || !(support_radius > 0.0)) return std::numeric_limits<double>::quiet_NaN();
    double partial = 0.0;
    for (int b = 0; b < n; ++b)
      if (b != a) partial += y[b] * eta[b];
    return (base - support_radius * support_radius - 2.0 * partial) / (2.0 * y[a]);
  };
  out.value = integrate_rules(rules, leaf, split);
  return out;
}

RadialTranslation translate_radial(const RadialProfile& profile, const Vec& x, const Vec& y,
                                   const WeightContext& ctx) {
  auto out = translate_radial([&](double s) { return profile(s); }, profile.max_radius, x, y,
                              product_multiplicities(ctx));
  out.truncated = profile.max_radius < out.max_argument && !profile.values.empty() &&
                  profile.values.back() != 0.0;
  return out;
}

double translate_rank1(const std::function<double(double)>& g, double x, double y, double k,
                       std::span<const double> breaks) {
  const AxisRule rule = translation_rule(x, y, k);
  if (rule.atomic) return g(rule.atom);
  std::vector<double> s_breaks;
  for (double b : breaks) s_breaks.push_back(rule.to_s(std::abs(b)));
  return integrate_jacobi(k, s_breaks, [&](double s, double om) {
    double pts[2], wts[2];
    rule.nodes(s, om, pts, wts);
    return wts[0] * g(pts[0]) + wts[1] * g(pts[1]);
  });
}

double translate_product(const std::function<double(const Vec&)>& g, const Vec& x, const Vec& y,
                         const std::vector<double>& k, double radial_break) {
  const int n = static_cast<int>(k.size());
  require(x.size() == n && y.size() == n, ErrorKind::invalid_argument,
          "translate_product: dimension mismatch");
  std::vector<AxisRule> rules;
  for (int a = 0; a < n; ++a) rules.push_back(translation_rule(x[a], y[a], k[a]));
  std::function<double(const Vec&, int)> split;
  if (radial_break > 0.0) {
    split = [&](const Vec& z, int a) {
      double rest = radial_break * radial_break;
      for (int b = 0; b < n; ++b)
        if (b != a) rest -= z[b] * z[b];
      return rest > 0.0 ? std::sqrt(rest) : std::numeric_limits<double>::quiet_NaN();
    };
  }
  return integrate_rules(rules, g, split);
}

GridFunction convolve(const GridFunction& f, const GridFunction& g, const DunklTransform& t) {
  const Spectrum ff = t.forward(f), fg = t.forward(g);
  return t.inverse(Spectrum{pointwise_product(ff.values, fg.values), ff.c_k});
}

ProbeReport translation_property_suite(const PropertySuiteInput& in, const DunklTransform& t) {
  const GridSpec& grid = t.space_grid();
  const int n = grid.dimension;
  require(in.f && in.g, ErrorKind::invalid_argument, "property suite: f and g are required");
  require(in.x.size() == n, ErrorKind::invalid_argument, "property suite: x dimension");
  require(in.lambda > 0.0, ErrorKind::invalid_argument, "property suite: lambda must be positive");
  require(in.samples > 0, ErrorKind::invalid_argument, "property suite: need samples");

  ProbeReport rep = make_report("translation_properties", t.context(), grid);
  rep.params = {{"x", json_vector(in.x)}, {"lambda", in.lambda}, {"samples", in.samples},
                {"seed", in.seed}};
  const Quadrature& q = t.space_quadrature();
  const GridFunction f = GridFunction::sample(grid, in.f);
  const GridFunction g = GridFunction::sample(grid, in.g);
  const double lambda = in.lambda;
  const GridFunction f_lambda =
      GridFunction::sample(grid, [&](const Vec& u) { return in.f(u / lambda); });
  rep.tail_mass = std::max(tail_mass(f, q), tail_mass(f_lambda, q));
  const Spectrum ff = t.forward(f), ff_lambda = t.forward(f_lambda);
  const double f_sup = std::max(f.max_abs(), 1e-300);

  Rng rng(in.seed);
  const double span = 0.25 * grid.half_width;
  auto draw = [&] {
    Vec v(n);
    for (int a = 0; a < n; ++a) v[a] = rng.uniform(-span, span);
    return v;
  };

  double sym = 0.0, scale = 0.0;
  std::vector<Vec> ys;
  for (int s = 0; s < in.samples; ++s) {
    const Vec xs = draw(), ysample = draw();
    ys.push_back(ysample);
    sym = std::max(sym, std::abs(translate_spectral_at(ff, xs, ysample, t) -
                                 translate_spectral_at(ff, ysample, xs, t)));
    const cplx lhs = translate_spectral_at(ff_lambda, in.x, ysample, t);
    const cplx rhs = translate_spectral_at(ff, in.x / lambda, ysample / lambda, t);
    scale = std::max(scale, std::abs(lhs - rhs));
  }
  rep.check("symmetry", sym / f_sup, 1e-5);
  rep.check("scaling", scale / f_sup, 1e-5);

  const GridFunction tf = translate_spectral(f, in.x, t).values;
  const GridFunction tg = translate_spectral(g, -in.x, t).values;
  const cplx skew_l = q.integrate(pointwise_product(tf, g));
  const cplx skew_r = q.integrate(pointwise_product(f, tg));
  const double skew_scale = std::max(lp_norm(f, q, 2.0) * lp_norm(g, q, 2.0), 1e-300);
  rep.check("skew_symmetry", std::abs(skew_l - skew_r) / skew_scale, 1e-6);

  const cplx mass_f = q.integrate(f), mass_t = q.integrate(tf);
  const double mass_scale = std::max(std::abs(mass_f), 1e-12 * lp_norm(f, q, 1.0));
  rep.check("mass_preservation",
            mass_scale > 0.0 ? std::abs(mass_t - mass_f) / mass_scale : 0.0, 1e-6);

  const double f2 = lp_norm(f, q, 2.0);
  double ratio = 0.0;
  for (const Vec& y : ys) {
    const GridFunction ty = translate_spectrum(ff, y, t).values;
    ratio = std::max(ratio, f2 > 0.0 ? lp_norm(ty, q, 2.0) / f2 : 0.0);
  }
  rep.check("l2_contraction", ratio, 1.0 + 1e-8, Relation::at_most);
  return rep;
}

ProbeReport young_check(const GridFunction& f, const GridFunction& g, const DunklTransform& t) {
  ProbeReport rep = make_report("young", t.context(), t.space_grid());
  const Quadrature& q = t.space_quadrature();
  const GridFunction fg = convolve(f, g, t);
  const double lhs = lp_norm(fg, q, 2.0);
  const double rhs = lp_norm(f, q, 1.0) * lp_norm(g, q, 2.0);
  const double ratio = rhs > 0.0 ? lhs / rhs : 0.0;
  rep.tail_mass = std::max(tail_mass(f, q), tail_mass(g, q));
  rep.extras = {{"lhs", json_number(lhs)},
                {"rhs", json_number(rhs)},
                {"ratio_integral_normalization", json_number(ratio * t.c_k())}};
  rep.check("young_ratio", ratio, 1.0, Relation::at_most);
  rep.check("young_ratio_integral_normalization", ratio * t.c_k(), 1.0, Relation::at_most);
  return rep;
}

ProbeReport uniform_bound_probe(const std::vector<GridFunction>& family,
                                const std::vector<Vec>& ys, double p, const DunklTransform& t) {
  require(p >= 1.0, ErrorKind::invalid_argument, "uniform_bound_probe: p must be >= 1");
  ProbeReport rep = make_report("uniform_bound", t.context(), t.space_grid());
  const Quadrature& q = t.space_quadrature();
  double sup = 0.0;
  Json per = Json::array();
  for (const GridFunction& f : family) {
    const double fp = lp_norm(f, q, p);
    rep.tail_mass = std::max(rep.tail_mass, tail_mass(f, q));
    if (fp == 0.0) {
      per.push_back(nullptr);
      continue;
    }
    const Spectrum ff = t.forward(f);
    double local = 0.0;
    for (const Vec& y : ys) {
      const GridFunction ty = translate_spectrum(ff, y, t).values;
      local = std::max(local, lp_norm(ty, q, p) / fp);
      rep.tail_mass = std::max(rep.tail_mass, tail_mass(ty, q));
    }
    per.push_back(json_number(local));
    sup = std::max(sup, local);
  }
  rep.params = {{"p", json_number(p)}, {"samples", ys.size()}, {"family_size", family.size()}};
  rep.extras = {{"per_function_sup", per}, {"sup_ratio", json_number(sup)}};
  rep.check("sup_ratio_finite", sup, std::numeric_limits<double>::max());
  if (p == 2.0) rep.check("l2_sup_ratio", sup, 1.0 + 1e-8, Relation::at_most);
  return rep;
}

RadialProfile bump_profile(double r, std::size_t samples) {
  require(r > 0.0, ErrorKind::invalid_argument, "bump_profile: radius must be positive");
  return RadialProfile::from_function(
      [r](double s) {
        const double u = 1.0 - s * s / (r * r);
        return u > 0.0 ? u * u * u * u : 0.0;
      },
      r, samples);
}

double annular_profile(double s, double inner, double outer) {
  if (s <= inner || s >= outer) return 0.0;
  const double u = (s - inner) / (outer - inner);
  return std::exp(1.0 - 1.0 / (4.0 * u * (1.0 - u)));
}

namespace {

double dist_to_orbit(const std::vector<Vec>& orb, const Vec& y) {
  double d = std::numeric_limits<double>::infinity();
  for (const Vec& p : orb) d = std::min(d, (y - p).norm());
  return d;
}

}  // namespace

ProbeReport support_sharpness_check(double r, const Vec& x, const WeightContext& ctx,
                                    const GridSpec& grid) {
  grid.validate();
  require(r > 0.0, ErrorKind::invalid_argument, "support check: r must be positive");
  require(x.size() == ctx.dimension() && grid.dimension == ctx.dimension(),
          ErrorKind::invalid_argument, "support check: dimension mismatch");
  const std::vector<double> k = product_multiplicities(ctx);
  ProbeReport rep = make_report("thm31", ctx, grid);
  rep.params = {{"r", json_number(r)}, {"x", json_vector(x)}};

  const RadialProfile bump = bump_profile(r);
  const Quadrature q(ctx, grid);
  const std::vector<Vec> orb = orbit(ctx.group(), x);
  const double h = grid.spacing();
  require(x.norm() + r + h < grid.half_width, ErrorKind::geometry,
          "support check: orbit balls leave the grid box");

  std::vector<double> peak(orb.size(), 0.0);
  double outside = 0.0, total = 0.0, sup = 0.0;
  GridFunction values(grid, Domain::space);
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const Vec y = grid.point(i);
    const double v = translate_radial(bump, x, y, ctx).value;
    values[i] = v;
    const double w = q.weight(i) * std::abs(v);
    total += w;
    sup = std::max(sup, std::abs(v));
    if (dist_to_orbit(orb, y) > r + h) outside += w;
    for (std::size_t g = 0; g < orb.size(); ++g)
      if ((y - orb[g]).norm() <= r - h) peak[g] = std::max(peak[g], std::abs(v));
  }
  const double ratio = total > 0.0 ? outside / total : 0.0;
  rep.check("outside_mass_ratio", ratio, tol_support);
  // Peaks are relative to the sup of the translate: the density of mu_x
  // vanishes at -x, so the reflected ball carries a much smaller share.
  Json peaks = Json::array();
  for (std::size_t g = 0; g < orb.size(); ++g) {
    const double rel = sup > 0.0 ? peak[g] / sup : 0.0;
    peaks.push_back({{"center", json_vector(orb[g])},
                     {"peak", json_number(peak[g])},
                     {"relative_peak", json_number(rel)}});
    rep.check("relative_peak_" + std::to_string(g), rel, floor_support, Relation::at_least);
  }
  rep.extras = {{"orbit_peaks", peaks}, {"sup", json_number(sup)}};
  rep.tail_mass = tail_mass(values, q);
  return rep;
}

ProbeReport vanishing_check_cor31(const GridFunction& f, const Vec& x, double r,
                                  const DunklTransform& t) {
  const GridSpec& grid = t.space_grid();
  require(r > 0.0, ErrorKind::invalid_argument, "vanishing check: r must be positive");
  require(x.size() == grid.dimension, ErrorKind::invalid_argument,
          "vanishing check: dimension mismatch");
  const std::vector<Vec> orb = orbit(t.context().group(), x);
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (f[i] != 0.0 && dist_to_orbit(orb, grid.point(i)) <= r)
      fail(ErrorKind::invalid_input,
           "vanishing check: f does not vanish on the orbit balls B(gx, r)");
  }
  ProbeReport rep = make_report("cor31", t.context(), grid);
  rep.params = {{"r", json_number(r)}, {"x", json_vector(x)}};
  const Quadrature& q = t.space_quadrature();
  const GridFunction tf = translate_spectral(f, x, t).values;
  double inside = 0.0;
  for (std::size_t i = 0; i < tf.size(); ++i)
    if (grid.point(i).norm() <= r) inside = std::max(inside, std::abs(tf[i]));
  const double f2 = lp_norm(f, q, 2.0);
  rep.tail_mass = tail_mass(f, q);
  rep.extras = {{"max_on_ball", json_number(inside)}, {"f_l2", json_number(f2)}};
  rep.check("relative_max_on_ball", f2 > 0.0 ? inside / f2 : 0.0, tol_support);
  return rep;
}

ProbeReport intersection_check_thm32(const std::function<double(double)>& profile, double r,
                                     double support_radius, const Vec& x,
                                     const WeightContext& ctx, const GridSpec& grid,
                                     std::size_t chain_samples, std::uint64_t seed) {
  require(r > 0.0, ErrorKind::invalid_argument, "intersection check: r must be positive");
  require(x.size() == ctx.dimension() && grid.dimension == ctx.dimension(),
          ErrorKind::invalid_argument, "intersection check: dimension mismatch");
  for (int i = 0; i <= 64; ++i)
    require(profile(r * i / 64.0) == 0.0, ErrorKind::invalid_input,
            "intersection check: profile must vanish on [0, r]");
  const int n = ctx.dimension();
  ProbeReport rep = make_report("thm32", ctx, grid);
  rep.params = {{"r", json_number(r)}, {"x", json_vector(x)}, {"chain_samples", chain_samples},
                {"seed", seed}};

  const Quadrature q(ctx, grid);
  const GridFunction f = GridFunction::sample(
      grid, [&](const Vec& y) { return cplx(profile(y.norm()), 0.0); });
  const double f2 = lp_norm(f, q, 2.0);
  rep.tail_mass = tail_mass(f, q);

  // The kernel-free part, the inequality chain, holds for every group.
  const std::vector<Vec> orb = orbit(ctx.group(), x);
  Rng rng(seed);
  std::size_t violations = 0;
  double min_upper = std::numeric_limits<double>::infinity(), min_lower = min_upper;
  const double box = x.norm() + 2.0 * r + 1.0;
  for (std::size_t s = 0; s < chain_samples; ++s) {
    Vec y(n);
    for (int a = 0; a < n; ++a) y[a] = rng.uniform(-box, box);
    // Random convex combination of the orbit points lands in co(G x).
    std::vector<double> lam(orb.size());
    double lsum = 0.0;
    for (double& l : lam) {
      l = -std::log(1.0 - rng.uniform());
      lsum += l;
    }
    double yeta = 0.0, lo = std::numeric_limits<double>::infinity(), hi = -lo;
    for (std::size_t g = 0; g < orb.size(); ++g) {
      const double yg = y.dot(orb[g]);
      yeta += lam[g] / lsum * yg;
      lo = std::min(lo, yg);
      hi = std::max(hi, yg);
    }
    // max_g |gx - y|^2 - A^2 = 2(<y,eta> - min_g <y,gx>) and
    // A^2 - d_G^2 = 2(max_g <y,gx> - <y,eta>).
    const double upper = 2.0 * (yeta - lo), lower = 2.0 * (hi - yeta);
    const double roundoff = 1e-13 * (1.0 + x.squaredNorm() + y.squaredNorm());
    if (upper < -roundoff || lower < -roundoff) ++violations;
    min_upper = std::min(min_upper, upper);
    min_lower = std::min(min_lower, lower);
  }
  rep.check("chain_violations", static_cast<double>(violations), 0.0, Relation::at_most);

  const std::vector<double> k = product_multiplicities(ctx);
  const double h = grid.spacing();
  double inside = 0.0;
  std::size_t nodes = 0;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const Vec y = grid.point(i);
    if (orbit_max_distance(ctx.group(), x, y) > r - h) continue;
    ++nodes;
    inside = std::max(inside, std::abs(translate_radial(profile, support_radius, x, y, k).value));
  }
  rep.extras = {{"intersection_nodes", nodes},
                {"vacuous", nodes == 0},
                {"max_on_intersection", json_number(inside)},
                {"f_l2", json_number(f2)},
                {"chain_min_upper_slack", json_number(min_upper)},
                {"chain_min_lower_slack", json_number(min_lower)}};
  rep.check("relative_max_on_intersection", f2 > 0.0 ? inside / f2 : 0.0, tol_support);
  return rep;
}

ProbeReport corollary32_check(const std::function<double(double)>& profile,
                              double support_radius, const Vec& x, const Vec& y,
                              const WeightContext& ctx, const GridSpec& grid) {
  require(x.size() == ctx.dimension() && y.size() == ctx.dimension(),
          ErrorKind::invalid_argument, "corollary check: dimension mismatch");
  for (int i = 0; i <= 64; ++i)
    require(profile(i / 64.0) == 0.0, ErrorKind::invalid_input,
            "corollary check: profile must vanish on the unit ball");
  const double spread = orbit_max_distance(ctx.group(), x, y);
  require(spread < 1.0, ErrorKind::invalid_input,
          "corollary check: max_g |g x - y| = " + std::to_string(spread) + " is not below 1");
  ProbeReport rep = make_report("cor32", ctx, grid);
  rep.params = {{"x", json_vector(x)}, {"y", json_vector(y)}};
  const Quadrature q(ctx, grid);
  const GridFunction f = GridFunction::sample(
      grid, [&](const Vec& u) { return cplx(profile(u.norm()), 0.0); });
  const double f2 = lp_norm(f, q, 2.0);
  // tau_x f(y) is tau_x f(-(-y)), the form the radial formula produces.
  const double v = translate_radial(profile, support_radius, x, -y,
                                    product_multiplicities(ctx)).value;
  rep.tail_mass = tail_mass(f, q);
  rep.extras = {{"value", json_number(v)}, {"orbit_spread", json_number(spread)},
                {"f_l2", json_number(f2)}};
  rep.check("relative_value", f2 > 0.0 ? std::abs(v) / f2 : 0.0, tol_support);
  return rep;
}

}  // namespace dunkl
