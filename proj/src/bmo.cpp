#include "dunkl/bmo.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>

#include "dunkl/error.hpp"
#include "dunkl/format.hpp"
#include "dunkl/random.hpp"

namespace dunkl {

namespace {

std::vector<double> lattice(double lo, double hi, int count) {
  std::vector<double> v(count);
  for (int i = 0; i < count; ++i) v[i] = lo + (hi - lo) * i / (count - 1);
  return v;
}

std::vector<std::size_t> ball_nodes(const GridSpec& grid, const Vec& center, double r) {
  std::vector<std::size_t> nodes;
  for (std::size_t i = 0; i < grid.size(); ++i)
    if ((grid.point(i) - center).norm() <= r) nodes.push_back(i);
  return nodes;
}

struct BallStats {
  cplx average = 0.0;
  double oscillation = 0.0;
  double sup = 0.0;
};

BallStats ball_stats(const GridFunction& g, const std::vector<std::size_t>& nodes,
                     const Quadrature& q) {
  BallStats s;
  double mass = 0.0;
  for (std::size_t i : nodes) {
    mass += q.weight(i);
    s.average += q.weight(i) * g[i];
    s.sup = std::max(s.sup, std::abs(g[i]));
  }
  s.average /= mass;
  for (std::size_t i : nodes) s.oscillation += q.weight(i) * std::abs(g[i] - s.average);
  s.oscillation /= mass;
  return s;
}

void check_sample(const GridSpec& grid, const Vec& x, double r) {
  require(x.size() == grid.dimension, ErrorKind::invalid_argument,
          "bmo: center dimension mismatch");
  require(r > 0.0, ErrorKind::invalid_argument, "bmo: radius must be positive");
  if (x.norm() + r > bmo_reach(grid) * (1.0 + 1e-12))
    fail(ErrorKind::geometry, "bmo: |x| + r = " + format_number(x.norm() + r) +
                                  " exceeds the window reach " +
                                  format_number(bmo_reach(grid)));
  require(r >= 0.5 * grid.spacing(), ErrorKind::resolution,
          "bmo: ball smaller than half a grid cell");
}

// tau_x f = c + tau_x((f - c) w) for a constant c, since tau_x c = c and the
// window w is invisible on the sampled balls. Taking c as the mean of f over
// the window's flat part makes constants (and constant shifts) exact; the
// spectral route alone reproduces tau_x w = 1 only to about 1e-4 at k = 1/2,
// because w's spectrum spans a couple of frequency nodes.
struct BoundedTranslator {
  cplx offset = 0.0;
  Spectrum spectrum;

  BoundedTranslator(const GridFunction& f, const DunklTransform& t) {
    const GridSpec& grid = f.grid();
    const Quadrature& q = t.space_quadrature();
    double mass = 0.0;
    for (std::size_t i = 0; i < f.size(); ++i) {
      if (grid.point(i).norm() > bmo_reach(grid)) continue;
      mass += q.weight(i);
      offset += q.weight(i) * f[i];
    }
    if (mass > 0.0) offset /= mass;
    GridFunction shifted = f;
    for (auto& v : shifted.values()) v -= offset;
    spectrum = t.forward(apply_bmo_window(shifted));
  }

  GridFunction operator()(const Vec& x, const DunklTransform& t) const {
    GridFunction tx = translate_spectrum(spectrum, x, t).values;
    for (auto& v : tx.values()) v += offset;
    return tx;
  }
};

}  // namespace

BmoSampling BmoSampling::standard(const GridSpec& grid, bool densified) {
  BmoSampling s;
  const int per_axis = densified ? 17 : 9;
  const std::vector<double> axis =
      lattice(-grid.half_width / 8.0, grid.half_width / 8.0, per_axis);
  const std::size_t total =
      static_cast<std::size_t>(std::pow(per_axis, grid.dimension) + 0.5);
  for (std::size_t flat = 0; flat < total; ++flat) {
    Vec c(grid.dimension);
    std::size_t rest = flat;
    for (int a = grid.dimension - 1; a >= 0; --a) {
      c[a] = axis[rest % per_axis];
      rest /= per_axis;
    }
    s.centers.push_back(c);
  }
  // exp2 of an integer is exact, so the densified radii contain the dyadic ones.
  const double r0 = 4.0 * grid.spacing(), top = grid.half_width / 4.0;
  const double step = densified ? 0.5 : 1.0;
  for (int m = 0; r0 * std::exp2(m * step) <= top * (1.0 + 1e-12); ++m)
    s.radii.push_back(r0 * std::exp2(m * step));
  return s;
}

void BmoSampling::validate() const {
  require(!centers.empty() && !radii.empty(), ErrorKind::invalid_argument,
          "bmo sampling: need at least one center and one radius");
  for (double r : radii)
    require(r > 0.0 && std::isfinite(r), ErrorKind::invalid_argument,
            "bmo sampling: radii must be positive");
}

double bmo_window(const Vec& u, double half_width) {
  const double s = u.norm() / half_width;
  if (s <= window_inner) return 1.0;
  if (s >= window_outer) return 0.0;
  const double t = (s - window_inner) / (window_outer - window_inner);
  const double a = std::exp(-1.0 / (1.0 - t)), b = std::exp(-1.0 / t);
  return a / (a + b);
}

GridFunction apply_bmo_window(const GridFunction& f) {
  GridFunction out = f;
  const GridSpec& g = f.grid();
  for (std::size_t i = 0; i < f.size(); ++i) out[i] *= bmo_window(g.point(i), g.half_width);
  return out;
}

double bmo_reach(const GridSpec& grid) { return window_inner * grid.half_width; }

cplx local_average(const GridFunction& f, const Vec& x, double r, const DunklTransform& t) {
  check_sample(t.space_grid(), x, r);
  const GridFunction tx = BoundedTranslator(f, t)(x, t);
  const auto nodes = ball_nodes(t.space_grid(), Vec::Zero(x.size()), r);
  return ball_stats(tx, nodes, t.space_quadrature()).average;
}

BmoReport bmo_norm(const GridFunction& f, const BmoSampling& sampling, const DunklTransform& t,
                   const std::string& function_id) {
  sampling.validate();
  const GridSpec& grid = t.space_grid();
  const Quadrature& q = t.space_quadrature();
  BmoReport rep;
  rep.base = make_report("bmo", t.context(), grid);
  rep.function_id = function_id;
  rep.centers = sampling.centers;
  rep.radii = sampling.radii;

  const GridFunction fw = apply_bmo_window(f);
  const double l1 = q.integrate_abs_pow(f, 1.0);
  rep.window_loss = l1 > 0.0 ? q.integrate_abs_pow(f - fw, 1.0) / l1 : 0.0;
  rep.base.tail_mass = tail_mass(fw, q);
  rep.linf_norm = f.max_abs();

  std::vector<std::vector<std::size_t>> balls;
  for (double r : sampling.radii) balls.push_back(ball_nodes(grid, Vec::Zero(grid.dimension), r));

  const BoundedTranslator translate(f, t);
  const std::size_t nc = sampling.centers.size(), nr = sampling.radii.size();
  std::vector<BallStats> stats(nc * nr);
  std::vector<std::string> errors(nc * nr);
#pragma omp parallel for schedule(dynamic)
  for (std::size_t c = 0; c < nc; ++c) {
    const Vec& x = sampling.centers[c];
    std::optional<GridFunction> tx;
    for (std::size_t s = 0; s < nr; ++s) {
      try {
        check_sample(grid, x, sampling.radii[s]);
        if (!tx) tx = translate(x, t);
        stats[c * nr + s] = ball_stats(*tx, balls[s], q);
      } catch (const Error& e) {
        errors[c * nr + s] = e.what();
      }
    }
  }

  double sup_translate = 0.0;
  for (std::size_t c = 0; c < nc; ++c) {
    for (std::size_t s = 0; s < nr; ++s) {
      const std::size_t i = c * nr + s;
      if (!errors[i].empty()) {
        rep.skipped.push_back(errors[i]);
        continue;
      }
      rep.oscillations.push_back({sampling.centers[c], sampling.radii[s], stats[i].oscillation});
      rep.bmo_estimate = std::max(rep.bmo_estimate, stats[i].oscillation);
      sup_translate = std::max(sup_translate, stats[i].sup);
    }
  }
  require(!rep.oscillations.empty(), ErrorKind::geometry,
          "bmo: every (x, r) sample failed the geometry check");
  rep.translate_linf_bound = rep.linf_norm > 0.0 ? sup_translate / rep.linf_norm : 0.0;

  // Each oscillation is at most twice the sup of the translate on its ball.
  const double bound = 2.0 * sup_translate;
  rep.base.check("scaling_bound", bound > 0.0 ? rep.bmo_estimate / bound : 0.0, 1.0 + 1e-12,
                 Relation::at_most);
  return rep;
}

Json BmoReport::to_json() const {
  Json j;
  j["function_id"] = function_id;
  j["group"] = base.group;
  j["k"] = json_vector(base.k);
  j["j"] = this->j ? Json(*this->j + 1) : Json(nullptr);
  Json cs = Json::array();
  for (const Vec& c : centers) cs.push_back(json_vector(c));
  j["centers"] = cs;
  j["radii"] = json_vector(radii);
  Json osc = Json::array();
  for (const auto& o : oscillations)
    osc.push_back({json_vector(o.center), json_number(o.radius), json_number(o.value)});
  j["oscillations"] = osc;
  j["bmo_estimate"] = json_number(bmo_estimate);
  j["linf_norm"] = json_number(linf_norm);
  j["ratio"] = ratio ? json_number(*ratio) : Json(nullptr);
  j["uniform_l1_probe"] = uniform_l1_probe;
  j["stability"] = stability;
  j["translate_linf_bound"] = json_number(translate_linf_bound);
  j["window_loss"] = json_number(window_loss);
  j["skipped"] = skipped;
  const Json b = base.to_json();
  j["tail_mass"] = b["tail_mass"];
  j["grid"] = b["grid"];
  j["assertions"] = b["assertions"];
  if (!base.extras.empty()) j["extras"] = base.extras;
  j["pass"] = passed();
  return j;
}

void write_oscillation_csv(std::ostream& out, const BmoReport& rep) {
  const int n = rep.base.grid.dimension;
  for (int a = 0; a < n; ++a) out << 'x' << a + 1 << ',';
  out << "r,oscillation\n";
  for (const auto& o : rep.oscillations) {
    for (int a = 0; a < n; ++a) out << format_number(o.center[a]) << ',';
    out << format_number(o.radius) << ',' << format_number(o.value) << '\n';
  }
}

std::vector<NamedFunction> bounded_family(int j) {
  auto sgn = [](double v) { return v > 0.0 ? 1.0 : (v < 0.0 ? -1.0 : 0.0); };
  // Smooth cutoff to |x| <= 5. A hard cutoff would leave a slowly decaying
  // even spectrum whose band-limited Riesz transform spikes at the origin for
  // k > 1, an artifact that grows with n.
  auto cutoff = [](const Vec& x) { return bmo_window(x, 6.0); };
  return {
      {"sgn", [=](const Vec& x) { return cplx(sgn(x[j])); }},
      {"square_wave", [=](const Vec& x) { return cplx(sgn(std::sin(M_PI * x[j])) * cutoff(x)); }},
      {"cosine", [=](const Vec& x) { return cplx(std::cos(M_PI * x[j]) * cutoff(x)); }},
  };
}

std::vector<GridFunction> l1_family(const GridSpec& grid) {
  std::vector<GridFunction> fam;
  fam.push_back(GridFunction::sample(grid, [](const Vec& x) { return cplx(std::exp(-0.5 * x.squaredNorm())); }));
  fam.push_back(GridFunction::sample(grid, [](const Vec& x) { return cplx(std::exp(-2.0 * x.squaredNorm())); }));
  fam.push_back(GridFunction::sample(grid, [](const Vec& x) {
    return cplx(std::exp(-0.5 * (x.array() - 1.0).matrix().squaredNorm()));
  }));
  fam.push_back(radialize(bump_profile(1.0), grid));
  return fam;
}

BmoReport theorem43_probe(const SpaceFunction& f, const std::string& function_id,
                          const BmoProbeOptions& opt, const DunklTransform& t) {
  const GridSpec& grid = t.space_grid();
  require(opt.j >= 0 && opt.j < grid.dimension, ErrorKind::invalid_argument,
          "theorem43: component index out of range");
  const BmoSampling sampling = BmoSampling::standard(grid);
  auto measure = [&](const DunklTransform& tt, const BmoSampling& s) {
    const GridFunction fg = GridFunction::sample(tt.space_grid(), f);
    const GridFunction rf = riesz_multiplier(apply_bmo_window(fg), opt.j, tt);
    BmoReport r = bmo_norm(rf, s, tt, function_id);
    const double linf = fg.max_abs();
    r.ratio = linf > 0.0 ? r.bmo_estimate / linf : 0.0;
    r.linf_norm = linf;
    return r;
  };

  BmoReport rep = measure(t, sampling);
  rep.base.probe = "bmo43";
  rep.j = opt.j;
  rep.base.params = {{"j", opt.j + 1}, {"function", function_id}};
  const double ratio = *rep.ratio;
  rep.base.check("ratio_finite", ratio, std::numeric_limits<double>::max());

  const ProbeReport l1 = uniform_bound_probe(l1_family(grid), sampling.centers, 1.0, t);
  rep.uniform_l1_probe = l1.to_json();

  auto relative_change = [&](double other) {
    return ratio > 0.0 ? std::abs(other / ratio - 1.0) : std::abs(other);
  };
  if (opt.refine) {
    const DunklTransform fine(t.context(), grid.refined(2));
    const BmoReport r = measure(fine, sampling);
    rep.stability["grid_doubling_ratio"] = json_number(*r.ratio);
    rep.base.check("grid_doubling_change", relative_change(*r.ratio), opt.stability_tol);
  }
  if (opt.densify) {
    const BmoReport r = measure(t, BmoSampling::standard(grid, true));
    rep.stability["densified_ratio"] = json_number(*r.ratio);
    rep.base.check("densification_change", relative_change(*r.ratio), opt.stability_tol);
    // The densified set contains the standard one, so the sup cannot drop.
    rep.base.check("densification_monotone", *r.ratio - ratio, -1e-12 * std::max(1.0, ratio),
                   Relation::at_least);
  }
  return rep;
}

ProbeReport proof_split_diagnostics(const GridFunction& f, int j, const Vec& x, double r,
                                    double eps, const DunklTransform& t, int y_samples) {
  const GridSpec& grid = t.space_grid();
  const WeightContext& ctx = t.context();
  const Quadrature& q = t.space_quadrature();
  require(r > 0.0 && y_samples >= 1, ErrorKind::invalid_argument,
          "proof split: need r > 0 and at least one y sample");
  require(x.norm() + 2.0 * r < grid.half_width, ErrorKind::geometry,
          "proof split: Q*(x, r) leaves the grid box");
  ProbeReport rep = make_report("proof_split", ctx, grid);
  rep.params = {{"j", j + 1}, {"x", json_vector(x)}, {"r", json_number(r)},
                {"eps", json_number(eps)}, {"y_samples", y_samples}};

  const GridFunction tf = translate_spectral(apply_bmo_window(f), x, t).values;
  const OrbitRegion qstar{x, r, RegionKind::orbit_union};
  const GridFunction g1 = window(tf, qstar, ctx.group(), true);
  const GridFunction g2 = window(tf, qstar, ctx.group(), false);
  const double linf = f.max_abs(), g2_sup = g2.max_abs();
  rep.tail_mass = tail_mass(tf, q);

  std::vector<Vec> ys;
  if (grid.dimension == 1) {
    for (int i = 0; i < y_samples; ++i)
      ys.push_back(x + Vec::Constant(1, r * (2.0 * (i + 0.5) / y_samples - 1.0)));
  } else {
    Rng rng(0);
    while (static_cast<int>(ys.size()) < y_samples) {
      Vec u(grid.dimension);
      for (int a = 0; a < grid.dimension; ++a) u[a] = rng.uniform(-1.0, 1.0);
      if (u.norm() <= 1.0) ys.push_back(x + r * u);
    }
  }

  // (a) R g_2(y) - R g_2(x) = int (K(y, z) - K(x, z)) g_2(z) dm_k(z).
  std::vector<std::size_t> support;
  for (std::size_t i = 0; i < g2.size(); ++i)
    if (g2[i] != 0.0) support.push_back(i);
  double a_sup = 0.0, h_sup = 0.0, pair_ratio = 0.0;
  Json rows = Json::array();
  for (const Vec& y : ys) {
    std::vector<cplx> terms(support.size());
#pragma omp parallel for schedule(dynamic, 64)
    for (std::size_t s = 0; s < support.size(); ++s) {
      const std::size_t i = support[s];
      const Vec z = grid.point(i);
      terms[s] = q.weight(i) *
                 (riesz_kernel(y, z, j, eps, ctx) - riesz_kernel(x, z, j, eps, ctx)) * g2[i];
    }
    cplx diff = 0.0;
    for (const cplx& v : terms) diff += v;
    const double a = g2_sup > 0.0 ? std::abs(diff) / g2_sup : 0.0;
    const double h = hormander_integral({x, y}, j, eps, ctx, grid);
    rows.push_back({{"y", json_vector(y)}, {"a", json_number(a)}, {"hormander", json_number(h)}});
    a_sup = std::max(a_sup, a);
    h_sup = std::max(h_sup, h);
    if (h > 0.0) pair_ratio = std::max(pair_ratio, a / h);
    else if (a > 0.0) pair_ratio = std::numeric_limits<double>::infinity();
  }

  // (b) ball average of |R g_1| against the Cauchy-Schwarz and L^2 bounds.
  const GridFunction rg1 = riesz_multiplier(g1, j, t);
  double mass = 0.0, l1 = 0.0, l2 = 0.0;
  for (std::size_t i : ball_nodes(grid, x, r)) {
    mass += q.weight(i);
    l1 += q.weight(i) * std::abs(rg1[i]);
    l2 += q.weight(i) * std::norm(rg1[i]);
  }
  require(mass > 0.0, ErrorKind::resolution, "proof split: B(x, r) holds no grid node");
  const double b = l1 / mass, b_l2 = std::sqrt(l2 / mass);
  const double b_bound = lp_norm(g1, q, 2.0) / std::sqrt(mass);

  const double norm_f = linf > 0.0 ? 1.0 / linf : 0.0;
  rep.extras = {{"pairs", rows},
                {"a_over_g2_sup", json_number(a_sup)},
                {"a_over_f_sup", json_number(a_sup * g2_sup * norm_f)},
                {"g2_sup", json_number(g2_sup)},
                {"hormander_sup", json_number(h_sup)},
                {"b_over_f_sup", json_number(b * norm_f)},
                {"b_l2", json_number(b_l2)},
                {"b_bound", json_number(b_bound)}};
  rep.check("a_vs_hormander_sup", a_sup, 1.1 * h_sup, Relation::at_most);
  rep.check("a_vs_pairwise_hormander", pair_ratio, 1.1, Relation::at_most);
  rep.check("b_cauchy_schwarz", b, b_l2 * (1.0 + 1e-12) + 1e-300, Relation::at_most);
  rep.check("b_l2_bound", b_l2, b_bound * (1.0 + 1e-6) + 1e-300, Relation::at_most);
  return rep;
}

}  // namespace dunkl
