#include "dunkl/probes.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <set>
#include <sstream>

#include "dunkl/bmo.hpp"
#include "dunkl/format.hpp"
#include "dunkl/random.hpp"
#include "dunkl/riesz.hpp"
#include "dunkl/svg.hpp"
#include "dunkl/translation.hpp"

namespace dunkl {

namespace {

struct Setup {
  const ExperimentConfig& cfg;
  WeightContext ctx;
  GridSpec grid;
  std::uint64_t seed = 0;
  bool svg = false;

  int dimension() const { return ctx.dimension(); }

  double num(const std::string& key, double fallback) const {
    return cfg.number("probe." + key, fallback);
  }
  int count(const std::string& key, int fallback) const {
    return cfg.integer("probe." + key, fallback);
  }
  bool flag(const std::string& key, bool fallback) const {
    return cfg.flag("probe." + key, fallback);
  }
  std::string text(const std::string& key, const std::string& fallback) const {
    return cfg.text("probe." + key, fallback);
  }
  // Point parameter; the default puts `first` on the first axis.
  Vec point(const std::string& key, double first) const {
    Vec fallback = Vec::Zero(dimension());
    fallback[0] = first;
    return cfg.vector("probe." + key, fallback);
  }
  // Config components are one-based, the library is zero-based.
  int component() const {
    const int j = count("j", 1);
    if (j < 1 || j > dimension())
      fail(ErrorKind::config, "probe.j = " + std::to_string(j) + " is outside 1.." +
                                  std::to_string(dimension()));
    return j - 1;
  }
  void require_product(const std::string& probe) const {
    if (!ctx.axis_multiplicities().has_value())
      fail(ErrorKind::unsupported_group,
           probe + ": kernel evaluation needs a product root system (every root on a "
                   "coordinate axis); preset '" + ctx.root_system().preset + "' is not supported");
  }
  void require_rank1(const std::string& probe) const {
    if (dimension() != 1)
      fail(ErrorKind::unsupported_group, probe + ": implemented for rank one only");
  }
};

using Runner = std::function<Json(const Setup&, ProbeOutput&)>;

struct ProbeDef {
  std::set<std::string> keys;
  Runner run;
};

std::string csv_of(const GridFunction& f) {
  std::ostringstream out;
  write_csv(out, f);
  return out.str();
}

std::vector<double> axis_coordinates(const GridSpec& g) {
  std::vector<double> xs;
  for (int i = 0; i < g.nodes_per_axis; ++i) xs.push_back(g.coordinate(i));
  return xs;
}

std::vector<double> real_parts(const GridFunction& f) {
  std::vector<double> v;
  for (const cplx& c : f.values()) v.push_back(c.real());
  return v;
}

void plot_functions(ProbeOutput& out, const std::string& file, const std::string& title,
                    const std::vector<std::pair<std::string, GridFunction>>& fns) {
  if (fns.empty() || fns.front().second.grid().dimension != 1) return;
  std::vector<PlotSeries> series;
  for (const auto& [label, f] : fns) series.push_back({label, real_parts(f)});
  out.plots[file] = svg_line_plot(title, axis_coordinates(fns.front().second.grid()), series);
}

void absorb(ProbeReport& dst, const ProbeReport& src, const std::string& prefix) {
  for (Assertion a : src.assertions) {
    a.name = prefix + "." + a.name;
    dst.assertions.push_back(a);
  }
  dst.tail_mass = std::max(dst.tail_mass, src.tail_mass);
  Json part = src.extras;
  if (!src.params.empty()) part["params"] = src.params;
  if (!part.empty()) dst.extras[prefix] = part;
}

GridFunction bounded_function(const Setup& s, const std::string& id, int j) {
  if (id == "constant") return GridFunction::sample(s.grid, [](const Vec&) { return cplx(1.0); });
  for (const NamedFunction& nf : bounded_family(j))
    if (nf.id == id) return GridFunction::sample(s.grid, nf.fn);
  fail(ErrorKind::config, "probe.function '" + id +
                              "' is not one of constant, sgn, square_wave, cosine");
}

SpaceFunction bounded_space_function(const std::string& id, int j) {
  for (const NamedFunction& nf : bounded_family(j))
    if (nf.id == id) return nf.fn;
  fail(ErrorKind::config, "probe.function '" + id + "' is not one of sgn, square_wave, cosine");
}

void oscillation_outputs(const BmoReport& rep, ProbeOutput& out, bool svg) {
  std::ostringstream csv;
  write_oscillation_csv(csv, rep);
  out.tables["oscillations.csv"] = csv.str();
  if (svg && !rep.oscillations.empty() && rep.oscillations.front().center.size() == 1) {
    std::vector<HeatCell> cells;
    for (const auto& o : rep.oscillations) cells.push_back({o.center[0], o.radius, o.value});
    out.plots["oscillations.svg"] =
        svg_heat_table("mean oscillation of " + rep.function_id, "center", "radius", cells);
  }
}

Json run_thm31(const Setup& s, ProbeOutput& out) {
  s.require_product("thm31");
  const double r = s.num("r", 0.5);
  const Vec x = s.point("x", 2.0);
  ProbeReport rep = support_sharpness_check(r, x, s.ctx, s.grid);
  if (s.dimension() == 1) {
    const RadialProfile bump = bump_profile(r);
    GridFunction tf(s.grid, Domain::space);
    for (std::size_t i = 0; i < s.grid.size(); ++i)
      tf[i] = translate_radial(bump, x, s.grid.point(i), s.ctx).value;
    out.tables["translate.csv"] = csv_of(tf);
    if (s.svg) plot_functions(out, "translate.svg", "tau_x f(-y), bump radius " + format_number(r),
                              {{"translate", tf}});
  }
  return rep.to_json();
}

Json run_thm32(const Setup& s, ProbeOutput&) {
  s.require_product("thm32");
  const double inner = s.num("inner", 1.0), outer = s.num("outer", 2.5);
  if (!(outer > inner && inner >= 0.0))
    fail(ErrorKind::config, "probe.inner and probe.outer need 0 <= inner < outer");
  auto profile = [=](double u) { return annular_profile(u, inner, outer); };
  const std::size_t samples = static_cast<std::size_t>(s.count("samples", 10000));
  return intersection_check_thm32(profile, s.num("r", 1.0), outer, s.point("x", 0.3), s.ctx,
                                  s.grid, samples, s.seed)
      .to_json();
}

Json run_cor31(const Setup& s, ProbeOutput&) {
  const double support = s.num("support", 0.5);
  if (!(support > 0.0)) fail(ErrorKind::config, "probe.support must be positive");
  DunklTransform t(s.ctx, s.grid);
  const GridFunction f = GridFunction::sample(s.grid, [&](const Vec& u) {
    return cplx(annular_profile(u.norm(), 0.0, support) * (1.0 + 0.3 * u[0]), 0.0);
  });
  return vanishing_check_cor31(f, s.point("x", 3.0), s.num("r", 1.0), t).to_json();
}

Json run_cor32(const Setup& s, ProbeOutput&) {
  s.require_product("cor32");
  const double inner = s.num("inner", 1.0), outer = s.num("outer", 2.5);
  if (!(outer > inner && inner >= 0.0))
    fail(ErrorKind::config, "probe.inner and probe.outer need 0 <= inner < outer");
  auto profile = [=](double u) { return annular_profile(u, inner, outer); };
  return corollary32_check(profile, outer, s.point("x", 0.2), s.point("y", 0.3), s.ctx, s.grid)
      .to_json();
}

Json run_hormander(const Setup& s, ProbeOutput& out) {
  s.require_product("hormander");
  const int j = s.component();
  const double eps = s.num("eps", 1e-2);
  const int count = s.count("pairs", 50);
  if (count < 1) fail(ErrorKind::config, "probe.pairs must be positive");
  const bool refine = s.flag("refine", true);
  const auto pairs = sample_pairs(s.dimension(), s.grid.half_width, eps,
                                  static_cast<std::size_t>(count), s.seed);
  ProbeReport rep = hormander_probe(j, eps, pairs, s.ctx, s.grid, refine);
  rep.params["seed"] = s.seed;

  std::ostringstream csv;
  const int n = s.dimension();
  for (int a = 0; a < n; ++a) csv << "x_" << a + 1 << ',';
  for (int a = 0; a < n; ++a) csv << "y_" << a + 1 << ',';
  csv << "integral" << (refine ? ",integral_refined" : "") << '\n';
  const Json& rows = rep.extras["pairs"];
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (int a = 0; a < n; ++a) csv << format_number(pairs[i].first[a]) << ',';
    for (int a = 0; a < n; ++a) csv << format_number(pairs[i].second[a]) << ',';
    csv << rows[i]["integral"].dump();
    if (refine) csv << ',' << rep.extras["pairs_refined"][i]["integral"].dump();
    csv << '\n';
  }
  out.tables["pairs.csv"] = csv.str();
  return rep.to_json();
}

std::vector<Vec> random_points(const Setup& s, int count, double span) {
  Rng rng(s.seed);
  std::vector<Vec> ys;
  for (int i = 0; i < count; ++i) {
    Vec y(s.dimension());
    for (int a = 0; a < s.dimension(); ++a) y[a] = rng.uniform(-span, span);
    ys.push_back(y);
  }
  return ys;
}

Json run_uniform_bound(const Setup& s, ProbeOutput&) {
  const double p = s.num("p", 1.0);
  const int samples = s.count("samples", 16);
  if (samples < 1) fail(ErrorKind::config, "probe.samples must be positive");
  DunklTransform t(s.ctx, s.grid);
  const auto ys = random_points(s, samples, 0.25 * s.grid.half_width);
  ProbeReport rep = uniform_bound_probe(l1_family(s.grid), ys, p, t);
  rep.params["seed"] = s.seed;
  return rep.to_json();
}

Json run_bmo(const Setup& s, ProbeOutput& out) {
  DunklTransform t(s.ctx, s.grid);
  const std::string id = s.text("function", "sgn");
  const double shift = s.num("shift", 0.0);
  GridFunction f = bounded_function(s, id, s.component());
  if (shift != 0.0)
    f += GridFunction::sample(s.grid, [shift](const Vec&) { return cplx(shift); });
  const BmoSampling sampling = BmoSampling::standard(s.grid, s.flag("densify", false));
  const BmoReport rep = bmo_norm(f, sampling, t, shift != 0.0 ? id + "+c" : id);
  oscillation_outputs(rep, out, s.svg);
  return rep.to_json();
}

Json run_bmo43(const Setup& s, ProbeOutput& out) {
  s.require_rank1("bmo43");
  DunklTransform t(s.ctx, s.grid);
  BmoProbeOptions opt;
  opt.j = s.component();
  opt.refine = s.flag("refine", true);
  opt.densify = s.flag("densify", true);
  opt.stability_tol = s.num("stability_tol", 0.15);
  const std::string id = s.text("function", "sgn");
  const BmoReport rep = theorem43_probe(bounded_space_function(id, opt.j), id, opt, t);
  oscillation_outputs(rep, out, s.svg);
  return rep.to_json();
}

Json run_lemma41(const Setup& s, ProbeOutput&) {
  s.require_product("lemma41");
  DunklTransform t(s.ctx, s.grid);
  const int j = s.component();
  const double sigma = s.num("sigma", 0.2), inner = s.num("inner", 2.5),
               outer = s.num("outer", 4.0);
  if (!(sigma > 0.0)) fail(ErrorKind::config, "probe.sigma must be positive");
  if (!(outer > inner && inner > 0.0))
    fail(ErrorKind::config, "probe.inner and probe.outer need 0 < inner < outer");
  // phi = F^{-1}(|xi|^4 e^{-sigma^2 |xi|^2 / 2}); the quartic factor keeps
  // R phi rapidly decaying.
  const GridFunction spec = GridFunction::sample(
      t.frequency_grid(),
      [sigma](const Vec& xi) {
        const double q = xi.squaredNorm();
        return cplx(q * q * std::exp(-0.5 * sigma * sigma * q));
      },
      Domain::frequency);
  GridFunction phi = t.inverse(Spectrum{spec, t.c_k()});
  for (cplx& v : phi.values()) v = v.real();
  const TestFunction tf = test_class_certificate(phi, t, s.count("n_max", 8));
  const GridFunction f = GridFunction::sample(s.grid, [&](const Vec& u) {
    return cplx((u[0] > 0.0 ? 1.0 : -0.5) * annular_profile(u.norm(), inner, outer));
  });
  ProbeReport rep = lemma41_check(f, tf, j, s.num("eps", 1e-2), t);
  rep.params["sigma"] = json_number(sigma);
  rep.params["support"] = {json_number(inner), json_number(outer)};
  return rep.to_json();
}

Json run_plancherel(const Setup& s, ProbeOutput& out) {
  DunklTransform t(s.ctx, s.grid);
  ProbeReport rep = make_report("plancherel", s.ctx, s.grid);
  const Quadrature& q = t.space_quadrature();
  auto gauss = [](const Vec& u) { return cplx(std::exp(-0.5 * u.squaredNorm())); };
  const GridFunction g = GridFunction::sample(s.grid, gauss);
  const Spectrum fg = t.forward(g);
  double fixed = 0.0;
  for (std::size_t i = 0; i < fg.values.size(); ++i)
    fixed = std::max(fixed, std::abs(fg.values[i] - gauss(t.frequency_grid().point(i))));
  rep.check("gaussian_fixed_point", fixed, 1e-5);

  Vec shift = Vec::Zero(s.dimension());
  shift[0] = 1.0;
  const GridFunction h = GridFunction::sample(s.grid, [&](const Vec& u) {
    const double envelope = std::exp(-0.5 * (u - shift).squaredNorm());
    return cplx(u[0] * u[0] * u[0] * envelope, 0.3 * u[0] * envelope);
  });
  const PlancherelReport p = plancherel_check(h, t);
  rep.check("plancherel_ratio_defect", std::abs(p.ratio - 1.0), 1e-6);
  const GridFunction back = t.inverse(t.forward(h));
  const double rt = lp_norm(back - h, q, 2.0) / lp_norm(h, q, 2.0);
  rep.check("round_trip", rt, 1e-6);
  rep.tail_mass = std::max(tail_mass(g, q), tail_mass(h, q));
  rep.extras = {{"space_norm", json_number(p.space_norm)},
                {"frequency_norm", json_number(p.frequency_norm)},
                {"c_k", json_number(t.c_k())},
                {"c_k_exact", json_number(t.c_k_exact())}};
  std::ostringstream csv, meta;
  write_spectrum(csv, meta, fg);
  out.tables["gaussian_spectrum.csv"] = csv.str();
  out.tables["gaussian_spectrum_meta.json"] = meta.str();
  if (s.svg) plot_functions(out, "gaussian_spectrum.svg", "F(exp(-|x|^2/2))", {{"F g", fg.values}});
  return rep.to_json();
}

Json run_separation(const Setup& s, ProbeOutput&) {
  const Vec x = s.point("x", 2.0);
  const double r = s.num("r", 0.5);
  const int samples = s.count("samples", 10000);
  if (samples < 1) fail(ErrorKind::config, "probe.samples must be positive");
  if (x.size() != s.dimension()) fail(ErrorKind::config, "probe.x dimension mismatch");
  const SeparationReport sep =
      separation_check(s.ctx.group(), x, r, static_cast<std::size_t>(samples), s.seed);
  ProbeReport rep = make_report("separation", s.ctx, s.grid);
  rep.params = {{"x", json_vector(x)}, {"r", json_number(r)}, {"samples", samples},
                {"seed", s.seed}};
  rep.extras = {{"pairs", sep.pairs},
                {"min_slack", json_number(sep.min_slack)},
                {"min_orbit_distance", json_number(sep.min_orbit_distance)}};
  rep.check("violations", static_cast<double>(sep.violations), 0.0, Relation::at_most);
  return rep.to_json();
}

Json run_kernel_system(const Setup& s, ProbeOutput& out) {
  const Vec y = s.point("y", 0.7);
  if (y.size() != s.dimension()) fail(ErrorKind::config, "probe.y dimension mismatch");
  const KernelEvaluator ev(s.ctx);
  // The second-order stencil keeps the refined residual well above roundoff,
  // so the halving test measures truncation error.
  const int stencil = s.count("stencil", 2);
  GridSpec probe{s.dimension(), s.num("half_width", 2.0), s.count("nodes", 400)};
  probe.validate();
  const KernelSystemReport coarse = verify_kernel_system(ev, s.ctx, y, probe, stencil);
  const KernelSystemReport fine = verify_kernel_system(ev, s.ctx, y, probe.refined(2), stencil);
  ProbeReport rep = make_report("kernel_system", s.ctx, probe);
  rep.params = {{"y", json_vector(y)}, {"stencil", stencil}};
  const double reduction = fine.residual > 0.0 ? coarse.residual / fine.residual
                                               : std::numeric_limits<double>::infinity();
  rep.extras = {{"residual_refined", json_number(fine.residual)},
                {"per_direction", json_vector(coarse.per_direction)},
                {"kernel_max", json_number(coarse.kernel_max)},
                {"reduction", json_number(reduction)}};
  rep.check("relative_residual", coarse.residual, 1e-4);
  rep.check("origin_value_defect", std::abs(coarse.origin_value - 1.0), 1e-12);
  rep.check("refinement_reduction", reduction, 2.0, Relation::at_least);
  if (s.dimension() == 1) {
    const GridFunction e = GridFunction::sample(probe, [&](const Vec& x) { return ev.imaginary(x, y); });
    out.tables["kernel.csv"] = csv_of(e);
    if (s.svg)
      plot_functions(out, "kernel.svg", "E(ix, y), y = " + format_number(y[0]),
                     {{"re", e}, {"im", e.map([](cplx c) { return cplx(c.imag()); })}});
  }
  return rep.to_json();
}

Json run_riesz_routes(const Setup& s, ProbeOutput& out) {
  s.require_rank1("riesz_routes");
  DunklTransform t(s.ctx, s.grid);
  RieszConfig rc;
  rc.j = s.component();
  rc.eps = s.num("eps", rc.eps);
  rc.M = s.num("M", rc.M);
  rc.eps_t = s.num("eps_t", rc.eps_t);
  rc.M_t = s.num("M_t", rc.M_t);
  const int levels = s.count("levels", 3);
  if (levels < 1) fail(ErrorKind::config, "probe.levels must be positive");
  const double tol = s.num("tolerance", 5e-2);
  const std::vector<GridFunction> family = route_family(s.grid);
  const std::vector<RouteRow> rows = route_comparison(family, rc.j, rc, levels, t);

  ProbeReport rep = make_report("riesz_routes", s.ctx, s.grid);
  rep.params = {{"j", rc.j + 1},         {"eps", json_number(rc.eps)},
                {"M", json_number(rc.M)}, {"eps_t", json_number(rc.eps_t)},
                {"M_t", json_number(rc.M_t)}, {"levels", levels},
                {"family_size", family.size()}};
  const RouteRow& first = rows.front();
  rep.check("multiplier_truncated", first.multiplier_truncated, tol);
  rep.check("multiplier_heat", first.multiplier_heat, tol);
  rep.check("truncated_heat", first.truncated_heat, tol);
  auto margin = [&](double RouteRow::*field) {
    // Smallest relative drop between consecutive levels; positive means
    // strictly decreasing.
    double m = std::numeric_limits<double>::infinity();
    for (std::size_t i = 1; i < rows.size(); ++i)
      m = std::min(m, (rows[i - 1].*field - rows[i].*field) / rows[i - 1].*field);
    return m;
  };
  if (rows.size() > 1) {
    rep.check("multiplier_truncated_decrease", margin(&RouteRow::multiplier_truncated), 0.0,
              Relation::at_least);
    rep.check("multiplier_heat_decrease", margin(&RouteRow::multiplier_heat), 0.0,
              Relation::at_least);
    rep.check("truncated_heat_decrease", margin(&RouteRow::truncated_heat), 0.0,
              Relation::at_least);
  }
  const double sq = square_sum_residual(family.front(), t);
  const double adj = adjoint_residual(family.front(), family[2], rc.j, t);
  rep.check("square_sum_residual", sq, 1e-5);
  rep.check("adjoint_residual", adj, 1e-5);
  const Quadrature& q = t.space_quadrature();
  for (const GridFunction& f : family) rep.tail_mass = std::max(rep.tail_mass, tail_mass(f, q));

  std::ostringstream csv;
  write_route_csv(csv, rows);
  out.tables["routes.csv"] = csv.str();
  if (s.svg) {
    const GridFunction& f = family.front();
    const double M = rc.M > 0.0 ? rc.M : 0.75 * s.grid.half_width;
    plot_functions(out, "routes.svg", "R_j of the Gaussian by three routes",
                   {{"multiplier", riesz_multiplier(f, rc.j, t)},
                    {"truncated", riesz_truncated(f, rc.j, rc.eps, M, t)},
                    {"heat", riesz_heat(f, rc.j, rc.eps_t, rc.M_t, t)}});
  }
  return rep.to_json();
}

Json run_proof_split(const Setup& s, ProbeOutput&) {
  s.require_product("proof_split");
  DunklTransform t(s.ctx, s.grid);
  const int j = s.component();
  const GridFunction f = bounded_function(s, s.text("function", "sgn"), j);
  return proof_split_diagnostics(f, j, s.point("x", 1.0), s.num("r", 0.5), s.num("eps", 1e-2), t,
                                 s.count("y_samples", 12))
      .to_json();
}

Json run_translation(const Setup& s, ProbeOutput&) {
  DunklTransform t(s.ctx, s.grid);
  PropertySuiteInput in;
  in.f = [](const Vec& u) { return cplx(std::exp(-0.5 * u.squaredNorm())); };
  in.g = [](const Vec& u) {
    return cplx(std::exp(-0.5 * (u[0] - 0.5) * (u[0] - 0.5) - 0.5 * (u.squaredNorm() - u[0] * u[0])) *
                (1.0 + u[0]));
  };
  in.x = s.point("x", 1.3);
  in.lambda = s.num("lambda", 2.0);
  in.samples = s.count("samples", 16);
  in.seed = s.seed;
  const ProbeReport suite = translation_property_suite(in, t);
  const ProbeReport young = young_check(GridFunction::sample(s.grid, in.f),
                                        GridFunction::sample(s.grid, in.g), t);
  ProbeReport rep = make_report("translation", s.ctx, s.grid);
  rep.params = suite.params;
  absorb(rep, suite, "properties");
  absorb(rep, young, "young");
  return rep.to_json();
}

const std::map<std::string, ProbeDef>& registry() {
  static const std::map<std::string, ProbeDef> defs = {
      {"thm31", {{"r", "x"}, run_thm31}},
      {"thm32", {{"r", "x", "inner", "outer", "samples"}, run_thm32}},
      {"cor31", {{"r", "x", "support"}, run_cor31}},
      {"cor32", {{"x", "y", "inner", "outer"}, run_cor32}},
      {"hormander", {{"j", "eps", "pairs", "refine"}, run_hormander}},
      {"uniform_bound", {{"p", "samples"}, run_uniform_bound}},
      {"bmo", {{"function", "j", "shift", "densify"}, run_bmo}},
      {"bmo43", {{"function", "j", "refine", "densify", "stability_tol"}, run_bmo43}},
      {"lemma41", {{"j", "eps", "sigma", "inner", "outer", "n_max"}, run_lemma41}},
      {"plancherel", {{}, run_plancherel}},
      {"separation", {{"x", "r", "samples"}, run_separation}},
      {"kernel_system", {{"y", "half_width", "nodes", "stencil"}, run_kernel_system}},
      {"riesz_routes",
       {{"j", "eps", "M", "eps_t", "M_t", "levels", "tolerance"}, run_riesz_routes}},
      {"proof_split", {{"function", "j", "x", "r", "eps", "y_samples"}, run_proof_split}},
      {"translation", {{"x", "lambda", "samples"}, run_translation}},
  };
  return defs;
}

std::string assertion_line(const std::string& probe, const Json& a) {
  std::string value = a["value"].is_string() ? a["value"].get<std::string>() : a["value"].dump();
  std::string threshold =
      a["threshold"].is_string() ? a["threshold"].get<std::string>() : a["threshold"].dump();
  return std::string(a["pass"].get<bool>() ? "PASS" : "FAIL") + " " + probe + " " +
         a["name"].get<std::string>() + " = " + value + " " +
         a["relation"].get<std::string>() + " " + threshold;
}

}  // namespace

const std::vector<std::string>& probe_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& [name, def] : registry()) v.push_back(name);
    return v;
  }();
  return names;
}

std::vector<GridFunction> route_family(const GridSpec& grid) {
  auto on_first = [&grid](std::function<double(double)> g) {
    return GridFunction::sample(grid, [g](const Vec& u) {
      const double rest = u.squaredNorm() - u[0] * u[0];
      return cplx(g(u[0]) * std::exp(-0.5 * rest));
    });
  };
  return {
      on_first([](double x) { return std::exp(-x * x / 2); }),
      on_first([](double x) { return x * std::exp(-x * x / 2); }),
      on_first([](double x) { return std::exp(-(x - 1) * (x - 1) / 2); }),
      on_first([](double x) { return std::exp(-2 * x * x); }),
      on_first([](double x) { return std::exp(-x * x / 2) * std::cos(2 * x); }),
      on_first([](double x) { return (1 - x * x) * std::exp(-x * x / 3); }),
  };
}

void check_probe_keys(const ExperimentConfig& cfg, const std::string& name) {
  const auto& defs = registry();
  const auto it = defs.find(name);
  if (it == defs.end()) {
    std::string list;
    for (const auto& n : probe_names()) list += (list.empty() ? "" : ", ") + n;
    fail(ErrorKind::config, "unknown probe '" + name + "' (available: " + list + ")");
  }
  const std::string configured = cfg.text("probe.name", name);
  if (configured != name)
    fail(ErrorKind::config,
         "config names probe '" + configured + "' but '" + name + "' was requested");
  std::set<std::string> keys = it->second.keys;
  keys.insert("name");
  cfg.require_known("probe", keys);
  cfg.require_known("output", {"svg", "directory"});
  for (const auto& [key, value] : cfg.values()) {
    const std::string section = key.substr(0, key.find('.'));
    if (section != "root_system" && section != "grid" && section != "probe" && section != "output")
      fail(ErrorKind::config, "unknown section in key '" + key + "'");
  }
}

ProbeOutput run_probe(const ExperimentConfig& cfg, const std::string& name, std::uint64_t seed,
                      bool svg) {
  check_probe_keys(cfg, name);
  const auto it = registry().find(name);

  RootSystemSpec spec = cfg.root_system();
  WeightContext ctx(spec);
  GridSpec grid = cfg.grid(ctx.dimension());
  grid.validate();
  Setup setup{cfg, std::move(ctx), grid, seed, svg};

  ProbeOutput out;
  out.name = name;
  out.report = it->second.run(setup, out);
  out.report["probe"] = name;
  out.pass = out.report["pass"].get<bool>();
  for (const Json& a : out.report["assertions"]) out.lines.push_back(assertion_line(name, a));
  return out;
}

int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::unsupported_group:
    case ErrorKind::not_finite_group:
      return 3;
    default:
      return 2;
  }
}

}  // namespace dunkl
