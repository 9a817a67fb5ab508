#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "dunkl/report.hpp"
#include "dunkl/riesz.hpp"
#include "dunkl/translation.hpp"

namespace dunkl {

// Sampled stand-in for the sup over x and r > 0.
struct BmoSampling {
  std::vector<Vec> centers;
  std::vector<double> radii;

  // Centers on a lattice in [-L/8, L/8]^N (9 per axis, or 17 when densified),
  // radii geometric from 4h up to L/4 (ratio 2, or sqrt 2 when densified).
  static BmoSampling standard(const GridSpec& grid, bool densified = false);
  void validate() const;
};

// Bounded functions are multiplied by a smooth window equal to 1 on
// |u| <= window_inner L and vanishing beyond window_outer L before any
// translation. tau_x g(y) for |y| <= r only reads g on |u| <= |x| + r, so the
// window is invisible to every sample with |x| + r <= window_inner L.
inline constexpr double window_inner = 0.5;
inline constexpr double window_outer = 0.9;

double bmo_window(const Vec& u, double half_width);
GridFunction apply_bmo_window(const GridFunction& f);
// Largest |x| + r a sample may use on this grid.
double bmo_reach(const GridSpec& grid);

// f_{B_r}(x) = (1/m_k(B_r)) int_{B_r} tau_x f dm_k, spectral translation of
// the windowed f. m_k(B_r) is the grid quadrature of the same ball.
cplx local_average(const GridFunction& f, const Vec& x, double r, const DunklTransform& t);

struct OscillationSample {
  Vec center;
  double radius = 0.0;
  double value = 0.0;
};

// Oscillation table plus the shared probe fields (group, grid, assertions).
struct BmoReport {
  ProbeReport base;
  std::string function_id;
  std::optional<int> j;  // set by theorem43_probe (zero-based)
  std::vector<Vec> centers;
  std::vector<double> radii;
  std::vector<OscillationSample> oscillations;
  std::vector<std::string> skipped;  // geometry failures, per sample
  double bmo_estimate = 0.0;
  double linf_norm = 0.0;
  double translate_linf_bound = 0.0;  // max |tau_x f| over the sampled balls / |f|_inf
  double window_loss = 0.0;           // |f (1 - window)|_1 / |f|_1
  std::optional<double> ratio;
  Json uniform_l1_probe = nullptr;
  Json stability = Json::object();

  bool passed() const { return base.passed(); }
  Json to_json() const;
};

BmoReport bmo_norm(const GridFunction& f, const BmoSampling& sampling, const DunklTransform& t,
                   const std::string& function_id = "f");

// Flat oscillation table: x_1..x_N, r, oscillation.
void write_oscillation_csv(std::ostream& out, const BmoReport& rep);

struct BmoProbeOptions {
  int j = 0;
  bool refine = true;       // repeat on the grid with doubled n
  bool densify = true;      // repeat with the densified sampling
  double stability_tol = 0.15;
};

// Ratio |R_j f|_{*,k} / |f|_inf with the multiplier route on the windowed f,
// the measured L^1 translation bound and the refinement stability.
BmoReport theorem43_probe(const SpaceFunction& f, const std::string& function_id,
                          const BmoProbeOptions& opt, const DunklTransform& t);

// Bounded test functions for the BMO ratio measurements.
struct NamedFunction {
  std::string id;
  SpaceFunction fn;
};
std::vector<NamedFunction> bounded_family(int j = 0);
// L^1 functions whose translates measure the uniform L^1 bound.
std::vector<GridFunction> l1_family(const GridSpec& grid);

// g_1 = tau_x f chi_{Q*(x,r)}, g_2 = the rest. (a) is the sup over y in
// B(x, r) of |R g_2(y) - R g_2(x)| by the kernel route, checked against
// |g_2|_inf times the Hormander integral of (x, y); (b) is the B(x, r)
// average of |R g_1| against the L^2 bound |g_1|_2 / m_k(B(x, r))^{1/2}.
ProbeReport proof_split_diagnostics(const GridFunction& f, int j, const Vec& x, double r,
                                    double eps, const DunklTransform& t, int y_samples = 12);

}  // namespace dunkl
