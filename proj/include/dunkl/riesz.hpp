#pragma once

#include <cstdint>
#include <iosfwd>
#include <utility>
#include <vector>

#include "dunkl/report.hpp"
#include "dunkl/transform.hpp"

namespace dunkl {

// c_j = 2^{gamma + N/2} Gamma(gamma + (N+1)/2) / sqrt(pi).
double riesz_constant(const WeightContext& ctx);
// 2 gamma + N + 1, the decay exponent of the kernel y_j / |y|^{2 gamma + N + 1}.
double riesz_exponent(const WeightContext& ctx);

struct RieszConfig {
  int j = 0;             // zero-based component
  double eps = 1e-2;
  double M = 0.0;        // 0 selects 0.75 L
  double eps_t = 1e-4;
  double M_t = 1e3;
};

// Symbol -i xi_j / |xi| on the frequency grid.
GridFunction riesz_multiplier_symbol(int j, const DunklTransform& t);
GridFunction riesz_multiplier(const GridFunction& f, int j, const DunklTransform& t);
Spectrum riesz_multiplier(const Spectrum& s, int j, const DunklTransform& t);

// Symbol of -(c_j/c_k) int_{eps<=|y|<=M} tau_y (.) kappa(y) dm_k(y), obtained
// by a y-quadrature of E(iy, xi). Rank one only.
GridFunction truncated_symbol(int j, double eps, double M, const DunklTransform& t);
GridFunction riesz_truncated(const GridFunction& f, int j, double eps, double M,
                           const DunklTransform& t);

// Heat-subordinated symbol -(i xi_j / sqrt(pi)) int e^{-t |xi|^2} t^{-1/2} dt
// over [eps_t, M_t] by Gauss-Legendre panels in sqrt(t).
GridFunction heat_symbol(int j, double eps_t, double M_t, const DunklTransform& t);
GridFunction riesz_heat(const GridFunction& f, int j, double eps_t, double M_t,
                        const DunklTransform& t);

// K_eps(x, y) = -(c_j/c_k) (tau_{-x} kappa_eps)(y), so that
// R_eps f(x) = int K_eps(x, y) f(y) dm_k(y) and K is antisymmetric.
double riesz_kernel(const Vec& x, const Vec& y, int j, double eps, const WeightContext& ctx);

// x -> int K_eps(x, z) g(z) dm_k(z) at the requested points, grid quadrature in z.
std::vector<cplx> riesz_apply_kernel(const GridFunction& g, const std::vector<Vec>& points, int j,
                                     double eps, const WeightContext& ctx, const Quadrature& q);

using PointPair = std::pair<Vec, Vec>;

// Pairs with x in the central quarter of the box and 4 eps <= |y - x| <= 1.
std::vector<PointPair> sample_pairs(int dimension, double half_width, double eps,
                                    std::size_t count, std::uint64_t seed);

// int over d_G(x, z) >= 2|y - x| of |K(z, x) - K(z, y)| dm_k(z) on the grid.
double hormander_integral(const PointPair& pair, int j, double eps, const WeightContext& ctx,
                          const GridSpec& grid);

// Per-pair integrals and their sup on the grid and on the refined grid.
ProbeReport hormander_probe(int j, double eps, const std::vector<PointPair>& pairs,
                            const WeightContext& ctx, const GridSpec& grid, bool refine = true);

struct TestFunction {
  GridFunction phi;
  std::vector<double> certificate;  // |(F phi)(1 + |xi|)^n|_2, n = 0..n_max
  double max_growth = 0.0;          // max ratio of consecutive entries
  double growth_ceiling = 0.0;      // (1 + frequency half-width) / 4
  bool admissible = false;
};

// Relative level below which spectral samples count as zero in the certificate.
inline constexpr double certificate_floor = 1e-12;

TestFunction test_class_certificate(const GridFunction& phi, const DunklTransform& t,
                                    int n_max = 8);

// <R_j f, phi> := -int f (R_j phi) dm_k.
cplx weak_pairing(const GridFunction& f, const TestFunction& phi, int j, const DunklTransform& t);

ProbeReport lemma41_check(const GridFunction& f, const TestFunction& phi, int j, double eps,
                          const DunklTransform& t);

ProbeReport lp_operator_norm_estimate(int j, double p, const std::vector<GridFunction>& family,
                                      const DunklTransform& t);

// |sum_j R_j^2 f + f|_2 / |f|_2.
double square_sum_residual(const GridFunction& f, const DunklTransform& t);
// |<R_j f, g> + <f, R_j g>| / (|f|_2 |g|_2) with the bilinear pairing.
double adjoint_residual(const GridFunction& f, const GridFunction& g, int j,
                        const DunklTransform& t);

struct RouteRow {
  double eps = 0.0, M = 0.0, eps_t = 0.0, M_t = 0.0;
  double multiplier_truncated = 0.0;  // max over the family of the relative L^2 distance
  double multiplier_heat = 0.0;
  double truncated_heat = 0.0;
};

// One row per truncation level; level i uses eps / 2^i and eps_t / 2^i.
std::vector<RouteRow> route_comparison(const std::vector<GridFunction>& family, int j,
                                       const RieszConfig& cfg, int levels,
                                       const DunklTransform& t);
void write_route_csv(std::ostream& out, const std::vector<RouteRow>& rows);

}  // namespace dunkl
