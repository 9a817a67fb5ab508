#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <utility>
#include <vector>

#include "dunkl/report.hpp"
#include "dunkl/transform.hpp"

namespace dunkl {

enum class TranslationRoute { spectral, roesler };
std::string to_string(TranslationRoute r);

// y -> tau_x f(y) together with y -> tau_x f(-y) on the same grid.
struct TranslationResult {
  Vec base_point;
  GridFunction values;
  GridFunction reflected;
  TranslationRoute route = TranslationRoute::spectral;
};

// tau_x f = F^{-1}(E(ix, .) Ff).
TranslationResult translate_spectral(const GridFunction& f, const Vec& x, const DunklTransform& t);
TranslationResult translate_spectrum(const Spectrum& ff, const Vec& x, const DunklTransform& t);
// Single value tau_x f(y) from a precomputed spectrum, y anywhere in the box.
cplx translate_spectral_at(const Spectrum& ff, const Vec& x, const Vec& y,
                           const DunklTransform& t);

// Rank-one representing measure of the intertwiner,
//   d mu_x(eta) = c' (1 + eta/x) (1 - (eta/x)^2)^{k-1} d eta / |x|,
// with c' = Gamma(k + 1/2) / (sqrt(pi) Gamma(k)). x = 0 is the point mass.
class RepresentingMeasure {
 public:
  RepresentingMeasure(double x, double k);

  double base_point() const { return x_; }
  double multiplicity() const { return k_; }
  bool point_mass() const { return x_ == 0.0; }
  std::pair<double, double> support() const { return {-std::abs(x_), std::abs(x_)}; }
  double density(double eta) const;
  double normalization() const { return c_; }

  // int g d mu_x by tanh-sinh with the Jacobi endpoint factor handled
  // analytically. Extra breakpoints (in eta) split the interval.
  double integrate(const std::function<double(double)>& g,
                   std::span<const double> breaks = {}) const;
  double mass() const;
  double moment(int m) const;

 private:
  double x_ = 0.0, k_ = 0.0, c_ = 0.0;
};

RepresentingMeasure roesler_density(double x, double k);

// V_k g(x) = int g d mu_x in rank one.
double intertwine(const std::function<double(double)>& g, double x, double k);

// A(x, y, eta) = sqrt(|x|^2 + |y|^2 - 2 <y, eta>), clamped at zero.
double roesler_argument(const Vec& x, const Vec& y, const Vec& eta);

struct RadialTranslation {
  double value = 0.0;
  double max_argument = 0.0;  // |x| + |y|, the largest A on the support
  bool truncated = false;     // profile ended before max_argument
};

// tau_x f(-y) = int f~(A(x, y, eta)) d mu_x(eta) for product groups, where
// mu_x is the tensor product of the rank-one measures (point masses on axes
// with k = 0 or x_a = 0).
RadialTranslation translate_radial(const RadialProfile& profile, const Vec& x, const Vec& y,
                                   const WeightContext& ctx);
RadialTranslation translate_radial(const std::function<double(double)>& profile,
                                   double support_radius, const Vec& x, const Vec& y,
                                   const std::vector<double>& k);

// tau_x g(y) for arbitrary (not necessarily radial) g through the rank-one
// signed translation measure, supported on {a <= |z| <= b} with a = ||x|-|y||
// and b = |x| + |y|. `breaks` lists |z| values where g jumps.
double translate_rank1(const std::function<double(double)>& g, double x, double y, double k,
                       std::span<const double> breaks = {});

// Tensor product of the rank-one measures for Z2^N. When radial_break > 0,
// the innermost integral is split where |z| crosses it.
double translate_product(const std::function<double(const Vec&)>& g, const Vec& x, const Vec& y,
                         const std::vector<double>& k, double radial_break = 0.0);

// f * g = F^{-1}(Ff Fg).
GridFunction convolve(const GridFunction& f, const GridFunction& g, const DunklTransform& t);

using SpaceFunction = std::function<cplx(const Vec&)>;

struct PropertySuiteInput {
  SpaceFunction f;
  SpaceFunction g;  // partner for skew-symmetry
  Vec x;
  double lambda = 2.0;
  int samples = 16;
  std::uint64_t seed = 0;
};

ProbeReport translation_property_suite(const PropertySuiteInput& in, const DunklTransform& t);

ProbeReport young_check(const GridFunction& f, const GridFunction& g, const DunklTransform& t);

// sup over the family and the sample points of |tau_y f|_p / |f|_p.
ProbeReport uniform_bound_probe(const std::vector<GridFunction>& family,
                                const std::vector<Vec>& ys, double p, const DunklTransform& t);

inline constexpr double tol_support = 1e-6;
inline constexpr double floor_support = 1e-3;

// Bump (1 - s^2/r^2)^4 on [0, r].
RadialProfile bump_profile(double r, std::size_t samples = 20001);
// Smooth annular profile supported on [inner, outer].
double annular_profile(double s, double inner, double outer);

ProbeReport support_sharpness_check(double r, const Vec& x, const WeightContext& ctx,
                                    const GridSpec& grid);
ProbeReport vanishing_check_cor31(const GridFunction& f, const Vec& x, double r,
                                  const DunklTransform& t);
ProbeReport intersection_check_thm32(const std::function<double(double)>& profile, double r,
                                     double support_radius, const Vec& x,
                                     const WeightContext& ctx, const GridSpec& grid,
                                     std::size_t chain_samples = 10000, std::uint64_t seed = 0);
ProbeReport corollary32_check(const std::function<double(double)>& profile,
                              double support_radius, const Vec& x, const Vec& y,
                              const WeightContext& ctx, const GridSpec& grid);

}  // namespace dunkl
