#pragma once

#include <iosfwd>
#include <memory>
#include <vector>

#include "dunkl/grid.hpp"
#include "dunkl/kernel.hpp"

namespace dunkl {

struct DunklOperatorSpec {
  Vec direction;
  double delta = 0.0;  // removable-singularity guard; 0 selects a quarter cell
  int stencil_order = 4;  // central-difference order, 2 or 4
};

// T_xi f = d_xi f + sum_{R+} k(alpha) <alpha, xi> (f(x) - f(sigma_alpha x)) / <alpha, x>.
GridFunction apply_dunkl_operator(const DunklOperatorSpec& op, const GridFunction& f,
                                  const WeightContext& ctx);

struct KernelSystemReport {
  double residual = 0.0;        // max over directions, relative to max |E|
  std::vector<double> per_direction;
  double kernel_max = 0.0;
  double origin_value = 1.0;    // E(0, y)
};

// Applies every T_j to x -> E(x, y) on the probe grid and measures the
// eigen-equation defect over nodes at least two cells from the boundary.
KernelSystemReport verify_kernel_system(const KernelEvaluator& ev, const WeightContext& ctx,
                                        const Vec& y, const GridSpec& probe,
                                        int stencil_order = 4);

// Gaussian quadrature constant c_k on the given grid. Throws
// domain_too_small when the Gaussian tail beyond the box exceeds 1e-12.
double c_k_constant(const WeightContext& ctx, const GridSpec& grid);
// Closed form prod_a 2^{k_a + 1/2} Gamma(k_a + 1/2) for product weights.
double c_k_analytic(const WeightContext& ctx);

struct Spectrum {
  GridFunction values;  // frequency-domain samples
  double c_k = 0.0;
};

class DunklTransform {
 public:
  // Frequency grid defaults to the reciprocal of the space grid.
  DunklTransform(const WeightContext& ctx, const GridSpec& space);
  DunklTransform(const WeightContext& ctx, const GridSpec& space, const GridSpec& frequency);
  ~DunklTransform();
  DunklTransform(DunklTransform&&) noexcept;
  DunklTransform& operator=(DunklTransform&&) noexcept;

  const WeightContext& context() const { return ctx_; }
  const KernelEvaluator& kernel() const { return kernel_; }
  const GridSpec& space_grid() const { return space_; }
  const GridSpec& frequency_grid() const { return frequency_; }
  const Quadrature& space_quadrature() const { return space_q_; }
  const Quadrature& frequency_quadrature() const { return frequency_q_; }
  double c_k() const { return c_k_; }
  double c_k_exact() const { return c_k_exact_; }

  Spectrum forward(const GridFunction& f) const;
  GridFunction inverse(const Spectrum& g) const;
  // Inverse for spectra equal to sgn(xi_axis) times a smooth function, such
  // as a Riesz multiplier output in rank one. Only the origin end correction
  // changes; axis -1 is the plain inverse.
  GridFunction inverse_sign_jump(const Spectrum& g, int axis) const;

  // Pointwise inverse (1/c_k) sum_xi g(xi) E(ix, xi) w(xi) at an arbitrary x.
  cplx inverse_at(const Spectrum& g, const Vec& x) const;
  // Samples xi -> E(ix, xi) on the frequency grid.
  GridFunction kernel_on_frequency_grid(const Vec& x) const;

  void check(const Spectrum& g) const;

 private:
  struct AxisPlan;
  std::vector<cplx> apply_axis(const std::vector<cplx>& data, const std::vector<int>& dims,
                               int axis, bool inverse, bool sign_jump) const;

  WeightContext ctx_;
  KernelEvaluator kernel_;
  GridSpec space_, frequency_;
  Quadrature space_q_, frequency_q_;
  double c_k_ = 0.0;
  double c_k_exact_ = 0.0;
  std::vector<std::shared_ptr<const AxisPlan>> axes_;
};

Spectrum forward_transform(const GridFunction& f, const DunklTransform& t);
GridFunction inverse_transform(const Spectrum& g, const DunklTransform& t);

struct PlancherelReport {
  double space_norm = 0.0;
  double frequency_norm = 0.0;
  double ratio = 1.0;
};
PlancherelReport plancherel_check(const GridFunction& f, const DunklTransform& t);

// Spectrum CSV plus the sidecar metadata {"domain": "frequency", "c_k": ...}.
void write_spectrum(std::ostream& csv, std::ostream& sidecar, const Spectrum& s);

}  // namespace dunkl
