#include "dunkl/transform.hpp"

#include <cmath>
#include <ostream>

#include <boost/math/special_functions/gamma.hpp>
#include <boost/math/special_functions/zeta.hpp>

#include "dunkl/error.hpp"
#include "dunkl/format.hpp"

namespace dunkl {

namespace {

using RowMatrix = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

// Multilinear interpolation of grid samples; points outside the box read 0.
cplx sample_at(const GridFunction& f, const Vec& x) {
  const GridSpec& g = f.grid();
  const double h = g.spacing();
  const int n = g.nodes_per_axis;
  std::vector<int> lo(g.dimension);
  std::vector<double> frac(g.dimension);
  for (int a = 0; a < g.dimension; ++a) {
    const double t = (x[a] + g.half_width) / h - 0.5;
    double i0 = std::floor(t);
    double fr = t - i0;
    if (fr > 1.0 - 1e-9) {
      i0 += 1.0;
      fr = 0.0;
    } else if (fr < 1e-9) {
      fr = 0.0;
    }
    if (i0 < 0 || i0 > n - 1 || (i0 == n - 1 && fr > 0.0)) return 0.0;
    lo[a] = static_cast<int>(i0);
    frac[a] = fr;
  }
  cplx total = 0.0;
  std::vector<int> idx(g.dimension);
  for (unsigned corner = 0; corner < (1u << g.dimension); ++corner) {
    double w = 1.0;
    for (int a = 0; a < g.dimension; ++a) {
      const bool up = (corner >> a) & 1u;
      w *= up ? frac[a] : 1.0 - frac[a];
      idx[a] = lo[a] + (up ? 1 : 0);
    }
    if (w == 0.0) continue;
    total += w * f[g.flat_index(idx)];
  }
  return total;
}

GridFunction partial_derivative(const GridFunction& f, int axis, int order) {
  const GridSpec& g = f.grid();
  const int n = g.nodes_per_axis;
  const double h = g.spacing();
  std::size_t stride = 1;
  for (int b = g.dimension - 1; b > axis; --b) stride *= n;
  GridFunction out(g, f.domain());
  for (std::size_t i = 0; i < f.size(); ++i) {
    const int c = static_cast<int>((i / stride) % n);
    auto at = [&](int offset) { return f[i + static_cast<std::ptrdiff_t>(offset) * stride]; };
    if (order >= 4 && c >= 2 && c <= n - 3) {
      out[i] = (-at(2) + 8.0 * at(1) - 8.0 * at(-1) + at(-2)) / (12.0 * h);
    } else if (c >= 1 && c <= n - 2) {
      out[i] = (at(1) - at(-1)) / (2.0 * h);
    } else if (c == 0) {
      out[i] = (-3.0 * at(0) + 4.0 * at(1) - at(2)) / (2.0 * h);
    } else {
      out[i] = (3.0 * at(0) - 4.0 * at(-1) + at(-2)) / (2.0 * h);
    }
  }
  return out;
}

}  // namespace

GridFunction apply_dunkl_operator(const DunklOperatorSpec& op, const GridFunction& f,
                                  const WeightContext& ctx) {
  const GridSpec& g = f.grid();
  require(op.direction.size() == g.dimension && g.dimension == ctx.dimension(),
          ErrorKind::invalid_argument, "Dunkl operator: dimension mismatch");
  require(op.direction.norm() > 0.0, ErrorKind::invalid_argument,
          "Dunkl operator: direction must be nonzero");
  require(op.stencil_order == 2 || op.stencil_order == 4, ErrorKind::invalid_argument,
          "Dunkl operator: stencil order must be 2 or 4");
  // Midpoint nodes sit h/2 from every coordinate wall, and a rounded h/2
  // must not trip the guard.
  const double delta = op.delta > 0.0 ? op.delta : 0.25 * g.spacing();

  std::vector<GridFunction> grad;
  for (int a = 0; a < g.dimension; ++a) grad.push_back(partial_derivative(f, a, op.stencil_order));

  GridFunction out(g, f.domain());
  for (std::size_t i = 0; i < f.size(); ++i)
    for (int a = 0; a < g.dimension; ++a) out[i] += op.direction[a] * grad[a][i];

  const auto& spec = ctx.root_system();
  for (auto r : spec.positive_indices()) {
    const double k = spec.multiplicity[r];
    const Vec& alpha = spec.roots[r];
    const double coupling = k * alpha.dot(op.direction);
    if (coupling == 0.0) continue;
    const double a2 = alpha.squaredNorm();
    for (std::size_t i = 0; i < f.size(); ++i) {
      const Vec x = g.point(i);
      const double ax = alpha.dot(x);
      cplx quotient;
      if (std::abs(ax) < delta) {
        cplx directional = 0.0;
        for (int a = 0; a < g.dimension; ++a) directional += alpha[a] * grad[a][i];
        quotient = 2.0 * directional / a2;
      } else {
        quotient = (f[i] - sample_at(f, reflect(alpha, x))) / ax;
      }
      out[i] += coupling * quotient;
    }
  }
  return out;
}

KernelSystemReport verify_kernel_system(const KernelEvaluator& ev, const WeightContext& ctx,
                                        const Vec& y, const GridSpec& probe, int stencil_order) {
  require(y.size() == ctx.dimension(), ErrorKind::invalid_argument,
          "verify_kernel_system: y has the wrong dimension");
  const GridFunction e =
      GridFunction::sample(probe, [&](const Vec& x) { return cplx(ev.real(x, y)); });
  KernelSystemReport report;
  report.kernel_max = e.max_abs();
  report.origin_value = ev.real(Vec::Zero(ctx.dimension()), y);
  const int n = probe.nodes_per_axis;
  for (int j = 0; j < ctx.dimension(); ++j) {
    DunklOperatorSpec op{Vec::Unit(ctx.dimension(), j), 0.0, stencil_order};
    const GridFunction te = apply_dunkl_operator(op, e, ctx);
    double worst = 0.0;
    for (std::size_t i = 0; i < e.size(); ++i) {
      const auto idx = probe.multi_index(i);
      bool interior = true;
      for (int c : idx) interior = interior && c >= 2 && c <= n - 3;
      if (!interior) continue;
      worst = std::max(worst, std::abs(te[i] - y[j] * e[i]));
    }
    report.per_direction.push_back(worst / report.kernel_max);
    report.residual = std::max(report.residual, worst / report.kernel_max);
  }
  return report;
}

double c_k_constant(const WeightContext& ctx, const GridSpec& grid) {
  grid.validate();
  const double L = grid.half_width;
  double tail = 0.0;
  if (const auto& axis_k = ctx.axis_multiplicities()) {
    for (double k : *axis_k) tail += boost::math::gamma_q(k + 0.5, 0.5 * L * L);
  } else {
    tail = boost::math::gamma_q(ctx.gamma_k() + 0.5 * ctx.dimension(), 0.5 * L * L);
  }
  require(tail < 1e-12, ErrorKind::domain_too_small,
          "c_k: Gaussian tail beyond the grid box exceeds 1e-12; enlarge the half-width");
  const Quadrature q(ctx, grid);
  const GridFunction gauss = GridFunction::sample(
      grid, [](const Vec& x) { return cplx(std::exp(-0.5 * x.squaredNorm())); });
  return q.integrate(gauss).real();
}

double c_k_analytic(const WeightContext& ctx) {
  const auto& axis_k = ctx.axis_multiplicities();
  require(axis_k.has_value(), ErrorKind::unsupported_group,
          "closed-form c_k is available for product weights only");
  double c = 1.0;
  for (double k : *axis_k) c *= std::pow(2.0, k + 0.5) * std::tgamma(k + 0.5);
  return c;
}

// Kernel-aware end corrections for the |x|^s weight at the origin. The
// midpoint error of x^s psi(x) expands in zeta(-s-j, 1/2) h^{s+j+1} psi^{(j)}(0);
// with psi = f(x) E_k(i theta x / h) the kernel part of that expansion is
// summed in closed form, and only the Taylor data of f is fitted from the
// first nodes. The result stays accurate up to the band edge theta = pi,
// where a fixed correction fitted to kernel samples would break down.
class EndCorrection {
 public:
  static constexpr int M = 4;

  EndCorrection(double k, int half_count) : s_(2.0 * k) {
    // For integer k the smooth-data terms vanish (zeta at negative even
    // integers), but sign-jump data still sees the odd ones.
    const double frac = s_ / 2.0 - std::floor(s_ / 2.0);
    jump_active_ = half_count >= 4 * M;
    active_ = jump_active_ && frac > 1e-14;
    if (!jump_active_) return;
    zeta_.resize(max_terms + M + 1);
    zeta_odd_.resize(max_terms + M + 1);
    for (std::size_t j = 0; j < zeta_.size(); ++j) {
      const double a = s_ + 2.0 * j, b = a + 1.0;
      zeta_[j] = (std::pow(2.0, -a) - 1.0) * boost::math::zeta(-a);
      zeta_odd_[j] = (std::pow(2.0, -b) - 1.0) * boost::math::zeta(-b);
    }
    c_ = rank1::series_coefficients(k, 2 * max_terms + 2);
    Eigen::Matrix<double, M, M> ve, vo;
    for (int i = 0; i < M; ++i)
      for (int p = 0; p < M; ++p) {
        ve(i, p) = std::pow(p + 0.5, 2.0 * i);
        vo(i, p) = std::pow(p + 0.5, 2.0 * i + 1.0);
      }
    inv_even_ = ve.inverse();
    inv_odd_ = vo.inverse();
  }

  bool active() const { return active_; }
  bool jump_active() const { return jump_active_; }

  // Coefficients D_p, p < M, such that the even-part error equals
  // h^{s+1} sum_p D_p (f(x_p) + f(-x_p)); likewise for the odd part.
  Eigen::Matrix<double, M, 1> even(double theta) const { return inv_even_ * sums(theta, false); }
  Eigen::Matrix<double, M, 1> odd(double theta) const { return inv_odd_ * sums(theta, true); }

  // The same for data of the form sgn(x) times a smooth function, whose even
  // combination has odd Taylor terms and whose odd combination has even ones.
  Eigen::Matrix<double, M, 1> even_sign_jump(double theta) const {
    return inv_odd_ * sign_jump_sums(theta, false);
  }
  Eigen::Matrix<double, M, 1> odd_sign_jump(double theta) const {
    return inv_even_ * sign_jump_sums(theta, true);
  }

 private:
  static constexpr int max_terms = 76;

  Eigen::Matrix<double, M, 1> sums(double theta, bool odd) const {
    Eigen::Matrix<double, M, 1> z;
    for (int a = 0; a < M; ++a) {
      double total = 0.0, peak = 0.0;
      double power = odd ? theta : 1.0;
      for (int b = 0; b < max_terms; ++b) {
        const double coef = odd ? c_[2 * b + 1] : c_[2 * b];
        const double term = coef * power * zeta_[a + b + (odd ? 1 : 0)];
        total += (b % 2 == 0) ? term : -term;
        peak = std::max(peak, std::abs(term));
        if (b > 4 && std::abs(term) < 1e-18 * std::max(peak, 1e-300)) break;
        power *= theta * theta;
      }
      z[a] = total;
    }
    return z;
  }

  // Every power of x is now odd, so the moments are zeta_odd_[a + b].
  Eigen::Matrix<double, M, 1> sign_jump_sums(double theta, bool odd) const {
    Eigen::Matrix<double, M, 1> z;
    for (int a = 0; a < M; ++a) {
      double total = 0.0, peak = 0.0;
      double power = odd ? theta : 1.0;
      for (int b = 0; b < max_terms; ++b) {
        const double coef = odd ? c_[2 * b + 1] : c_[2 * b];
        const double term = coef * power * zeta_odd_[a + b];
        total += (b % 2 == 0) ? term : -term;
        peak = std::max(peak, std::abs(term));
        if (b > 4 && std::abs(term) < 1e-18 * std::max(peak, 1e-300)) break;
        power *= theta * theta;
      }
      z[a] = total;
    }
    return z;
  }

  double s_;
  bool active_ = false, jump_active_ = false;
  std::vector<double> zeta_, zeta_odd_, c_;
  Eigen::Matrix<double, M, M> inv_even_, inv_odd_;
};

struct DunklTransform::AxisPlan {
  double k = 0.0;
  int P = 0, Q = 0;
  // Weighted kernel matrices with end corrections folded in. fe, fo are
  // Q x P (space -> frequency); ie, io are P x Q (frequency -> space).
  RowMatrix fe, fo, ie, io;
  // P x M changes to the first columns of ie, io for sign-jump spectra.
  RowMatrix ie_jump, io_jump;
  double hs = 0.0, hf = 0.0;
  std::shared_ptr<const EndCorrection> correction;
  double c_axis = 0.0;
};

DunklTransform::DunklTransform(const WeightContext& ctx, const GridSpec& space)
    : DunklTransform(ctx, space, space.reciprocal()) {}

DunklTransform::DunklTransform(const WeightContext& ctx, const GridSpec& space,
                               const GridSpec& frequency)
    : ctx_(ctx),
      kernel_(ctx),
      space_(space),
      frequency_(frequency),
      space_q_(ctx, space),
      frequency_q_(ctx, frequency) {
  require(space.dimension == ctx.dimension() && frequency.dimension == ctx.dimension(),
          ErrorKind::invalid_argument, "DunklTransform: grid dimension mismatch");
  c_k_ = c_k_constant(ctx_, space_);
  c_k_exact_ = ctx_.axis_multiplicities() ? c_k_analytic(ctx_) : c_k_;

  const int P = space.nodes_per_axis / 2, Q = frequency.nodes_per_axis / 2;
  for (int a = 0; a < ctx.dimension(); ++a) {
    const double k = kernel_.multiplicities()[a];
    std::shared_ptr<const AxisPlan> shared;
    for (const auto& existing : axes_)
      if (existing->k == k) shared = existing;
    if (!shared) {
      auto plan = std::make_shared<AxisPlan>();
      plan->k = k;
      plan->P = P;
      plan->Q = Q;
      plan->hs = space.spacing();
      plan->hf = frequency.spacing();
      plan->correction = std::make_shared<EndCorrection>(k, std::min(P, Q));
      const EndCorrection& corr = *plan->correction;
      const double s = 2.0 * k;
      plan->fe.resize(Q, P);
      plan->fo.resize(Q, P);
      plan->ie.resize(P, Q);
      plan->io.resize(P, Q);
#pragma omp parallel for schedule(static)
      for (int q = 0; q < Q; ++q) {
        const double xi = frequency.coordinate(Q + q);
        const double wq = plan->hf * std::pow(xi, s);
        for (int p = 0; p < P; ++p) {
          const double x = space.coordinate(P + p);
          const auto e = rank1::kernel_imag(k, xi * x);
          const double wp = plan->hs * std::pow(x, s);
          plan->fe(q, p) = wp * e.even;
          plan->fo(q, p) = wp * e.odd;
          plan->ie(p, q) = wq * e.even;
          plan->io(p, q) = wq * e.odd;
        }
      }
      if (corr.active()) {
        const double cs = std::pow(plan->hs, s + 1.0);
        for (int q = 0; q < Q; ++q) {
          const double theta = frequency.coordinate(Q + q) * plan->hs;
          const auto de = corr.even(theta), dd = corr.odd(theta);
          for (int p = 0; p < EndCorrection::M; ++p) {
            plan->fe(q, p) -= cs * de[p];
            plan->fo(q, p) -= cs * dd[p];
          }
        }
      }
      if (corr.jump_active()) {
        const double cf = std::pow(plan->hf, s + 1.0);
        plan->ie_jump.resize(P, EndCorrection::M);
        plan->io_jump.resize(P, EndCorrection::M);
        for (int p = 0; p < P; ++p) {
          const double theta = space.coordinate(P + p) * plan->hf;
          Eigen::Matrix<double, EndCorrection::M, 1> de, dd;
          de.setZero();
          dd.setZero();
          if (corr.active()) de = corr.even(theta), dd = corr.odd(theta);
          const auto je = corr.even_sign_jump(theta), jd = corr.odd_sign_jump(theta);
          for (int q = 0; q < EndCorrection::M; ++q) {
            plan->ie(p, q) -= cf * de[q];
            plan->io(p, q) -= cf * dd[q];
            plan->ie_jump(p, q) = cf * (de[q] - je[q]);
            plan->io_jump(p, q) = cf * (dd[q] - jd[q]);
          }
        }
      }
      const std::vector<double> ws = half_line_weights(s, P, space.spacing());
      double c = 0.0;
      for (int p = 0; p < P; ++p) {
        const double x = space.coordinate(P + p);
        c += 2.0 * ws[p] * std::exp(-0.5 * x * x);
      }
      plan->c_axis = c;
      shared = plan;
    }
    axes_.push_back(shared);
  }
}

DunklTransform::~DunklTransform() = default;
DunklTransform::DunklTransform(DunklTransform&&) noexcept = default;
DunklTransform& DunklTransform::operator=(DunklTransform&&) noexcept = default;

std::vector<cplx> DunklTransform::apply_axis(const std::vector<cplx>& data,
                                             const std::vector<int>& dims, int axis,
                                             bool inverse, bool sign_jump) const {
  const AxisPlan& plan = *axes_[axis];
  const int in_half = inverse ? plan.Q : plan.P;
  const int out_half = inverse ? plan.P : plan.Q;
  std::size_t stride = 1, outer = 1;
  for (int b = axis + 1; b < static_cast<int>(dims.size()); ++b) stride *= dims[b];
  for (int b = 0; b < axis; ++b) outer *= dims[b];
  const std::size_t lines = outer * stride;
  const std::size_t in_len = 2 * in_half, out_len = 2 * out_half;

  // Columns hold re and im parts of the even and odd combinations per line.
  RowMatrix even(in_half, 2 * lines), odd(in_half, 2 * lines);
  for (std::size_t o = 0; o < outer; ++o)
    for (std::size_t s = 0; s < stride; ++s) {
      const std::size_t line = o * stride + s;
      const std::size_t base = o * in_len * stride + s;
      for (int p = 0; p < in_half; ++p) {
        const cplx plus = data[base + (in_half + p) * stride];
        const cplx minus = data[base + (in_half - 1 - p) * stride];
        const cplx e = plus + minus, d = plus - minus;
        even(p, 2 * line) = e.real();
        even(p, 2 * line + 1) = e.imag();
        odd(p, 2 * line) = d.real();
        odd(p, 2 * line + 1) = d.imag();
      }
    }
  RowMatrix A, B;
  if (inverse) {
    A.noalias() = plan.ie * even;
    B.noalias() = plan.io * odd;
    if (sign_jump && plan.ie_jump.size() > 0) {
      A.noalias() += plan.ie_jump * even.topRows(EndCorrection::M);
      B.noalias() += plan.io_jump * odd.topRows(EndCorrection::M);
    }
  } else {
    A.noalias() = plan.fe * even;
    B.noalias() = plan.fo * odd;
  }

  // Forward: F(+xi) = (A - iB)/c, F(-xi) = (A + iB)/c. Inverse flips the sign.
  const double sign = inverse ? 1.0 : -1.0;
  const double inv_c = 1.0 / plan.c_axis;
  std::vector<cplx> out(outer * out_len * stride);
  for (std::size_t o = 0; o < outer; ++o)
    for (std::size_t s = 0; s < stride; ++s) {
      const std::size_t line = o * stride + s;
      const std::size_t base = o * out_len * stride + s;
      for (int q = 0; q < out_half; ++q) {
        const cplx a(A(q, 2 * line), A(q, 2 * line + 1));
        const cplx b(B(q, 2 * line), B(q, 2 * line + 1));
        const cplx ib = cplx(0.0, 1.0) * b;
        out[base + (out_half + q) * stride] = (a + sign * ib) * inv_c;
        out[base + (out_half - 1 - q) * stride] = (a - sign * ib) * inv_c;
      }
    }
  return out;
}

Spectrum DunklTransform::forward(const GridFunction& f) const {
  require(f.domain() == Domain::space, ErrorKind::domain_tag,
          "forward transform: input is not tagged space-domain");
  require(f.grid() == space_, ErrorKind::invalid_argument,
          "forward transform: input lives on a different grid");
  std::vector<int> dims(space_.dimension, space_.nodes_per_axis);
  std::vector<cplx> data = f.values();
  for (int a = 0; a < space_.dimension; ++a) {
    data = apply_axis(data, dims, a, false, false);
    dims[a] = frequency_.nodes_per_axis;
  }
  return Spectrum{GridFunction(frequency_, Domain::frequency, std::move(data)), c_k_};
}

void DunklTransform::check(const Spectrum& g) const {
  require(g.values.domain() == Domain::frequency, ErrorKind::domain_tag,
          "spectrum is not tagged frequency-domain");
  require(g.values.grid() == frequency_, ErrorKind::invalid_argument,
          "spectrum lives on a different frequency grid");
  require(std::abs(g.c_k - c_k_) <= 1e-14 * c_k_, ErrorKind::invalid_argument,
          "spectrum was produced with a different normalization constant c_k");
}

GridFunction DunklTransform::inverse(const Spectrum& g) const { return inverse_sign_jump(g, -1); }

GridFunction DunklTransform::inverse_sign_jump(const Spectrum& g, int axis) const {
  check(g);
  require(axis >= -1 && axis < frequency_.dimension, ErrorKind::invalid_argument,
          "inverse transform: sign-jump axis out of range");
  std::vector<int> dims(frequency_.dimension, frequency_.nodes_per_axis);
  std::vector<cplx> data = g.values.values();
  for (int a = 0; a < frequency_.dimension; ++a) {
    data = apply_axis(data, dims, a, true, a == axis);
    dims[a] = space_.nodes_per_axis;
  }
  return GridFunction(space_, Domain::space, std::move(data));
}

GridFunction DunklTransform::kernel_on_frequency_grid(const Vec& x) const {
  require(x.size() == frequency_.dimension, ErrorKind::invalid_argument,
          "kernel_on_frequency_grid: dimension mismatch");
  const int n = frequency_.nodes_per_axis;
  std::vector<std::vector<cplx>> axis(frequency_.dimension, std::vector<cplx>(n));
  for (int a = 0; a < frequency_.dimension; ++a)
    for (int j = n / 2; j < n; ++j) {
      const auto e = kernel_.axis_imaginary(a, x[a] * frequency_.coordinate(j));
      axis[a][j] = cplx(e.even, e.odd);
      axis[a][n - 1 - j] = cplx(e.even, -e.odd);
    }
  GridFunction out(frequency_, Domain::frequency);
  for (std::size_t i = 0; i < out.size(); ++i) {
    const auto idx = frequency_.multi_index(i);
    cplx v = 1.0;
    for (int a = 0; a < frequency_.dimension; ++a) v *= axis[a][idx[a]];
    out[i] = v;
  }
  return out;
}

cplx DunklTransform::inverse_at(const Spectrum& g, const Vec& x) const {
  check(g);
  const int n = frequency_.nodes_per_axis, half = n / 2;
  const int dim = frequency_.dimension;
  std::vector<cplx> data = g.values.values();
  // Contract the last axis repeatedly against w(xi) E(i x_a xi).
  for (int a = dim - 1; a >= 0; --a) {
    const AxisPlan& plan = *axes_[a];
    const double s = 2.0 * plan.k;
    std::vector<double> re(half), ro(half);
    for (int q = 0; q < half; ++q) {
      const double xi = frequency_.coordinate(half + q);
      const auto e = kernel_.axis_imaginary(a, std::abs(x[a]) * xi);
      const double w = plan.hf * std::pow(xi, s);
      re[q] = w * e.even;
      ro[q] = w * e.odd;
    }
    if (plan.correction->active()) {
      const double cf = std::pow(plan.hf, s + 1.0), theta = std::abs(x[a]) * plan.hf;
      const auto de = plan.correction->even(theta), dd = plan.correction->odd(theta);
      for (int q = 0; q < EndCorrection::M; ++q) {
        re[q] -= cf * de[q];
        ro[q] -= cf * dd[q];
      }
    }
    // g(+xi) pairs with re + i ro, g(-xi) with re - i ro; odd parts flip with x.
    const double sx = x[a] < 0.0 ? -1.0 : 1.0;
    std::vector<cplx> v(n);
    for (int q = 0; q < half; ++q) {
      v[half + q] = cplx(re[q], sx * ro[q]);
      v[half - 1 - q] = cplx(re[q], -sx * ro[q]);
    }
    std::vector<cplx> next(data.size() / n);
    for (std::size_t r = 0; r < next.size(); ++r) {
      cplx s = 0.0;
      for (int j = 0; j < n; ++j) s += data[r * n + j] * v[j];
      next[r] = s / plan.c_axis;
    }
    data = std::move(next);
  }
  return data[0];
}

Spectrum forward_transform(const GridFunction& f, const DunklTransform& t) {
  return t.forward(f);
}

GridFunction inverse_transform(const Spectrum& g, const DunklTransform& t) {
  return t.inverse(g);
}

PlancherelReport plancherel_check(const GridFunction& f, const DunklTransform& t) {
  const Spectrum s = t.forward(f);
  PlancherelReport r;
  r.space_norm = std::sqrt(t.space_quadrature().integrate_abs_pow(f, 2.0));
  r.frequency_norm = std::sqrt(t.frequency_quadrature().integrate_abs_pow(s.values, 2.0));
  r.ratio = r.space_norm > 0.0 ? r.frequency_norm / r.space_norm : 1.0;
  return r;
}

void write_spectrum(std::ostream& csv, std::ostream& sidecar, const Spectrum& s) {
  write_csv(csv, s.values);
  sidecar << "{\"domain\":\"frequency\",\"c_k\":" << format_number(s.c_k) << "}\n";
}

}  // namespace dunkl
