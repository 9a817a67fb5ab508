#include "dunkl/kernel.hpp"

#include <cmath>

#include "dunkl/error.hpp"

namespace dunkl {

std::string to_string(KernelKind kind) {
  switch (kind) {
    case KernelKind::trivial: return "trivial";
    case KernelKind::rank1: return "rank1";
    case KernelKind::z2_product: return "z2_product";
  }
  return "unknown";
}

namespace {

constexpr double series_switch = 6.0;

struct BesselPair {
  double nu;     // J_nu
  double nu_p1;  // J_{nu+1}
};

// Hankel expansion P cos(w) - Q sin(w), valid for z well past nu^2.
double bessel_j_asymptotic(double nu, double z) {
  const double mu = 4.0 * nu * nu;
  double a = 1.0, p = 1.0, q = 0.0, last = 1.0;
  for (int m = 1; m < 60; ++m) {
    const double s = 2.0 * m - 1.0;
    a *= (mu - s * s) / (m * 8.0 * z);
    const double term = std::abs(a);
    if (term > last) break;  // asymptotic series started to diverge
    const double sign = ((m / 2) % 2 == 0) ? 1.0 : -1.0;
    if (m % 2 == 0) p += sign * a; else q += sign * a;
    if (term < 1e-17 * std::abs(p)) break;
    last = term;
  }
  const double w = z - 0.5 * nu * M_PI - 0.25 * M_PI;
  return std::sqrt(2.0 / (M_PI * z)) * (p * std::cos(w) - q * std::sin(w));
}

double bessel_j_direct(double nu, double z) {
  if (nu >= 0.0) return std::cyl_bessel_j(nu, z);
  // J_{-m} = cos(m pi) J_m - sin(m pi) Y_m for non-integer m.
  const double m = -nu;
  return std::cos(m * M_PI) * std::cyl_bessel_j(m, z) -
         std::sin(m * M_PI) * std::cyl_neumann(m, z);
}

double asymptotic_threshold(double nu) { return 25.0 + 2.0 * nu * nu; }

// Alternating series of E_k(iz) split into even and odd parts.
ImaginaryKernel imag_series(double k, double z) {
  double term = 1.0, even = 1.0, odd = 0.0;
  for (int n = 1; n <= max_series_order; ++n) {
    term *= z / (n + ((n & 1) ? 2.0 * k : 0.0));
    const int m = n / 2;
    const double signed_term = (m % 2 == 0) ? term : -term;
    if (n & 1) odd += signed_term; else even += signed_term;
    if (n > std::abs(z) && std::abs(term) < 1e-17) return {even, odd};
  }
  fail(ErrorKind::series_order, "kernel series did not converge within the order cap");
}

}  // namespace

namespace rank1 {

std::vector<double> series_coefficients(double k, int order) {
  std::vector<double> c(order + 1);
  c[0] = 1.0;
  for (int n = 1; n <= order; ++n) c[n] = c[n - 1] / (n + ((n & 1) ? 2.0 * k : 0.0));
  return c;
}

SeriesValue kernel_series(double k, double z, double tol) {
  require(k >= 0.0, ErrorKind::invalid_argument, "kernel: negative multiplicity");
  SeriesValue out;
  double term = 1.0, sum = 1.0;
  const double az = std::abs(z);
  for (int n = 1; n <= max_series_order; ++n) {
    term *= z / (n + ((n & 1) ? 2.0 * k : 0.0));
    if (n + 1 > az) {
      const double bound = std::abs(term) / (1.0 - az / (n + 1));
      if (bound <= tol * std::max(std::abs(sum), 1e-300)) {
        out.value = sum;
        out.terms = n;
        out.remainder_bound = bound;
        return out;
      }
    }
    sum += term;
  }
  fail(ErrorKind::series_order,
       "kernel series needs more than " + std::to_string(max_series_order) +
           " terms at |xy| = " + std::to_string(az) + "; rescale the grid");
}

double kernel_real(double k, double z, double tol) {
  if (k == 0.0) return std::exp(z);
  if (z >= 0.0) return kernel_series(k, z, tol).value;
  // Kummer form: e^{z} 1F1(k; 2k+1; -2z), all terms positive for z < 0.
  const double w = -2.0 * z;
  double term = 1.0, sum = 1.0;
  for (int n = 0; n < max_series_order; ++n) {
    term *= (k + n) / (2.0 * k + 1.0 + n) * w / (n + 1.0);
    sum += term;
    if (n + 2 > w) {
      const double bound = term * (w / (n + 2.0)) / (1.0 - w / (n + 2.0));
      if (bound <= tol * sum) return std::exp(z) * sum;
    }
  }
  fail(ErrorKind::series_order, "Kummer series did not converge within the order cap");
}

ImaginaryKernel kernel_imag(double k, double z) {
  require(k >= 0.0, ErrorKind::invalid_argument, "kernel: negative multiplicity");
  if (k == 0.0) return {std::cos(z), std::sin(z)};
  const double az = std::abs(z);
  if (az <= series_switch) return imag_series(k, z);

  // E_k(iz) = j_{nu}(z) + i z/(2k+1) j_{nu+1}(z) with nu = k - 1/2 and the
  // normalized j_nu(z) = Gamma(nu+1) (2/z)^nu J_nu(z); both parts share the
  // prefactor Gamma(nu+1) (2/z)^nu.
  const double nu = k - 0.5;
  BesselPair j;
  if (az < asymptotic_threshold(nu + 1.0)) {
    j = {bessel_j_direct(nu, az), std::cyl_bessel_j(nu + 1.0, az)};
  } else {
    j = {bessel_j_asymptotic(nu, az), bessel_j_asymptotic(nu + 1.0, az)};
  }
  const double pre = std::exp(std::lgamma(nu + 1.0) + nu * std::log(2.0 / az));
  const double odd = pre * j.nu_p1;
  return {pre * j.nu, z < 0.0 ? -odd : odd};
}

}  // namespace rank1

bool KernelEvaluator::supports(const WeightContext& ctx) {
  bool all_zero = true;
  for (double k : ctx.root_system().multiplicity) all_zero = all_zero && k == 0.0;
  return all_zero || ctx.axis_multiplicities().has_value();
}

KernelEvaluator::KernelEvaluator(const WeightContext& ctx, double tol_series)
    : tol_(tol_series) {
  if (!supports(ctx))
    fail(ErrorKind::unsupported_group,
         "Dunkl kernel evaluation is available only for the trivial, rank1 and z2_product "
         "groups; got '" + ctx.group_label() + "'");
  bool all_zero = true;
  for (double k : ctx.root_system().multiplicity) all_zero = all_zero && k == 0.0;
  if (all_zero) {
    kind_ = KernelKind::trivial;
    k_.assign(ctx.dimension(), 0.0);
  } else {
    k_ = *ctx.axis_multiplicities();
    kind_ = ctx.dimension() == 1 ? KernelKind::rank1 : KernelKind::z2_product;
  }
}

double KernelEvaluator::real(const Vec& x, const Vec& y) const {
  require(x.size() == dimension() && y.size() == dimension(), ErrorKind::invalid_argument,
          "kernel: dimension mismatch");
  if (kind_ == KernelKind::trivial) return std::exp(x.dot(y));
  double e = 1.0;
  for (int a = 0; a < dimension(); ++a) e *= rank1::kernel_real(k_[a], x[a] * y[a], tol_);
  return e;
}

ImaginaryKernel KernelEvaluator::axis_imaginary(int axis, double t) const {
  return rank1::kernel_imag(k_[axis], t);
}

std::complex<double> KernelEvaluator::imaginary(const Vec& x, const Vec& y) const {
  require(x.size() == dimension() && y.size() == dimension(), ErrorKind::invalid_argument,
          "kernel: dimension mismatch");
  if (kind_ == KernelKind::trivial) return std::polar(1.0, x.dot(y));
  std::complex<double> e = 1.0;
  for (int a = 0; a < dimension(); ++a) {
    const auto part = rank1::kernel_imag(k_[a], x[a] * y[a]);
    e *= std::complex<double>(part.even, part.odd);
  }
  return e;
}

}  // namespace dunkl
