#pragma once

#include <complex>
#include <string>
#include <vector>

#include "dunkl/reflection.hpp"

namespace dunkl {

enum class KernelKind { trivial, rank1, z2_product };
std::string to_string(KernelKind kind);

inline constexpr double default_tol_series = 1e-14;
inline constexpr int max_series_order = 512;

// E(iz) = even + i * odd for a real scalar z in rank one.
struct ImaginaryKernel {
  double even = 1.0;
  double odd = 0.0;
};

namespace rank1 {

// c_n of E_k(z) = sum_n c_n z^n: c_0 = 1, c_n = c_{n-1} / (n + 2k [n odd]).
std::vector<double> series_coefficients(double k, int order);

// E_k(z) for real z. Positive z sums the series directly (positive terms);
// negative z uses E_k(z) = e^{z} M(k, 2k+1, -2z), whose series also has
// positive terms, so neither branch suffers cancellation.
double kernel_real(double k, double z, double tol = default_tol_series);

// Truncated series with the number of terms used; the remainder bound
// c_M |z|^M / (1 - |z|/(M+1)) is below tol * |sum| at return.
struct SeriesValue {
  double value = 0.0;
  int terms = 0;
  double remainder_bound = 0.0;
};
SeriesValue kernel_series(double k, double z, double tol = default_tol_series);

// E_k(iz). Small |z| sums the alternating series; larger |z| switches to
// the normalized Bessel form of the same entire function.
ImaginaryKernel kernel_imag(double k, double z);

}  // namespace rank1

// Immutable evaluator of E(x, y) for the supported group kinds.
class KernelEvaluator {
 public:
  static bool supports(const WeightContext& ctx);
  explicit KernelEvaluator(const WeightContext& ctx, double tol_series = default_tol_series);

  KernelKind kind() const { return kind_; }
  const std::vector<double>& multiplicities() const { return k_; }
  double tolerance() const { return tol_; }
  int dimension() const { return static_cast<int>(k_.size()); }

  double real(const Vec& x, const Vec& y) const;       // E(x, y)
  std::complex<double> imaginary(const Vec& x, const Vec& y) const;  // E(ix, y)

  // Per-axis factor E_{k_a}(i t) for product kinds.
  ImaginaryKernel axis_imaginary(int axis, double t) const;

 private:
  KernelKind kind_ = KernelKind::trivial;
  std::vector<double> k_;
  double tol_ = default_tol_series;
};

}  // namespace dunkl
