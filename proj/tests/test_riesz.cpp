#include <doctest.h>

#include <cmath>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "dunkl/error.hpp"
#include "dunkl/riesz.hpp"

using namespace dunkl;

namespace {

struct NodeValue {
  int offset;  // node n/2 + offset, x = (offset + 1/2) h
  double hilbert;  // classical Hilbert transform of e^{-x^2/2}
  double riesz_k1;  // rank-one Riesz transform of e^{-x^2/2} at k = 1
};

// 30-digit quadratures on n = 2048, L = 20 nodes.
const NodeValue node_oracle[] = {
    {25, 0.3661006351948130272, 0.23998416697623502396},
    {51, 0.57956254753461139418, 0.35915588703282473107},
    {102, 0.51020017675378109934, 0.23894839579063959189},
    {153, 0.31398173205996503992, 0.082779276073350660956},
};

const GridSpec line{1, 20.0, 2048};

GridFunction sample(const std::function<double(double)>& fn, const GridSpec& g = line) {
  return GridFunction::sample(g, [&](const Vec& u) { return cplx(fn(u[0])); });
}

double gauss(double x) { return std::exp(-0.5 * x * x); }

double relative_l2(const GridFunction& a, const GridFunction& b, const Quadrature& q) {
  return lp_norm(a - b, q, 2.0) / lp_norm(b, q, 2.0);
}

Vec pt(double v) { return Vec::Constant(1, v); }

}  // namespace

TEST_SUITE("riesz") {

TEST_CASE("constants and exponents") {
  const WeightContext k0(RootSystemSpec::rank1(0.0));
  CHECK(riesz_constant(k0) == doctest::Approx(std::sqrt(2.0 / M_PI)));
  CHECK(riesz_exponent(k0) == 2.0);
  const WeightContext b2(RootSystemSpec::b2(1.0, 0.5));
  CHECK(riesz_exponent(b2) == doctest::Approx(2 * 3.0 + 3));
  CHECK(riesz_constant(b2) ==
        doctest::Approx(std::pow(2.0, 4.0) * std::tgamma(4.5) / std::sqrt(M_PI)));
}

TEST_CASE("multiplier route against the Hilbert and Riesz oracles") {
  for (double k : {0.0, 1.0}) {
    const WeightContext ctx(RootSystemSpec::rank1(k));
    const DunklTransform t(ctx, line);
    const GridFunction r = riesz_multiplier(sample(gauss), 0, t);
    for (const auto& o : node_oracle) {
      const double expect = k == 0.0 ? o.hilbert : o.riesz_k1;
      CHECK(r[1024 + o.offset].real() == doctest::Approx(expect).epsilon(1e-7));
    }
  }
}

TEST_CASE("Bedrosian pair is exact at k = 0") {
  const WeightContext ctx(RootSystemSpec::rank1(0.0));
  const DunklTransform t(ctx, line);
  const GridFunction r =
      riesz_multiplier(sample([](double x) { return gauss(x) * std::cos(8 * x); }), 0, t);
  const GridFunction expect = sample([](double x) { return gauss(x) * std::sin(8 * x); });
  CHECK(relative_l2(r, expect, t.space_quadrature()) < 1e-8);
}

TEST_CASE("truncated route matches the classical truncated Hilbert integral") {
  const WeightContext ctx(RootSystemSpec::rank1(0.0));
  const DunklTransform t(ctx, line);
  const double eps = 1e-2, M = 15.0;
  const GridFunction f = sample([](double x) { return gauss(x - 0.5); });
  const GridFunction r = riesz_truncated(f, 0, eps, M, t);
  GridFunction expect(line, Domain::space);
  for (std::size_t i = 0; i < line.size(); ++i) {
    const double x = line.point(i)[0];
    auto odd = [x](double y) { return (gauss(x - y - 0.5) - gauss(x + y - 0.5)) / y; };
    double v = 0.0;
    for (double a = eps, b = 1.0; a < M; a = b, b = std::min(M, 2 * b + 1))
      v += boost::math::quadrature::gauss_kronrod<double, 31>::integrate(odd, a, b, 8, 1e-13);
    expect[i] = v / M_PI;
  }
  CHECK(relative_l2(r, expect, t.space_quadrature()) < 1e-3);
}

TEST_CASE("heat route converges to the multiplier on the central region") {
  // The heat output still has a tail of length M_t^{1/2} beyond the box, so
  // the comparison stays away from the edges. At k = 0 that tail carries
  // relative weight M_t^{-1/2} and dominates; k > 0 damps it.
  for (double k : {0.5, 1.0}) {
    const WeightContext ctx(RootSystemSpec::rank1(k));
    const DunklTransform t(ctx, line);
    const GridFunction f = sample([](double x) { return gauss(x - 1.0); });
    const GridFunction heat = riesz_heat(f, 0, 1e-7, 1e6, t), mult = riesz_multiplier(f, 0, t);
    double worst = 0.0;
    for (std::size_t i = 0; i < line.size(); ++i)
      if (std::abs(line.point(i)[0]) <= 5.0) worst = std::max(worst, std::abs(heat[i] - mult[i]));
    CHECK(worst / mult.max_abs() < 1e-3);
  }
}

TEST_CASE("kernel reduces to 1/(pi (x - y)) at k = 0") {
  const WeightContext ctx(RootSystemSpec::rank1(0.0));
  for (double x : {-1.0, 0.3, 2.0})
    for (double y : {-0.5, 0.9, 3.1})
      CHECK(riesz_kernel(pt(x), pt(y), 0, 1e-2, ctx) ==
            doctest::Approx(1.0 / (M_PI * (x - y))).epsilon(1e-10));
  CHECK(riesz_kernel(pt(1.0), pt(1.005), 0, 1e-2, ctx) == 0.0);
}

TEST_CASE("kernel is antisymmetric") {
  for (double k : {0.5, 1.0, 2.0}) {
    const WeightContext ctx(RootSystemSpec::rank1(k));
    for (double x : {-1.2, 0.4, 1.7})
      for (double y : {-0.6, 0.9, 2.4}) {
        const double a = riesz_kernel(pt(x), pt(y), 0, 1e-2, ctx);
        const double b = riesz_kernel(pt(y), pt(x), 0, 1e-2, ctx);
        CHECK(std::abs(a + b) <= 1e-10 * std::max(1.0, std::abs(a)));
      }
  }
}

TEST_CASE("square sum and adjoint identities") {
  for (double k : {0.5, 1.0}) {
    const WeightContext ctx(RootSystemSpec::rank1(k));
    const DunklTransform t(ctx, line);
    const GridFunction f = sample(gauss);
    const GridFunction g = sample([](double x) { return gauss(x - 1.0); });
    CHECK(square_sum_residual(f, t) < 1e-5);
    CHECK(adjoint_residual(f, g, 0, t) < 1e-5);
  }
}

TEST_CASE("test-class certificate separates Schwartz functions from jumps") {
  const WeightContext ctx(RootSystemSpec::rank1(1.0));
  const DunklTransform t(ctx, line);
  const TestFunction good = test_class_certificate(sample(gauss), t, 8);
  CHECK(good.admissible);
  CHECK(good.certificate.size() == 9);
  const TestFunction bad =
      test_class_certificate(sample([](double x) { return std::abs(x - 0.3) < 1.0 ? 1.0 : 0.0; }), t, 8);
  CHECK_FALSE(bad.admissible);
  try {
    weak_pairing(sample(gauss), bad, 0, t);
    FAIL("an inadmissible test function must be refused");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::inadmissible_test_function);
  }
}

TEST_CASE("truncated route is rank one only and the kernel route needs a product group") {
  const WeightContext a2(RootSystemSpec::a2(1.0));
  const GridSpec g{2, 6.0, 32};
  const std::vector<double> k{1.0, 1.0};
  const DunklTransform t(WeightContext(RootSystemSpec::z2_product(k)), GridSpec{2, 10.0, 32});
  CHECK_THROWS_AS(truncated_symbol(0, 1e-2, 5.0, t), Error);
  try {
    hormander_integral({Vec::Zero(2), Vec::Constant(2, 0.1)}, 0, 1e-2, a2, g);
    FAIL("A2 is not a product group");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::unsupported_group);
  }
}

TEST_CASE("sampled pairs respect the admissible geometry") {
  const auto pairs = sample_pairs(1, 5.0, 1e-2, 50, 7);
  CHECK(pairs.size() == 50);
  for (const auto& [x, y] : pairs) {
    CHECK(std::abs(x[0]) <= 1.25);
    const double d = (y - x).norm();
    CHECK(d >= 4e-2);
    CHECK(d <= 1.0);
  }
  CHECK(sample_pairs(1, 5.0, 1e-2, 50, 7) == pairs);
}

TEST_CASE("Hormander integral is finite and seeded") {
  const WeightContext ctx(RootSystemSpec::rank1(1.0));
  const GridSpec g{1, 5.0, 256};
  const auto pairs = sample_pairs(1, 5.0, 1e-2, 5, 1);
  const ProbeReport rep = hormander_probe(0, 1e-2, pairs, ctx, g, true);
  CHECK(rep.passed());
}

TEST_CASE("route table has one row per level") {
  const WeightContext ctx(RootSystemSpec::rank1(1.0));
  const GridSpec g{1, 20.0, 1024};
  const DunklTransform t(ctx, g);
  RieszConfig cfg;
  const auto rows = route_comparison({sample(gauss, g)}, 0, cfg, 3, t);
  REQUIRE(rows.size() == 3);
  CHECK(rows[1].eps == doctest::Approx(cfg.eps / 2));
  CHECK(rows[2].eps_t == doctest::Approx(cfg.eps_t / 4));
  CHECK(rows[0].multiplier_heat < 5e-2);
}

}  // TEST_SUITE
