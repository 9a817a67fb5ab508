#include <doctest.h>

#include <cmath>
#include <sstream>

#include "dunkl/error.hpp"
#include "dunkl/grid.hpp"

using namespace dunkl;

namespace {

GridSpec line(int n, double L) { return GridSpec{1, L, n}; }

}  // namespace

TEST_SUITE("numerics_grid") {

TEST_CASE("midpoint nodes are symmetric and avoid the origin") {
  const GridSpec g = line(8, 2.0);
  CHECK(g.spacing() == 0.5);
  CHECK(g.coordinate(0) == -1.75);
  CHECK(g.coordinate(7) == 1.75);
  for (std::size_t i = 0; i < g.size(); ++i) {
    CHECK(g.point(g.mirror(i))[0] == -g.point(i)[0]);
    CHECK(g.point(i)[0] != 0.0);
  }
  const GridSpec r = g.reciprocal();
  CHECK(r.nodes_per_axis == 8);
  CHECK(r.half_width == doctest::Approx(M_PI * 8 / 4.0));
  CHECK(g.refined().nodes_per_axis == 16);
  CHECK(g.refined().half_width == g.half_width);
}

TEST_CASE("multi-index round trip on a tensor grid") {
  const GridSpec g{3, 1.0, 4};
  CHECK(g.size() == 64);
  for (std::size_t i = 0; i < g.size(); ++i) CHECK(g.flat_index(g.multi_index(i)) == i);
  CHECK((g.point(g.mirror(5)) + g.point(5)).norm() == 0.0);
}

TEST_CASE("grid validation") {
  CHECK_NOTHROW(line(4, 1.0).validate());
  CHECK_THROWS_AS(line(5, 1.0).validate(), Error);
  CHECK_THROWS_AS(line(4, -1.0).validate(), Error);
  CHECK_THROWS_AS((GridSpec{0, 1.0, 4}).validate(), Error);
}

TEST_CASE("domain tags are enforced") {
  const GridSpec g = line(4, 1.0);
  GridFunction a(g, Domain::space), b(g, Domain::frequency);
  try {
    a += b;
    FAIL("mixing domains must throw");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::domain_tag);
  }
  CHECK_THROWS_AS(pointwise_product(a, b), Error);
}

TEST_CASE("non-finite samples are rejected") {
  GridFunction f = GridFunction::sample(line(4, 1.0), [](const Vec&) { return cplx(1.0); });
  f[2] = cplx(std::nan(""), 0.0);
  CHECK_THROWS_AS(f.check_finite(), Error);
}

TEST_CASE("half-line weights are spectrally accurate for power densities") {
  // int_0^inf x^s e^{-x^2} dx = Gamma((s + 1) / 2) / 2.
  for (double s : {0.0, 1.0, 2.0, 2.6, 4.0, 0.3}) {
    const int half = 200;
    const double h = 8.0 / half;
    const auto w = half_line_weights(s, half, h);
    double sum = 0.0;
    for (int p = 0; p < half; ++p) {
      const double x = (p + 0.5) * h;
      sum += w[p] * std::exp(-x * x);
    }
    CHECK(sum == doctest::Approx(0.5 * std::tgamma(0.5 * (s + 1))).epsilon(1e-11));
  }
}

TEST_CASE("weighted quadrature reproduces the Gaussian moment") {
  for (double k : {0.0, 0.5, 1.0, 2.0}) {
    const WeightContext ctx(RootSystemSpec::rank1(k));
    const GridSpec g = line(512, 12.0);
    const GridFunction f =
        GridFunction::sample(g, [](const Vec& u) { return cplx(std::exp(-0.5 * u.squaredNorm())); });
    const double exact = std::pow(2.0, k + 0.5) * std::tgamma(k + 0.5);
    CHECK(integrate_weighted(f, ctx).real() == doctest::Approx(exact).epsilon(1e-12));
    CHECK(lp_norm(f, ctx, 2.0) ==
          doctest::Approx(std::sqrt(std::pow(2.0, -k - 0.5) * exact)).epsilon(1e-12));
    CHECK(lp_norm(f, ctx, p_infinity) == doctest::Approx(std::exp(-0.5 * 0.0234375 * 0.0234375)));
  }
}

TEST_CASE("product quadrature factors over axes") {
  const std::vector<double> k{0.5, 1.5};
  const WeightContext ctx(RootSystemSpec::z2_product(k));
  const GridSpec g{2, 10.0, 256};
  const Quadrature q(ctx, g);
  CHECK(q.is_product());
  const GridFunction f =
      GridFunction::sample(g, [](const Vec& u) { return cplx(std::exp(-0.5 * u.squaredNorm())); });
  const double exact = std::pow(2.0, 1.0) * std::tgamma(1.0) * std::pow(2.0, 2.0) * std::tgamma(2.0);
  CHECK(q.integrate(f).real() == doctest::Approx(exact).epsilon(1e-11));
}

TEST_CASE("tail mass and windows") {
  const WeightContext ctx(RootSystemSpec::rank1(1.0));
  const GridSpec g = line(256, 10.0);
  const Quadrature q(ctx, g);
  const GridFunction gauss =
      GridFunction::sample(g, [](const Vec& u) { return cplx(std::exp(-0.5 * u.squaredNorm())); });
  CHECK(tail_mass(gauss, q) < 1e-15);
  const GridFunction flat = GridFunction::sample(g, [](const Vec&) { return cplx(1.0); });
  CHECK(tail_mass(flat, q) > 0.1);
  const GridFunction w = window_ball(flat, Vec::Constant(1, 2.0), 1.0);
  for (std::size_t i = 0; i < g.size(); ++i)
    CHECK(w[i].real() == (std::abs(g.point(i)[0] - 2.0) <= 1.0 ? 1.0 : 0.0));
}

TEST_CASE("radial profiles") {
  const RadialProfile p =
      RadialProfile::from_function([](double r) { return 1.0 - r * r; }, 1.0, 1001);
  CHECK(p(0.5) == doctest::Approx(0.75).epsilon(1e-6));
  CHECK(p(1.5) == 0.0);
  const GridSpec g{2, 1.0, 16};
  const GridFunction f = radialize(p, g);
  for (std::size_t i = 0; i < g.size(); ++i) {
    const double r = g.point(i).norm();
    CHECK(f[i].real() == doctest::Approx(r <= 1.0 ? 1.0 - r * r : 0.0).epsilon(1e-5));
  }
}

TEST_CASE("csv output has a fixed header") {
  std::ostringstream out;
  write_csv(out, GridFunction::sample(line(2, 1.0), [](const Vec& u) { return cplx(u[0], 1.0); }));
  CHECK(out.str() == "x_1,re,im\n-0.5,-0.5,1\n0.5,0.5,1\n");
}

}  // TEST_SUITE
