#include <doctest.h>

#include <cmath>

#include "dunkl/translation.hpp"

using namespace dunkl;

namespace {

double gauss_profile(double s) { return std::exp(-0.5 * s * s); }

GridFunction gaussian(const GridSpec& g) {
  return GridFunction::sample(g, [](const Vec& u) { return cplx(gauss_profile(u.norm())); });
}

Vec pt(double v) { return Vec::Constant(1, v); }

}  // namespace

TEST_SUITE("translation_convolution") {

TEST_CASE("representing measure is a probability measure with known moments") {
  for (double k : {0.25, 0.5, 1.0, 2.0, 3.5}) {
    const RepresentingMeasure mu(1.7, k);
    CHECK(mu.mass() == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(mu.moment(1) == doctest::Approx(1.7 / (2 * k + 1)).epsilon(1e-12));
    CHECK(mu.moment(2) == doctest::Approx(1.7 * 1.7 / (2 * k + 1)).epsilon(1e-12));
    CHECK(mu.density(0.5) > 0.0);
    CHECK(mu.density(2.0) == 0.0);
  }
  CHECK(RepresentingMeasure(0.0, 1.0).point_mass());
}

TEST_CASE("intertwiner maps x to x/(2k+1) and fixes constants") {
  CHECK(intertwine([](double) { return 1.0; }, 0.8, 1.0) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(intertwine([](double e) { return e; }, 0.8, 1.0) ==
        doctest::Approx(0.8 / 3.0).epsilon(1e-12));
}

TEST_CASE("Gaussian translate against the closed form") {
  // tau_x G(-y) = e^{-(x^2 + y^2)/2} E_k(x, y); 40-digit value at k = 1,
  // x = 1.3, y = 0.4.
  const double oracle = 0.48525360390200167674;
  const WeightContext ctx(RootSystemSpec::rank1(1.0));
  const GridSpec g{1, 20.0, 2048};
  const DunklTransform t(ctx, g);
  const Spectrum ff = t.forward(gaussian(g));
  CHECK(translate_spectral_at(ff, pt(1.3), pt(-0.4), t).real() ==
        doctest::Approx(oracle).epsilon(1e-9));
  const std::vector<double> k{1.0};
  CHECK(translate_radial(gauss_profile, 20.0, pt(1.3), pt(0.4), k).value ==
        doctest::Approx(oracle).epsilon(1e-10));
}

TEST_CASE("k = 0 translation is the classical shift") {
  const WeightContext ctx(RootSystemSpec::rank1(0.0));
  const GridSpec g{1, 20.0, 2048};
  const DunklTransform t(ctx, g);
  const GridFunction f = GridFunction::sample(
      g, [](const Vec& u) { return cplx(std::exp(-0.5 * (u[0] - 0.3) * (u[0] - 0.3)) * (1 + u[0])); });
  const TranslationResult r = translate_spectral(f, pt(1.1), t);
  double err = 0.0;
  for (std::size_t i = 0; i < g.size(); ++i) {
    const double y = g.point(i)[0] + 1.1;
    err = std::max(err, std::abs(r.values[i] - std::exp(-0.5 * (y - 0.3) * (y - 0.3)) * (1 + y)));
  }
  CHECK(err < 1e-9);
}

TEST_CASE("signed rank-one translation reproduces constants and the spectral route") {
  for (double k : {0.5, 1.0, 2.0}) {
    CHECK(translate_rank1([](double) { return 1.0; }, 0.9, -0.6, k) ==
          doctest::Approx(1.0).epsilon(1e-10));
    const WeightContext ctx(RootSystemSpec::rank1(k));
    const GridSpec g{1, 20.0, 2048};
    const DunklTransform t(ctx, g);
    auto fn = [](double z) { return std::exp(-0.5 * (z - 0.5) * (z - 0.5)); };
    const GridFunction f = GridFunction::sample(g, [&](const Vec& u) { return cplx(fn(u[0])); });
    const Spectrum ff = t.forward(f);
    for (double x : {0.4, 1.2})
      for (double y : {-0.7, 0.3, 1.5})
        CHECK(translate_rank1(fn, x, y, k) ==
              doctest::Approx(translate_spectral_at(ff, pt(x), pt(y), t).real()).epsilon(1e-6));
  }
}

TEST_CASE("Gaussian self-convolution") {
  for (double k : {0.0, 0.5, 2.0}) {
    const WeightContext ctx(RootSystemSpec::rank1(k));
    const GridSpec g{1, 20.0, 2048};
    const DunklTransform t(ctx, g);
    const GridFunction c = convolve(gaussian(g), gaussian(g), t);
    double err = 0.0;
    for (std::size_t i = 0; i < g.size(); ++i) {
      const double x = g.point(i)[0];
      err = std::max(err, std::abs(c[i] - std::pow(2.0, -k - 0.5) * std::exp(-0.25 * x * x)));
    }
    CHECK(err < 1e-8);
  }
}

TEST_CASE("property suite, Young and the L2 bound pass for a Gaussian") {
  const WeightContext ctx(RootSystemSpec::rank1(1.0));
  const GridSpec g{1, 20.0, 1024};
  const DunklTransform t(ctx, g);
  PropertySuiteInput in;
  in.f = [](const Vec& u) { return cplx(std::exp(-0.5 * u.squaredNorm())); };
  in.g = [](const Vec& u) { return cplx(std::exp(-0.5 * (u[0] - 0.5) * (u[0] - 0.5)) * (1 + u[0])); };
  in.x = pt(1.3);
  in.samples = 8;
  CHECK(translation_property_suite(in, t).passed());
  CHECK(young_check(GridFunction::sample(g, in.f), GridFunction::sample(g, in.g), t).passed());
  const ProbeReport l2 = uniform_bound_probe({GridFunction::sample(g, in.g)}, {pt(0.5), pt(-2.0)}, 2.0, t);
  CHECK(l2.passed());
}

TEST_CASE("translates of a bump stay in the orbit ball") {
  const WeightContext ctx(RootSystemSpec::rank1(1.0));
  CHECK(support_sharpness_check(0.5, pt(2.0), ctx, GridSpec{1, 20.0, 2048}).passed());
}

TEST_CASE("annular profile is smooth and supported on its shell") {
  CHECK(annular_profile(0.5, 1.0, 2.0) == 0.0);
  CHECK(annular_profile(2.5, 1.0, 2.0) == 0.0);
  CHECK(annular_profile(1.5, 1.0, 2.0) > 0.0);
  const RadialProfile b = bump_profile(0.5);
  CHECK(b(0.0) == doctest::Approx(1.0));
  CHECK(b(0.6) == 0.0);
}

}  // TEST_SUITE
