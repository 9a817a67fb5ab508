#include <doctest.h>

#include <cmath>
#include <vector>

#include "dunkl/error.hpp"
#include "dunkl/reflection.hpp"

using namespace dunkl;

namespace {

Vec vec2(double a, double b) {
  Vec v(2);
  v << a, b;
  return v;
}

bool has_issue(const std::vector<ValidationIssue>& issues, const std::string& kind) {
  for (const auto& i : issues)
    if (i.kind == kind) return true;
  return false;
}

}  // namespace

TEST_SUITE("reflection_core") {

TEST_CASE("reflection is an involutive isometry fixing the hyperplane") {
  const Vec alpha = vec2(1.0, 2.0);
  const Vec x = vec2(0.3, -1.7);
  CHECK((reflect(alpha, reflect(alpha, x)) - x).norm() < 1e-14);
  CHECK(std::abs(reflect(alpha, x).norm() - x.norm()) < 1e-14);
  CHECK((reflect(alpha, alpha) + alpha).norm() < 1e-14);
  const Vec on_plane = vec2(2.0, -1.0);
  CHECK((reflect(alpha, on_plane) - on_plane).norm() < 1e-14);
  const Mat s = reflection_matrix(alpha);
  CHECK((s * s - Mat::Identity(2, 2)).norm() < 1e-14);
  CHECK(std::abs(s.determinant() + 1.0) < 1e-14);
  CHECK_THROWS_AS(reflect(Vec::Zero(2), x), Error);
}

TEST_CASE("catalog group orders") {
  CHECK(generate_group(RootSystemSpec::rank1(1.0)).order() == 2);
  const std::vector<double> k3{0.5, 1.0, 2.0};
  CHECK(generate_group(RootSystemSpec::z2_product(k3)).order() == 8);
  CHECK(generate_group(RootSystemSpec::b2(0.5, 1.0)).order() == 8);
  CHECK(generate_group(RootSystemSpec::a2(1.0)).order() == 6);
}

TEST_CASE("group elements are orthogonal and closed under products") {
  const ReflectionGroup g = generate_group(RootSystemSpec::b2(1.0, 2.0));
  for (const Mat& a : g.elements) {
    CHECK((a.transpose() * a - Mat::Identity(2, 2)).norm() < 1e-12);
    for (const Mat& b : g.elements) {
      bool found = false;
      for (const Mat& c : g.elements) found = found || (a * b - c).norm() < 1e-10;
      CHECK(found);
    }
  }
  CHECK((g.elements[g.identity_index()] - Mat::Identity(2, 2)).norm() == 0.0);
}

TEST_CASE("validation reports closure and invariance failures") {
  CHECK(validate_root_system(RootSystemSpec::b2(1.0, 2.0)).empty());

  RootSystemSpec missing;
  missing.dimension = 2;
  missing.roots = {vec2(1, 0), vec2(-1, 0), vec2(0, 1)};
  missing.multiplicity = {1, 1, 1};
  CHECK(has_issue(validate_root_system(missing), "closure"));

  RootSystemSpec variant = RootSystemSpec::a2(1.0);
  variant.multiplicity[0] = 2.0;
  CHECK(has_issue(validate_root_system(variant), "multiplicity_invariance"));

  RootSystemSpec zero = RootSystemSpec::rank1(1.0);
  zero.roots.push_back(Vec::Zero(1));
  zero.multiplicity.push_back(1.0);
  CHECK(has_issue(validate_root_system(zero), "zero_root"));
}

TEST_CASE("an irrational angle does not generate a finite group") {
  const double t = 1.0;  // radians, not a rational multiple of pi
  RootSystemSpec spec;
  spec.dimension = 2;
  spec.roots = {vec2(1, 0), vec2(-1, 0), vec2(std::cos(t), std::sin(t)),
                vec2(-std::cos(t), -std::sin(t))};
  spec.multiplicity = {1, 1, 1, 1};
  CHECK_THROWS_AS(generate_group(spec, 64), Error);
}

TEST_CASE("positive roots pick one of each pair") {
  const RootSystemSpec a2 = RootSystemSpec::a2(1.0);
  CHECK(a2.positive_roots().size() == 3);
  for (const Vec& r : a2.positive_roots()) {
    const double lead = std::abs(r[0]) > 1e-12 ? r[0] : r[1];
    CHECK(lead > 0.0);
  }
}

TEST_CASE("weights, gamma and homogeneous dimension") {
  const WeightContext b2(RootSystemSpec::b2(0.5, 2.0));
  CHECK(b2.gamma_k() == doctest::Approx(0.5 * 2 + 2.0 * 2));
  CHECK(b2.homogeneous_dimension() == doctest::Approx(2 + 2 * 5.0));
  const Vec x = vec2(0.7, -0.2);
  const double h = std::pow(0.7, 0.5) * std::pow(0.2, 0.5) * std::pow(0.9, 2.0) * std::pow(0.5, 2.0);
  CHECK(b2.weight(x) == doctest::Approx(h).epsilon(1e-12));
  CHECK(b2.weight_squared(x) == doctest::Approx(h * h).epsilon(1e-12));
  CHECK_FALSE(b2.axis_multiplicities().has_value());

  const std::vector<double> k{0.5, 2.0};
  const WeightContext z2(RootSystemSpec::z2_product(k));
  REQUIRE(z2.axis_multiplicities().has_value());
  CHECK((*z2.axis_multiplicities())[1] == 2.0);
}

TEST_CASE("ball measure matches the rank-one closed form and scales homogeneously") {
  for (double k : {0.0, 0.5, 1.0, 2.0}) {
    const WeightContext ctx(RootSystemSpec::rank1(k));
    const double r = 1.3;
    const double exact = 2.0 * std::pow(r, 2 * k + 1) / (2 * k + 1);
    CHECK(ball_measure(ctx, Vec::Zero(1), r, 4096) == doctest::Approx(exact).epsilon(1e-5));
  }
  const WeightContext b2(RootSystemSpec::b2(0.5, 1.0));
  const double m1 = ball_measure(b2, Vec::Zero(2), 1.0, 512);
  const double m2 = ball_measure(b2, Vec::Zero(2), 2.0, 512);
  CHECK(m2 / m1 == doctest::Approx(std::pow(2.0, b2.homogeneous_dimension())).epsilon(1e-3));
}

TEST_CASE("orbit distances") {
  const ReflectionGroup g = generate_group(RootSystemSpec::b2(1.0, 1.0));
  const Vec x = vec2(1.0, 2.0);
  CHECK(orbit(g, x).size() == 8);
  CHECK(orbit_distance(g, x, vec2(-2.0, 1.0)) < 1e-14);
  CHECK(orbit_distance(g, x, vec2(1.0, 2.5)) == doctest::Approx(0.5));
  CHECK(orbit_max_distance(g, x, x) == doctest::Approx(2.0 * x.norm()));
}

TEST_CASE("orbit regions") {
  const ReflectionGroup g = generate_group(RootSystemSpec::rank1(1.0));
  Vec c(1), y(1);
  c << 2.0;
  y << -2.3;
  CHECK_FALSE(region_membership({c, 0.5, RegionKind::ball}, g, y));
  CHECK(region_membership({c, 0.5, RegionKind::orbit_union}, g, y));
  CHECK(region_membership({c, 0.5, RegionKind::doubled_ball}, g, Vec::Constant(1, 2.9)));
  CHECK_FALSE(region_membership({c, 0.5, RegionKind::orbit_intersection}, g, y));
}

TEST_CASE("separation lemma holds on samples") {
  const ReflectionGroup g = generate_group(RootSystemSpec::b2(1.0, 1.0));
  const SeparationReport rep = separation_check(g, vec2(2.0, 0.5), 0.5, 2000, 3);
  CHECK(rep.pairs > 0);
  CHECK(rep.violations == 0);
  CHECK(rep.min_slack >= 0.0);
}

}  // TEST_SUITE
