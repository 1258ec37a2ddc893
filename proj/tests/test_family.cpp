#include "doctest.h"

#include "netsearch/family.hpp"
#include "netsearch/profile.hpp"

using namespace netsearch;

TEST_SUITE("family") {

TEST_CASE("star family balls grow linearly") {
  auto family = make_star_family(4);
  CHECK(family.growth_bound == 4);
  CHECK(family.ball(2.0).total_measure() == doctest::Approx(8.0));
  CHECK_THROWS_AS(family.ball(0.0), DomainError);
}

TEST_CASE("star family balls are nested with stable coordinates") {
  auto family = make_star_family(3);
  auto small = family.ball(1.0);
  auto big = family.ball(4.0);
  for (int a = 0; a < small.arc_count(); ++a) {
    int b = big.arc_index(small.arc(a).id);
    CHECK(big.arc(b).len >= small.arc(a).len);
    CHECK(big.distance(big.point(b, 0.5)) == doctest::Approx(small.distance(small.point(a, 0.5))));
  }
}

TEST_CASE("y generator matches its description") {
  auto y = make_y(1.0, 2.0);
  CHECK(y.arc_count() == 3);
  CHECK(y.total_measure() == doctest::Approx(4.0));
  CHECK(y.vertex_distance(y.vertex_index("v")) == doctest::Approx(1.0));
  CHECK_THROWS_AS(make_y(2.0, 1.0), DomainError);
  CHECK_THROWS_AS(make_y(0.0, 1.0), DomainError);
}

TEST_CASE("figure3 generator: length-n trunk plus n^2 unit pendants") {
  auto fig = make_figure3(3);
  CHECK(fig.arc_count() == 1 + 9);
  CHECK(fig.total_measure() == doctest::Approx(12.0));
  CHECK(RadiusProfile::of(fig).sigma() == doctest::Approx(3.0).epsilon(1e-12));
  CHECK_THROWS_AS(make_figure3(0), DomainError);
}

TEST_CASE("spec strings") {
  auto star_family = generate("star:4");
  CHECK(std::holds_alternative<NetworkFamily>(star_family));
  CHECK(std::get<NetworkFamily>(star_family).growth_bound == 4);

  auto star_net = generate("star:3,1.5");
  REQUIRE(std::holds_alternative<MetricNetwork>(star_net));
  CHECK(std::get<MetricNetwork>(star_net).total_measure() == doctest::Approx(4.5));

  auto star_mixed = generate("star:3,1,2,3");
  CHECK(std::get<MetricNetwork>(star_mixed).total_measure() == doctest::Approx(6.0));

  CHECK(std::get<MetricNetwork>(generate("y:1,2")).total_measure() == doctest::Approx(4.0));
  CHECK(std::get<MetricNetwork>(generate("figure3:2")).total_measure() == doctest::Approx(6.0));

  CHECK_THROWS_AS(generate("star:0"), DomainError);
  CHECK_THROWS_AS(generate("y:2,1"), DomainError);
  CHECK_THROWS_AS(generate("y:-1,1"), DomainError);
  CHECK_THROWS_AS(generate("blob:1"), DomainError);
  CHECK_THROWS_AS(generate("star"), DomainError);
}

TEST_CASE("family growth bound: f(r) <= M r") {
  auto family = make_star_family(5);
  for (double r : {0.5, 1.0, 7.0}) {
    auto profile = RadiusProfile::of(family.ball(r));
    for (auto& p : profile.breakpoints())
      if (p.r > 0) CHECK(p.f <= family.growth_bound * p.r + 1e-9);
  }
}

}  // TEST_SUITE
