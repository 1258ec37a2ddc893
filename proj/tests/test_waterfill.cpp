#include "doctest.h"

#include <cmath>

#include "netsearch/family.hpp"
#include "netsearch/waterfill.hpp"
#include "support.hpp"

using namespace netsearch;
using namespace testsupport;

TEST_SUITE("waterfill") {

TEST_CASE("search time equals f(d) everywhere") {
  auto star2 = make_star({1.0, 1.0});
  auto ws = waterfill(star2);
  CHECK(*ws.time_of(star2.vertex_point("tip0")) == doctest::Approx(2.0));

  auto fig = make_figure3(2);
  auto wf = waterfill(fig);
  auto leaf = fig.vertex_point("leaf0");
  CHECK(fig.distance(leaf) == doctest::Approx(3.0));
  CHECK(*wf.time_of(leaf) == doctest::Approx(6.0));

  auto y = make_y(1.0, 2.0);
  auto wy = waterfill(y);
  CHECK(*wy.time_of(y.point_by_id("right", 1.0)) == doctest::Approx(3.0));
}

TEST_CASE("serialized waterfill segments are a valid expanding search") {
  for (auto& [name, net] : corpus25()) {
    CAPTURE(name);
    auto ws = waterfill(net);
    ws.validate();
    CHECK(ws.total_measure() == doctest::Approx(net.total_measure()).epsilon(1e-9));
  }
}

TEST_CASE("det_ratio closed forms") {
  for (int m : {2, 3, 7})
    CHECK(det_ratio(make_star(std::vector<double>(m, 1.0))) == doctest::Approx(m).epsilon(1e-12));
  for (int n : {2, 3, 5})
    CHECK(det_ratio(make_figure3(n)) == doctest::Approx(n).epsilon(1e-12));
  CHECK(det_ratio(make_y(1, 2)) == doctest::Approx(1.5));
}

TEST_CASE("det_ratio stabilizes on star families") {
  for (int m : {2, 3, 7}) {
    auto result = det_ratio(make_star_family(m), 20);
    CHECK(result.sigma == doctest::Approx(m).epsilon(1e-12));
    CHECK(result.stabilized_radius <= 4.0);
  }
}

TEST_CASE("det_ratio budget error on a family whose sup never settles") {
  // branches sprout from the trunk at distances 2^i and keep growing, so
  // f(r)/r rises toward 9 without ever attaining it
  NetworkFamily slow;
  slow.name = "escalator";
  slow.growth_bound = 9;
  slow.make_ball = [](double r) {
    std::vector<std::string> vids{"b0"};
    std::vector<MetricNetwork::ArcSpec> specs;
    std::string prev = "b0";
    double prev_d = 0.0;
    for (int i = 1; i <= 8; ++i) {
      double sprout = 3.0 * std::exp2(i - 2);  // strictly between probe radii
      if (sprout >= r) break;
      std::string node = "b" + std::to_string(i);
      vids.push_back(node);
      specs.push_back({"trunk" + std::to_string(i), prev, node, sprout - prev_d});
      vids.push_back("t" + std::to_string(i));
      specs.push_back({"branch" + std::to_string(i), node, "t" + std::to_string(i), r - sprout});
      prev = node;
      prev_d = sprout;
    }
    vids.push_back("tip");
    specs.push_back({"trunk_end", prev, "tip", r - prev_d});
    return MetricNetwork(std::move(vids), std::move(specs), "b0");
  };
  CHECK_THROWS_AS(det_ratio(slow, 3), BudgetError);
  CHECK_THROWS_AS(det_ratio(slow, 20), BudgetError);
}

TEST_CASE("water-filling is optimal against random schedules") {
  Rng seeds(404);
  int nets_checked = 0;
  for (auto& [name, net] : corpus25()) {
    if (nets_checked >= 20) break;
    ++nets_checked;
    CAPTURE(name);
    double best = waterfill(net).sup_normalized_ratio().value;
    for (int k = 0; k < 50; ++k) {
      Rng rng(derive_seed(505, nets_checked * 100 + k));
      auto other = random_schedule(net, rng);
      auto sup = other.sup_normalized_ratio();
      double value = sup.infinite ? kInf : sup.value;
      CHECK(best <= value + 1e-9);
    }
  }
}

}  // TEST_SUITE
