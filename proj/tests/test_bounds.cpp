#include "doctest.h"

#include <cmath>

#include "netsearch/bounds.hpp"
#include "netsearch/waterfill.hpp"
#include "support.hpp"

using namespace netsearch;
using namespace testsupport;

TEST_SUITE("bounds") {

TEST_CASE("subset stats") {
  auto star = make_star({1, 1, 1, 1});
  auto ball = ball_subset(star, 0.6);
  auto stats = subset_stats(ball);
  CHECK(stats.min_distance == doctest::Approx(0.0));
  CHECK(stats.measure == doctest::Approx(2.4));
  CHECK(stats.mean_distance == doctest::Approx(0.3));

  auto y = make_y(1, 1);
  ShortestPathTree yt(y);
  auto pair = subtree_subset(yt, y.vertex_index("v"), 5.0);
  auto pstats = subset_stats(pair);
  CHECK(pstats.min_distance == doctest::Approx(1.0));
  CHECK(pstats.measure == doctest::Approx(2.0));
  CHECK(pstats.mean_distance == doctest::Approx(1.5));

  auto line = make_star({3.0});
  Subnetwork seg(&line, {{0, 0.5, 2.0}});
  auto sstats = subset_stats(seg);
  CHECK(sstats.min_distance == doctest::Approx(0.5));
  CHECK(sstats.mean_distance == doctest::Approx(1.25));
}

TEST_CASE("disconnected subsets are rejected; zero measure is rejected") {
  auto star = make_star({1, 1});
  CHECK_THROWS_AS(Subnetwork(&star, {{0, 0.5, 1.0}, {1, 0.5, 1.0}}), DomainError);
  CHECK_THROWS_AS(Subnetwork(&star, {{0, 0.5, 0.5}}), DomainError);
  // touching at the center vertex is connected
  Subnetwork ok(&star, {{0, 0.0, 0.5}, {1, 0.0, 0.5}});
  CHECK(ok.measure() == doctest::Approx(1.0));
}

TEST_CASE("hider lower bound closed forms") {
  auto y = make_y(1, 1);
  ShortestPathTree yt(y);
  CHECK(hider_lower_bound(subtree_subset(yt, y.vertex_index("v"), 5.0)) ==
        doctest::Approx(4.0 / 3.0));

  // root ball of radius below the shortest root arc gives exactly deg(O)
  for (auto& [name, net] : corpus25()) {
    CAPTURE(name);
    double shortest = kInf;
    for (auto [a, side] : net.incident(net.root())) shortest = std::min(shortest, net.arc(a).len);
    double r0 = shortest * 0.7;
    CHECK(hider_lower_bound(ball_subset(net, r0)) ==
          doctest::Approx(net.root_degree()).epsilon(1e-12));
  }

  // parameterized Y subsets reproduce 1 + 2xy/(x(x+2) + y(y+2))
  auto y12 = make_y(1, 2);
  ShortestPathTree y12t(y12);
  for (auto [x, yy] : std::vector<std::pair<double, double>>{{0.7, 1.3}, {1.0, std::sqrt(3.0)},
                                                             {0.5, 2.0}}) {
    double closed = 1.0 + 2 * x * yy / (x * (x + 2) + yy * (yy + 2));
    CHECK(hider_lower_bound(subtree_subset(y12t, y12.vertex_index("v"), {x, yy})) ==
          doctest::Approx(closed).epsilon(1e-12));
  }
}

TEST_CASE("degree bound") {
  CHECK(degree_bound(make_star({1, 1, 1, 1})) == 4);
  CHECK(degree_bound(make_y(1, 5)) == 1);
  CHECK(degree_bound(concave_example()) == 3);
  CHECK(degree_bound(make_star_family(4)) == 4);
}

TEST_CASE("concavity certificate") {
  auto star = make_star({1, 1, 1});
  auto cert = concavity_certificate(RadiusProfile::of(star), 3);
  CHECK(cert.concave);
  CHECK(cert.value == doctest::Approx(3.0));

  auto fig = make_figure3(2);
  auto cert2 = concavity_certificate(RadiusProfile::of(fig), 1);
  CHECK(!cert2.concave);
  CHECK(cert2.alpha == doctest::Approx(2.0));

  auto cert3 = concavity_certificate(RadiusProfile::of(concave_example()), 3);
  CHECK(cert3.concave);
  CHECK(cert3.value == doctest::Approx(3.0));
}

TEST_CASE("level lower bound") {
  for (int m : {2, 3, 5})
    CHECK(level_lower_bound(RadiusProfile::of(make_star(std::vector<double>(m, 1.0))), 0) ==
          doctest::Approx(m));
  CHECK(level_lower_bound(RadiusProfile::of(make_y(1, 1)), 1) == doctest::Approx(1.25));
  // vanishing factor when all mass sits at distance 2^j
  CHECK(level_lower_bound_terms(3.0, 3.0 * std::exp2(4), 4) == doctest::Approx(0.0));
  CHECK_THROWS_AS(level_lower_bound_terms(0.0, 0.0, 1), DomainError);
}

TEST_CASE("level bound never exceeds the hider bound on the same set") {
  for (auto& [name, net] : corpus25()) {
    CAPTURE(name);
    auto profile = RadiusProfile::of(net);
    int j_hi = static_cast<int>(std::ceil(std::log2(net.r_max())));
    for (int j = j_hi; j > j_hi - 6; --j) {
      if (!(profile.value(std::exp2(j)) > 0)) break;
      double level = level_lower_bound(profile, j);
      double hider = hider_lower_bound(ball_subset(net, std::exp2(j)));
      CHECK(level <= hider + 1e-9);
    }
  }
}

TEST_CASE("postman uniform lower bound") {
  for (int m : {2, 3, 4}) {
    auto star = make_star(std::vector<double>(m, 1.0));
    for (double r : {0.4, 1.0})
      CHECK(pathwise_uniform_lower_bound(star, r) == doctest::Approx(m));
  }
  CHECK(pathwise_uniform_lower_bound(make_star({1.0}), 1.0) == doctest::Approx(1.0));
  // closed postman tour of y(1,1) has length 6: bound 6/4 at r = 2
  CHECK(pathwise_uniform_lower_bound(make_y(1, 1), 2.0) == doctest::Approx(1.5));
}

TEST_CASE("sandwich on closed forms") {
  auto report = sandwich(make_star({1, 1, 1}), SearchMode::Expanding);
  CHECK(report.rho_lo == doctest::Approx(3.0).epsilon(1e-9));
  CHECK(report.rho_hi == doctest::Approx(3.0));
  CHECK(report.consistent);

  auto fig = sandwich(make_figure3(4), SearchMode::Expanding);
  CHECK(fig.rho_hi == doctest::Approx(4.0));
  CHECK(fig.rho_lo >= 2.0 - 1e-9);

  auto y12 = sandwich(make_y(1, 2), SearchMode::Expanding);
  double v12 = 1.0 + (std::sqrt(3.0) - 1.0) / 2.0;
  CHECK(y12.rho_lo == doctest::Approx(v12).epsilon(1e-6));
}

TEST_CASE("sandwich family wrapper") {
  auto report = sandwich(make_star_family(3), SearchMode::Expanding);
  CHECK(report.rho_lo == doctest::Approx(3.0).epsilon(1e-9));
  CHECK(report.rho_hi == doctest::Approx(3.0));
}

TEST_CASE("sandwich holds sigma/2 and stays below sigma across the corpus") {
  for (auto& [name, net] : corpus25()) {
    CAPTURE(name);
    double sigma = det_ratio(net);
    auto report = sandwich(net, SearchMode::Expanding);
    CHECK(report.rho_lo >= sigma / 2.0 - 1e-9);
    CHECK(report.rho_hi == doctest::Approx(sigma));
    for (const BoundEntry& e : report.lower) CHECK(e.value <= sigma + 1e-9);
    CHECK(report.consistent);
  }
}

TEST_CASE("pathwise sandwich is consistent and anchored by postman bounds") {
  for (auto& name : {std::string("star"), std::string("y11")}) {
    auto net = name == "star" ? make_star({1, 1, 1}) : make_y(1, 1);
    auto report = sandwich(net, SearchMode::Pathwise);
    CHECK(report.consistent);
    CHECK(report.rho_lo <= report.rho_hi + 1e-9);
    if (name == "star") CHECK(report.rho_lo >= 3.0 - 1e-9);
  }
}

TEST_CASE("hider certificates hold against random schedules, replayed exactly") {
  int nets = 0;
  for (auto& [name, net] : corpus25()) {
    if (++nets > 6) break;
    CAPTURE(name);
    ShortestPathTree tree(net);
    SandwichOptions opts;
    opts.scan_points = 8;
    opts.golden_iters = 24;
    opts.refine_rounds = 1;
    auto candidates = hider_candidates(net, tree, opts);
    int idx = 0;
    for (auto& [subset, entry] : candidates) {
      ++idx;
      for (int k = 0; k < 5; ++k) {
        Rng rng(derive_seed(880000 + nets, idx * 10 + k));
        auto schedule = random_schedule(net, rng);
        double payoff = expected_time_uniform(schedule, subset) / subset.mean_distance();
        CHECK(payoff >= entry.value - 1e-9);
      }
    }
  }
}

TEST_CASE("expected_time_uniform matches a direct average on a simple case") {
  auto star = make_star({1, 1});
  std::vector<ScheduleSegment> segs{{0, 0.0, 1.0, 1.0}, {1, 0.0, 1.0, 2.0}};
  auto sched = ExpandingSchedule::from_segments(&star, std::move(segs));
  // uniform over both rays: mean of (0.5) and (1.5)
  CHECK(expected_time_uniform(sched, whole_subset(star)) == doctest::Approx(1.0));
}

}  // TEST_SUITE
