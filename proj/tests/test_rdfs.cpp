#include "doctest.h"

#include "netsearch/family.hpp"
#include "netsearch/rdfs.hpp"
#include "support.hpp"

using namespace netsearch;
using namespace testsupport;

namespace {

double expected_rdfs_time(const ShortestPathTree& spt, const PointRef& p) {
  auto heads = rdfs_schedule(spt, Coin::Heads);
  auto tails = rdfs_schedule(spt, Coin::Tails);
  return (*heads.time_of(p) + *tails.time_of(p)) / 2.0;
}

}  // namespace

TEST_SUITE("rdfs") {

TEST_CASE("single arc: both coins give the same schedule") {
  auto line = make_star({1.5});
  ShortestPathTree spt(line);
  auto heads = rdfs_schedule(spt, Coin::Heads);
  auto tails = rdfs_schedule(spt, Coin::Tails);
  auto p = line.point_by_id("ray0", 0.7);
  CHECK(*heads.time_of(p) == doctest::Approx(0.7));
  CHECK(*tails.time_of(p) == doctest::Approx(0.7));
  // lambda = d at the tip, so the bound is tight there
  CHECK(expected_rdfs_time(spt, line.vertex_point("tip0")) == doctest::Approx(1.5));
}

TEST_CASE("unit 2-star leaf: expectation 1.5 hits the bound") {
  auto star = make_star({1, 1});
  ShortestPathTree spt(star);
  CHECK(expected_rdfs_time(spt, star.vertex_point("tip0")) == doctest::Approx(1.5));
  CHECK(expected_rdfs_time(spt, star.vertex_point("tip1")) == doctest::Approx(1.5));
}

TEST_CASE("unit 3-star middle leaf: expectation 2 = (3 + 1)/2") {
  auto star = make_star({1, 1, 1});
  ShortestPathTree spt(star);
  CHECK(expected_rdfs_time(spt, star.vertex_point("tip1")) == doctest::Approx(2.0));
}

TEST_CASE("schedules are valid and cover the tree") {
  for (std::uint64_t seed : {61u, 62u, 63u}) {
    auto net = random_tree(seed, 10);
    ShortestPathTree spt(net);
    for (Coin c : {Coin::Heads, Coin::Tails}) {
      auto sched = rdfs_schedule(spt, c);
      sched.validate();
      CHECK(sched.total_measure() == doctest::Approx(net.total_measure()));
    }
  }
}

TEST_CASE("tails visits leaves in exactly the reverse order") {
  auto net = random_tree(77, 12);
  ShortestPathTree spt(net);
  auto leaf_order = [&](Coin c) {
    std::vector<int> leaves;
    for (int t : dfs_arc_order(spt, c)) {
      int child = spt.tree().arc(t).v;
      if (spt.children(child).empty()) leaves.push_back(child);
    }
    return leaves;
  };
  auto heads = leaf_order(Coin::Heads);
  auto tails = leaf_order(Coin::Tails);
  std::reverse(tails.begin(), tails.end());
  CHECK(heads == tails);
}

TEST_CASE("mixture bound: E[T] <= (lambda + d)/2 on 100 random trees x 100 points") {
  int violations = 0;
  for (int i = 0; i < 100; ++i) {
    auto net = random_tree(9000 + i, 4 + (i % 9));
    ShortestPathTree spt(net);
    auto heads = rdfs_schedule(spt, Coin::Heads);
    auto tails = rdfs_schedule(spt, Coin::Tails);
    double lambda = net.total_measure();
    Rng rng(100 + i);
    for (int k = 0; k < 100; ++k) {
      auto p = random_point(net, rng);
      double expect = (*heads.time_of(p) + *tails.time_of(p)) / 2.0;
      if (expect > (lambda + net.distance(p)) / 2.0 + 1e-9) ++violations;
    }
  }
  CHECK(violations == 0);
}

}  // TEST_SUITE
