#pragma once

#include <functional>
#include <string>
#include <variant>
#include <vector>

#include "netsearch/network.hpp"

namespace netsearch {

// Unbounded networks are reachable only through a ball generator: given r > 0
// it yields Q[r] as a concrete network. Generators must be monotone (Q[r] is
// isometrically contained in Q[r'] for r < r', with stable ids and offsets)
// and have at most growth_bound points at any distance from the root.
struct NetworkFamily {
  std::string name;
  int growth_bound = 0;
  std::function<MetricNetwork(double)> make_ball;

  MetricNetwork ball(double r) const {
    if (!(r > 0.0)) throw DomainError("family ball radius must be positive");
    return make_ball(r);
  }
};

MetricNetwork make_star(const std::vector<double>& ray_lengths);
NetworkFamily make_star_family(int rays);
MetricNetwork make_y(double left_len, double right_len);
MetricNetwork make_figure3(int n);

// Compact spec strings: "star:m" (unbounded family), "star:m,L" or
// "star:m,L1,...,Lm" (bounded), "y:L,M", "figure3:n".
std::variant<MetricNetwork, NetworkFamily> generate(const std::string& spec);

}  // namespace netsearch
