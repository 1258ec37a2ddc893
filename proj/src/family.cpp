#include "netsearch/family.hpp"

#include <sstream>

namespace netsearch {

MetricNetwork make_star(const std::vector<double>& ray_lengths) {
  if (ray_lengths.empty()) throw DomainError("star needs at least one ray");
  std::vector<std::string> vids{"O"};
  std::vector<MetricNetwork::ArcSpec> specs;
  for (std::size_t i = 0; i < ray_lengths.size(); ++i) {
    if (!(ray_lengths[i] > 0.0)) throw DomainError("star ray length must be positive");
    std::string tip = "tip" + std::to_string(i);
    vids.push_back(tip);
    specs.push_back({"ray" + std::to_string(i), "O", tip, ray_lengths[i]});
  }
  return MetricNetwork(std::move(vids), std::move(specs), "O");
}

NetworkFamily make_star_family(int rays) {
  if (rays < 1) throw DomainError("star family needs a positive ray count");
  NetworkFamily family;
  family.name = "star:" + std::to_string(rays);
  family.growth_bound = rays;
  family.make_ball = [rays](double r) {
    return make_star(std::vector<double>(static_cast<std::size_t>(rays), r));
  };
  return family;
}

MetricNetwork make_y(double left_len, double right_len) {
  if (!(left_len > 0.0) || !(right_len > 0.0)) throw DomainError("y-network arm lengths must be positive");
  if (right_len < left_len) throw DomainError("y-network requires M >= L");
  std::vector<std::string> vids{"O", "v", "lleaf", "rleaf"};
  std::vector<MetricNetwork::ArcSpec> specs{
      {"stem", "O", "v", 1.0}, {"left", "v", "lleaf", left_len}, {"right", "v", "rleaf", right_len}};
  return MetricNetwork(std::move(vids), std::move(specs), "O");
}

MetricNetwork make_figure3(int n) {
  if (n < 1) throw DomainError("figure3 parameter must be a positive integer");
  std::vector<std::string> vids{"O", "w"};
  std::vector<MetricNetwork::ArcSpec> specs{{"trunk", "O", "w", static_cast<double>(n)}};
  for (int i = 0; i < n * n; ++i) {
    std::string leaf = "leaf" + std::to_string(i);
    vids.push_back(leaf);
    specs.push_back({"pen" + std::to_string(i), "w", leaf, 1.0});
  }
  return MetricNetwork(std::move(vids), std::move(specs), "O");
}

namespace {

std::vector<double> parse_numbers(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      std::size_t used = 0;
      double x = std::stod(tok, &used);
      if (used != tok.size()) throw DomainError("bad number: " + tok);
      out.push_back(x);
    } catch (const std::exception&) {
      throw DomainError("bad number in family spec: " + tok);
    }
  }
  return out;
}

}  // namespace

std::variant<MetricNetwork, NetworkFamily> generate(const std::string& spec) {
  auto colon = spec.find(':');
  if (colon == std::string::npos) throw DomainError("family spec needs the form kind:params");
  std::string kind = spec.substr(0, colon);
  std::vector<double> args = parse_numbers(spec.substr(colon + 1));
  if (kind == "star") {
    if (args.empty()) throw DomainError("star spec needs a ray count");
    double mf = args[0];
    int m = static_cast<int>(mf);
    if (m < 1 || mf != m) throw DomainError("star ray count must be a positive integer");
    if (args.size() == 1) return make_star_family(m);
    if (args.size() == 2) return make_star(std::vector<double>(static_cast<std::size_t>(m), args[1]));
    if (static_cast<int>(args.size()) == m + 1)
      return make_star(std::vector<double>(args.begin() + 1, args.end()));
    throw DomainError("star spec: expected star:m, star:m,L or star:m,L1,...,Lm");
  }
  if (kind == "y") {
    if (args.size() != 2) throw DomainError("y spec: expected y:L,M");
    return make_y(args[0], args[1]);
  }
  if (kind == "figure3") {
    if (args.size() != 1 || args[0] != static_cast<int>(args[0]))
      throw DomainError("figure3 spec: expected figure3:n with integer n");
    return make_figure3(static_cast<int>(args[0]));
  }
  throw DomainError("unknown family kind: " + kind);
}

}  // namespace netsearch
