#include "tasep/json_io.hpp"

namespace tasep {

Json to_json(const Tree& t) { return t.serialize(); }

Json to_json(const MarkedTree& t) { return t.serialize(); }

Json to_json(const std::vector<Cycle>& cycles) {
  Json out = Json::array();
  for (const Cycle& cycle : cycles) {
    Json row = Json::array();
    for (const MarkedTree& m : cycle) row.push_back(m.serialize());
    out.push_back(std::move(row));
  }
  return out;
}

Json to_json(const WeightPolynomial& p) {
  Json out = Json::array();
  for (const auto& [m, c] : p.terms()) out.push_back({{"l", m.l}, {"r", m.r}, {"c", c}});
  return out;
}

Json to_json(const StationaryWeights& w) {
  Json weights = Json::array();
  for (const auto& [config, poly] : w.weights) {
    weights.push_back({{"config", config.to_string()}, {"poly", to_json(poly)}});
  }
  return {{"n", w.n}, {"weights", std::move(weights)}, {"Z", to_json(w.partition)}};
}

Json to_json(const CatalanTableau& tab) {
  return {{"shape", tab.shape.rows()}, {"fill", tab.fill}, {"index", tab.index()}};
}

CatalanTableau tableau_from_json(const Json& j) {
  CatalanTableau tab{YoungDiagram(j.at("shape").get<std::vector<int>>()),
                     j.at("fill").get<std::vector<std::vector<int>>>()};
  return tab;
}

Json profile_to_json(const std::vector<Rational>& rho) {
  Json out = Json::array();
  for (const Rational& q : rho) out.push_back(to_string(q));
  return out;
}

void write_distribution_csv(std::ostream& os, const StationaryDistribution& dist, int decimals) {
  os << "config,probability\n";
  for (std::size_t s = 0; s < dist.probability.size(); ++s) {
    const Configuration c = Configuration::from_index(dist.n, s);
    const Rational& p = dist.probability[s];
    os << c.to_string() << ',' << (decimals < 0 ? to_string(p) : to_decimal(p, decimals)) << '\n';
  }
}

}  // namespace tasep
