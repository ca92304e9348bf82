#pragma once

#include <json.hpp>

#include <ostream>
#include <vector>

#include "tasep/bijection.hpp"
#include "tasep/distribution.hpp"
#include "tasep/tableaux.hpp"
#include "tasep/weights.hpp"

namespace tasep {

using Json = nlohmann::ordered_json;

Json to_json(const Tree& t);
Json to_json(const MarkedTree& t);
Json to_json(const std::vector<Cycle>& cycles);

/// [{"l": int, "r": int, "c": int}, ...] in canonical term order.
Json to_json(const WeightPolynomial& p);

/// {"n": int, "weights": [{"config": "10", "poly": [...]}, ...], "Z": [...]}
Json to_json(const StationaryWeights& w);

/// {"shape": [ints], "fill": [[0/1 per row]], "index": int}
Json to_json(const CatalanTableau& tab);
CatalanTableau tableau_from_json(const Json& j);

/// Exact "p/q" strings, one per site.
Json profile_to_json(const std::vector<Rational>& rho);

/// CSV with header "config,probability". Probabilities are exact "p/q"
/// unless `decimals` is nonnegative.
void write_distribution_csv(std::ostream& os, const StationaryDistribution& dist, int decimals = -1);

}  // namespace tasep
