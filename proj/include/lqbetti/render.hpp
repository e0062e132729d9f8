#ifndef LQBETTI_RENDER_HPP
#define LQBETTI_RENDER_HPP

#include <string>
#include <vector>

#include "json.hpp"
#include "lqbetti/betti.hpp"
#include "lqbetti/field.hpp"
#include "lqbetti/monomial.hpp"

namespace lqb {

// Grid with rows indexed by homological degree i and columns by internal
// degree j; with diagonal = true the columns are indexed by j - i instead,
// which flattens a d-linear strip into one column.
std::string render_betti_grid(const BettiTable& t, bool diagonal = false);

nlohmann::json betti_to_json(const BettiTable& t);

// Inverse of betti_to_json; rejects malformed entries.
BettiTable betti_from_json(const nlohmann::json& j);

nlohmann::json ring_to_json(const std::vector<std::string>& var_names,
                            const FieldSpec& field, const OrderSpec& order);

} // namespace lqb

#endif
