#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "schubert/census.hpp"
#include "schubert/characters.hpp"
#include "schubert/node_set.hpp"
#include "schubert/sphericality.hpp"
#include "schubert/weight.hpp"

namespace schubert::io {

using Json = nlohmann::ordered_json;

/// Whitespace- or comma-separated decimal integers ("3 2 3 4", "2,3").
std::vector<int> parse_int_list(std::string_view text);

/// A word over {1..rank}. Throws InvalidInput on a bad letter.
Word parse_word(std::string_view text, int rank);
NodeSet parse_node_set(std::string_view text, int rank);
Weight parse_weight(std::string_view text, int rank);

/// Battery of weights: ';'-separated items, each either an explicit weight
/// or one of the keywords "fundamental", "rho", "2rho".
std::vector<Weight> parse_battery(std::string_view text, int rank);

Json to_json(const NodeSet& s);
Json to_json(const Weight& w);
Json to_json(const WeightPoly& f);
Json to_json(const std::vector<DecompositionEntry>& entries);
Json to_json(const CartanType& type, const ClassificationResult& r);
Json to_json(const CensusRecord& r);
Json to_json(const CartanType& type, const CensusSummary& s);
Json to_json(const CrossCheckReport& r);

CensusRecord census_record_from_json(const Json& j);

}  // namespace schubert::io
