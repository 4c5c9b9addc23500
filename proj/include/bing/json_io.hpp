#pragma once

#include "bing/groups.hpp"
#include "bing/homology.hpp"
#include "bing/int_matrix.hpp"
#include "bing/presentation.hpp"
#include "bing/two_complex.hpp"

#include <json.hpp>

namespace bing {

using json = nlohmann::json;

// Integers are emitted as JSON numbers when they fit in 64 bits and as
// decimal strings otherwise; both forms are accepted on input.
json bigint_to_json(const bigint& v);
bigint bigint_from_json(const json& j);

json matrix_to_json(const IntMatrix& m);
IntMatrix matrix_from_json(const json& j);

json word_to_json(const Word& w);
Word word_from_json(const json& j);

json complex_to_json(const TwoComplex& x);
TwoComplex complex_from_json(const json& j);

json cellular_map_to_json(const CellularMapData& f);
CellularMapData cellular_map_from_json(const json& j);

json homology_to_json(const HomologySummary& h);

json group_to_json(const FiniteAbelianGroup& g);

}  // namespace bing
