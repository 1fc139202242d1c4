// JSON forms of the engine's values.
//
//   state       {columns, layers: [[cols with −], …], rowOrder}
//   pattern     {rows: [[…], …]}
//   short       {l, a, m}
//   poly        {vars, terms: [{exponents, coeff}]}
//   coeff       {terms: [{g, h, u: [[num, den], …]}]}  or  [re, im]
//   whittaker   {entries: [{k, coeff}]}
//   gauss       {n, q, root, g: [[re, im], …], h: […]}
#pragma once

#include "json.hpp"

#include "metice/gauss.hpp"
#include "metice/lattice.hpp"
#include "metice/partition.hpp"
#include "metice/patterns.hpp"

namespace metice {

using json = nlohmann::ordered_json;

json coeff_to_json(const Coefficient& c);
Coefficient coeff_from_json(const json& j);

json poly_to_json(const LaurentPoly& p);
LaurentPoly poly_from_json(const json& j);

json state_to_json(const IceState& s, Family row_order);
/// Rebuilds the horizontal spins; throws std::invalid_argument for an inadmissible state.
IceState state_from_json(const json& j);

json pattern_to_json(const GTPattern& T);
GTPattern pattern_from_json(const json& j);

json short_pattern_to_json(const ShortPattern& t);
ShortPattern short_pattern_from_json(const json& j);

json whittaker_to_json(const WhittakerTable& t);
WhittakerTable whittaker_from_json(const json& j);

json gauss_to_json(const GaussTable& t);

}  // namespace metice
