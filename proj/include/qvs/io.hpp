#pragma once

// JSON serialization of the library values and the quiver file format.
// Every emitted document re-parses to an equal value; rationals are
// carried as "p/q" strings and orderings are canonical.

#include <string>

#include "json.hpp"
#include "qvs/crystal.hpp"
#include "qvs/levelrank.hpp"
#include "qvs/modrep.hpp"
#include "qvs/nonempty.hpp"
#include "qvs/strata.hpp"

namespace qvs {

using Json = nlohmann::ordered_json;

// quiver file: {"vertices": [...], "edges": [[a,b],...],
//               "orientation": [[a,b],...]} (orientation optional)
QuiverGraph parse_quiver(const Json& j);
QuiverGraph parse_quiver_file(const std::string& text);
Json quiver_to_json(const QuiverGraph& g);

Json dim_to_json(const DimVector& v);
DimVector dim_from_json(const Json& j);

Json rat_to_json(const Rat& x);
Rat rat_from_json(const Json& j);

Json cartan_to_json(const CartanMatrix& C);
CartanMatrix cartan_from_json(const Json& j);

Json zeta_to_json(const StabilityParam& z);
StabilityParam zeta_from_json(const Json& j);

Json face_to_json(const Face& f);
Face face_from_json(const Json& j);

Json root_table_to_json(const RootDatum& rd);
Json mult_table_to_json(const WeightMultTable& t);
WeightMultTable mult_table_from_json(const Json& j);

Json verdict_to_json(const CBVerdict& v);
CBVerdict verdict_from_json(const Json& j);

Json stratum_to_json(const StratumIndex& s);
StratumIndex stratum_from_json(const Json& j);

Json module_to_json(const GradedModule& m);

Json gyd_to_json(const GYD& g);
GYD gyd_from_json(const Json& j);

Json duality_to_json(const DualityReport& r);
DualityReport duality_from_json(const Json& j);

Json tensor_elem_to_json(const TensorElement& t);
Json crystal_weight_to_json(const CrystalWeight& w);

// Flat tab-separated rendering of a JSON document (path\tvalue lines).
std::string to_tsv(const Json& j);

}  // namespace qvs
