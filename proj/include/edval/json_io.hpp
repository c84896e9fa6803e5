#pragma once

#include <json.hpp>

#include "edval/claims.hpp"
#include "edval/edcore.hpp"
#include "edval/extalg.hpp"
#include "edval/symcalc.hpp"
#include "edval/zlattice.hpp"

namespace edval {

using Json = nlohmann::ordered_json;

/// JSON number when the value fits in int64, decimal string otherwise.
Json int_to_json(const Int& v);
/// Accepts a JSON integer or a decimal string.
Int int_from_json(const Json& j);

/// Arrays of arrays of decimal strings.
Json matrix_to_json(const IntMatrix& m);
IntMatrix matrix_from_json(const Json& j);

Json multivector_to_json(const Multivector& m);
Multivector multivector_from_json(const Json& j);

Json class_to_json(const SymbolClass& c);
SymbolClass class_from_json(const Json& j);

Json report_to_json(const EdReport& r);
/// Rebuilds the serialized fields of a report (a_omega keeps factors only).
EdReport report_from_json(const Json& j);

Json witness_to_json(const SubsetWitness& w);

}  // namespace edval
