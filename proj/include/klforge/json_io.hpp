#pragma once

// JSON encoders/decoders shared by the cache, the CLI and the reports.

#include <json.hpp>

#include "klforge/pbw.hpp"
#include "klforge/poly.hpp"
#include "klforge/segcomb.hpp"
#include "klforge/symgroup.hpp"

namespace klforge {

using Json = nlohmann::ordered_json;

/// Integers that fit in int64 are numbers, larger ones decimal strings.
Json integer_to_json(const Integer& c);
Integer integer_from_json(const Json& j);

/// {"<q-exponent>": coeff, ...} in ascending exponent order.
Json qcoeffs_to_json(const QCoeffs& q);
QCoeffs qcoeffs_from_json(const Json& j);

/// {"var":"q","coeffs":{...}} when p lies in Z[q], otherwise var "v".
Json poly_to_json(const LaurentPoly& p);
/// Always var "v".
Json poly_to_json_v(const LaurentPoly& p);
LaurentPoly poly_from_json(const Json& j);

Json perm_to_json(const Permutation& w);
Permutation perm_from_json(const Json& j);

/// [[a,b], ...] in segment order, repeated by multiplicity.
Json multisegment_to_json(const Multisegment& m);
Multisegment multisegment_from_json(const Json& j);

/// {"a":[...],"b":[...]}
Json bisequence_to_json(const BiSequence& A);
BiSequence bisequence_from_json(const Json& j);

/// [{"multisegment":[...],"coeff":{...}}, ...] with coefficients in v.
Json pbw_to_json(const PBWElement& x);
PBWElement pbw_from_json(const Json& j);

}  // namespace klforge
