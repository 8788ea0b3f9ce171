#pragma once

#include "isokit/abbv.hpp"
#include "isokit/bordism.hpp"
#include "isokit/isotropy_data.hpp"
#include "isokit/kclass.hpp"
#include "isokit/realization.hpp"

#include <json.hpp>

#include <string>

namespace isokit::json_io {

using Json = nlohmann::json;

/// Data with more points than this is written in multiplicity form.
inline constexpr unsigned long kMaxExpandedPoints = 1'000'000;

/// Integers that fit in a signed 64-bit value are JSON numbers; larger ones
/// are decimal strings.
Json to_json(const Integer& v);

/// Accepts a JSON integer or a decimal string. `field` names the value in errors.
Integer integer_from_json(const Json& v, const std::string& field);

/// Parses either
///   {"n": 2, "points": [{"j": 0, "sign": 1}, ...]}  or
///   {"n": 2, "m_plus": [...], "m_minus": [...]}.
/// Throws DataError naming the offending field.
IsotropyData data_from_json(const Json& v);

/// Points form, or multiplicity form above kMaxExpandedPoints points.
Json to_json(const IsotropyData& d);
Json to_json(const MultiplicityTable& t);
Json to_json(const KClass& k);
Json to_json(const BordismPolynomial& p);
Json to_json(const IdentityReport& r);

/// {"m0": .., "n": .., "realizable": true, "rep_spheres": [..]}
Json to_json(const Witness& w);
/// {"defects": [{"j": .., "residual": ..}], "realizable": false}
Json to_json(const NotRealizable& nr);
Json to_json(const Realization& r);

} // namespace isokit::json_io
