#pragma once

#include <json.hpp>

#include "almukai/corr.hpp"
#include "almukai/fmcalc.hpp"
#include "almukai/lattice.hpp"
#include "almukai/modgroup.hpp"
#include "almukai/verify.hpp"

namespace almukai {

// Exact values travel as decimal strings: integers as "n", rationals as "p/q".
// Parsers throw ParseError on malformed input and let the domain validators
// (InvalidLevel, InvalidDeterminant, ...) reject well-formed but invalid data.

using Json = nlohmann::ordered_json;

// {"d": "6", "s": "2", "abce": ["1", "1", "1", "2"]}
Json to_json(const ALElement& w);
ALElement al_element_from_json(const Json& j);

// Row-major [["p/q", ...], ...]
Json to_json(const IsometryN& g);
IsometryN isometry_from_json(const Json& rows, const Integer& d);

Json to_json(const CorrespondenceReport& report);
Json to_json(const PartnerCensus& census);
Json to_json(const CheckResult& check);
Json to_json(const LevelReport& report);
Json to_json(const VerifyConfig& config);

Integer integer_from_json(const Json& j);

}  // namespace almukai
