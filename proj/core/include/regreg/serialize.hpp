#pragma once

#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "regreg/families.hpp"
#include "regreg/instances.hpp"
#include "regreg/regularity.hpp"
#include "regreg/solvers.hpp"

namespace regreg {

// Key order is insertion order so that dumps are byte-stable.
using Json = nlohmann::ordered_json;

/// {"k":K,"entries":[{"x":[...],"v":V},...]}, entries in lexicographic x order.
Json to_json(const FiniteFn& f);
FiniteFn finite_fn_from_json(const Json& j);

/// {"is_regular":B,"regressive_value_count":N,"classes":{"0,1":{...},...}}
Json to_json(const RegRegReport& report);

/// {"k":..,"p":..,"t":..,"e0":..,"negatives":[..],"small_positives":[..],
///  "large_positives":[..],"dropped_zeros":..}
/// Throws InvariantViolation for an instance with a kept zero.
Json to_json(const StructuredInstance& inst);
/// Strict: exactly the keys above, integer-valued. Throws ParseError on
/// shape errors and InvariantViolation if the instance fails validate().
StructuredInstance instance_from_json(const Json& j);

/// Compact dump plus trailing newline; the instance file contents.
std::string serialize_instance(const StructuredInstance& inst);
StructuredInstance parse_instance(std::string_view text);

/// {"status":"found|none|trivial_zero","witness":[..]|null,
///  "sums_enumerated":N,"comparisons":N}
Json to_json(const SolveResult& r);

}  // namespace regreg
