#pragma once

#include "moser/moser.hpp"
#include "moser/recovery.hpp"
#include "moser/symfun.hpp"

#include <json.hpp>
#include <string>

namespace moser {

// Multiset input: either a JSON array whose entries are integers or
// "num/den" strings, or whitespace/newline-delimited rational literals.
// Throws std::invalid_argument on malformed input.
NumberMultiset parse_multiset(const std::string& text);

// {"s":..,"k":..,"n":..,"terms":[{"partition":[..],"coeff":"<decimal>"},..]}
// with terms in reverse-lexicographic partition order.
nlohmann::json qpolynomial_to_json(const QPolynomial& q);

// {"n":..,"s":..,"values":["..",..],"vanishing_k":[..],"solvable":bool}
nlohmann::json solvability_to_json(const SolvabilityReport& report);

// {"mode":"exact"|"numeric","multiset":[..],"residual":"<decimal>","power_sums":[..]}
// Exact multisets serialize as rational strings, numeric ones as [re,im] pairs.
nlohmann::json recovery_to_json(const RecoveryResult& result);

}  // namespace moser
