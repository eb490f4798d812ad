#pragma once

#include <nlohmann/json.hpp>

#include "hnls/lattice.hpp"

namespace hnls {

// Run-manifest signature layout: {"d": ..., "j0": ..., "eps": [...]}.
// Exact rational weights serialize as [num, den] pairs, floats as numbers.
nlohmann::ordered_json signature_to_json(const Signature& sig);
Signature signature_from_json(const nlohmann::ordered_json& j);

} // namespace hnls
