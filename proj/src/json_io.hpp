#pragma once

#include "hesselink.hpp"
#include "jordan.hpp"

#include <json.hpp>

namespace hnf::io {

// {"text": "4^2,7", "dimension": 15, "blocks": [{"size": 4, "mult": 2}, ...]}
nlohmann::json to_json(const jordan::JordanType& j);
// {"text": "2_0^2,8_1", "dimension": 12, "entries": [{"size": 2, "mult": 2, "eps": 0}, ...]}
nlohmann::json to_json(const hesselink::EpsilonTaggedType& t);

// Only "blocks" / "entries" are read back; "text" and "dimension" are derived.
jordan::JordanType jordan_from_json(const nlohmann::json& j);
hesselink::EpsilonTaggedType tagged_from_json(const nlohmann::json& j);

} // namespace hnf::io
