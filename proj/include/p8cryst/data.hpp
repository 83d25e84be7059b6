#pragma once

// Data tables compiled into the library.

#include <json.hpp>

namespace p8::data {

const nlohmann::json& diagrams();
const nlohmann::json& reference_groups();
const nlohmann::json& table1();
const nlohmann::json& pproj();

}  // namespace p8::data
