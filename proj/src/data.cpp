#include "p8cryst/data.hpp"

#include "p8cryst/embedded_data.hpp"

namespace p8::data {

namespace {

nlohmann::json parse(std::string_view text) { return nlohmann::json::parse(text.begin(), text.end()); }

}  // namespace

const nlohmann::json& diagrams() {
  static const nlohmann::json j = parse(embedded::diagrams);
  return j;
}

const nlohmann::json& reference_groups() {
  static const nlohmann::json j = parse(embedded::reference_groups);
  return j;
}

const nlohmann::json& table1() {
  static const nlohmann::json j = parse(embedded::table1);
  return j;
}

const nlohmann::json& pproj() {
  static const nlohmann::json j = parse(embedded::pproj);
  return j;
}

}  // namespace p8::data
