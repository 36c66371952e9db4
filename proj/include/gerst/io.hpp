#pragma once

// JSON records: {"kind", "payload", "provenance", "results"} in that order.
// Diagrams of N^3 are written as bottom-first height rows, other diagrams
// and shapes as box lists, plans as parallel arrays.

#include <json.hpp>

#include <filesystem>
#include <string>
#include <string_view>
#include <variant>

#include "gerst/floor_plan.hpp"
#include "gerst/gluing.hpp"
#include "gerst/tower.hpp"

namespace gerst {

using Json = nlohmann::ordered_json;

using Instance = std::variant<GluingDatum, Tower, CompatibleTower, FloorPlan, CompatibleFloorPlan, HeightMap, YoungDiagram>;

/// "gluing", "tower", "compatible-tower", "floor-plan",
/// "compatible-floor-plan", "height-map" or "diagram".
std::string kind_of(const Instance& instance);

struct InstanceRecord {
  Instance instance;
  Json provenance = Json::object();
  Json results = Json::object();
};

Json payload_to_json(const Instance& instance);
/// Throws ParseError naming the offending field. A gluing payload may give
/// "ideals" {I, J, K, L} instead of explicit diagrams and components.
Instance payload_from_json(const std::string& kind, const Json& payload);

Json record_to_json(const InstanceRecord& record);
InstanceRecord record_from_json(const Json& j);

/// Pretty-printed unless `compact`, which gives a single line.
std::string serialize(const InstanceRecord& record, bool compact = false);
/// Throws ParseError with a line number for malformed text.
InstanceRecord deserialize(std::string_view text);

InstanceRecord read_record(const std::filesystem::path& path);
void write_record(const std::filesystem::path& path, const InstanceRecord& record);

/// Structural checks beyond parsing: validate_gluing, validate_tower or the
/// floor-plan checks. Returns an empty string when valid.
std::string validation_problem(const Instance& instance);

}  // namespace gerst
