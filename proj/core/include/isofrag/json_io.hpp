#pragma once

#include <string>

#include <nlohmann/json_fwd.hpp>

#include "isofrag/group.hpp"
#include "isofrag/isoperimetry.hpp"
#include "isofrag/relation.hpp"
#include "isofrag/theorems.hpp"

namespace isofrag {

// JSON wire formats. Sets serialize as sorted index arrays; reports carry a
// "schemaVersion" field and identical inputs produce byte-identical dumps.

inline constexpr int kSchemaVersion = 1;

nlohmann::json to_json(const ElementSet& s);
ElementSet element_set_from_json(const nlohmann::json& j, int universe);

/// {"family":"cyclic","n":12} | {"family":"dihedral","order":8} |
/// {"family":"quaternion"} | {"family":"symmetric","degree":4} |
/// {"family":"product","parts":[...]} | {"table":[[...]]}.
nlohmann::json to_json(const GroupDescriptor& d);
GroupDescriptor group_descriptor_from_json(const nlohmann::json& j);

/// {"n":..., "rows":[[sorted indices]...]}.
nlohmann::json to_json(const Relation& r);
Relation relation_from_json(const nlohmann::json& j);

nlohmann::json to_json(const FragmentReport& report);
FragmentReport fragment_report_from_json(const nlohmann::json& j, int universe);

nlohmann::json to_json(const Classification& c);
nlohmann::json to_json(const VerdictRecord& rec);
nlohmann::json to_json(const ScanSummary& summary);

std::string scan_summary_csv(const ScanSummary& summary);

/// Canonical dump: 2-space indent, sorted keys, trailing newline.
std::string dump_report(const nlohmann::json& j);

}  // namespace isofrag
