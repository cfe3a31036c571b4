#pragma once

#include <filesystem>
#include <string>

#include <nlohmann/json.hpp>

#include "falsevac/euclidean.hpp"
#include "falsevac/lattice.hpp"
#include "falsevac/potentials.hpp"
#include "falsevac/solitons.hpp"

namespace falsevac {

/// 12 significant digits, the precision used for every CSV cell.
std::string format_csv_number(double value);

/// Two-column "x,value" CSV with one header line and Unix newlines.
std::string field_config_csv(const FieldConfig& config);
void write_field_config_csv(const std::filesystem::path& path, const FieldConfig& config);

/// Reads the CSV written above. The grid is rebuilt from the first and last
/// x and the row count; non-uniform spacing is rejected.
FieldConfig read_field_config_csv(const std::filesystem::path& path);

void write_text_file(const std::filesystem::path& path, const std::string& text);

/// Pretty-printed JSON with sorted keys and a trailing newline.
void write_json_file(const std::filesystem::path& path, const nlohmann::json& doc);

nlohmann::json to_json(const ActionReport& report);
nlohmann::json to_json(const BoundReport& report);
nlohmann::json to_json(const VacuumPair& vacua);
nlohmann::json kink_summary_json(const KinkSolution& kink);

}  // namespace falsevac
