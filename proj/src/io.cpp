#include "falsevac/io.hpp"

#include <cmath>
#include <fmt/format.h>
#include <fstream>
#include <sstream>
#include <vector>

#include "falsevac/errors.hpp"

namespace falsevac {

std::string format_csv_number(double value) { return fmt::format("{:.12g}", value); }

std::string field_config_csv(const FieldConfig& config) {
    std::string out = "x,value\n";
    for (std::size_t j = 0; j < config.size(); ++j)
        out += format_csv_number(config.grid().x(j)) + "," + format_csv_number(config[j]) + "\n";
    return out;
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open " + path.string() + " for writing");
    out << text;
    if (!out) throw IoError("write failed for " + path.string());
}

void write_field_config_csv(const std::filesystem::path& path, const FieldConfig& config) {
    write_text_file(path, field_config_csv(config));
}

FieldConfig read_field_config_csv(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open " + path.string());
    std::string line;
    if (!std::getline(in, line)) throw IoError(path.string() + ": empty file");

    std::vector<double> xs;
    std::vector<double> values;
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        const auto comma = line.find(',');
        if (comma == std::string::npos) throw IoError(path.string() + ":" + std::to_string(line_no) + ": expected x,value");
        try {
            xs.push_back(std::stod(line.substr(0, comma)));
            values.push_back(std::stod(line.substr(comma + 1)));
        } catch (const std::exception&) {
            throw IoError(path.string() + ":" + std::to_string(line_no) + ": malformed number");
        }
    }
    if (xs.size() < 3) throw IoError(path.string() + ": need at least 3 rows");

    Grid grid(xs.front(), xs.back(), xs.size());
    for (std::size_t j = 0; j < xs.size(); ++j)
        if (std::abs(xs[j] - grid.x(j)) > 1e-9 * std::max(1.0, grid.length()))
            throw IoError(path.string() + ": x column is not uniformly spaced");
    return FieldConfig(grid, std::move(values));
}

void write_json_file(const std::filesystem::path& path, const nlohmann::json& doc) {
    write_text_file(path, doc.dump(2) + "\n");
}

nlohmann::json to_json(const ActionReport& r) {
    return {{"gradient_term", r.gradient_term}, {"potential_term", r.potential_term}, {"total", r.total},
            {"t_p", r.t_p}, {"reduced", r.reduced}};
}

nlohmann::json to_json(const BoundReport& r) {
    return {{"lagrangian_value", r.lagrangian_value}, {"q_term", r.q_term}, {"quadratic_term", r.quadratic_term},
            {"satisfied", r.satisfied}};
}

nlohmann::json to_json(const VacuumPair& v) {
    return {{"phi_false", v.phi_false}, {"phi_true", v.phi_true}, {"v_false", v.v_false},
            {"v_true", v.v_true}, {"gap", v.gap}};
}

nlohmann::json kink_summary_json(const KinkSolution& k) {
    return {{"mass", k.mass}, {"charge", k.charge}, {"bound", k.bound}, {"bps_residual", k.bps_residual}};
}

}  // namespace falsevac
