#include "tsmark/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include <json.hpp>

#include "tsmark/errors.hpp"

namespace tsmark {

namespace {

using nlohmann::json;

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> fields;
    std::string field;
    for (char ch : line) {
        if (ch == ',') {
            fields.push_back(field);
            field.clear();
        } else if (ch != '\r') {
            field += ch;
        }
    }
    fields.push_back(field);
    return fields;
}

double parse_value(const std::string& text, const std::filesystem::path& path,
                   std::size_t line_number) {
    char* end = nullptr;
    const double v = std::strtod(text.c_str(), &end);
    if (text.empty() || end == text.c_str() || *end != '\0') {
        throw DataError(path.string() + ":" + std::to_string(line_number) +
                        ": not a number: '" + text + "'");
    }
    return v;
}

long long parse_time(const std::string& text, const std::filesystem::path& path,
                     std::size_t line_number) {
    char* end = nullptr;
    const long long t = std::strtoll(text.c_str(), &end, 10);
    if (text.empty() || end == text.c_str() || *end != '\0' || t < 0) {
        throw DataError(path.string() + ":" + std::to_string(line_number) +
                        ": not a non-negative time index: '" + text + "'");
    }
    return t;
}

std::vector<std::string> read_lines(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw DataError("cannot open '" + path.string() + "'");
    }
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) {
        lines.push_back(line);
    }
    return lines;
}

IngestResult ingest_stacked(const std::filesystem::path& path) {
    const std::vector<std::string> lines = read_lines(path);
    if (lines.empty() || split_csv_line(lines.front()) !=
                             std::vector<std::string>{"entity_id", "time", "component", "value"}) {
        throw DataError(path.string() + ":1: expected header 'entity_id,time,component,value'");
    }

    struct Cell {
        std::size_t time;
        double value;
    };
    // Entity and component order follow first appearance in the file.
    std::vector<std::string> entity_order;
    std::vector<std::string> component_order;
    std::map<std::string, std::map<std::string, std::vector<Cell>>> cells;
    std::set<std::tuple<std::string, std::size_t, std::string>> seen;

    for (std::size_t i = 1; i < lines.size(); ++i) {
        if (lines[i].empty() || lines[i] == "\r") {
            continue;
        }
        const std::vector<std::string> fields = split_csv_line(lines[i]);
        if (fields.size() != 4) {
            throw DataError(path.string() + ":" + std::to_string(i + 1) + ": expected 4 fields, got " +
                            std::to_string(fields.size()));
        }
        const std::string& entity = fields[0];
        const std::size_t time =
            static_cast<std::size_t>(parse_time(fields[1], path, i + 1));
        const std::string& component = fields[2];
        const double value = parse_value(fields[3], path, i + 1);

        if (!seen.insert({entity, time, component}).second) {
            throw DataError(path.string() + ":" + std::to_string(i + 1) + ": duplicate cell (" +
                            entity + ", " + std::to_string(time) + ", " + component + ")");
        }
        if (cells.find(entity) == cells.end()) {
            entity_order.push_back(entity);
        }
        if (std::find(component_order.begin(), component_order.end(), component) ==
            component_order.end()) {
            component_order.push_back(component);
        }
        cells[entity][component].push_back({time, value});
    }
    if (entity_order.empty()) {
        throw DataError(path.string() + ": no data rows");
    }

    IngestResult result;
    for (const std::string& entity : entity_order) {
        auto& per_component = cells[entity];
        std::size_t length = 0;
        std::size_t present = 0;
        for (const auto& [component, component_cells] : per_component) {
            for (const Cell& cell : component_cells) {
                length = std::max(length, cell.time + 1);
            }
            present += component_cells.size();
        }
        std::vector<Series> components;
        components.reserve(component_order.size());
        for (const std::string& component : component_order) {
            std::vector<double> values(length, 0.0);
            for (const Cell& cell : per_component[component]) {
                values[cell.time] = cell.value;
            }
            try {
                components.emplace_back(std::move(values), component);
            } catch (const DataError& e) {
                throw DataError(path.string() + ": entity '" + entity + "': " + e.what());
            }
        }
        const std::size_t filled = length * component_order.size() - present;
        if (filled > 0) {
            result.warnings.push_back("entity '" + entity + "': filled " +
                                      std::to_string(filled) + " missing cells with 0.0");
        }
        result.entities.emplace_back(std::move(components), entity);
    }
    return result;
}

MultiSeries ingest_wide_file(const std::filesystem::path& path,
                             std::vector<std::string>& warnings) {
    const std::vector<std::string> lines = read_lines(path);
    if (lines.empty()) {
        throw DataError(path.string() + ": empty file");
    }
    const std::vector<std::string> header = split_csv_line(lines.front());
    if (header.size() < 3 || header.front() != "time") {
        throw DataError(path.string() +
                        ":1: expected header 'time,<component>,...' with >= 2 components");
    }
    const std::size_t n = header.size() - 1;

    std::map<std::size_t, std::vector<double>> rows;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        if (lines[i].empty() || lines[i] == "\r") {
            continue;
        }
        const std::vector<std::string> fields = split_csv_line(lines[i]);
        if (fields.size() != header.size()) {
            throw DataError(path.string() + ":" + std::to_string(i + 1) + ": expected " +
                            std::to_string(header.size()) + " fields, got " +
                            std::to_string(fields.size()));
        }
        const std::size_t time =
            static_cast<std::size_t>(parse_time(fields[0], path, i + 1));
        if (rows.count(time) != 0) {
            throw DataError(path.string() + ":" + std::to_string(i + 1) +
                            ": duplicate time index " + std::to_string(time));
        }
        std::vector<double> values(n);
        for (std::size_t c = 0; c < n; ++c) {
            values[c] = parse_value(fields[c + 1], path, i + 1);
        }
        rows.emplace(time, std::move(values));
    }
    if (rows.empty()) {
        throw DataError(path.string() + ": no data rows");
    }

    const std::size_t length = rows.rbegin()->first + 1;
    if (rows.size() < length) {
        warnings.push_back("entity '" + path.stem().string() + "': filled " +
                           std::to_string((length - rows.size()) * n) +
                           " missing cells with 0.0");
    }
    std::vector<Series> components;
    components.reserve(n);
    for (std::size_t c = 0; c < n; ++c) {
        std::vector<double> values(length, 0.0);
        for (const auto& [time, row] : rows) {
            values[time] = row[c];
        }
        components.emplace_back(std::move(values), header[c + 1]);
    }
    return MultiSeries(std::move(components), path.stem().string());
}

}  // namespace

IngestResult ingest(const std::filesystem::path& path, Layout layout) {
    if (!std::filesystem::exists(path)) {
        throw DataError("no such path: '" + path.string() + "'");
    }
    if (layout == Layout::stacked) {
        return ingest_stacked(path);
    }
    IngestResult result;
    if (std::filesystem::is_directory(path)) {
        std::vector<std::filesystem::path> files;
        for (const auto& entry : std::filesystem::directory_iterator(path)) {
            if (entry.path().extension() == ".csv") {
                files.push_back(entry.path());
            }
        }
        std::sort(files.begin(), files.end());
        if (files.empty()) {
            throw DataError("no .csv files in '" + path.string() + "'");
        }
        for (const auto& file : files) {
            result.entities.push_back(ingest_wide_file(file, result.warnings));
        }
    } else {
        result.entities.push_back(ingest_wide_file(path, result.warnings));
    }
    return result;
}

Layout layout_from_string(const std::string& name) {
    if (name == "stacked") return Layout::stacked;
    if (name == "wide") return Layout::wide;
    throw ConfigError("unknown layout '" + name + "' (expected stacked|wide)");
}

std::string format_full(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

namespace {

std::string format_value(double v, int decimals) {
    if (decimals < 0) {
        return format_full(v);
    }
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.*f", decimals, v);
    return buf;
}

}  // namespace

std::string stacked_csv_text(const std::vector<MultiSeries>& entities, int decimals) {
    std::ostringstream out;
    out << "entity_id,time,component,value\n";
    for (const MultiSeries& entity : entities) {
        for (std::size_t t = 0; t < entity.length(); ++t) {
            for (const Series& component : entity.components()) {
                out << entity.entity_id() << ',' << t << ',' << component.label() << ','
                    << format_value(component[t], decimals) << '\n';
            }
        }
    }
    return out.str();
}

void write_text_atomic(const std::filesystem::path& path, const std::string& text) {
    if (path.has_parent_path()) {
        std::filesystem::create_directories(path.parent_path());
    }
    const std::filesystem::path tmp = path.string() + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) {
            throw DataError("cannot write '" + tmp.string() + "'");
        }
        out << text;
    }
    std::filesystem::rename(tmp, path);
}

namespace {

json config_json(const AnalysisConfig& config) {
    json j;
    j["alphabet_size"] = config.alphabet_size;
    j["differencing"] = config.differencing;
    j["window_kind"] = to_string(config.window.kind);
    j["window_length"] = config.window.length;
    if (config.window.kind == WindowScheme::Kind::overlapping) {
        j["window_step"] = config.window.step;
    }
    if (config.window.kind == WindowScheme::Kind::random_starts) {
        j["window_count"] = config.window.count;
        j["window_seed"] = config.window.seed;
    }
    j["word_length"] = config.word_length;
    j["equivalence"] = to_string(config.equivalence);
    j["rare_threshold"] = config.rare_threshold;
    j["sparsity_delta"] = config.sparsity_delta;
    j["symbolization"] = to_string(config.symbolization);
    return j;
}

json trend_json(const Trend& trend) {
    json j;
    j["leading_last"] = trend.leading_last;
    j["direction"] = trend.direction;
    j["line_point"] = trend.line_point;
    j["mean_distance"] = trend.mean_distance;
    return j;
}

std::string join_semicolon(const std::vector<double>& values) {
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i > 0) {
            out += ';';
        }
        out += format_full(values[i]);
    }
    return out;
}

}  // namespace

std::string report_json_text(const MarkerReport& report) {
    json j;
    j["schema_version"] = 1;
    j["entity_id"] = report.entity_id;
    j["leading"] = report.leading;
    j["trend"] = trend_json(report.trend);
    json d;
    d["value"] = report.diversification.value;
    d["per_component_rho"] = report.diversification.per_component_rho;
    d["per_component_class_count"] = report.diversification.per_component_class_count;
    d["category"] = to_string(report.diversification.category);
    d["any_degenerate_fit"] = report.diversification.any_degenerate_fit;
    j["diversification"] = d;
    j["entropy_vector"] = report.entropy_vector;
    j["norm_euclidean"] = report.norm_euclidean;
    j["norm_l1"] = report.norm_l1;
    j["grand_total"] = report.grand_total;
    json sparsity_list = json::array();
    for (std::size_t i = 0; i < report.sparsity.size(); ++i) {
        json s;
        s["component"] = i < report.component_labels.size() ? report.component_labels[i] : "";
        s["null_count"] = report.sparsity[i].null_count;
        s["length"] = report.sparsity[i].length;
        s["threshold_delta"] = report.sparsity[i].threshold_delta;
        s["is_sparse"] = report.sparsity[i].is_sparse;
        sparsity_list.push_back(s);
    }
    j["sparsity"] = sparsity_list;
    j["config_echo"] = config_json(report.config_echo);
    j["metadata"] = {
        {"parser", "lz-incremental"},
        {"bit_cost_rule", "ceil(log2 k) + ceil(log2 L) per phrase"},
        {"entropy_vector_raw", report.entropy_vector_raw},
        {"composition_class_bound",
         report.config_echo.equivalence == WordEquivalence::composition
             ? composition_class_bound(report.config_echo.alphabet_size,
                                       report.config_echo.word_length)
             : 0}};
    return j.dump(2) + "\n";
}

std::string summary_json_text(const CollectionSummary& summary, const AnalysisConfig& config) {
    json j;
    j["schema_version"] = 1;
    j["entity_count"] = summary.reports.size() + summary.failures.size();
    j["report_count"] = summary.reports.size();
    j["attributed_count"] = summary.attributed_count;
    if (summary.within_walk_fraction) {
        j["within_walk_fraction"] = *summary.within_walk_fraction;
    } else {
        j["within_walk_fraction"] = nullptr;
    }
    j["changed_leading_count"] = summary.changed_leading_count;
    json histogram;
    for (const auto& [category, count] : summary.diversification_category_histogram) {
        histogram[to_string(category)] = count;
    }
    j["diversification_category_histogram"] = histogram;
    json failures = json::array();
    for (const EntityFailure& failure : summary.failures) {
        failures.push_back({{"entity_id", failure.entity_id}, {"message", failure.message}});
    }
    j["failures"] = failures;
    j["config_echo"] = config_json(config);
    return j.dump(2) + "\n";
}

std::string config_comment_block(const AnalysisConfig& config) {
    std::istringstream in(config_to_text(config));
    std::ostringstream out;
    std::string line;
    while (std::getline(in, line)) {
        out << "# " << line << '\n';
    }
    return out.str();
}

std::string summary_csv_text(const CollectionAnalysis& analysis, const AnalysisConfig& config) {
    std::ostringstream out;
    out << config_comment_block(config);
    out << "entity_id,leading,trend_direction,diversification,category,verdict,"
           "grand_total,norm_euclidean,norm_l1\n";
    for (const EntityAnalysis& entity : analysis.entities) {
        const MarkerReport& r = entity.report;
        out << r.entity_id << ',' << r.leading << ',' << join_semicolon(r.trend.direction)
            << ',' << format_full(r.diversification.value) << ','
            << to_string(r.diversification.category) << ','
            << (entity.attribution ? to_string(entity.attribution->status) : "") << ','
            << format_full(r.grand_total) << ',' << format_full(r.norm_euclidean) << ','
            << format_full(r.norm_l1) << '\n';
    }
    return out.str();
}

std::string diversification_csv_text(const std::vector<MarkerReport>& reports,
                                     const AnalysisConfig& config) {
    std::ostringstream out;
    out << config_comment_block(config);
    out << "entity_id,diversification,category,any_degenerate_fit,per_component_rho\n";
    for (const MarkerReport& r : reports) {
        out << r.entity_id << ',' << format_full(r.diversification.value) << ','
            << to_string(r.diversification.category) << ','
            << (r.diversification.any_degenerate_fit ? "true" : "false") << ','
            << join_semicolon(r.diversification.per_component_rho) << '\n';
    }
    return out.str();
}

std::string entropy_vs_total_csv_text(const CollectionSummary& summary,
                                      const AnalysisConfig& config) {
    std::ostringstream out;
    out << config_comment_block(config);
    out << "entity_id,grand_total,grand_total_normalized,norm_euclidean\n";
    for (std::size_t i = 0; i < summary.reports.size(); ++i) {
        out << summary.reports[i].entity_id << ','
            << format_full(summary.reports[i].grand_total) << ','
            << format_full(summary.entropy_vs_total[i].first) << ','
            << format_full(summary.entropy_vs_total[i].second) << '\n';
    }
    return out.str();
}

std::string attribution_csv_text(const CollectionAnalysis& analysis,
                                 const AnalysisConfig& config) {
    std::ostringstream out;
    out << config_comment_block(config);
    out << "entity_id,status,distance,threshold,leading_last\n";
    for (const EntityAnalysis& entity : analysis.entities) {
        if (!entity.attribution) {
            continue;
        }
        out << entity.report.entity_id << ',' << to_string(entity.attribution->status) << ','
            << format_full(entity.attribution->distance) << ','
            << format_full(entity.attribution->threshold) << ','
            << entity.report.trend.leading_last << '\n';
    }
    return out.str();
}

std::string census_csv_text(const WordCensus& census, const AnalysisConfig& config) {
    std::ostringstream out;
    out << config_comment_block(config);
    out << "# equivalence = " << to_string(census.equivalence)
        << ", total_words = " << census.total_words << '\n';
    out << "rank,class_id,count,frequency\n";
    for (std::size_t i = 0; i < census.classes.size(); ++i) {
        out << (i + 1) << ',' << census.classes[i].id() << ',' << census.classes[i].count
            << ',' << format_full(census.classes[i].frequency) << '\n';
    }
    return out.str();
}

std::string census_loglog_text(const WordCensus& census, const AnalysisConfig& config) {
    std::ostringstream out;
    out << config_comment_block(config);
    out << "log10_rank,log10_frequency\n";
    for (std::size_t i = 0; i < census.classes.size(); ++i) {
        out << format_full(std::log10(static_cast<double>(i + 1))) << ','
            << format_full(std::log10(census.classes[i].frequency)) << '\n';
    }
    return out.str();
}

}  // namespace tsmark
