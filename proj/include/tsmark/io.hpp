#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "tsmark/config.hpp"
#include "tsmark/markers.hpp"
#include "tsmark/series.hpp"
#include "tsmark/zipf.hpp"

namespace tsmark {

/// Input layouts:
///   stacked - one file, rows `entity_id,time,component,value`
///   wide    - one file per entity, `time` column plus one column per component
enum class Layout { stacked, wide };

struct IngestResult {
    std::vector<MultiSeries> entities;
    std::vector<std::string> warnings;
};

/// Read a corpus. Missing cells become exact 0.0 and are reported in the
/// warnings; component lengths are equalized by trailing-zero padding.
/// For wide layout the path may be a single file or a directory of .csv
/// files (one entity each, named after the file stem).
IngestResult ingest(const std::filesystem::path& path, Layout layout);

Layout layout_from_string(const std::string& name);

/// Write entities in stacked layout. decimals < 0 writes full-precision
/// doubles; otherwise fixed-point with that many decimals.
std::string stacked_csv_text(const std::vector<MultiSeries>& entities, int decimals = -1);

/// Write via a temp file and rename, so readers never see partial content.
void write_text_atomic(const std::filesystem::path& path, const std::string& text);

// ---- report / table emission (all embed the config echo) ----

std::string report_json_text(const MarkerReport& report);
std::string summary_json_text(const CollectionSummary& summary, const AnalysisConfig& config);
std::string summary_csv_text(const CollectionAnalysis& analysis, const AnalysisConfig& config);
std::string diversification_csv_text(const std::vector<MarkerReport>& reports,
                                     const AnalysisConfig& config);
std::string entropy_vs_total_csv_text(const CollectionSummary& summary,
                                      const AnalysisConfig& config);
std::string attribution_csv_text(const CollectionAnalysis& analysis,
                                 const AnalysisConfig& config);
std::string census_csv_text(const WordCensus& census, const AnalysisConfig& config);
/// Rank-frequency pairs in bilogarithmic scale for external plotting.
std::string census_loglog_text(const WordCensus& census, const AnalysisConfig& config);

/// `# `-prefixed config lines for embedding into CSV artifacts.
std::string config_comment_block(const AnalysisConfig& config);

std::string format_full(double v);

}  // namespace tsmark
