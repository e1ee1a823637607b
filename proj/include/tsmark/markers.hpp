#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tsmark/config.hpp"
#include "tsmark/entropy.hpp"
#include "tsmark/series.hpp"
#include "tsmark/simplex.hpp"
#include "tsmark/walk.hpp"
#include "tsmark/zipf.hpp"

namespace tsmark {

/// Per-entity marker report: the three behavioral markers plus auxiliary
/// measures, with the configuration that produced them.
struct MarkerReport {
    std::string entity_id;
    int leading = 0;  // L(X), 1-based component index
    Trend trend;
    Diversification diversification;
    std::vector<double> entropy_vector;
    std::vector<double> entropy_vector_raw;  // unclamped ratios, reported as metadata
    double norm_euclidean = 0.0;
    double norm_l1 = 0.0;
    double grand_total = 0.0;  // sum of raw measurements, pre-differencing
    std::vector<SparsityProfile> sparsity;
    std::vector<std::string> component_labels;
    AnalysisConfig config_echo;
};

/// Everything computed for one entity; the report plus the intermediate
/// objects needed for plots and attribution.
struct EntityAnalysis {
    MarkerReport report;
    EntropyWalk walk;
    MovingMatrix moving;
    SimplexPoint full_point;
    std::optional<SimplexPoint> holdout_point;
    std::optional<AttributionVerdict> attribution;
};

/// Run the whole pipeline on one entity.
MarkerReport analyze_entity(const MultiSeries& multi, const AnalysisConfig& config);

/// As analyze_entity, but keeps the intermediates; optionally attributes a
/// held-out window against the fitted trend.
EntityAnalysis analyze_entity_full(const MultiSeries& multi, const AnalysisConfig& config,
                                   const MultiSeries* holdout = nullptr);

struct EntityFailure {
    std::string entity_id;
    std::string message;
};

struct CollectionSummary {
    std::vector<MarkerReport> reports;
    std::optional<double> within_walk_fraction;
    std::size_t attributed_count = 0;
    std::size_t changed_leading_count = 0;
    std::map<DiversificationCategory, std::size_t> diversification_category_histogram;
    /// (normalized grand total, Euclidean norm) per report, min-max
    /// normalized across the collection.
    std::vector<std::pair<double, double>> entropy_vs_total;
    std::vector<EntityFailure> failures;
};

struct CollectionAnalysis {
    CollectionSummary summary;
    std::vector<EntityAnalysis> entities;  // successful entities, input order
};

/// Batch analysis with per-entity error quarantine. Holdout windows are
/// matched to entities by entity_id. threads = 0 picks the hardware
/// concurrency; results are identical for any thread count.
CollectionAnalysis analyze_collection_full(const std::vector<MultiSeries>& entities,
                                           const std::vector<MultiSeries>& holdouts,
                                           const AnalysisConfig& config,
                                           std::size_t threads = 1);

CollectionSummary analyze_collection(const std::vector<MultiSeries>& entities,
                                     const std::vector<MultiSeries>& holdouts,
                                     const AnalysisConfig& config, std::size_t threads = 1);

}  // namespace tsmark
