#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tsmark/config.hpp"
#include "tsmark/simplex.hpp"
#include "tsmark/walk.hpp"

namespace tsmark {

/// Scatter plot of a collection on the 2-simplex: triangle, centroid,
/// influence-region boundaries, one labeled point per entity. 3-component
/// data only.
std::string simplex_scatter_svg(const std::vector<InfluenceMapEntry>& entries,
                                const std::vector<std::string>& vertex_labels,
                                const AnalysisConfig& config);

/// One entity's entropy walk: numbered polyline, trend arrow from the walk
/// centroid, and optionally the held-out point with its verdict.
std::string walk_svg(const std::string& entity_id, const EntropyWalk& walk,
                     const Trend& trend, const std::optional<SimplexPoint>& holdout,
                     const std::optional<AttributionVerdict>& verdict,
                     const std::vector<std::string>& vertex_labels,
                     const AnalysisConfig& config);

}  // namespace tsmark
