#pragma once

#include <string>
#include <vector>

#include "tsmark/entropy.hpp"

namespace tsmark {

/// A point of the standard simplex written in the first N-1 barycentric
/// coordinates; the N-th is implied as 1 minus their sum.
struct SimplexPoint {
    std::vector<double> coords;  // N-1 entries, each >= 0, summing to <= 1
    int dimension = 0;           // N

    double implied_last() const;
};

/// Which vertex's influence area a projected entropy vector falls in.
/// leading is a 1-based component index; ties go to the lowest index.
struct InfluenceVerdict {
    int leading = 0;
    std::vector<double> barycentric;  // N entries, >= 0, summing to 1
};

/// Normalize by the l1 norm and drop the last coordinate. Requires a
/// non-null entropy vector.
SimplexPoint project(const EntropyVector& v);

/// Influence-area classification. The hyperplanes through the centroid and
/// N-2 vertices are the loci where two barycentric coordinates tie, so the
/// region of vertex d is exactly where the d-th barycentric coordinate is
/// maximal; argmax computes it in any dimension.
InfluenceVerdict influence(const EntropyVector& v);

struct InfluenceMapEntry {
    std::string entity_id;
    SimplexPoint point;
    InfluenceVerdict verdict;
};

/// Order-preserving per-entity projection and classification. All vectors
/// must share one dimension.
std::vector<InfluenceMapEntry> influence_map(const std::vector<EntropyVector>& collection);

}  // namespace tsmark
