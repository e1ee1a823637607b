#include "tsmark/simplex.hpp"

#include "tsmark/errors.hpp"

namespace tsmark {

double SimplexPoint::implied_last() const {
    double sum = 0.0;
    for (double c : coords) {
        sum += c;
    }
    return 1.0 - sum;
}

SimplexPoint project(const EntropyVector& v) {
    const double l1 = norm_l1(v);
    if (!(l1 > 0.0)) {
        throw AnalysisError("degenerate: all components constant (null entropy vector for '" +
                            v.entity_id + "')");
    }
    SimplexPoint point;
    point.dimension = static_cast<int>(v.dimension());
    point.coords.reserve(v.dimension() - 1);
    for (std::size_t i = 0; i + 1 < v.dimension(); ++i) {
        point.coords.push_back(v.values[i] / l1);
    }
    return point;
}

InfluenceVerdict influence(const EntropyVector& v) {
    const double l1 = norm_l1(v);
    if (!(l1 > 0.0)) {
        throw AnalysisError("degenerate: all components constant (null entropy vector for '" +
                            v.entity_id + "')");
    }
    InfluenceVerdict verdict;
    verdict.barycentric.reserve(v.dimension());
    std::size_t argmax = 0;
    for (std::size_t i = 0; i < v.dimension(); ++i) {
        verdict.barycentric.push_back(v.values[i] / l1);
        if (v.values[i] > v.values[argmax]) {
            argmax = i;
        }
    }
    verdict.leading = static_cast<int>(argmax) + 1;
    return verdict;
}

std::vector<InfluenceMapEntry> influence_map(const std::vector<EntropyVector>& collection) {
    std::vector<InfluenceMapEntry> entries;
    entries.reserve(collection.size());
    for (const EntropyVector& v : collection) {
        if (!entries.empty() && v.dimension() != collection.front().dimension()) {
            throw ConfigError("mixed dimensions in collection: '" + v.entity_id + "' has " +
                              std::to_string(v.dimension()) + " components, expected " +
                              std::to_string(collection.front().dimension()));
        }
        entries.push_back({v.entity_id, project(v), influence(v)});
    }
    return entries;
}

}  // namespace tsmark
