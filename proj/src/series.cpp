#include "tsmark/series.hpp"

#include <cmath>

#include "tsmark/errors.hpp"

namespace tsmark {

Series::Series(std::vector<double> values, std::string label)
    : values_(std::move(values)), label_(std::move(label)) {
    if (values_.empty()) {
        throw DataError("series '" + label_ + "' is empty");
    }
    for (double v : values_) {
        if (!std::isfinite(v)) {
            throw DataError("series '" + label_ + "' contains a non-finite value");
        }
    }
}

MultiSeries::MultiSeries(std::vector<Series> components, std::string entity_id)
    : components_(std::move(components)), entity_id_(std::move(entity_id)) {
    if (components_.size() < 2) {
        throw DataError("entity '" + entity_id_ + "' needs at least 2 components, got " +
                        std::to_string(components_.size()));
    }
    const std::size_t t = components_.front().size();
    for (const Series& c : components_) {
        if (c.size() != t) {
            throw DataError("entity '" + entity_id_ + "': component '" + c.label() +
                            "' has length " + std::to_string(c.size()) + ", expected " +
                            std::to_string(t));
        }
    }
}

Alphabet::Alphabet(int size) : size(size) {
    if (size < 2) {
        throw ConfigError("alphabet size must be >= 2, got " + std::to_string(size));
    }
}

SymbolicSeries::SymbolicSeries(std::vector<int> symbols, Alphabet alphabet)
    : symbols_(std::move(symbols)), alphabet_(alphabet) {
    if (symbols_.empty()) {
        throw DataError("symbolic series is empty");
    }
    for (int s : symbols_) {
        if (s < 1 || s > alphabet_.size) {
            throw DataError("symbol " + std::to_string(s) + " outside alphabet [1, " +
                            std::to_string(alphabet_.size) + "]");
        }
    }
}

Series difference(const Series& series) {
    if (series.size() < 2) {
        throw AnalysisError("cannot difference: series '" + series.label() +
                            "' has length " + std::to_string(series.size()));
    }
    std::vector<double> diffs(series.size() - 1);
    const auto& y = series.values();
    for (std::size_t j = 0; j + 1 < y.size(); ++j) {
        diffs[j] = y[j + 1] - y[j];
    }
    return Series(std::move(diffs), series.label());
}

SparsityProfile sparsity(const Series& series, double delta) {
    if (!(delta >= 0.0 && delta <= 1.0)) {
        throw ConfigError("sparsity delta must lie in [0, 1], got " + std::to_string(delta));
    }
    SparsityProfile profile;
    profile.length = series.size();
    profile.threshold_delta = delta;
    for (double v : series.values()) {
        if (v == 0.0) {
            ++profile.null_count;
        }
    }
    profile.is_sparse =
        static_cast<double>(profile.null_count) >= static_cast<double>(profile.length) * delta;
    return profile;
}

SymbolicSeries symbolize(const Series& series, Alphabet alphabet) {
    const auto& x = series.values();
    double lo = x.front();
    double hi = x.front();
    for (double v : x) {
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }

    std::vector<int> symbols(x.size(), 1);
    if (lo < hi) {
        const int L = alphabet.size;
        const double span = hi - lo;
        for (std::size_t i = 0; i < x.size(); ++i) {
            // floor of the relative position selects the half-open interval;
            // the maximum falls past the end and is pulled into the last one.
            int idx = static_cast<int>(std::floor((x[i] - lo) / span * L));
            if (idx < 0) idx = 0;
            if (idx >= L) idx = L - 1;
            symbols[i] = idx + 1;
        }
    }
    return SymbolicSeries(std::move(symbols), alphabet);
}

}  // namespace tsmark
