#include "tsmark/walk.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_map>

#include "tsmark/errors.hpp"
#include "tsmark/rng.hpp"

namespace tsmark {

WindowScheme WindowScheme::overlapping(std::size_t length, std::size_t step) {
    WindowScheme s;
    s.kind = Kind::overlapping;
    s.length = length;
    s.step = step;
    return s;
}

WindowScheme WindowScheme::nonoverlapping(std::size_t length) {
    WindowScheme s;
    s.kind = Kind::nonoverlapping;
    s.length = length;
    s.step = length;
    return s;
}

WindowScheme WindowScheme::random_starts(std::size_t length, std::size_t count,
                                         std::uint64_t seed) {
    WindowScheme s;
    s.kind = Kind::random_starts;
    s.length = length;
    s.count = count;
    s.seed = seed;
    return s;
}

std::vector<std::size_t> window_offsets(const WindowScheme& scheme,
                                        std::size_t series_length) {
    if (scheme.length == 0) {
        throw ConfigError("window length must be >= 1");
    }
    if (scheme.length > series_length) {
        throw ConfigError("window longer than series: w=" + std::to_string(scheme.length) +
                          ", t=" + std::to_string(series_length));
    }

    std::vector<std::size_t> offsets;
    switch (scheme.kind) {
        case WindowScheme::Kind::overlapping: {
            if (scheme.step == 0) {
                throw ConfigError("window step must be >= 1");
            }
            for (std::size_t start = 0; start + scheme.length <= series_length;
                 start += scheme.step) {
                offsets.push_back(start);
            }
            break;
        }
        case WindowScheme::Kind::nonoverlapping: {
            for (std::size_t start = 0; start + scheme.length <= series_length;
                 start += scheme.length) {
                offsets.push_back(start);
            }
            break;
        }
        case WindowScheme::Kind::random_starts: {
            if (scheme.count == 0) {
                throw ConfigError("window count must be >= 1");
            }
            const std::size_t range = series_length - scheme.length + 1;
            if (scheme.count > range) {
                throw ConfigError("cannot draw " + std::to_string(scheme.count) +
                                  " distinct window starts from " + std::to_string(range) +
                                  " positions");
            }
            // Partial Fisher-Yates over the implicit index set keeps the
            // draw O(k) and independent of the series content.
            SplitMix64 rng(scheme.seed);
            std::unordered_map<std::size_t, std::size_t> swapped;
            for (std::size_t i = 0; i < scheme.count; ++i) {
                const std::size_t j = i + static_cast<std::size_t>(rng.next_below(range - i));
                auto it_j = swapped.find(j);
                const std::size_t value_j = it_j == swapped.end() ? j : it_j->second;
                auto it_i = swapped.find(i);
                const std::size_t value_i = it_i == swapped.end() ? i : it_i->second;
                offsets.push_back(value_j);
                swapped[j] = value_i;
            }
            std::sort(offsets.begin(), offsets.end());
            break;
        }
    }
    return offsets;
}

std::vector<SymbolicSeries> make_windows(const SymbolicSeries& series,
                                         const WindowScheme& scheme) {
    const std::vector<std::size_t> offsets = window_offsets(scheme, series.size());
    std::vector<SymbolicSeries> windows;
    windows.reserve(offsets.size());
    for (std::size_t start : offsets) {
        std::vector<int> slice(series.symbols().begin() + static_cast<std::ptrdiff_t>(start),
                               series.symbols().begin() +
                                   static_cast<std::ptrdiff_t>(start + scheme.length));
        windows.emplace_back(std::move(slice), series.alphabet());
    }
    return windows;
}

EntropyVector MovingMatrix::column(std::size_t i) const {
    EntropyVector v;
    v.values.reserve(rows.size());
    for (const auto& row : rows) {
        v.values.push_back(row[i]);
    }
    return v;
}

MovingMatrix moving_matrix(const MultiSeries& multi, Alphabet alphabet,
                           bool use_differencing, const WindowScheme& scheme,
                           SymbolizationMode mode) {
    MovingMatrix mm;
    mm.rows.reserve(multi.component_count());
    for (const Series& component : multi.components()) {
        try {
            const Series base = use_differencing ? difference(component) : component;
            std::vector<double> row;
            if (mode == SymbolizationMode::global_range) {
                const SymbolicSeries symbols = symbolize(base, alphabet);
                for (const SymbolicSeries& window : make_windows(symbols, scheme)) {
                    row.push_back(entropy(window));
                }
            } else {
                const std::vector<std::size_t> offsets = window_offsets(scheme, base.size());
                for (std::size_t start : offsets) {
                    std::vector<double> slice(
                        base.values().begin() + static_cast<std::ptrdiff_t>(start),
                        base.values().begin() + static_cast<std::ptrdiff_t>(start + scheme.length));
                    row.push_back(entropy(symbolize(Series(std::move(slice)), alphabet)));
                }
            }
            mm.rows.push_back(std::move(row));
        } catch (const ConfigError&) {
            throw;
        } catch (const std::runtime_error& e) {
            throw AnalysisError("component '" + component.label() + "': " + e.what());
        }
    }
    return mm;
}

EntropyWalk walk(const MovingMatrix& mm) {
    EntropyWalk w;
    w.points.reserve(mm.window_count());
    for (std::size_t i = 0; i < mm.window_count(); ++i) {
        const EntropyVector column = mm.column(i);
        if (!(norm_l1(column) > 0.0)) {
            throw AnalysisError("degenerate window " + std::to_string(i + 1) +
                                ": null entropy vector");
        }
        w.points.push_back(project(column));
    }
    return w;
}

namespace {

// Jacobi eigendecomposition of a small symmetric matrix. Returns
// (eigenvalues, eigenvectors as columns). Deterministic cyclic sweeps.
void jacobi_eigen(std::vector<std::vector<double>> a, std::vector<double>& values,
                  std::vector<std::vector<double>>& vectors) {
    const std::size_t n = a.size();
    vectors.assign(n, std::vector<double>(n, 0.0));
    for (std::size_t i = 0; i < n; ++i) {
        vectors[i][i] = 1.0;
    }

    for (int sweep = 0; sweep < 64; ++sweep) {
        double off = 0.0;
        for (std::size_t p = 0; p < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                off += a[p][q] * a[p][q];
            }
        }
        if (off < 1e-300) {
            break;
        }
        for (std::size_t p = 0; p < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                if (a[p][q] == 0.0) {
                    continue;
                }
                const double theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
                const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                                 (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                for (std::size_t i = 0; i < n; ++i) {
                    const double aip = a[i][p];
                    const double aiq = a[i][q];
                    a[i][p] = c * aip - s * aiq;
                    a[i][q] = s * aip + c * aiq;
                }
                for (std::size_t i = 0; i < n; ++i) {
                    const double api = a[p][i];
                    const double aqi = a[q][i];
                    a[p][i] = c * api - s * aqi;
                    a[q][i] = s * api + c * aqi;
                }
                for (std::size_t i = 0; i < n; ++i) {
                    const double vip = vectors[i][p];
                    const double viq = vectors[i][q];
                    vectors[i][p] = c * vip - s * viq;
                    vectors[i][q] = s * vip + c * viq;
                }
            }
        }
    }

    values.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        values[i] = a[i][i];
    }
}

double dot(const std::vector<double>& a, const std::vector<double>& b) {
    double sum = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        sum += a[i] * b[i];
    }
    return sum;
}

double point_line_distance(const std::vector<double>& point,
                           const std::vector<double>& line_point,
                           const std::vector<double>& direction) {
    std::vector<double> rel(point.size());
    for (std::size_t i = 0; i < point.size(); ++i) {
        rel[i] = point[i] - line_point[i];
    }
    const double along = dot(rel, direction);
    double dist2 = 0.0;
    for (std::size_t i = 0; i < rel.size(); ++i) {
        const double residual = rel[i] - along * direction[i];
        dist2 += residual * residual;
    }
    return std::sqrt(dist2);
}

}  // namespace

Trend fit_trend(const EntropyWalk& w, const MovingMatrix& mm) {
    const std::size_t k = w.size();
    if (k < 2) {
        throw ConfigError("trend needs at least 2 walk points, got " + std::to_string(k));
    }
    const std::size_t dims = w.points.front().coords.size();

    std::vector<double> centroid(dims, 0.0);
    for (const SimplexPoint& p : w.points) {
        for (std::size_t i = 0; i < dims; ++i) {
            centroid[i] += p.coords[i];
        }
    }
    for (double& c : centroid) {
        c /= static_cast<double>(k);
    }

    std::vector<std::vector<double>> scatter(dims, std::vector<double>(dims, 0.0));
    double total_scatter = 0.0;
    for (const SimplexPoint& p : w.points) {
        for (std::size_t i = 0; i < dims; ++i) {
            const double di = p.coords[i] - centroid[i];
            total_scatter += di * di;
            for (std::size_t j = 0; j < dims; ++j) {
                scatter[i][j] += di * (p.coords[j] - centroid[j]);
            }
        }
    }
    if (total_scatter <= 1e-24) {
        throw AnalysisError("trend undefined: stationary walk");
    }

    std::vector<double> direction;
    if (dims == 1) {
        direction = {1.0};
    } else {
        std::vector<double> values;
        std::vector<std::vector<double>> vectors;
        jacobi_eigen(scatter, values, vectors);
        std::size_t top = 0;
        std::size_t second = 1;
        for (std::size_t i = 1; i < dims; ++i) {
            if (values[i] > values[top]) {
                second = top;
                top = i;
            } else if (values[i] > values[second] || second == top) {
                second = i;
            }
        }
        if (values[top] - values[second] <= 1e-12 * std::max(values[top], 1e-30)) {
            throw AnalysisError("trend direction ambiguous: equal principal variances");
        }
        direction.resize(dims);
        for (std::size_t i = 0; i < dims; ++i) {
            direction[i] = vectors[i][top];
        }
        double norm = std::sqrt(dot(direction, direction));
        for (double& d : direction) {
            d /= norm;
        }
    }

    // Orient chronologically: along first-to-last, falling back to
    // centroid-to-last when the endpoints tie.
    std::vector<double> first_to_last(dims);
    std::vector<double> centroid_to_last(dims);
    for (std::size_t i = 0; i < dims; ++i) {
        first_to_last[i] = w.points.back().coords[i] - w.points.front().coords[i];
        centroid_to_last[i] = w.points.back().coords[i] - centroid[i];
    }
    double orient = dot(direction, first_to_last);
    if (orient == 0.0) {
        orient = dot(direction, centroid_to_last);
    }
    if (orient == 0.0) {
        throw AnalysisError("trend direction ambiguous: chronological orientation undefined");
    }
    if (orient < 0.0) {
        for (double& d : direction) {
            d = -d;
        }
    }

    double mean_distance = 0.0;
    for (const SimplexPoint& p : w.points) {
        mean_distance += point_line_distance(p.coords, centroid, direction);
    }
    mean_distance /= static_cast<double>(k);

    Trend trend;
    trend.leading_last = influence(mm.column(mm.window_count() - 1)).leading;
    trend.direction = std::move(direction);
    trend.line_point = std::move(centroid);
    trend.mean_distance = mean_distance;
    return trend;
}

double distance_to_trend(const SimplexPoint& q, const Trend& trend) {
    if (q.coords.size() != trend.direction.size()) {
        throw ConfigError("point dimension " + std::to_string(q.coords.size() + 1) +
                          " does not match trend dimension " +
                          std::to_string(trend.direction.size() + 1));
    }
    return point_line_distance(q.coords, trend.line_point, trend.direction);
}

AttributionVerdict attribute(const SimplexPoint& q, const Trend& trend,
                             const EntropyVector& q_entropy) {
    AttributionVerdict verdict;
    verdict.distance = distance_to_trend(q, trend);
    // A colinear walk has (numerically) zero mean distance; fall back to an
    // absolute tolerance there.
    verdict.threshold = trend.mean_distance > 1e-12 ? trend.mean_distance : 1e-9;
    if (verdict.distance <= verdict.threshold) {
        verdict.status = AttributionStatus::within;
    } else if (influence(q_entropy).leading == trend.leading_last) {
        verdict.status = AttributionStatus::outside_same_leading;
    } else {
        verdict.status = AttributionStatus::outside_changed_leading;
    }
    return verdict;
}

const char* to_string(AttributionStatus status) {
    switch (status) {
        case AttributionStatus::within:
            return "within";
        case AttributionStatus::outside_same_leading:
            return "outside_same_leading";
        case AttributionStatus::outside_changed_leading:
            return "outside_changed_leading";
    }
    return "unknown";
}

}  // namespace tsmark
