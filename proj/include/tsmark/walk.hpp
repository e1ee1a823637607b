#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "tsmark/entropy.hpp"
#include "tsmark/series.hpp"
#include "tsmark/simplex.hpp"

namespace tsmark {

/// How the k same-length windows are cut out of a series.
struct WindowScheme {
    enum class Kind { overlapping, nonoverlapping, random_starts };

    Kind kind = Kind::overlapping;
    std::size_t length = 0;       // w
    std::size_t step = 1;         // s, overlapping only
    std::size_t count = 0;        // k, random_starts only
    std::uint64_t seed = 0;       // random_starts only

    static WindowScheme overlapping(std::size_t length, std::size_t step);
    static WindowScheme nonoverlapping(std::size_t length);
    /// Starts are drawn once per seed, so every entity of a collection
    /// shares the same offsets.
    static WindowScheme random_starts(std::size_t length, std::size_t count,
                                      std::uint64_t seed);
};

/// Chronologically sorted window start offsets for a series of the given
/// length. For overlapping(w, s) these are 0, s, 2s, ... while
/// start + w <= series_length, i.e. floor((t - w)/s) + 1 windows.
std::vector<std::size_t> window_offsets(const WindowScheme& scheme,
                                        std::size_t series_length);

std::vector<SymbolicSeries> make_windows(const SymbolicSeries& series,
                                         const WindowScheme& scheme);

/// Whether windows reuse the symbols of the whole series or are
/// re-symbolized on their own range.
enum class SymbolizationMode { global_range, per_window };

/// N x k matrix of per-window entropies; row = component, column = window.
struct MovingMatrix {
    std::vector<std::vector<double>> rows;

    std::size_t component_count() const noexcept { return rows.size(); }
    std::size_t window_count() const noexcept { return rows.empty() ? 0 : rows.front().size(); }
    /// Entropy vector of window i (column i).
    EntropyVector column(std::size_t i) const;
};

MovingMatrix moving_matrix(const MultiSeries& multi, Alphabet alphabet,
                           bool use_differencing, const WindowScheme& scheme,
                           SymbolizationMode mode = SymbolizationMode::global_range);

/// The chronological sequence of simplex points, one per window.
struct EntropyWalk {
    std::vector<SimplexPoint> points;

    std::size_t size() const noexcept { return points.size(); }
};

EntropyWalk walk(const MovingMatrix& mm);

/// Fitted trend of a walk: the leading component of the last window plus the
/// oriented direction of the line through the walk points.
struct Trend {
    int leading_last = 0;               // A
    std::vector<double> direction;      // unit vector, N-1 dims
    std::vector<double> line_point;     // centroid of the walk points
    double mean_distance = 0.0;         // mean orthogonal distance to the line
};

/// Total-least-squares line (first principal direction through the centroid),
/// sign-oriented along the chronological order of the points.
Trend fit_trend(const EntropyWalk& w, const MovingMatrix& mm);

enum class AttributionStatus { within, outside_same_leading, outside_changed_leading };

struct AttributionVerdict {
    AttributionStatus status = AttributionStatus::within;
    double distance = 0.0;
    double threshold = 0.0;
};

/// Orthogonal distance of a point to the fitted line.
double distance_to_trend(const SimplexPoint& q, const Trend& trend);

/// The within/outside-walk criterium: q is within when its distance to the
/// line does not exceed the walk's mean distance (1e-9 absolute when the
/// walk is perfectly colinear). Outside points are split by whether their
/// leading component still matches the trend's.
AttributionVerdict attribute(const SimplexPoint& q, const Trend& trend,
                             const EntropyVector& q_entropy);

const char* to_string(AttributionStatus status);

}  // namespace tsmark
